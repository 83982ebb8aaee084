// Copyright 2026 The efx-chores Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "efx/generator.hpp"

#include <numeric>
#include <utility>

#include "efx/errors.hpp"

namespace efx {
namespace {

std::vector<std::vector<Rational>> uniform_rows(SplitMix64& rng, int n, int m,
                                                int cost_max) {
  std::vector<std::vector<Rational>> costs(n, std::vector<Rational>(m));
  for (auto& row : costs) {
    for (auto& c : row) c = Rational(rng.below_int(cost_max + 1));
  }
  return costs;
}

Instance generate_small_m(const GeneratorSpec& spec) {
  if (spec.m > 2 * spec.n)
    throw InputError("generate: small_m target needs m <= 2n");
  SplitMix64 rng(spec.seed);
  return Instance(spec.n, spec.m, uniform_rows(rng, spec.n, spec.m, spec.cost_max));
}

// All agents except the last share a chore ranking (with shared tie groups);
// each of them realizes the ranking with its own increasing values, i.e. a
// monotone rescaling with perturbations. The last agent is arbitrary.
Instance generate_identical_ordering(const GeneratorSpec& spec) {
  if (spec.n < 1) throw InputError("generate: need at least one agent");
  SplitMix64 rng(spec.seed);
  const int n = spec.n;
  const int m = spec.m;

  std::vector<int> by_rank(m);
  std::iota(by_rank.begin(), by_rank.end(), 0);
  for (int k = m - 1; k > 0; --k) {
    std::swap(by_rank[k], by_rank[rng.below_int(k + 1)]);
  }
  // Group adjacent ranks into tie classes; ties must co-occur across agents.
  std::vector<int> class_of_rank(m, 0);
  for (int r = 1; r < m; ++r) {
    const bool merge = rng.below(4) == 0;
    class_of_rank[r] = class_of_rank[r - 1] + (merge ? 0 : 1);
  }
  const int classes = m == 0 ? 0 : class_of_rank[m - 1] + 1;

  std::vector<std::vector<Rational>> costs(n, std::vector<Rational>(m, Rational(0)));
  const AgentId special = n - 1;
  for (AgentId i = 0; i < n; ++i) {
    if (i == special && n > 1) {
      for (ChoreId e = 0; e < m; ++e)
        costs[i][e] = Rational(rng.below_int(spec.cost_max + 1));
      continue;
    }
    std::vector<int> class_value(classes, 0);
    int value = rng.below_int(5);
    for (int c = 0; c < classes; ++c) {
      class_value[c] = value;
      value += 1 + rng.below_int(5);
    }
    for (int r = 0; r < m; ++r) {
      costs[i][by_rank[r]] = Rational(class_value[class_of_rank[r]]);
    }
  }
  return Instance(n, m, std::move(costs));
}

Instance generate_bivalued_three(const GeneratorSpec& spec) {
  if (spec.n != 3) throw InputError("generate: bivalued target needs n = 3");
  if (spec.eps_denominator < 1)
    throw InputError("generate: eps denominator must be positive");
  SplitMix64 rng(spec.seed);
  std::vector<std::vector<Rational>> costs(3, std::vector<Rational>(spec.m));
  for (AgentId i = 0; i < 3; ++i) {
    const Rational eps(rng.below_int(spec.eps_denominator), spec.eps_denominator);
    for (ChoreId e = 0; e < spec.m; ++e) {
      costs[i][e] = rng.below(2) == 0 ? Rational(1) : eps;
    }
  }
  return Instance(3, spec.m, std::move(costs));
}

}  // namespace

Instance generate_instance(const GeneratorSpec& spec) {
  if (spec.n < 1 || spec.m < 0)
    throw InputError("generate: need n >= 1 and m >= 0");
  if (spec.cost_max < 0 || spec.cost_max > 1000)
    throw InputError("generate: cost bound must be in [0, 1000]");
  switch (spec.target) {
    case RegimeKind::kSmallM:
      return generate_small_m(spec);
    case RegimeKind::kIdenticalOrderingAllButOne:
      return generate_identical_ordering(spec);
    case RegimeKind::kBivaluedThreeAgents:
      return generate_bivalued_three(spec);
    case RegimeKind::kUnsupported:
      break;
  }
  throw InputError("generate: no generator for this target");
}

}  // namespace efx
