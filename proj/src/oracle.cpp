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

#include "efx/oracle.hpp"

#include <algorithm>
#include <string>

#include "efx/errors.hpp"

namespace efx {
namespace {

void check_full_partition(const Instance& inst, const Allocation& alloc) {
  if (alloc.size() != inst.n())
    throw InputError("envy check: allocation must have one bundle per agent");
  if (!alloc.covers_all_chores(inst))
    throw InputError("envy check: allocation must cover every chore exactly once");
}

}  // namespace

EnvyReport evaluate_envy(const Instance& inst, const Allocation& alloc) {
  check_full_partition(inst, alloc);
  const int n = inst.n();

  std::vector<Rational> own(n, Rational(0));
  std::vector<Rational> cheapest(n, Rational(0));   // cheapest own chore
  std::vector<Rational> costliest(n, Rational(0));  // costliest own chore
  for (AgentId i = 0; i < n; ++i) {
    const auto& bundle = alloc.bundle(i);
    own[i] = inst.bundle_cost(i, bundle);
    for (std::size_t k = 0; k < bundle.size(); ++k) {
      const Rational& c = inst.cost(i, bundle[k]);
      if (k == 0 || c < cheapest[i]) cheapest[i] = c;
      if (k == 0 || c > costliest[i]) costliest[i] = c;
    }
  }

  EnvyReport report;
  report.efx = true;
  report.ef1 = true;
  for (AgentId i = 0; i < n; ++i) {
    const auto& bundle = alloc.bundle(i);
    for (AgentId j = 0; j < n; ++j) {
      if (i == j) continue;
      PairEnvy pair;
      pair.from = i;
      pair.to = j;
      const Rational other = inst.bundle_cost(i, alloc.bundle(j));
      pair.envies = own[i] > other;
      if (!bundle.empty()) {
        // Dropping the cheapest chore leaves the costliest remainder, so
        // strong envy holds iff it survives that particular removal.
        pair.strongly_envies = own[i] - cheapest[i] > other;
        if (pair.strongly_envies) {
          for (ChoreId e : bundle) {
            if (own[i] - inst.cost(i, e) > other) {
              pair.witness = e;
              break;
            }
          }
        }
        if (own[i] - costliest[i] > other) report.ef1 = false;
      }
      report.efx = report.efx && !pair.strongly_envies;
      report.pairs.push_back(std::move(pair));
    }
  }
  return report;
}

bool is_efx(const Instance& inst, const Allocation& alloc) {
  return evaluate_envy(inst, alloc).efx;
}

bool is_ef1(const Instance& inst, const Allocation& alloc) {
  return evaluate_envy(inst, alloc).ef1;
}

std::optional<std::uint64_t> assignment_count(const Instance& inst,
                                              std::uint64_t cap) {
  std::uint64_t total = 1;
  for (ChoreId e = 0; e < inst.m(); ++e) {
    if (total > cap / static_cast<std::uint64_t>(inst.n())) return std::nullopt;
    total *= static_cast<std::uint64_t>(inst.n());
  }
  return total;
}

std::vector<Allocation> enumerate_efx(const Instance& inst, std::uint64_t cap) {
  if (!assignment_count(inst, cap))
    throw InputError("enumerate_efx: n^m exceeds cap of " + std::to_string(cap));
  const int n = inst.n();
  const int m = inst.m();

  std::vector<Allocation> found;
  std::vector<AgentId> assign(m, 0);
  while (true) {
    std::vector<std::vector<ChoreId>> bundles(n);
    for (ChoreId e = 0; e < m; ++e) bundles[assign[e]].push_back(e);
    Allocation alloc = Allocation::from_bundles(OwnerKind::kAgents, bundles);
    if (is_efx(inst, alloc)) found.push_back(std::move(alloc));

    // chore-major base-n counter: chore 0 is the most significant digit
    int e = m - 1;
    while (e >= 0 && assign[e] == n - 1) {
      assign[e] = 0;
      --e;
    }
    if (e < 0) break;
    ++assign[e];
  }
  return found;
}

}  // namespace efx
