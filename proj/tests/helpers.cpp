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

#include "helpers.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "efx/algorithms.hpp"
#include "efx/errors.hpp"

namespace efx::testing {

InsertionCase insertion_case_from_small_m(SplitMix64& rng) {
  const int n = 2 + rng.below_int(5);
  const int m_base = 1 + rng.below_int(2 * n);
  const AgentId special = rng.below_int(n);

  // Costs for the base chores plus one appended column for the new chore.
  std::vector<std::vector<Rational>> costs(n, std::vector<Rational>(m_base + 1));
  for (AgentId i = 0; i < n; ++i) {
    for (ChoreId e = 0; e < m_base; ++e)
      costs[i][e] = Rational(1 + rng.below_int(99));
    costs[i][m_base] =
        i == special ? Rational(rng.below_int(200)) : Rational(0);
  }
  const Instance full(n, m_base + 1, costs);

  std::vector<std::vector<Rational>> base_costs(n);
  for (AgentId i = 0; i < n; ++i)
    base_costs[i].assign(costs[i].begin(), costs[i].begin() + m_base);
  const Instance base(n, m_base, std::move(base_costs));

  // The solver's output is EFX, so the identity assignment of its bundles
  // to slots carries a perfect matching in the full instance as well (the
  // appended chore is not allocated yet).
  const Allocation to_agents = solve_small_m(base);
  return InsertionCase{full, to_agents.as(OwnerKind::kSlots),
                       Matching::identity(n), m_base, special};
}

InsertionCase insertion_case_from_ordered_prefix(SplitMix64& rng) {
  GeneratorSpec spec;
  spec.target = RegimeKind::kIdenticalOrderingAllButOne;
  spec.n = 2 + rng.below_int(4);
  spec.m = 1 + rng.below_int(10);
  spec.seed = rng.next();
  const Instance inst = generate_instance(spec);
  const AgentId special = inst.n() - 1;

  std::vector<ChoreId> order(inst.m());
  std::iota(order.begin(), order.end(), 0);
  const AgentId key = special == 0 ? 1 : 0;
  std::stable_sort(order.begin(), order.end(), [&](ChoreId a, ChoreId b) {
    return inst.cost(key, b) < inst.cost(key, a);
  });

  const int prefix = rng.below_int(inst.m());
  Allocation alloc = Allocation::empty(OwnerKind::kSlots, inst.n());
  Matching x = Matching::identity(inst.n());
  for (int k = 0; k < prefix; ++k) {
    InsertResult step =
        insert_chore_keeping_matching(inst, alloc, x, order[k], special);
    alloc = std::move(step.allocation);
    x = std::move(step.matching);
  }
  return InsertionCase{inst, std::move(alloc), std::move(x), order[prefix],
                       special};
}

}  // namespace efx::testing
