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

#ifndef EFX_TESTS_HELPERS_HPP_
#define EFX_TESTS_HELPERS_HPP_

#include <vector>

#include "efx/allocation.hpp"
#include "efx/efx_graph.hpp"
#include "efx/generator.hpp"
#include "efx/instance.hpp"

namespace efx::testing {

inline Instance make_instance(std::vector<std::vector<long long>> rows) {
  const int n = static_cast<int>(rows.size());
  const int m = n == 0 ? 0 : static_cast<int>(rows[0].size());
  std::vector<std::vector<Rational>> costs(n);
  for (int i = 0; i < n; ++i) {
    for (long long v : rows[i]) costs[i].emplace_back(v);
  }
  return Instance(n, m, std::move(costs));
}

// Hand-worked 3-agent, 6-chore fixture. The graph goldens asserted in the
// tests were derived from this matrix by hand, pair by pair.
inline Instance golden_instance() {
  return make_instance({{2, 0, 5, 2, 5, 2},
                        {2, 4, 3, 3, 0, 3},
                        {1, 1, 1, 1, 1, 1}});
}

inline Allocation golden_slot_allocation() {
  return Allocation::from_bundles(OwnerKind::kSlots, {{0, 1}, {2, 3}, {4, 5}});
}

// --- Definition-level evaluations, written with plain loops and re-summed
// costs on purpose. They double-check the library implementations and must
// stay independent of them.

inline Rational literal_bundle_cost(const Instance& inst, AgentId i,
                                    const std::vector<ChoreId>& bundle,
                                    ChoreId skip = -1) {
  Rational total(0);
  for (ChoreId e : bundle) {
    if (e != skip) total += inst.cost(i, e);
  }
  return total;
}

inline bool literal_is_efx(const Instance& inst, const Allocation& alloc) {
  for (AgentId i = 0; i < inst.n(); ++i) {
    for (AgentId j = 0; j < inst.n(); ++j) {
      if (i == j) continue;
      const Rational other = literal_bundle_cost(inst, i, alloc.bundle(j));
      for (ChoreId e : alloc.bundle(i)) {
        if (literal_bundle_cost(inst, i, alloc.bundle(i), e) > other) return false;
      }
    }
  }
  return true;
}

inline bool literal_is_edge(const Instance& inst, const Allocation& alloc,
                            AgentId i, SlotId u) {
  Rational worst_drop(0);
  bool first = true;
  for (ChoreId e : alloc.bundle(u)) {
    const Rational left = literal_bundle_cost(inst, i, alloc.bundle(u), e);
    if (first || left > worst_drop) worst_drop = left;
    first = false;
  }
  for (int k = 0; k < alloc.size(); ++k) {
    if (literal_bundle_cost(inst, i, alloc.bundle(k)) < worst_drop) return false;
  }
  return true;
}

inline bool literal_is_min_edge(const Instance& inst, const Allocation& alloc,
                                AgentId i, SlotId u) {
  if (!literal_is_edge(inst, alloc, i, u)) return false;
  const Rational mine = literal_bundle_cost(inst, i, alloc.bundle(u));
  for (int k = 0; k < alloc.size(); ++k) {
    if (literal_bundle_cost(inst, i, alloc.bundle(k)) < mine) return false;
  }
  return true;
}

// O(m^2) pairwise-signs evaluation of the shared-ordering relation.
inline bool literal_identical_ordering(const Instance& inst, AgentId i, AgentId j) {
  for (ChoreId a = 0; a < inst.m(); ++a) {
    for (ChoreId b = 0; b < inst.m(); ++b) {
      const bool i_less = inst.cost(i, a) < inst.cost(i, b);
      const bool j_less = inst.cost(j, a) < inst.cost(j, b);
      if (i_less != j_less) return false;
    }
  }
  return true;
}

inline Instance random_instance(SplitMix64& rng, int n, int m, int cost_max) {
  std::vector<std::vector<Rational>> costs(n, std::vector<Rational>(m));
  for (auto& row : costs) {
    for (auto& c : row) c = Rational(rng.below_int(cost_max + 1));
  }
  return Instance(n, m, std::move(costs));
}

inline Allocation random_slot_allocation(SplitMix64& rng, int n,
                                         const std::vector<ChoreId>& chores) {
  std::vector<std::vector<ChoreId>> bundles(n);
  for (ChoreId e : chores) bundles[rng.below_int(n)].push_back(e);
  return Allocation::from_bundles(OwnerKind::kSlots, std::move(bundles));
}

// A valid random input to insert_chore_keeping_matching: an allocation with
// a perfect matching, plus a chore that is minimal for every non-special
// agent. Valid by construction, no rejection sampling.
struct InsertionCase {
  Instance instance;
  Allocation allocation;  // to slots
  Matching matching;      // perfect in build_graph(instance, allocation)
  ChoreId chore;
  AgentId special;
};

// Solve a random small instance, keep its (EFX) bundles as slots matched by
// the identity, and append a fresh chore that costs the non-special agents
// nothing. Requires <efx/algorithms.hpp> linked in.
InsertionCase insertion_case_from_small_m(SplitMix64& rng);

// Insert a random-length descending prefix of an identical-ordering instance
// through the public insertion routine, then hand back the next chore.
InsertionCase insertion_case_from_ordered_prefix(SplitMix64& rng);

}  // namespace efx::testing

#endif  // EFX_TESTS_HELPERS_HPP_
