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

#ifndef EFX_SLOT_ENGINE_HPP_
#define EFX_SLOT_ENGINE_HPP_

#include <algorithm>
#include <vector>

#include "efx/allocation.hpp"
#include "efx/efx_graph.hpp"
#include "efx/instance.hpp"

namespace efx::detail {

/// Incremental allocation-to-slots state. Keeps per (agent, slot) bundle
/// sums and cheapest-chore costs so that one insertion costs O(n) and a
/// graph rebuild costs O(n^2) regardless of how many chores are placed.
/// Chores are only ever added, never removed.
class SlotEngine {
 public:
  SlotEngine(const Instance& inst, int n_slots);
  SlotEngine(const Instance& inst, const Allocation& alloc_to_slots);

  int n() const { return n_; }
  const Instance& instance() const { return *inst_; }
  const std::vector<std::vector<ChoreId>>& bundles() const { return bundles_; }
  int bundle_size(SlotId u) const { return static_cast<int>(bundles_[u].size()); }

  void add(ChoreId e, SlotId u);

  const Rational& bundle_sum(AgentId i, SlotId u) const { return sum_[i][u]; }
  /// Bundle cost minus the cheapest chore in it; 0 for empty bundles.
  Rational max_drop(AgentId i, SlotId u) const;
  Rational min_bundle_sum(AgentId i) const;
  bool is_edge(AgentId i, SlotId u) const;

  EfxGraph graph() const;
  Allocation to_allocation(OwnerKind kind) const;
  /// Agent i receives the bundle of slot x.slot_of(i); x must be perfect.
  Allocation extract(const Matching& x) const;

 private:
  const Instance* inst_;
  int n_;
  std::vector<std::vector<ChoreId>> bundles_;
  std::vector<std::vector<Rational>> sum_;       // [agent][slot]
  std::vector<std::vector<Rational>> min_cost_;  // [agent][slot]; bundle nonempty
};

/// Inserts e into a slot chosen so that a perfect matching survives, updating
/// the engine in place and returning the new matching. `x` must be perfect in
/// the engine's current graph, and e must cost no more than every placed
/// chore for each agent other than `special`. The caller owns those
/// preconditions; this routine only asserts internal invariants.
Matching insert_keeping_matching(SlotEngine& engine, const Matching& x, ChoreId e,
                      AgentId special, SlotId* chosen_slot = nullptr);

/// Walks out-arcs from each start vertex until a walk revisits its own path
/// (a cycle, returned in walk order) or every walk drains into a sink
/// (empty result). succ(v) < 0 marks a sink.
template <typename Succ>
std::vector<int> find_functional_cycle(int n_vertices, Succ succ,
                                       const std::vector<int>& starts) {
  std::vector<int> color(n_vertices, 0);  // 0 fresh, 1 on path, 2 done
  std::vector<int> path;
  for (int start : starts) {
    if (color[start] != 0) continue;
    path.clear();
    int v = start;
    while (v >= 0 && color[v] == 0) {
      color[v] = 1;
      path.push_back(v);
      v = succ(v);
    }
    if (v >= 0 && color[v] == 1) {
      auto it = std::find(path.begin(), path.end(), v);
      return std::vector<int>(it, path.end());
    }
    for (int w : path) color[w] = 2;
  }
  return {};
}

}  // namespace efx::detail

#endif  // EFX_SLOT_ENGINE_HPP_
