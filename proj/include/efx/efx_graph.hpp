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

#ifndef EFX_EFX_GRAPH_HPP_
#define EFX_EFX_GRAPH_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "efx/allocation.hpp"
#include "efx/instance.hpp"

namespace efx {

using SlotId = int;

/// Bipartite acceptability graph between agents and bundle slots.
///
/// Edge (i, u) means agent i could take bundle u outright: even after keeping
/// the costliest removable chore of that bundle, i would not be worse off
/// than under its cheapest bundle. The min-edge subset marks bundles that are
/// cheapest for the agent.
class EfxGraph {
 public:
  explicit EfxGraph(int n)
      : n_(n),
        edge_(n, std::vector<char>(n, 0)),
        min_edge_(n, std::vector<char>(n, 0)) {}

  int n() const { return n_; }
  bool edge(AgentId i, SlotId u) const { return edge_[i][u] != 0; }
  bool min_edge(AgentId i, SlotId u) const { return min_edge_[i][u] != 0; }

  void set_edge(AgentId i, SlotId u, bool min) {
    edge_[i][u] = 1;
    if (min) min_edge_[i][u] = 1;
  }

  /// Sorted (agent, slot) pairs, for dumps and golden comparisons.
  std::vector<std::pair<AgentId, SlotId>> edge_list() const;
  std::vector<std::pair<AgentId, SlotId>> min_edge_list() const;

 private:
  int n_;
  std::vector<std::vector<char>> edge_;
  std::vector<std::vector<char>> min_edge_;
};

/// Agent-slot matching; at most one partner per vertex.
class Matching {
 public:
  explicit Matching(int n) : slot_of_(n, -1), agent_of_(n, -1) {}

  static Matching identity(int n);

  int n() const { return static_cast<int>(slot_of_.size()); }
  SlotId slot_of(AgentId i) const { return slot_of_[i]; }
  AgentId agent_of(SlotId u) const { return agent_of_[u]; }
  bool matched(AgentId i) const { return slot_of_[i] >= 0; }

  int size() const;
  bool perfect() const { return size() == n(); }

  /// Matches agent and slot, unlinking whatever they were matched to.
  void assign(AgentId i, SlotId u);

  /// Copy with the given (agent, slot) pairs re-assigned. The result must
  /// still be a matching; duplicate targets throw InvariantViolation.
  Matching with_assignments(
      const std::vector<std::pair<AgentId, SlotId>>& updates) const;

  /// True iff every pair is an edge of g.
  bool contained_in(const EfxGraph& g) const;

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.slot_of_ == b.slot_of_;
  }

 private:
  std::vector<SlotId> slot_of_;
  std::vector<AgentId> agent_of_;
};

/// Directed auxiliary graph used to re-route matchings: designated agents
/// point to their cheapest slots, every slot points back to its matched
/// agent.
struct EnvyDigraph {
  int n = 0;
  std::optional<AgentId> excluded;             // agent with no outgoing arcs
  std::vector<std::vector<SlotId>> agent_arcs; // ascending min-slots
  std::vector<AgentId> slot_arc;               // matched agent per slot
};

/// Builds the EFX-graph of an allocation-to-slots. The allocation must have
/// exactly inst.n() slots over valid chore ids.
EfxGraph build_graph(const Instance& inst, const Allocation& alloc);

/// Maximum bipartite matching by augmenting paths, deterministic in agent
/// and slot index order. Check .perfect() for full coverage.
Matching find_perfect_matching(const EfxGraph& g);

/// Given a perfect matching, returns one (possibly the same) that pairs at
/// least one agent with a cheapest bundle.
Matching rotate_to_min_edge(const EfxGraph& g, const Matching& x);

EnvyDigraph build_envy_digraph(const EfxGraph& g, const Matching& x,
                               std::optional<AgentId> excluded);

/// Adds chore e to slot u_i on behalf of agent i. Requires (i, u_i) to be a
/// min-edge and e to cost agent i no more than any allocated chore; under
/// those conditions the edge (i, u_i) survives and no edge at other slots is
/// lost. Precondition checks run in contract-checking builds.
Allocation add_chore_for_min_agent(const Instance& inst, const Allocation& alloc,
                                   AgentId i, SlotId u_i, ChoreId e);

struct InsertResult {
  Allocation allocation;
  Matching matching;
  SlotId chosen_slot;
};

/// Adds chore e to a slot chosen so that the new graph still has a perfect
/// matching, and returns that matching. Requires x perfect in the current
/// graph and e no costlier than any allocated chore for every agent except
/// `special`; `special`'s costs are only consulted through bundle sums.
InsertResult insert_chore_keeping_matching(const Instance& inst,
                                           const Allocation& alloc,
                                           const Matching& x, ChoreId e,
                                           AgentId special);

/// Reference fallback: tries every slot in index order and returns the first
/// whose new graph admits a perfect matching. Quadratically slower; used as
/// a differential oracle for insert_chore_keeping_matching.
std::optional<InsertResult> insert_chore_try_all_slots(const Instance& inst,
                                                       const Allocation& alloc,
                                                       ChoreId e);

}  // namespace efx

#endif  // EFX_EFX_GRAPH_HPP_
