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

#include "efx/efx_graph.hpp"

#include <algorithm>
#include <functional>

#include "efx/errors.hpp"
#include "slot_engine.hpp"

namespace efx {

std::vector<std::pair<AgentId, SlotId>> EfxGraph::edge_list() const {
  std::vector<std::pair<AgentId, SlotId>> out;
  for (AgentId i = 0; i < n_; ++i) {
    for (SlotId u = 0; u < n_; ++u) {
      if (edge_[i][u]) out.emplace_back(i, u);
    }
  }
  return out;
}

std::vector<std::pair<AgentId, SlotId>> EfxGraph::min_edge_list() const {
  std::vector<std::pair<AgentId, SlotId>> out;
  for (AgentId i = 0; i < n_; ++i) {
    for (SlotId u = 0; u < n_; ++u) {
      if (min_edge_[i][u]) out.emplace_back(i, u);
    }
  }
  return out;
}

Matching Matching::identity(int n) {
  Matching x(n);
  for (int k = 0; k < n; ++k) x.assign(k, k);
  return x;
}

int Matching::size() const {
  int count = 0;
  for (SlotId u : slot_of_) count += u >= 0 ? 1 : 0;
  return count;
}

void Matching::assign(AgentId i, SlotId u) {
  if (slot_of_[i] >= 0) agent_of_[slot_of_[i]] = -1;
  if (agent_of_[u] >= 0) slot_of_[agent_of_[u]] = -1;
  slot_of_[i] = u;
  agent_of_[u] = i;
}

Matching Matching::with_assignments(
    const std::vector<std::pair<AgentId, SlotId>>& updates) const {
  Matching out = *this;
  for (const auto& [i, u] : updates) out.assign(i, u);
  if (perfect() && !out.perfect())
    throw InvariantViolation("matching update left a vertex unmatched");
  return out;
}

bool Matching::contained_in(const EfxGraph& g) const {
  for (AgentId i = 0; i < n(); ++i) {
    if (slot_of_[i] >= 0 && !g.edge(i, slot_of_[i])) return false;
  }
  return true;
}

EfxGraph build_graph(const Instance& inst, const Allocation& alloc) {
  if (alloc.size() != inst.n())
    throw InputError("build_graph: allocation must have one slot per agent");
  return detail::SlotEngine(inst, alloc).graph();
}

namespace {

bool kuhn_augment(const EfxGraph& g, AgentId i, std::vector<char>& used,
                  std::vector<SlotId>& slot_of, std::vector<AgentId>& agent_of) {
  for (SlotId u = 0; u < g.n(); ++u) {
    if (!g.edge(i, u) || used[u]) continue;
    used[u] = 1;
    if (agent_of[u] < 0 || kuhn_augment(g, agent_of[u], used, slot_of, agent_of)) {
      slot_of[i] = u;
      agent_of[u] = i;
      return true;
    }
  }
  return false;
}

}  // namespace

Matching find_perfect_matching(const EfxGraph& g) {
  const int n = g.n();
  std::vector<SlotId> slot_of(n, -1);
  std::vector<AgentId> agent_of(n, -1);
  for (AgentId i = 0; i < n; ++i) {
    std::vector<char> used(n, 0);
    kuhn_augment(g, i, used, slot_of, agent_of);
  }
  Matching x(n);
  for (AgentId i = 0; i < n; ++i) {
    if (slot_of[i] >= 0) x.assign(i, slot_of[i]);
  }
  return x;
}

Matching rotate_to_min_edge(const EfxGraph& g, const Matching& x) {
  if (!x.perfect() || !x.contained_in(g))
    throw ContractViolation("rotate_to_min_edge: needs a perfect matching in g");
  const int n = g.n();
  for (AgentId i = 0; i < n; ++i) {
    if (g.min_edge(i, x.slot_of(i))) return x;
  }

  // No matched pair is a min-edge, so alternating matched arcs with each
  // agent's cheapest slot must loop, and the loop is longer than two.
  std::vector<SlotId> chosen(n, -1);
  for (AgentId i = 0; i < n; ++i) {
    for (SlotId u = 0; u < n; ++u) {
      if (g.min_edge(i, u)) {
        chosen[i] = u;
        break;
      }
    }
    if (chosen[i] < 0)
      throw ContractViolation("rotate_to_min_edge: agent without min-edge");
  }
  auto succ = [&](int v) -> int {
    return v < n ? n + chosen[v] : x.agent_of(v - n);
  };
  std::vector<int> starts(2 * n);
  for (int v = 0; v < 2 * n; ++v) starts[v] = v;
  const std::vector<int> cycle = detail::find_functional_cycle(2 * n, succ, starts);
  detail::ensure(cycle.size() > 2, "rotation cycle must exist and exceed two");

  std::vector<std::pair<AgentId, SlotId>> updates;
  for (int v : cycle) {
    if (v < n) updates.emplace_back(v, chosen[v]);
  }
  Matching out = x.with_assignments(updates);
  detail::ensure(out.perfect() && out.contained_in(g),
                 "rotation must stay a perfect matching");
  return out;
}

EnvyDigraph build_envy_digraph(const EfxGraph& g, const Matching& x,
                               std::optional<AgentId> excluded) {
  if (!x.perfect() || !x.contained_in(g))
    throw ContractViolation("envy digraph: needs a perfect matching in g");
  EnvyDigraph d;
  d.n = g.n();
  d.excluded = excluded;
  d.agent_arcs.resize(g.n());
  d.slot_arc.resize(g.n());
  for (AgentId i = 0; i < g.n(); ++i) {
    if (excluded && *excluded == i) continue;
    for (SlotId u = 0; u < g.n(); ++u) {
      if (g.min_edge(i, u)) d.agent_arcs[i].push_back(u);
    }
    detail::ensure(!d.agent_arcs[i].empty(), "designated agent needs an arc");
  }
  for (SlotId u = 0; u < g.n(); ++u) d.slot_arc[u] = x.agent_of(u);
  return d;
}

namespace {

void check_unallocated(const Allocation& alloc, ChoreId e) {
  const auto& uni = alloc.universe();
  if (std::binary_search(uni.begin(), uni.end(), e))
    throw InputError("chore is already allocated");
}

#if defined(EFX_CONTRACTS)
bool minimal_for_agent(const Instance& inst, const Allocation& alloc,
                       AgentId i, ChoreId e) {
  for (ChoreId other : alloc.universe()) {
    if (inst.cost(i, e) > inst.cost(i, other)) return false;
  }
  return true;
}
#endif

}  // namespace

Allocation add_chore_for_min_agent(const Instance& inst, const Allocation& alloc,
                                   AgentId i, SlotId u_i, ChoreId e) {
  if (!inst.valid_agent(i) || !inst.valid_chore(e))
    throw InputError("add_chore_for_min_agent: id out of range");
  if (alloc.size() != inst.n() || u_i < 0 || u_i >= alloc.size())
    throw InputError("add_chore_for_min_agent: bad slot");
  check_unallocated(alloc, e);
#if defined(EFX_CONTRACTS)
  const EfxGraph g = build_graph(inst, alloc);
  if (!g.min_edge(i, u_i))
    throw ContractViolation("add_chore_for_min_agent: (i, u_i) not a min-edge");
  if (!minimal_for_agent(inst, alloc, i, e))
    throw ContractViolation(
        "add_chore_for_min_agent: e is not minimal for agent i");
#endif
  return alloc.with_added(u_i, e);
}

InsertResult insert_chore_keeping_matching(const Instance& inst,
                                           const Allocation& alloc,
                                           const Matching& x, ChoreId e,
                                           AgentId special) {
  if (!inst.valid_agent(special) || !inst.valid_chore(e))
    throw InputError("insert_chore_keeping_matching: id out of range");
  if (alloc.size() != inst.n())
    throw InputError("insert_chore_keeping_matching: bad slot count");
  check_unallocated(alloc, e);
  detail::SlotEngine engine(inst, alloc);
  if (!x.perfect() || !x.contained_in(engine.graph()))
    throw ContractViolation(
        "insert_chore_keeping_matching: x must be perfect in the graph");
#if defined(EFX_CONTRACTS)
  for (AgentId i = 0; i < inst.n(); ++i) {
    if (i != special && !minimal_for_agent(inst, alloc, i, e))
      throw ContractViolation(
          "insert_chore_keeping_matching: e not minimal for a non-special agent");
  }
#endif
  SlotId slot = -1;
  Matching out = detail::insert_keeping_matching(engine, x, e, special, &slot);
  detail::ensure(out.perfect() && out.contained_in(engine.graph()),
                 "insertion must preserve a perfect matching");
  return InsertResult{engine.to_allocation(OwnerKind::kSlots), out, slot};
}

std::optional<InsertResult> insert_chore_try_all_slots(const Instance& inst,
                                                       const Allocation& alloc,
                                                       ChoreId e) {
  if (!inst.valid_chore(e))
    throw InputError("insert_chore_try_all_slots: id out of range");
  if (alloc.size() != inst.n())
    throw InputError("insert_chore_try_all_slots: bad slot count");
  check_unallocated(alloc, e);
  for (SlotId u = 0; u < alloc.size(); ++u) {
    Allocation candidate = alloc.with_added(u, e);
    Matching x = find_perfect_matching(build_graph(inst, candidate));
    if (x.perfect()) return InsertResult{std::move(candidate), std::move(x), u};
  }
  return std::nullopt;
}

}  // namespace efx
