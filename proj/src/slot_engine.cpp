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

#include "slot_engine.hpp"

#include <algorithm>
#include <utility>

#include "efx/errors.hpp"

namespace efx::detail {

SlotEngine::SlotEngine(const Instance& inst, int n_slots)
    : inst_(&inst),
      n_(n_slots),
      bundles_(n_slots),
      sum_(inst.n(), std::vector<Rational>(n_slots, Rational(0))),
      min_cost_(inst.n(), std::vector<Rational>(n_slots, Rational(0))) {
  if (n_slots != inst.n())
    throw InputError("slot engine: slot count must equal agent count");
}

SlotEngine::SlotEngine(const Instance& inst, const Allocation& alloc_to_slots)
    : SlotEngine(inst, alloc_to_slots.size()) {
  for (SlotId u = 0; u < n_; ++u) {
    for (ChoreId e : alloc_to_slots.bundle(u)) {
      if (!inst.valid_chore(e))
        throw InputError("slot engine: allocation references unknown chore");
      add(e, u);
    }
  }
}

void SlotEngine::add(ChoreId e, SlotId u) {
  const bool was_empty = bundles_[u].empty();
  for (AgentId i = 0; i < inst_->n(); ++i) {
    const Rational& c = inst_->cost(i, e);
    sum_[i][u] += c;
    if (was_empty || c < min_cost_[i][u]) min_cost_[i][u] = c;
  }
  bundles_[u].push_back(e);
}

Rational SlotEngine::max_drop(AgentId i, SlotId u) const {
  if (bundles_[u].empty()) return Rational(0);
  return sum_[i][u] - min_cost_[i][u];
}

Rational SlotEngine::min_bundle_sum(AgentId i) const {
  Rational best = sum_[i][0];
  for (SlotId u = 1; u < n_; ++u) {
    if (sum_[i][u] < best) best = sum_[i][u];
  }
  return best;
}

bool SlotEngine::is_edge(AgentId i, SlotId u) const {
  return max_drop(i, u) <= min_bundle_sum(i);
}

EfxGraph SlotEngine::graph() const {
  EfxGraph g(n_);
  for (AgentId i = 0; i < n_; ++i) {
    const Rational row_min = min_bundle_sum(i);
    for (SlotId u = 0; u < n_; ++u) {
      if (max_drop(i, u) <= row_min)
        g.set_edge(i, u, sum_[i][u] == row_min);
    }
  }
  return g;
}

Allocation SlotEngine::to_allocation(OwnerKind kind) const {
  return Allocation::from_bundles(kind, bundles_);
}

Allocation SlotEngine::extract(const Matching& x) const {
  ensure(x.perfect(), "extract: matching is not perfect");
  std::vector<std::vector<ChoreId>> bundles(n_);
  for (AgentId i = 0; i < n_; ++i) bundles[i] = bundles_[x.slot_of(i)];
  return Allocation::from_bundles(OwnerKind::kAgents, std::move(bundles));
}

namespace {

// Smallest min-edge slot per agent; the excluded agent keeps none.
std::vector<SlotId> chosen_min_slots(const EfxGraph& g,
                                     std::optional<AgentId> excluded) {
  std::vector<SlotId> chosen(g.n(), -1);
  for (AgentId i = 0; i < g.n(); ++i) {
    if (excluded && *excluded == i) continue;
    for (SlotId u = 0; u < g.n(); ++u) {
      if (g.min_edge(i, u)) {
        chosen[i] = u;
        break;
      }
    }
    ensure(chosen[i] >= 0, "agent has no min-edge");
  }
  return chosen;
}

}  // namespace

Matching insert_keeping_matching(SlotEngine& engine, const Matching& x, ChoreId e,
                      AgentId special, SlotId* chosen_slot) {
  const int n = engine.n();
  ensure(x.perfect(), "insert_keeping_matching: matching must be perfect");
  const EfxGraph g = engine.graph();
  ensure(x.contained_in(g), "insert_keeping_matching: matching not inside graph");
  const std::vector<SlotId> chosen = chosen_min_slots(g, special);

  // Vertices 0..n-1 are agents, n..2n-1 slots. Every slot points to its
  // matched agent; every agent except `special` points to its cheapest slot.
  auto succ = [&](int v) -> int {
    if (v < n) return v == special ? -1 : n + chosen[v];
    return x.agent_of(v - n);
  };
  std::vector<int> starts;
  for (AgentId i = 0; i < n; ++i) {
    if (i != special) starts.push_back(i);
  }
  for (SlotId u = 0; u < n; ++u) starts.push_back(n + u);
  const std::vector<int> cycle = find_functional_cycle(2 * n, succ, starts);

  if (!cycle.empty()) {
    // A cycle alternates matched arcs and min-edge arcs and cannot touch
    // `special`. Re-routing it puts some agent on a min-edge, after which
    // the cheapest chore can join that agent's bundle for free.
    Matching rerouted(0);
    if (cycle.size() == 2) {
      rerouted = x;  // the matched pair is already a min-edge
    } else {
      std::vector<std::pair<AgentId, SlotId>> updates;
      for (int v : cycle) {
        if (v < n) updates.emplace_back(v, chosen[v]);
      }
      rerouted = x.with_assignments(updates);
    }
    AgentId picked = -1;
    for (int v : cycle) {
      if (v < n && (picked < 0 || v < picked)) picked = v;
    }
    ensure(picked >= 0 && picked != special, "cycle must contain an agent");
    const SlotId target = rerouted.slot_of(picked);
    ensure(g.min_edge(picked, target), "rerouted agent must sit on a min-edge");
    engine.add(e, target);
    if (chosen_slot) *chosen_slot = target;
    return rerouted;
  }

  // Acyclic: give e to the slot matched to `special`. If that bundle is no
  // longer acceptable to `special`, walk from its new cheapest slot back to
  // `special` (such a walk exists: every other vertex keeps an out-arc) and
  // shift the matching one step along the walk.
  const SlotId u_star = x.slot_of(special);
  engine.add(e, u_star);
  if (chosen_slot) *chosen_slot = u_star;
  if (engine.is_edge(special, u_star)) return x;

  SlotId cheapest = 0;
  for (SlotId u = 1; u < n; ++u) {
    if (engine.bundle_sum(special, u) < engine.bundle_sum(special, cheapest))
      cheapest = u;
  }
  ensure(cheapest != u_star, "cheapest slot cannot be the one that grew");

  std::vector<std::pair<AgentId, SlotId>> updates;
  SlotId v = cheapest;
  for (int steps = 0;; ++steps) {
    ensure(steps <= n, "walk to special exceeded slot count");
    const AgentId j = x.agent_of(v);
    ensure(j >= 0, "walk reached an unmatched slot");
    if (j == special) break;
    updates.emplace_back(j, chosen[j]);
    v = chosen[j];
  }
  updates.emplace_back(special, cheapest);
  return x.with_assignments(updates);
}

}  // namespace efx::detail
