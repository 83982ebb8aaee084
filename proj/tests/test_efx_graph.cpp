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
#include <doctest.h>
#include <set>
#include <utility>
#include <vector>

#include "efx/errors.hpp"
#include "efx/generator.hpp"
#include "helpers.hpp"

using namespace efx;
using testing::golden_instance;
using testing::golden_slot_allocation;
using testing::make_instance;

namespace {

using EdgeSet = std::set<std::pair<AgentId, SlotId>>;

EdgeSet to_set(const std::vector<std::pair<AgentId, SlotId>>& list) {
  return EdgeSet(list.begin(), list.end());
}

}  // namespace

TEST_CASE("golden graph: exact edge and min-edge sets") {
  const EfxGraph g = build_graph(golden_instance(), golden_slot_allocation());
  CHECK(to_set(g.edge_list()) ==
        EdgeSet{{0, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}});
  CHECK(to_set(g.min_edge_list()) ==
        EdgeSet{{0, 0}, {1, 2}, {2, 0}, {2, 1}, {2, 2}});
}

TEST_CASE("empty bundles make a complete graph of min-edges") {
  const Instance inst = golden_instance();
  const EfxGraph g = build_graph(inst, Allocation::empty(OwnerKind::kSlots, 3));
  CHECK(g.edge_list().size() == 9);
  CHECK(g.min_edge_list().size() == 9);
}

TEST_CASE("singleton bundles make a complete graph") {
  const Instance inst = make_instance({{9, 1, 5}, {2, 8, 4}, {3, 3, 3}});
  const EfxGraph g =
      build_graph(inst, Allocation::from_bundles(OwnerKind::kSlots, {{0}, {1}, {2}}));
  CHECK(g.edge_list().size() == 9);
}

TEST_CASE("build_graph rejects mismatched slot counts") {
  CHECK_THROWS_AS(
      build_graph(golden_instance(),
                  Allocation::from_bundles(OwnerKind::kSlots, {{0}, {1}})),
      InputError);
}

TEST_CASE("random graphs match the literal edge definition") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + rng.below_int(5);
    const int m = rng.below_int(9);
    const Instance inst = testing::random_instance(rng, n, m, 6);
    std::vector<ChoreId> chores(m);
    for (ChoreId e = 0; e < m; ++e) chores[e] = e;
    const Allocation alloc = testing::random_slot_allocation(rng, n, chores);
    const EfxGraph g = build_graph(inst, alloc);
    for (AgentId i = 0; i < n; ++i) {
      int min_edges = 0;
      for (SlotId u = 0; u < n; ++u) {
        CHECK(g.edge(i, u) == testing::literal_is_edge(inst, alloc, i, u));
        CHECK(g.min_edge(i, u) == testing::literal_is_min_edge(inst, alloc, i, u));
        if (g.min_edge(i, u)) {
          ++min_edges;
          CHECK(g.edge(i, u));
        }
      }
      CHECK(min_edges >= 1);  // every agent can point somewhere cheap
    }
  }
}

TEST_CASE("matching: complete graph, starved graph, golden graph") {
  EfxGraph complete(3);
  for (AgentId i = 0; i < 3; ++i) {
    for (SlotId u = 0; u < 3; ++u) complete.set_edge(i, u, true);
  }
  CHECK(find_perfect_matching(complete).perfect());

  EfxGraph starved(3);  // agent 2 has no edges
  starved.set_edge(0, 0, false);
  starved.set_edge(0, 1, false);
  starved.set_edge(1, 0, false);
  starved.set_edge(1, 1, false);
  const Matching partial = find_perfect_matching(starved);
  CHECK_FALSE(partial.perfect());
  CHECK(partial.size() == 2);

  const EfxGraph g = build_graph(golden_instance(), golden_slot_allocation());
  const Matching x = find_perfect_matching(g);
  REQUIRE(x.perfect());
  CHECK(x.contained_in(g));
  // {(0,u0),(1,u1),(2,u2)} is a valid perfect matching here.
  CHECK(g.edge(0, 0));
  CHECK(g.edge(1, 1));
  CHECK(g.edge(2, 2));
}

TEST_CASE("matching is maximum (checked against permutation search)") {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + rng.below_int(4);
    EfxGraph g(n);
    for (AgentId i = 0; i < n; ++i) {
      for (SlotId u = 0; u < n; ++u) {
        if (rng.below(3) == 0) g.set_edge(i, u, false);
      }
    }
    std::vector<SlotId> perm(n);
    for (int k = 0; k < n; ++k) perm[k] = k;
    int best = 0;
    do {
      int size = 0;
      for (AgentId i = 0; i < n; ++i) size += g.edge(i, perm[i]) ? 1 : 0;
      best = std::max(best, size);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(find_perfect_matching(g).size() == best);
  }
}

TEST_CASE("rotate_to_min_edge returns x when a matched min-edge exists") {
  const EfxGraph g = build_graph(golden_instance(), golden_slot_allocation());
  const Matching x = Matching::identity(3);  // (0,u0) is a min-edge
  REQUIRE(x.contained_in(g));
  CHECK(rotate_to_min_edge(g, x) == x);
}

TEST_CASE("rotate_to_min_edge swaps the alternating 4-cycle") {
  EfxGraph g(2);
  g.set_edge(0, 0, false);
  g.set_edge(1, 1, false);
  g.set_edge(0, 1, true);
  g.set_edge(1, 0, true);
  const Matching x = Matching::identity(2);
  const Matching rotated = rotate_to_min_edge(g, x);
  CHECK(rotated.slot_of(0) == 1);
  CHECK(rotated.slot_of(1) == 0);
}

TEST_CASE("rotate_to_min_edge rejects bad matchings") {
  const EfxGraph g = build_graph(golden_instance(), golden_slot_allocation());
  CHECK_THROWS_AS(rotate_to_min_edge(g, Matching(3)), ContractViolation);
  Matching wrong = Matching::identity(3);
  wrong.assign(1, 0);  // breaks perfection
  CHECK_THROWS_AS(rotate_to_min_edge(g, wrong), ContractViolation);
}

TEST_CASE("rotate output: perfect, inside the graph, uses a min-edge") {
  SplitMix64 rng(47);
  int rotations = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + rng.below_int(5);
    const int m = rng.below_int(8);
    const Instance inst = testing::random_instance(rng, n, m, 5);
    std::vector<ChoreId> chores(m);
    for (ChoreId e = 0; e < m; ++e) chores[e] = e;
    const Allocation alloc = testing::random_slot_allocation(rng, n, chores);
    const EfxGraph g = build_graph(inst, alloc);
    const Matching x = find_perfect_matching(g);
    if (!x.perfect()) continue;
    const Matching out = rotate_to_min_edge(g, x);
    if (!(out == x)) ++rotations;
    CHECK(out.perfect());
    CHECK(out.contained_in(g));
    bool has_min = false;
    for (AgentId i = 0; i < n; ++i) has_min = has_min || g.min_edge(i, out.slot_of(i));
    CHECK(has_min);
  }
  CHECK(rotations > 0);  // the non-trivial branch actually ran
}

TEST_CASE("add_chore_for_min_agent: trivial and golden-extension cases") {
  const Instance empty_inst = make_instance({{1, 2}, {2, 1}});
  const Allocation empty = Allocation::empty(OwnerKind::kSlots, 2);
  const Allocation grown = add_chore_for_min_agent(empty_inst, empty, 0, 1, 0);
  CHECK(grown.bundle(1) == std::vector<ChoreId>{0});
  CHECK(build_graph(empty_inst, grown).edge_list().size() == 4);

  // Golden fixture with a 7th chore that costs agent 0 nothing.
  const Instance inst = make_instance({{2, 0, 5, 2, 5, 2, 0},
                                       {2, 4, 3, 3, 0, 3, 1},
                                       {1, 1, 1, 1, 1, 1, 1}});
  const Allocation before = golden_slot_allocation();
  const EfxGraph g_before = build_graph(inst, before);
  REQUIRE(g_before.min_edge(0, 0));
  const Allocation after = add_chore_for_min_agent(inst, before, 0, 0, 6);
  CHECK(after.bundle(0) == std::vector<ChoreId>{0, 1, 6});
  const EfxGraph g_after = build_graph(inst, after);
  CHECK(g_after.edge(0, 0));
  // Edges at untouched slots persist.
  for (AgentId j = 0; j < 3; ++j) {
    for (SlotId u = 1; u < 3; ++u) {
      if (g_before.edge(j, u)) CHECK(g_after.edge(j, u));
    }
  }
}

TEST_CASE("add_chore_for_min_agent contract checks") {
  const Instance inst = make_instance({{2, 0, 5, 2, 5, 2, 0},
                                       {2, 4, 3, 3, 0, 3, 1},
                                       {1, 1, 1, 1, 1, 1, 1}});
  const Allocation alloc = golden_slot_allocation();
  // (0, u1) is not a min-edge.
  CHECK_THROWS_AS(add_chore_for_min_agent(inst, alloc, 0, 1, 6),
                  ContractViolation);
  // Chore 2 costs agent 0 more than chore 1 does: not minimal.
  const Allocation partial =
      Allocation::from_bundles(OwnerKind::kSlots, {{0, 1}, {3}, {4, 5}});
  CHECK_THROWS_AS(add_chore_for_min_agent(inst, partial, 0, 0, 2),
                  ContractViolation);
  // Already-allocated chore is an input error.
  CHECK_THROWS_AS(add_chore_for_min_agent(inst, alloc, 0, 0, 3), InputError);
}

TEST_CASE("edge persistence under random minimal insertions") {
  SplitMix64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + rng.below_int(4);
    const int m = 2 + rng.below_int(7);
    std::vector<std::vector<Rational>> costs(n, std::vector<Rational>(m));
    for (auto& row : costs) {
      for (auto& c : row) c = Rational(1 + rng.below_int(9));
    }
    const AgentId agent = rng.below_int(n);
    const ChoreId chore = rng.below_int(m);
    costs[agent][chore] = Rational(0);  // minimal for `agent` by force
    const Instance inst(n, m, costs);

    std::vector<ChoreId> others;
    for (ChoreId e = 0; e < m; ++e) {
      if (e != chore) others.push_back(e);
    }
    const Allocation alloc = testing::random_slot_allocation(rng, n, others);
    const EfxGraph before = build_graph(inst, alloc);
    SlotId u_i = -1;
    for (SlotId u = 0; u < n; ++u) {
      if (before.min_edge(agent, u)) {
        u_i = u;
        break;
      }
    }
    REQUIRE(u_i >= 0);
    const Allocation after = add_chore_for_min_agent(inst, alloc, agent, u_i, chore);
    const EfxGraph g = build_graph(inst, after);
    CHECK(g.edge(agent, u_i));
    for (AgentId j = 0; j < n; ++j) {
      for (SlotId u = 0; u < n; ++u) {
        if (u != u_i && before.edge(j, u)) CHECK(g.edge(j, u));
      }
    }
  }
}

TEST_CASE("insert_chore_keeping_matching: empty allocation accepts anything") {
  const Instance inst = make_instance({{3, 1}, {2, 5}});
  const Allocation empty = Allocation::empty(OwnerKind::kSlots, 2);
  const InsertResult res =
      insert_chore_keeping_matching(inst, empty, Matching::identity(2), 0, 1);
  CHECK(res.matching.perfect());
  CHECK(res.allocation.universe() == std::vector<ChoreId>{0});
  CHECK(res.matching.contained_in(build_graph(inst, res.allocation)));
}

TEST_CASE("insert_chore_keeping_matching: two-cycle keeps the matching") {
  // All-ones costs, singleton bundles: every matched pair is already a
  // min-edge, so the chore lands on the first agent's own slot.
  const Instance inst = make_instance({{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}});
  const Allocation alloc =
      Allocation::from_bundles(OwnerKind::kSlots, {{0}, {1}, {2}});
  const Matching x = Matching::identity(3);
  const InsertResult res = insert_chore_keeping_matching(inst, alloc, x, 3, 2);
  CHECK(res.matching == x);
  CHECK(res.chosen_slot == 0);
  CHECK(res.allocation.bundle(0) == std::vector<ChoreId>{0, 3});
}

TEST_CASE("insert_chore_keeping_matching contract checks") {
  const Instance inst = make_instance({{3, 1, 2}, {2, 5, 1}});
  const Allocation alloc = Allocation::from_bundles(OwnerKind::kSlots, {{1}, {2}});
  const Matching x = Matching::identity(2);
  REQUIRE(x.contained_in(build_graph(inst, alloc)));
  // Chore 0 is not minimal for agent 0 (costs 3 vs allocated 1) and special
  // is agent 1, so the hypothesis fails.
  CHECK_THROWS_AS(insert_chore_keeping_matching(inst, alloc, x, 0, 1),
                  ContractViolation);
  CHECK_THROWS_AS(insert_chore_keeping_matching(inst, alloc, Matching(2), 0, 0),
                  ContractViolation);
}

TEST_CASE("random insertions keep a perfect matching (with reference check)") {
  SplitMix64 rng(59);
  int cycle_route = 0;
  int matched_slot_route = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const testing::InsertionCase input =
        trial % 2 == 0 ? testing::insertion_case_from_small_m(rng)
                       : testing::insertion_case_from_ordered_prefix(rng);
    REQUIRE(input.matching.perfect());
    REQUIRE(input.matching.contained_in(
        build_graph(input.instance, input.allocation)));

    const InsertResult res = insert_chore_keeping_matching(
        input.instance, input.allocation, input.matching, input.chore,
        input.special);
    CHECK(res.matching.perfect());
    CHECK(res.matching.contained_in(build_graph(input.instance, res.allocation)));

    // The chosen slot must be one the exhaustive reference also accepts.
    const auto reference =
        insert_chore_try_all_slots(input.instance, input.allocation, input.chore);
    REQUIRE(reference.has_value());
    Allocation expected = input.allocation.with_added(res.chosen_slot, input.chore);
    CHECK(find_perfect_matching(build_graph(input.instance, expected)).perfect());

    if (res.chosen_slot == input.matching.slot_of(input.special)) {
      ++matched_slot_route;
    } else {
      ++cycle_route;
    }
  }
  // Both proof routes must actually run.
  CHECK(cycle_route > 0);
  CHECK(matched_slot_route > 0);
}

TEST_CASE("envy digraph shape") {
  const EfxGraph g = build_graph(golden_instance(), golden_slot_allocation());
  const Matching x = find_perfect_matching(g);
  REQUIRE(x.perfect());
  const EnvyDigraph d = build_envy_digraph(g, x, 2);
  CHECK(d.n == 3);
  CHECK(d.agent_arcs[2].empty());
  CHECK_FALSE(d.agent_arcs[0].empty());
  CHECK_FALSE(d.agent_arcs[1].empty());
  for (SlotId u = 0; u < 3; ++u) CHECK(d.slot_arc[u] == x.agent_of(u));

  const EnvyDigraph full = build_envy_digraph(g, x, std::nullopt);
  for (AgentId i = 0; i < 3; ++i) CHECK_FALSE(full.agent_arcs[i].empty());
}
