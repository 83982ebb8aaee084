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

#include "efx/algorithms.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>

#include "efx/efx_graph.hpp"
#include "efx/errors.hpp"
#include "slot_engine.hpp"

namespace efx {

RoundRobinTrace round_robin(const Instance& inst,
                            const std::vector<ChoreId>& chores,
                            const std::vector<AgentId>& order) {
  const int n = inst.n();
  {
    std::vector<AgentId> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<AgentId> expect(n);
    std::iota(expect.begin(), expect.end(), 0);
    if (sorted != expect)
      throw ContractViolation("round_robin: order must be a permutation of agents");
  }
  std::vector<ChoreId> pool = chores;
  std::sort(pool.begin(), pool.end());
  if (std::adjacent_find(pool.begin(), pool.end()) != pool.end())
    throw InputError("round_robin: duplicate chore id");
  for (ChoreId e : pool) {
    if (!inst.valid_chore(e)) throw InputError("round_robin: chore id out of range");
  }

  // Per-agent preference order over the pool, so each turn is a cursor
  // advance instead of a rescan.
  std::vector<std::vector<ChoreId>> pref(n, pool);
  for (AgentId i = 0; i < n; ++i) {
    std::stable_sort(pref[i].begin(), pref[i].end(), [&](ChoreId a, ChoreId b) {
      return inst.cost(i, a) < inst.cost(i, b);
    });
  }
  std::vector<std::size_t> cursor(n, 0);
  std::vector<char> taken(inst.m(), 0);

  std::vector<std::vector<ChoreId>> bundles(n);
  std::vector<int> last_round(n, 0);
  const int total = static_cast<int>(pool.size());
  for (int round = 1; round <= total; ++round) {
    const AgentId who = order[(round - 1) % n];
    std::size_t& cur = cursor[who];
    while (taken[pref[who][cur]]) ++cur;
    const ChoreId e = pref[who][cur];
    taken[e] = 1;
    bundles[who].push_back(e);
    last_round[who] = round;
  }
  return RoundRobinTrace{Allocation::from_bundles(OwnerKind::kAgents, bundles),
                         std::move(last_round), order};
}

std::array<AgentId, 3> choose_order_for_ranks(int m_prime, RankTarget target) {
  const int needed = target == RankTarget::kStrictChain ? 2 : 3;
  if (m_prime < needed)
    throw ContractViolation("choose_order_for_ranks: too few chores for target");
  // The last chores go to the roles that must pick last; which ordering does
  // that depends only on m' mod 3. The same table serves both targets.
  switch (m_prime % 3) {
    case 0:
      return {0, 1, 2};
    case 1:
      return {2, 0, 1};
    default:
      return {1, 2, 0};
  }
}

namespace {

// Matching membership plus the staged-bundle condition: agents that have not
// yet received their reserved chore must sit on singleton bundles.
void check_small_m_invariant(const detail::SlotEngine& engine, const Matching& x,
                             int next_agent) {
  detail::ensure(x.perfect() && x.contained_in(engine.graph()),
                 "small_m: staged matching left the graph");
  for (AgentId i = next_agent; i < engine.n(); ++i) {
    detail::ensure(engine.bundle_size(x.slot_of(i)) == 1,
                   "small_m: later agent matched to a grown bundle");
  }
}

}  // namespace

Allocation solve_small_m(const Instance& inst, const SmallMOptions& opts) {
  const int n = inst.n();
  const int m = inst.m();
  if (m > 2 * n)
    throw ContractViolation("solve_small_m: needs m <= 2n");

  // Agents l-1..0 each reserve their cheapest remaining chore; the reserved
  // chores re-enter in the opposite order, so each agent's chore is no
  // costlier (to them) than anything placed while it waited.
  const int l = std::max(m - n, 0);
  std::vector<char> taken(m, 0);
  std::vector<ChoreId> reserved(l, -1);
  for (AgentId i = l - 1; i >= 0; --i) {
    ChoreId best = -1;
    for (ChoreId e = 0; e < m; ++e) {
      if (taken[e]) continue;
      if (best < 0 || inst.cost(i, e) < inst.cost(i, best)) best = e;
    }
    reserved[i] = best;
    taken[best] = 1;
  }

  detail::SlotEngine engine(inst, n);
  SlotId next_slot = 0;
  for (ChoreId e = 0; e < m; ++e) {
    if (!taken[e]) engine.add(e, next_slot++);
  }

  // The staged-matching argument assumes every slot starts with exactly one
  // chore, which is the l > 0 case; with l == 0 there is nothing to stage.
  Matching staged = Matching::identity(n);
  if (opts.verify_matching_invariant && l > 0)
    check_small_m_invariant(engine, staged, 0);
  for (AgentId i = 0; i < l; ++i) {
    SlotId target = 0;
    for (SlotId u = 1; u < n; ++u) {
      if (engine.bundle_sum(i, u) < engine.bundle_sum(i, target)) target = u;
    }
    engine.add(reserved[i], target);
    if (opts.verify_matching_invariant) {
      if (staged.slot_of(i) != target) {
        const AgentId displaced = staged.agent_of(target);
        const SlotId freed = staged.slot_of(i);
        staged = staged.with_assignments({{i, target}, {displaced, freed}});
      }
      check_small_m_invariant(engine, staged, i + 1);
    }
  }

  const Matching x = find_perfect_matching(engine.graph());
  detail::ensure(x.perfect(), "small_m: final graph lost its perfect matching");
  return engine.extract(x);
}

Allocation solve_identical_ordering(const Instance& inst, AgentId special,
                                    const IdenticalOrderingOptions& opts) {
  const int n = inst.n();
  if (!inst.valid_agent(special))
    throw InputError("solve_identical_ordering: special agent out of range");
  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j = i + 1; j < n; ++j) {
      if (i != special && j != special && !is_identical_ordering(inst, i, j))
        throw ContractViolation(
            "solve_identical_ordering: non-special agents must order chores "
            "identically");
    }
  }

  if (n == 1) {
    std::vector<ChoreId> all(inst.m());
    std::iota(all.begin(), all.end(), 0);
    return Allocation::from_bundles(OwnerKind::kAgents, {all});
  }

  // Costliest first, under any non-special agent: each inserted chore is
  // then minimal against everything already placed, for all of them at once.
  AgentId key = special == 0 ? 1 : 0;
  std::vector<ChoreId> order(inst.m());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](ChoreId a, ChoreId b) {
    return inst.cost(key, b) < inst.cost(key, a);
  });

  detail::SlotEngine engine(inst, n);
  Matching x = Matching::identity(n);
  if (!opts.use_try_all_fallback) {
    for (ChoreId e : order) x = detail::insert_keeping_matching(engine, x, e, special);
    return engine.extract(x);
  }

  Allocation alloc = Allocation::empty(OwnerKind::kSlots, n);
  for (ChoreId e : order) {
    auto res = insert_chore_try_all_slots(inst, alloc, e);
    detail::ensure(res.has_value(), "some slot must keep a perfect matching");
    alloc = std::move(res->allocation);
    x = std::move(res->matching);
  }
  std::vector<std::vector<ChoreId>> bundles(n);
  for (AgentId i = 0; i < n; ++i) bundles[i] = alloc.bundle(x.slot_of(i));
  return Allocation::from_bundles(OwnerKind::kAgents, std::move(bundles));
}

namespace {

struct BivaluedView {
  ScaledBivalued scaled;
  std::vector<ChoreType> types;
};

BivaluedView make_bivalued_view(const Instance& inst) {
  BivaluedView view{scale_bivalued(inst), {}};
  view.types.reserve(inst.m());
  for (ChoreId e = 0; e < inst.m(); ++e)
    view.types.push_back(classify_chore(view.scaled, e));
  return view;
}

// Base split once no chore is consistently small or large for just one
// agent: one-chore-per-agent for tiny sets, otherwise a round-robin pass
// patched with the small-only chores that the rank pattern accounts for.
Allocation bivalued_base_allocation(const BivaluedView& view,
                                    const std::vector<ChoreId>& remaining) {
  const Instance& scaled = view.scaled.instance;
  if (remaining.size() <= 3) {
    std::vector<std::vector<ChoreId>> bundles(3);
    for (std::size_t k = 0; k < remaining.size(); ++k)
      bundles[k].push_back(remaining[k]);
    return Allocation::from_bundles(OwnerKind::kAgents, std::move(bundles));
  }

  std::vector<ChoreId> small_only;
  for (ChoreId e : remaining) {
    if (view.types[e].kind == ChoreType::kSmallOnlyFor) small_only.push_back(e);
  }

  if (small_only.empty()) {
    for (ChoreId e : remaining) {
      detail::ensure(view.types[e].kind == ChoreType::kConsistentlyLarge,
                     "bivalued: leftover chore escaped the case analysis");
    }
    return round_robin(scaled, remaining, {0, 1, 2}).allocation;
  }

  const ChoreId first = small_only.front();
  const AgentId a1 = view.types[first].agent;
  std::optional<ChoreId> second;
  for (ChoreId e : small_only) {
    if (view.types[e].agent != a1) {
      second = e;
      break;
    }
  }

  if (!second) {
    // Only agent a1 has personal small chores left. Give a1 one of them on
    // top of a round-robin split in which a1 stops picking first; every
    // other chore costs the other two agents 1, so bundle sizes bound envy.
    std::array<AgentId, 3> roles{a1, -1, -1};
    int fill = 1;
    for (AgentId a = 0; a < 3; ++a) {
      if (a != a1) roles[fill++] = a;
    }
    std::vector<ChoreId> rest;
    for (ChoreId e : remaining) {
      if (e != first) rest.push_back(e);
    }
#if defined(EFX_CONTRACTS)
    for (ChoreId e : rest) {
      for (AgentId a = 0; a < 3; ++a) {
        if (a != a1 && scaled.cost(a, e) != Rational(1))
          throw InvariantViolation("bivalued: rest must cost 1 to other agents");
      }
    }
#endif
    const auto role_order = choose_order_for_ranks(
        static_cast<int>(rest.size()), RankTarget::kFirstBelowOthers);
    std::vector<AgentId> sigma{roles[role_order[0]], roles[role_order[1]],
                               roles[role_order[2]]};
    RoundRobinTrace trace = round_robin(scaled, rest, sigma);
    detail::ensure(trace.last_round[a1] < trace.last_round[roles[1]] &&
                       trace.last_round[a1] < trace.last_round[roles[2]],
                   "bivalued: rank pattern r_1 < min(r_2, r_3) failed");
    auto bundles = trace.allocation.bundles();
    bundles[a1].push_back(first);
    return Allocation::from_bundles(OwnerKind::kAgents, std::move(bundles));
  }

  // Two agents have personal small chores: give each one of theirs, ranks
  // strictly increasing along (a1, a2, a3).
  const AgentId a2 = view.types[*second].agent;
  const AgentId a3 = 3 - a1 - a2;
  std::vector<ChoreId> rest;
  for (ChoreId e : remaining) {
    if (e != first && e != *second) rest.push_back(e);
  }
  const auto role_order = choose_order_for_ranks(static_cast<int>(rest.size()),
                                                 RankTarget::kStrictChain);
  const std::array<AgentId, 3> roles{a1, a2, a3};
  std::vector<AgentId> sigma{roles[role_order[0]], roles[role_order[1]],
                             roles[role_order[2]]};
  RoundRobinTrace trace = round_robin(scaled, rest, sigma);
  detail::ensure(trace.last_round[a1] < trace.last_round[a2] &&
                     trace.last_round[a2] < trace.last_round[a3],
                 "bivalued: rank pattern r_1 < r_2 < r_3 failed");
  auto bundles = trace.allocation.bundles();
  bundles[a1].push_back(first);
  bundles[a2].push_back(*second);
  return Allocation::from_bundles(OwnerKind::kAgents, std::move(bundles));
}

}  // namespace

Allocation solve_bivalued_three(const Instance& inst, BivaluedStats* stats) {
  if (inst.n() != 3)
    throw ContractViolation("solve_bivalued_three: needs exactly 3 agents");
  BivaluedView view = make_bivalued_view(inst);  // rejects rows with >2 values
  const Instance& scaled = view.scaled.instance;

  // Peel chores that are consistently small or large for just one agent;
  // they re-enter one at a time while a perfect matching is maintained.
  // This is the recursion of the case analysis, run iteratively. Chore types
  // never change as the set shrinks, so the peel order is known up front:
  // consistently-small chores by id, then large-only chores by id, stopping
  // once only three chores remain.
  std::vector<ChoreId> peelable;
  for (ChoreId e = 0; e < inst.m(); ++e) {
    if (view.types[e].kind == ChoreType::kConsistentlySmall) peelable.push_back(e);
  }
  for (ChoreId e = 0; e < inst.m(); ++e) {
    if (view.types[e].kind == ChoreType::kLargeOnlyFor) peelable.push_back(e);
  }
  const int peel_count =
      std::max(0, std::min(static_cast<int>(peelable.size()), inst.m() - 3));
  std::vector<ChoreId> peeled(peelable.begin(), peelable.begin() + peel_count);
  std::vector<char> is_peeled(inst.m(), 0);
  for (ChoreId e : peeled) is_peeled[e] = 1;
  std::vector<ChoreId> remaining;
  for (ChoreId e = 0; e < inst.m(); ++e) {
    if (!is_peeled[e]) remaining.push_back(e);
  }
  if (stats) stats->recursion_depth = static_cast<int>(peeled.size());

  const Allocation base = bivalued_base_allocation(view, remaining);

  detail::SlotEngine engine(scaled, 3);
  for (AgentId i = 0; i < 3; ++i) {
    for (ChoreId e : base.bundle(i)) engine.add(e, i);
  }
  // The base allocation is EFX, so the identity assignment is acceptable.
  Matching x = Matching::identity(3);
  detail::ensure(x.contained_in(engine.graph()),
                 "bivalued: base allocation must admit the identity matching");

  while (!peeled.empty()) {
    const ChoreId e = peeled.back();
    peeled.pop_back();
    if (view.types[e].kind == ChoreType::kConsistentlySmall) {
      // Cheapest for everyone: rotate some agent onto a min-edge and grow
      // that agent's matched bundle; the matching survives as-is.
      const EfxGraph g = engine.graph();
      x = rotate_to_min_edge(g, x);
      AgentId who = -1;
      for (AgentId i = 0; i < 3; ++i) {
        if (g.min_edge(i, x.slot_of(i))) {
          who = i;
          break;
        }
      }
      detail::ensure(who >= 0, "bivalued: rotation produced no min-edge pair");
      engine.add(e, x.slot_of(who));
      detail::ensure(x.contained_in(engine.graph()),
                     "bivalued: matching lost after consistently-small insert");
    } else {
      detail::ensure(view.types[e].kind == ChoreType::kLargeOnlyFor,
                     "bivalued: peeled chore has unexpected type");
      x = detail::insert_keeping_matching(engine, x, e, view.types[e].agent);
    }
  }
  return engine.extract(x);
}

SolveOutcome solve(const Instance& inst) {
  SolveOutcome outcome;
  outcome.regimes = classify_regimes(inst);
  for (const Regime& regime : outcome.regimes) {
    switch (regime.kind) {
      case RegimeKind::kSmallM:
        outcome.results.push_back({regime, solve_small_m(inst)});
        break;
      case RegimeKind::kIdenticalOrderingAllButOne:
        outcome.results.push_back(
            {regime, solve_identical_ordering(inst, regime.special)});
        break;
      case RegimeKind::kBivaluedThreeAgents:
        outcome.results.push_back({regime, solve_bivalued_three(inst)});
        break;
      case RegimeKind::kUnsupported:
        break;
    }
  }
  return outcome;
}

}  // namespace efx
