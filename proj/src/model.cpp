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

#include "efx/model.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "efx/errors.hpp"

namespace efx {

std::string to_string(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::kSmallM:
      return "small_m";
    case RegimeKind::kIdenticalOrderingAllButOne:
      return "identical_ordering";
    case RegimeKind::kBivaluedThreeAgents:
      return "bivalued_three";
    case RegimeKind::kUnsupported:
      return "unsupported";
  }
  return "unsupported";
}

std::optional<RegimeKind> regime_from_string(const std::string& name) {
  if (name == "small_m") return RegimeKind::kSmallM;
  if (name == "identical_ordering") return RegimeKind::kIdenticalOrderingAllButOne;
  if (name == "bivalued_three") return RegimeKind::kBivaluedThreeAgents;
  if (name == "unsupported") return RegimeKind::kUnsupported;
  return std::nullopt;
}

std::string to_string(const ChoreType& type) {
  switch (type.kind) {
    case ChoreType::kConsistentlyLarge:
      return "consistently_large";
    case ChoreType::kConsistentlySmall:
      return "consistently_small";
    case ChoreType::kLargeOnlyFor:
      return "large_only_for_" + std::to_string(type.agent);
    case ChoreType::kSmallOnlyFor:
      return "small_only_for_" + std::to_string(type.agent);
  }
  return "?";
}

namespace {

// Chore ids sorted by (cost under `agent`, id). Shared canonical order for
// pairwise ordering checks.
std::vector<ChoreId> sorted_by_cost(const Instance& inst, AgentId agent) {
  std::vector<ChoreId> order(inst.m());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](ChoreId a, ChoreId b) {
    return inst.cost(agent, a) < inst.cost(agent, b);
  });
  return order;
}

// Walk i's sorted order and require j to move in lockstep: strictly where i
// is strict, tied where i ties. Adjacent steps imply all pairs.
bool identical_along(const Instance& inst, const std::vector<ChoreId>& order_i,
                     AgentId i, AgentId j) {
  for (std::size_t k = 1; k < order_i.size(); ++k) {
    ChoreId a = order_i[k - 1];
    ChoreId b = order_i[k];
    if (inst.cost(i, a) == inst.cost(i, b)) {
      if (inst.cost(j, a) != inst.cost(j, b)) return false;
    } else {
      if (!(inst.cost(j, a) < inst.cost(j, b))) return false;
    }
  }
  return true;
}

}  // namespace

bool is_identical_ordering(const Instance& inst, AgentId i, AgentId j) {
  if (!inst.valid_agent(i) || !inst.valid_agent(j))
    throw InputError("is_identical_ordering: agent id out of range");
  if (i == j) return true;
  return identical_along(inst, sorted_by_cost(inst, i), i, j);
}

std::vector<Regime> classify_regimes(const Instance& inst) {
  std::vector<Regime> regimes;

  if (inst.m() <= 2 * inst.n()) {
    Regime regime;
    regime.kind = RegimeKind::kSmallM;
    regimes.push_back(std::move(regime));
  }

  // Identical ordering is an equivalence on agents (signs of pairwise cost
  // differences agree transitively), so group agents into classes once.
  const int n = inst.n();
  std::vector<int> class_of(n, -1);
  std::vector<std::pair<AgentId, std::vector<ChoreId>>> reps;
  for (AgentId a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < reps.size(); ++c) {
      if (identical_along(inst, reps[c].second, reps[c].first, a)) {
        class_of[a] = static_cast<int>(c);
        break;
      }
    }
    if (class_of[a] < 0) {
      class_of[a] = static_cast<int>(reps.size());
      reps.emplace_back(a, sorted_by_cost(inst, a));
    }
  }
  std::optional<AgentId> special;
  for (AgentId k = 0; k < n && !special; ++k) {
    std::set<int> classes;
    for (AgentId a = 0; a < n; ++a) {
      if (a != k) classes.insert(class_of[a]);
    }
    if (classes.size() <= 1) special = k;
  }
  if (special) {
    Regime regime;
    regime.kind = RegimeKind::kIdenticalOrderingAllButOne;
    regime.special = *special;
    regimes.push_back(std::move(regime));
  }

  if (inst.n() == 3) {
    bool bivalued = true;
    for (AgentId a = 0; a < 3 && bivalued; ++a) {
      std::set<Rational> values(inst.row(a).begin(), inst.row(a).end());
      bivalued = values.size() <= 2;
    }
    if (bivalued) {
      ScaledBivalued scaled = scale_bivalued(inst);
      Regime regime;
      regime.kind = RegimeKind::kBivaluedThreeAgents;
      regime.epsilons = std::move(scaled.epsilons);
      regime.degenerate_agents = std::move(scaled.degenerate_agents);
      regimes.push_back(std::move(regime));
    }
  }

  if (regimes.empty()) {
    Regime regime;
    regime.kind = RegimeKind::kUnsupported;
    regimes.push_back(std::move(regime));
  }
  return regimes;
}

ScaledBivalued scale_bivalued(const Instance& inst) {
  detail::require(inst.n() == 3, "scale_bivalued: needs exactly 3 agents");
  std::vector<std::vector<Rational>> scaled(3);
  std::vector<Rational> epsilons(3, Rational(0));
  std::vector<AgentId> degenerate;
  for (AgentId a = 0; a < 3; ++a) {
    std::set<Rational> values(inst.row(a).begin(), inst.row(a).end());
    if (values.size() > 2)
      throw ContractViolation("scale_bivalued: row has more than 2 values");
    if (values.size() <= 1) {
      // Constant row: the agent orders all chores equally, so the all-ones
      // surrogate imposes the same (vacuous) comparisons.
      scaled[a].assign(inst.m(), Rational(1));
      epsilons[a] = Rational(0);
      degenerate.push_back(a);
      continue;
    }
    const Rational low = *values.begin();
    const Rational high = *values.rbegin();
    epsilons[a] = low / high;
    scaled[a].reserve(inst.m());
    for (ChoreId e = 0; e < inst.m(); ++e) {
      scaled[a].push_back(inst.cost(a, e) == high ? Rational(1) : epsilons[a]);
    }
  }
  return ScaledBivalued{Instance(3, inst.m(), std::move(scaled)),
                        std::move(epsilons), std::move(degenerate)};
}

ChoreType classify_chore(const ScaledBivalued& scaled, ChoreId chore) {
  const Instance& inst = scaled.instance;
  if (!inst.valid_chore(chore))
    throw InputError("classify_chore: chore id out of range");
  detail::require(inst.n() == 3, "classify_chore: needs exactly 3 agents");
  std::vector<AgentId> large, small;
  for (AgentId a = 0; a < 3; ++a) {
    const Rational& c = inst.cost(a, chore);
    if (c == Rational(1)) {
      large.push_back(a);
    } else if (c == scaled.epsilons[a]) {
      small.push_back(a);
    } else {
      throw ContractViolation("classify_chore: instance is not in scaled form");
    }
  }
  switch (large.size()) {
    case 3:
      return ChoreType{ChoreType::kConsistentlyLarge};
    case 0:
      return ChoreType{ChoreType::kConsistentlySmall};
    case 1:
      return ChoreType{ChoreType::kLargeOnlyFor, large.front()};
    default:
      return ChoreType{ChoreType::kSmallOnlyFor, small.front()};
  }
}

}  // namespace efx
