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

#ifndef EFX_INSTANCE_HPP_
#define EFX_INSTANCE_HPP_

#include <span>
#include <vector>

#include "efx/rational.hpp"

namespace efx {

using AgentId = int;
using ChoreId = int;

/// A chore-division problem: n agents, m chores, and an n x m matrix of
/// non-negative per-chore costs. Bundle costs are additive by construction;
/// the only way to cost a set of chores is to sum its entries.
///
/// Immutable after construction.
class Instance {
 public:
  /// Validates shape and non-negativity; throws InputError otherwise.
  Instance(int n_agents, int n_chores, std::vector<std::vector<Rational>> costs);

  int n() const { return n_; }
  int m() const { return m_; }

  const Rational& cost(AgentId agent, ChoreId chore) const {
    check_agent(agent);
    check_chore(chore);
    return costs_[agent][chore];
  }
  const std::vector<Rational>& row(AgentId agent) const {
    check_agent(agent);
    return costs_[agent];
  }

  /// Sum of costs[agent][e] over the bundle; empty bundle costs 0.
  Rational bundle_cost(AgentId agent, std::span<const ChoreId> bundle) const;
  Rational bundle_cost(AgentId agent, const std::vector<ChoreId>& bundle) const {
    return bundle_cost(agent, std::span<const ChoreId>(bundle));
  }

  bool valid_agent(AgentId agent) const { return agent >= 0 && agent < n_; }
  bool valid_chore(ChoreId chore) const { return chore >= 0 && chore < m_; }

 private:
  void check_agent(AgentId agent) const;
  void check_chore(ChoreId chore) const;

  int n_;
  int m_;
  std::vector<std::vector<Rational>> costs_;
};

}  // namespace efx

#endif  // EFX_INSTANCE_HPP_
