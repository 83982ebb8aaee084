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

#include "efx/instance.hpp"

#include <string>
#include <utility>

#include "efx/errors.hpp"

namespace efx {

Instance::Instance(int n_agents, int n_chores,
                   std::vector<std::vector<Rational>> costs)
    : n_(n_agents), m_(n_chores), costs_(std::move(costs)) {
  if (n_ <= 0) throw InputError("instance: agent count must be positive");
  if (m_ < 0) throw InputError("instance: chore count must be non-negative");
  if (static_cast<int>(costs_.size()) != n_)
    throw InputError("instance: cost matrix must have one row per agent");
  for (const auto& row : costs_) {
    if (static_cast<int>(row.size()) != m_)
      throw InputError("instance: cost row length must equal chore count");
    for (const auto& c : row) {
      if (c < Rational(0)) throw InputError("instance: negative cost");
    }
  }
}

Rational Instance::bundle_cost(AgentId agent,
                               std::span<const ChoreId> bundle) const {
  check_agent(agent);
  Rational total(0);
  for (ChoreId e : bundle) {
    check_chore(e);
    total += costs_[agent][e];
  }
  return total;
}

void Instance::check_agent(AgentId agent) const {
  if (!valid_agent(agent))
    throw InputError("instance: agent id " + std::to_string(agent) +
                     " out of range");
}

void Instance::check_chore(ChoreId chore) const {
  if (!valid_chore(chore))
    throw InputError("instance: chore id " + std::to_string(chore) +
                     " out of range");
}

}  // namespace efx
