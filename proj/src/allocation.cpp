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

#include "efx/allocation.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "efx/errors.hpp"

namespace efx {

Allocation::Allocation(OwnerKind owner_kind,
                       std::vector<std::vector<ChoreId>> bundles,
                       std::vector<ChoreId> universe)
    : owner_kind_(owner_kind),
      bundles_(std::move(bundles)),
      universe_(std::move(universe)) {
  if (bundles_.empty()) throw InputError("allocation: needs at least 1 bundle");
  for (auto& b : bundles_) std::sort(b.begin(), b.end());
  std::sort(universe_.begin(), universe_.end());
  if (std::adjacent_find(universe_.begin(), universe_.end()) != universe_.end())
    throw InputError("allocation: duplicate chore in universe");

  std::vector<ChoreId> merged;
  for (const auto& b : bundles_) merged.insert(merged.end(), b.begin(), b.end());
  std::sort(merged.begin(), merged.end());
  if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
    throw InputError("allocation: bundles are not disjoint");
  if (merged != universe_)
    throw InputError("allocation: bundles do not partition the universe");
}

Allocation Allocation::empty(OwnerKind owner_kind, int n) {
  if (n <= 0) throw InputError("allocation: needs at least 1 bundle");
  return Allocation(owner_kind, std::vector<std::vector<ChoreId>>(n), {});
}

Allocation Allocation::from_bundles(OwnerKind owner_kind,
                                    std::vector<std::vector<ChoreId>> bundles) {
  std::vector<ChoreId> universe;
  for (const auto& b : bundles) universe.insert(universe.end(), b.begin(), b.end());
  return Allocation(owner_kind, std::move(bundles), std::move(universe));
}

Allocation Allocation::as(OwnerKind owner_kind) const {
  Allocation copy = *this;
  copy.owner_kind_ = owner_kind;
  return copy;
}

Allocation Allocation::with_added(int k, ChoreId chore) const {
  if (k < 0 || k >= size())
    throw InputError("allocation: bundle index " + std::to_string(k) +
                     " out of range");
  auto bundles = bundles_;
  bundles[k].push_back(chore);
  auto universe = universe_;
  universe.push_back(chore);
  return Allocation(owner_kind_, std::move(bundles), std::move(universe));
}

bool Allocation::covers_all_chores(const Instance& inst) const {
  if (static_cast<int>(universe_.size()) != inst.m()) return false;
  for (int e = 0; e < inst.m(); ++e) {
    if (universe_[e] != e) return false;
  }
  return true;
}

}  // namespace efx
