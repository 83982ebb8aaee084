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

#ifndef EFX_ALLOCATION_HPP_
#define EFX_ALLOCATION_HPP_

#include <vector>

#include "efx/instance.hpp"

namespace efx {

/// Whether bundle k belongs to agent k or to anonymous slot k. Slot
/// allocations are intermediate objects; the matching step decides which
/// agent finally takes which slot.
enum class OwnerKind { kAgents, kSlots };

/// An n-partition of a chore subset (the universe) into indexed bundles.
/// Bundles and universe are kept sorted; equality is structural.
class Allocation {
 public:
  /// Validates: exactly n bundles, pairwise disjoint, union == universe.
  Allocation(OwnerKind owner_kind, std::vector<std::vector<ChoreId>> bundles,
             std::vector<ChoreId> universe);

  /// Empty bundles over an empty universe.
  static Allocation empty(OwnerKind owner_kind, int n);
  /// Universe inferred as the union of the bundles.
  static Allocation from_bundles(OwnerKind owner_kind,
                                 std::vector<std::vector<ChoreId>> bundles);

  OwnerKind owner_kind() const { return owner_kind_; }
  int size() const { return static_cast<int>(bundles_.size()); }
  const std::vector<ChoreId>& bundle(int k) const { return bundles_[k]; }
  const std::vector<std::vector<ChoreId>>& bundles() const { return bundles_; }
  const std::vector<ChoreId>& universe() const { return universe_; }

  /// Same allocation, reinterpreted with the other owner kind.
  Allocation as(OwnerKind owner_kind) const;
  /// Copy with `chore` appended to bundle k.
  Allocation with_added(int k, ChoreId chore) const;

  /// True iff the universe is exactly {0, ..., m-1}.
  bool covers_all_chores(const Instance& inst) const;

  friend bool operator==(const Allocation& a, const Allocation& b) {
    return a.owner_kind_ == b.owner_kind_ && a.bundles_ == b.bundles_;
  }
  friend bool operator!=(const Allocation& a, const Allocation& b) {
    return !(a == b);
  }

 private:
  OwnerKind owner_kind_;
  std::vector<std::vector<ChoreId>> bundles_;
  std::vector<ChoreId> universe_;
};

}  // namespace efx

#endif  // EFX_ALLOCATION_HPP_
