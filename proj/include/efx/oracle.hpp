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

#ifndef EFX_ORACLE_HPP_
#define EFX_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "efx/allocation.hpp"
#include "efx/instance.hpp"

namespace efx {

/// Envy relation between one ordered pair of agents.
struct PairEnvy {
  AgentId from = -1;
  AgentId to = -1;
  // c_from(A_from) > c_from(A_to)
  bool envies = false;
  // some chore e in A_from keeps c_from(A_from \ e) > c_from(A_to)
  bool strongly_envies = false;
  std::optional<ChoreId> witness;  // smallest such e
};

/// Full pairwise envy evaluation of an allocation-to-agents.
struct EnvyReport {
  bool efx = false;  // no pair strongly envies
  bool ef1 = false;  // every nonempty bundle has some removal fixing each pair
  std::vector<PairEnvy> pairs;  // ordered pairs, i != j, row-major
};

/// Evaluates envy and strong envy for every ordered agent pair. The
/// allocation must partition the instance's full chore set.
EnvyReport evaluate_envy(const Instance& inst, const Allocation& alloc);

/// True iff no agent strongly envies another: for every i and every chore e
/// in A_i, c_i(A_i \ e) <= c_i(A_j) for all j.
bool is_efx(const Instance& inst, const Allocation& alloc);

/// Weaker check: for every pair, removing *some* chore settles the envy.
bool is_ef1(const Instance& inst, const Allocation& alloc);

/// Exhaustively enumerates all n^m assignments and returns the EFX ones in
/// lexicographic order (chore-major base-n counting). Throws InputError if
/// n^m exceeds `cap`; the refusal is loud, never a silent truncation.
std::vector<Allocation> enumerate_efx(const Instance& inst,
                                      std::uint64_t cap = 10'000'000);

/// Number of assignments enumerate_efx would scan, if within cap.
std::optional<std::uint64_t> assignment_count(const Instance& inst,
                                              std::uint64_t cap);

}  // namespace efx

#endif  // EFX_ORACLE_HPP_
