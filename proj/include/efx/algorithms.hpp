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

#ifndef EFX_ALGORITHMS_HPP_
#define EFX_ALGORITHMS_HPP_

#include <array>
#include <vector>

#include "efx/allocation.hpp"
#include "efx/instance.hpp"
#include "efx/model.hpp"

namespace efx {

/// Output of the round-robin pass: who got what, and in which round each
/// agent picked last (0 for agents that never picked).
struct RoundRobinTrace {
  Allocation allocation;            // to agents
  std::vector<int> last_round;      // r_i per agent
  std::vector<AgentId> order;       // the ordering used
};

/// Agents take turns in `order`, each picking its cheapest remaining chore
/// (smallest id on ties), until `chores` is exhausted.
RoundRobinTrace round_robin(const Instance& inst,
                            const std::vector<ChoreId>& chores,
                            const std::vector<AgentId>& order);

/// Rank patterns the 3-agent solver needs from a round-robin pass, stated
/// over role indices 0, 1, 2.
enum class RankTarget {
  kFirstBelowOthers,  // r_0 < min(r_1, r_2); needs at least 3 chores
  kStrictChain,       // r_0 < r_1 < r_2;     needs at least 2 chores
};

/// Ordering of the three roles that lands the final rounds on the required
/// roles, by residue of the chore count mod 3. Roles that receive no chore
/// count as rank 0, i.e. smallest.
std::array<AgentId, 3> choose_order_for_ranks(int m_prime, RankTarget target);

struct SmallMOptions {
  // Re-derive and check the staged matching after every insertion round.
  // Expensive; test suites only. Output is identical either way.
  bool verify_matching_invariant = false;
};

/// EFX allocation for instances with at most twice as many chores as agents.
Allocation solve_small_m(const Instance& inst, const SmallMOptions& opts = {});

struct IdenticalOrderingOptions {
  // Route insertions through the try-every-slot reference path instead of
  // the constructive one. Slow; differential testing only.
  bool use_try_all_fallback = false;
};

/// EFX allocation when every agent except `special` sorts the chores the
/// same way. `special`'s costs are consulted only through bundle sums.
Allocation solve_identical_ordering(const Instance& inst, AgentId special,
                                    const IdenticalOrderingOptions& opts = {});

struct BivaluedStats {
  // Number of peel-and-reinsert levels; bounded by the chore count.
  int recursion_depth = 0;
};

/// EFX allocation for 3 agents whose cost rows each take at most two values.
Allocation solve_bivalued_three(const Instance& inst,
                                BivaluedStats* stats = nullptr);

struct RegimeResult {
  Regime regime;
  Allocation allocation;
};

/// What solve() did for one instance: the regimes it recognized and one
/// allocation per supported regime. No supported regime means no known
/// algorithm applies; that is an outcome, not an error.
struct SolveOutcome {
  std::vector<Regime> regimes;
  std::vector<RegimeResult> results;
  bool unsupported() const { return results.empty(); }
};

/// Runs every solver whose precondition the instance satisfies.
SolveOutcome solve(const Instance& inst);

}  // namespace efx

#endif  // EFX_ALGORITHMS_HPP_
