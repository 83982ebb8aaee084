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

#ifndef EFX_MODEL_HPP_
#define EFX_MODEL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "efx/instance.hpp"

namespace efx {

/// Structural classes of instances for which a solver is available.
enum class RegimeKind {
  kSmallM,                      // m <= 2n
  kIdenticalOrderingAllButOne,  // all agents but one rank chores identically
  kBivaluedThreeAgents,         // n == 3, each cost row takes at most 2 values
  kUnsupported,
};

std::string to_string(RegimeKind kind);
std::optional<RegimeKind> regime_from_string(const std::string& name);

/// One applicable regime, with the parameters a solver needs.
struct Regime {
  RegimeKind kind = RegimeKind::kUnsupported;
  // kIdenticalOrderingAllButOne: the one agent excused from the common order
  // (smallest such index).
  AgentId special = -1;
  // kBivaluedThreeAgents: per-agent small value after scaling rows to {e_i, 1}.
  std::vector<Rational> epsilons;
  // kBivaluedThreeAgents: agents whose row is constant, admitted by the
  // degenerate scaling rule rather than by a genuine two-value row.
  std::vector<AgentId> degenerate_agents;

  friend bool operator==(const Regime& a, const Regime& b) {
    return a.kind == b.kind && a.special == b.special;
  }
};

/// In a bi-valued 3-agent instance scaled to rows over {e_i, 1}, every chore
/// falls in exactly one of these classes.
struct ChoreType {
  enum Kind { kConsistentlyLarge, kConsistentlySmall, kLargeOnlyFor, kSmallOnlyFor };
  Kind kind;
  AgentId agent = -1;  // the deviating agent for the *OnlyFor kinds

  friend bool operator==(const ChoreType& a, const ChoreType& b) {
    return a.kind == b.kind && a.agent == b.agent;
  }
};

std::string to_string(const ChoreType& type);

/// A bi-valued instance with every row scaled into {epsilon_i, 1}.
struct ScaledBivalued {
  Instance instance;                  // scaled copy, same shape
  std::vector<Rational> epsilons;     // epsilon_i in [0, 1)
  std::vector<AgentId> degenerate_agents;
};

/// True iff agents i and j sort the chores identically: for every chore pair,
/// the strict comparisons under c_i and c_j agree, and ties co-occur.
bool is_identical_ordering(const Instance& inst, AgentId i, AgentId j);

/// All regimes the instance satisfies, in deterministic order. An instance
/// satisfying none yields a single kUnsupported entry.
std::vector<Regime> classify_regimes(const Instance& inst);

/// Scales each row of a 3-agent bi-valued instance by its maximum entry.
/// Constant rows (including all-zero) scale to all-1 and are reported as
/// degenerate. Throws ContractViolation if some row has > 2 distinct values
/// or n != 3.
ScaledBivalued scale_bivalued(const Instance& inst);

/// Classifies one chore of a scaled bi-valued instance. The instance must be
/// in scaled form (every entry of row i is epsilon_i or 1).
ChoreType classify_chore(const ScaledBivalued& scaled, ChoreId chore);

}  // namespace efx

#endif  // EFX_MODEL_HPP_
