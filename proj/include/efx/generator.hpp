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

#ifndef EFX_GENERATOR_HPP_
#define EFX_GENERATOR_HPP_

#include <cstdint>

#include "efx/instance.hpp"
#include "efx/model.hpp"

namespace efx {

/// splitmix64, fixed reference constants. Used instead of <random> engines so
/// seeded output is identical on every platform and standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, bound); bound must be positive. The modulo
  /// bias is irrelevant at the bounds used here.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

 private:
  std::uint64_t state_;
};

/// Recipe for a random instance that satisfies one regime by construction.
struct GeneratorSpec {
  RegimeKind target = RegimeKind::kSmallM;
  int n = 3;
  int m = 6;
  std::uint64_t seed = 0;
  // Integer cost bound (inclusive) for the integer-valued regimes.
  int cost_max = 100;
  // kBivaluedThreeAgents: epsilon_i drawn from {0, 1, ...}/eps_denominator.
  int eps_denominator = 10;
};

/// Deterministic in the spec. Throws InputError when the spec is
/// inconsistent with its target regime (e.g. m > 2n for kSmallM).
Instance generate_instance(const GeneratorSpec& spec);

}  // namespace efx

#endif  // EFX_GENERATOR_HPP_
