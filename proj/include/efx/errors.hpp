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

#ifndef EFX_ERRORS_HPP_
#define EFX_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace efx {

/// Malformed or out-of-range input: bad files, bad ids, bad dimensions.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A documented precondition of an operation was violated by the caller.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what)
      : std::logic_error(what) {}
};

/// An internal guarantee failed. Always a bug, never a caller mistake.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what)
      : std::logic_error(what) {}
};

/// Exact arithmetic left the representable 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what)
      : std::overflow_error(what) {}
};

namespace detail {

#if defined(EFX_CONTRACTS)
inline constexpr bool kContractsEnabled = true;
#else
inline constexpr bool kContractsEnabled = false;
#endif

inline void require(bool cond, const char* msg) {
  if (kContractsEnabled && !cond) throw ContractViolation(msg);
}

inline void ensure(bool cond, const char* msg) {
  if (!cond) throw InvariantViolation(msg);
}

}  // namespace detail
}  // namespace efx

#endif  // EFX_ERRORS_HPP_
