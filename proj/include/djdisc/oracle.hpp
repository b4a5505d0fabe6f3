// Copyright 2026 The djdisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "djdisc/linalg.hpp"

namespace djdisc {

// Truth tables are limited to N = 2^10 entries.
inline constexpr int kMaxOracleBits = 10;
// C(N, N/2) above this is refused by the exhaustive enumerators (n <= 4).
inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

enum class FunctionClass { Constant, Balanced, Neither };

std::string_view to_string(FunctionClass c);

/// f : {0,1}^n -> {0,1} stored as an explicit truth table, f(x) at index x.
class BooleanOracle {
 public:
  BooleanOracle(int n, std::vector<std::uint8_t> truth_table);

  /// Parses "0110": leftmost character is f(0). Length must be 2^n, n >= 1.
  static BooleanOracle from_bits(std::string_view bits);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return table_.size(); }
  bool operator()(std::size_t x) const { return table_.at(x) != 0; }
  const std::vector<std::uint8_t>& truth_table() const noexcept { return table_; }
  std::size_t popcount() const;
  std::string to_bits() const;

  /// Lexicographic on the truth table, i.e. numeric order with f(0) as the
  /// most significant bit.
  friend auto operator<=>(const BooleanOracle&, const BooleanOracle&) = default;

 private:
  int n_;
  std::vector<std::uint8_t> table_;
};

FunctionClass classify(const BooleanOracle& f);

/// diag((-1)^f(x)).
ComplexMatrix oracle_unitary(const BooleanOracle& f);

/// The +-1 diagonal of oracle_unitary(f).
std::vector<double> oracle_signs(const BooleanOracle& f);

/// C(2^n, 2^(n-1)), saturated at cap + 1.
std::size_t balanced_count(int n, std::size_t cap = kDefaultEnumerationCap);

/// All-zeros then all-ones.
std::vector<BooleanOracle> enumerate_constant(int n);

/// Every balanced f, ascending. Throws ResourceLimit above `cap`.
std::vector<BooleanOracle> enumerate_balanced(int n, std::size_t cap = kDefaultEnumerationCap);

/// Constant oracles followed by balanced oracles.
std::vector<BooleanOracle> enumerate_admissible(int n, std::size_t cap = kDefaultEnumerationCap);

}  // namespace djdisc
