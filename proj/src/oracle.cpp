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

#include "djdisc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <utility>

#include "djdisc/errors.hpp"

namespace djdisc {
namespace {

void require_bits(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "oracle bit-width must be >= 1");
  if (n > kMaxOracleBits) {
    throw Error(Errc::ResourceLimit, "oracle bit-width " + std::to_string(n) + " exceeds " +
                                         std::to_string(kMaxOracleBits));
  }
}

}  // namespace

std::string_view to_string(FunctionClass c) {
  switch (c) {
    case FunctionClass::Constant: return "constant";
    case FunctionClass::Balanced: return "balanced";
    case FunctionClass::Neither: return "neither";
  }
  return "unknown";
}

BooleanOracle::BooleanOracle(int n, std::vector<std::uint8_t> truth_table)
    : n_(n), table_(std::move(truth_table)) {
  require_bits(n);
  if (table_.size() != (std::size_t{1} << n)) {
    throw Error(Errc::InvalidArgument, "truth table length " + std::to_string(table_.size()) +
                                           " != 2^" + std::to_string(n));
  }
  for (auto b : table_) {
    if (b > 1) throw Error(Errc::InvalidArgument, "truth table entries must be 0 or 1");
  }
}

BooleanOracle BooleanOracle::from_bits(std::string_view bits) {
  const std::size_t len = bits.size();
  if (len < 2 || !std::has_single_bit(len)) {
    throw Error(Errc::MalformedInput,
                "oracle bit string length must be a power of two >= 2, got " + std::to_string(len));
  }
  std::vector<std::uint8_t> table;
  table.reserve(len);
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw Error(Errc::MalformedInput, std::string("invalid oracle character '") + c + "'");
    }
    table.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BooleanOracle(std::countr_zero(len), std::move(table));
}

std::size_t BooleanOracle::popcount() const {
  return static_cast<std::size_t>(std::count(table_.begin(), table_.end(), std::uint8_t{1}));
}

std::string BooleanOracle::to_bits() const {
  std::string out;
  out.reserve(table_.size());
  for (auto b : table_) out.push_back(b ? '1' : '0');
  return out;
}

FunctionClass classify(const BooleanOracle& f) {
  const std::size_t ones = f.popcount();
  if (ones == 0 || ones == f.size()) return FunctionClass::Constant;
  if (2 * ones == f.size()) return FunctionClass::Balanced;
  return FunctionClass::Neither;
}

std::vector<double> oracle_signs(const BooleanOracle& f) {
  std::vector<double> signs(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) signs[x] = f(x) ? -1.0 : 1.0;
  return signs;
}

ComplexMatrix oracle_unitary(const BooleanOracle& f) {
  const auto n = static_cast<Eigen::Index>(f.size());
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  for (Eigen::Index x = 0; x < n; ++x) u(x, x) = f(static_cast<std::size_t>(x)) ? -1.0 : 1.0;
  return u;
}

std::size_t balanced_count(int n, std::size_t cap) {
  require_bits(n);
  const std::size_t big_n = std::size_t{1} << n;
  const std::size_t k = big_n / 2;
  // C(N, k) built as prod_{i<k} (N - i) / (i + 1); every prefix is an integer.
  std::size_t c = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (c > std::numeric_limits<std::size_t>::max() / (big_n - i)) return cap + 1;
    c = c * (big_n - i) / (i + 1);
    if (c > cap) return cap + 1;
  }
  return c;
}

std::vector<BooleanOracle> enumerate_constant(int n) {
  require_bits(n);
  const std::size_t big_n = std::size_t{1} << n;
  return {BooleanOracle(n, std::vector<std::uint8_t>(big_n, 0)),
          BooleanOracle(n, std::vector<std::uint8_t>(big_n, 1))};
}

std::vector<BooleanOracle> enumerate_balanced(int n, std::size_t cap) {
  const std::size_t count = balanced_count(n, cap);
  if (count > cap) {
    throw Error(Errc::ResourceLimit, "enumerating balanced oracles for n=" + std::to_string(n) +
                                         " exceeds the cap of " + std::to_string(cap));
  }
  const std::size_t big_n = std::size_t{1} << n;
  std::vector<std::uint8_t> table(big_n, 0);
  std::fill(table.begin() + static_cast<std::ptrdiff_t>(big_n / 2), table.end(), 1);

  std::vector<BooleanOracle> out;
  out.reserve(count);
  do {
    out.emplace_back(n, table);
  } while (std::next_permutation(table.begin(), table.end()));
  return out;
}

std::vector<BooleanOracle> enumerate_admissible(int n, std::size_t cap) {
  auto out = enumerate_constant(n);
  auto balanced = enumerate_balanced(n, cap);
  out.insert(out.end(), std::make_move_iterator(balanced.begin()),
             std::make_move_iterator(balanced.end()));
  return out;
}

}  // namespace djdisc
