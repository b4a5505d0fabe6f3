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

#include "djdisc/dj.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "djdisc/errors.hpp"

namespace djdisc {
namespace {

double expectation(const ComplexVector& psi, const ComplexMatrix& e) {
  return std::real(psi.dot(e * psi));
}

std::uint32_t to_mask(const BooleanOracle& f) {
  std::uint32_t mask = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f(x)) mask |= std::uint32_t{1} << x;
  }
  return mask;
}

}  // namespace

OraclePipeline::OraclePipeline(int n, std::vector<ComplexMatrix> interleave, double tol)
    : n_(n), interleave_(std::move(interleave)) {
  if (n < 1 || n > kMaxOracleBits) throw Error(Errc::InvalidArgument, "pipeline bit-width out of range");
  if (interleave_.size() < 2) {
    throw Error(Errc::InvalidArgument, "pipeline needs V_0..V_M with M >= 1");
  }
  const auto d = static_cast<Eigen::Index>(dim());
  for (std::size_t i = 0; i < interleave_.size(); ++i) {
    const auto& v = interleave_[i];
    if (v.rows() != d || v.cols() != d) {
      throw Error(Errc::DimMismatch, "V_" + std::to_string(i) + " is " + std::to_string(v.rows()) +
                                         "x" + std::to_string(v.cols()) + ", expected " +
                                         std::to_string(d));
    }
    if (!is_unitary(v, tol)) throw Error(Errc::NotUnitary, "V_" + std::to_string(i));
  }
}

OraclePipeline OraclePipeline::identity(int n, int invocations) {
  if (n < 1 || n > kMaxOracleBits) throw Error(Errc::InvalidArgument, "pipeline bit-width out of range");
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
  return OraclePipeline(
      n, std::vector<ComplexMatrix>(static_cast<std::size_t>(std::max(invocations, 0)) + 1,
                                    ComplexMatrix::Identity(d, d)));
}

ComplexMatrix hadamard_transform(int n) {
  if (n < 1 || n > kMaxOracleBits) throw Error(Errc::InvalidArgument, "bit-width out of range");
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
  const double scale = std::pow(2.0, -0.5 * n);
  ComplexMatrix h(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      const int parity = std::popcount(static_cast<unsigned>(r & c)) & 1;
      h(r, c) = parity ? -scale : scale;
    }
  }
  return h;
}

PureState run_pipeline(const OraclePipeline& p, const BooleanOracle& f, const PureState& psi_i) {
  if (f.size() != p.dim() || psi_i.dim() != p.dim()) {
    throw Error(Errc::DimMismatch, "pipeline acts on dimension " + std::to_string(p.dim()) +
                                       ", oracle has " + std::to_string(f.size()) +
                                       ", state has " + std::to_string(psi_i.dim()));
  }
  const auto signs = oracle_signs(f);
  const Eigen::Map<const RealVector> diag(signs.data(), static_cast<Eigen::Index>(signs.size()));
  const auto& vs = p.interleave();
  ComplexVector psi = vs.front() * psi_i.amplitudes();
  for (std::size_t i = 1; i < vs.size(); ++i) {
    psi = vs[i] * (diag.cast<Complex>().asDiagonal() * psi).eval();
  }
  return PureState(std::move(psi));
}

RunOutcome run_discrimination(const BooleanOracle& f, const PureState& phi,
                              const TwoOutcomePovm& povm) {
  const FunctionClass actual = classify(f);
  if (actual == FunctionClass::Neither) {
    throw Error(Errc::PromiseViolation, "oracle " + f.to_bits() + " is neither constant nor balanced");
  }
  if (povm.dim() != f.size()) {
    throw Error(Errc::DimMismatch, "POVM dimension " + std::to_string(povm.dim()) +
                                       " vs oracle size " + std::to_string(f.size()));
  }
  const PureState out = run_pipeline(OraclePipeline::identity(f.n()), f, phi);
  RunOutcome r;
  r.prob_const_outcome = expectation(out.amplitudes(), povm.e_const());
  r.prob_bal_outcome = expectation(out.amplitudes(), povm.e_bal());
  r.inferred = r.prob_const_outcome >= r.prob_bal_outcome ? FunctionClass::Constant
                                                          : FunctionClass::Balanced;
  r.correct = r.inferred == actual;
  return r;
}

SweepSummary sweep_all(int n, const PureState& phi, const TwoOutcomePovm& povm) {
  const auto oracles = enumerate_admissible(n);
  SweepSummary s;
  s.n = n;
  s.oracle_count = oracles.size();
  s.min_success = std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (const auto& f : oracles) {
    const RunOutcome r = run_discrimination(f, phi, povm);
    const double success =
        classify(f) == FunctionClass::Constant ? r.prob_const_outcome : r.prob_bal_outcome;
    s.min_success = std::min(s.min_success, success);
    total += success;
  }
  s.mean_success = total / static_cast<double>(oracles.size());
  return s;
}

ClassicalWitness classical_witness(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be >= 1");
  if (n > kClassicalMaxBits) {
    throw Error(Errc::ResourceLimit, "classical witness is limited to n <= " +
                                         std::to_string(kClassicalMaxBits) + ", got " +
                                         std::to_string(n));
  }
  const std::size_t big_n = std::size_t{1} << n;
  const std::size_t half = big_n / 2;

  ClassicalWitness w;
  w.n = n;
  for (std::size_t x = 0; x < half; ++x) w.queries.push_back(x);
  w.answers.assign(half, 0);
  w.constant_oracle = BooleanOracle(n, std::vector<std::uint8_t>(big_n, 0));
  std::vector<std::uint8_t> table(big_n, 0);
  std::fill(table.begin() + static_cast<std::ptrdiff_t>(half), table.end(), 1);
  w.balanced_oracle = BooleanOracle(n, std::move(table));
  w.sufficient_queries = half + 1;
  w.balanced_capacity = half;

  bool pair_ok = classify(w.constant_oracle) == FunctionClass::Constant &&
                 classify(w.balanced_oracle) == FunctionClass::Balanced;
  for (std::size_t i = 0; i < w.queries.size(); ++i) {
    pair_ok = pair_ok && w.constant_oracle(w.queries[i]) == (w.answers[i] != 0) &&
              w.balanced_oracle(w.queries[i]) == (w.answers[i] != 0);
  }

  std::vector<std::uint32_t> constant_masks;
  std::vector<std::uint32_t> balanced_masks;
  for (const auto& f : enumerate_constant(n)) constant_masks.push_back(to_mask(f));
  for (const auto& f : enumerate_balanced(n)) balanced_masks.push_back(to_mask(f));
  w.oracles_checked = constant_masks.size() + balanced_masks.size();

  // Every query set of size N/2 answered all-zero leaves both classes open,
  // so no strategy (adaptive or not) decides with N/2 queries.
  bool insufficient = pair_ok;
  // Every query set of size N/2 + 1 decides the class for every oracle.
  bool sufficient = true;
  const std::uint32_t universe = big_n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << big_n) - 1;
  for (std::uint32_t q = 0; q <= universe; ++q) {
    const auto size = static_cast<std::size_t>(std::popcount(q));
    if (size == half) {
      ++w.query_sets_checked;
      const bool open = std::any_of(balanced_masks.begin(), balanced_masks.end(),
                                    [q](std::uint32_t f) { return (f & q) == 0; });
      insufficient = insufficient && open;
    } else if (size == half + 1) {
      ++w.query_sets_checked;
      const auto decides = [q](std::uint32_t f, FunctionClass truth) {
        const std::uint32_t seen = f & q;
        const FunctionClass inferred =
            (seen == 0 || seen == q) ? FunctionClass::Constant : FunctionClass::Balanced;
        return inferred == truth;
      };
      for (auto f : constant_masks) sufficient = sufficient && decides(f, FunctionClass::Constant);
      for (auto f : balanced_masks) sufficient = sufficient && decides(f, FunctionClass::Balanced);
    }
    if (q == universe) break;
  }
  w.insufficiency_holds = insufficient;
  w.sufficiency_holds = sufficient;
  return w;
}

}  // namespace djdisc
