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

#include <cstddef>
#include <vector>

#include "djdisc/discrimination.hpp"
#include "djdisc/linalg.hpp"
#include "djdisc/oracle.hpp"

namespace djdisc {

/// Oracle-independent unitaries V_0, ..., V_M of the algorithm
///   U_alg = V_M U_f ... U_f V_1 U_f V_0,
/// which queries the oracle M = interleave.size() - 1 times.
class OraclePipeline {
 public:
  OraclePipeline(int n, std::vector<ComplexMatrix> interleave, double tol = default_tolerance());

  /// V_0 = ... = V_M = I.
  static OraclePipeline identity(int n, int invocations = 1);

  int n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return std::size_t{1} << n_; }
  int invocations() const noexcept { return static_cast<int>(interleave_.size()) - 1; }
  const std::vector<ComplexMatrix>& interleave() const noexcept { return interleave_; }

 private:
  int n_;
  std::vector<ComplexMatrix> interleave_;
};

/// H^{(x) n}.
ComplexMatrix hadamard_transform(int n);

/// U_alg |psi_i>.
PureState run_pipeline(const OraclePipeline& p, const BooleanOracle& f, const PureState& psi_i);

struct RunOutcome {
  double prob_const_outcome = 0.0;
  double prob_bal_outcome = 0.0;
  FunctionClass inferred = FunctionClass::Constant;
  bool correct = false;
};

/// Applies U_f once to phi, measures the POVM and infers the class with the
/// larger outcome probability (ties go to Constant). Throws PromiseViolation
/// if f is neither constant nor balanced.
RunOutcome run_discrimination(const BooleanOracle& f, const PureState& phi,
                              const TwoOutcomePovm& povm);

struct SweepSummary {
  int n = 0;
  std::size_t oracle_count = 0;
  double min_success = 0.0;
  double mean_success = 0.0;
};

/// Probability of the correct outcome, aggregated over every constant and
/// balanced oracle on n bits.
SweepSummary sweep_all(int n, const PureState& phi, const TwoOutcomePovm& povm);

// Classical witnesses are checked exhaustively, so n is capped.
inline constexpr int kClassicalMaxBits = 4;

/// Evidence that a deterministic classical algorithm needs 2^(n-1) + 1
/// queries in the worst case.
struct ClassicalWitness {
  int n = 0;
  // Insufficiency: after these 2^(n-1) queries, all answered 0, a constant
  // and a balanced oracle are both still consistent.
  std::vector<std::size_t> queries;
  std::vector<std::uint8_t> answers;
  BooleanOracle constant_oracle{1, {0, 0}};
  BooleanOracle balanced_oracle{1, {0, 1}};
  // Sufficiency: a balanced oracle takes each value on only N/2 inputs, so
  // N/2 + 1 equal answers force Constant and any disagreement forces Balanced.
  std::size_t sufficient_queries = 0;
  std::size_t balanced_capacity = 0;
  // Exhaustive validation.
  std::size_t query_sets_checked = 0;
  std::size_t oracles_checked = 0;
  bool insufficiency_holds = false;
  bool sufficiency_holds = false;

  bool verified() const noexcept { return insufficiency_holds && sufficiency_holds; }
};

/// Builds the witness and validates it against every admissible oracle and
/// every query set of size 2^(n-1) and 2^(n-1) + 1. Throws ResourceLimit for
/// n > kClassicalMaxBits.
ClassicalWitness classical_witness(int n);

}  // namespace djdisc
