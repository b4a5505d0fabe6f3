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

#include <cstdint>
#include <optional>

#include "djdisc/linalg.hpp"

namespace djdisc {

/// Two-outcome measurement {E_const, E_bal}: both PSD, summing to I.
class TwoOutcomePovm {
 public:
  TwoOutcomePovm(ComplexMatrix e_const, ComplexMatrix e_bal, double tol = default_tolerance());

  /// {E, I - E}.
  static TwoOutcomePovm from_const_element(const ComplexMatrix& e_const,
                                           double tol = default_tolerance());
  /// {I/2, I/2}: ignores the state entirely.
  static TwoOutcomePovm identity_half(std::size_t dim);

  const ComplexMatrix& e_const() const noexcept { return e_const_; }
  const ComplexMatrix& e_bal() const noexcept { return e_bal_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(e_const_.rows()); }

 private:
  ComplexMatrix e_const_;
  ComplexMatrix e_bal_;
};

/// Prior probabilities of drawing the oracle from each class.
class Priors {
 public:
  Priors(double p_const, double p_bal, double tol = default_tolerance());
  static Priors from_const(double p_const) { return Priors(p_const, 1.0 - p_const); }
  static Priors equal() { return Priors(0.5, 0.5); }

  double p_const() const noexcept { return p_const_; }
  double p_bal() const noexcept { return p_bal_; }

 private:
  double p_const_;
  double p_bal_;
};

/// Residuals of the perfect-discrimination conditions for an initial state:
/// orthogonality of the two class outputs, [rho, Lambda] = 0, and
/// N Lambda rho = rho^2, with Lambda the dephased state.
struct CertaintyCertificate {
  double commutator_residual = 0.0;
  double lambda_rho_residual = 0.0;
  double orthogonality_residual = 0.0;
  std::optional<double> eq8_residual;  // only when the commutator vanishes
  bool verdict = false;
};

/// p_const Tr(rho_const E_const) + p_bal Tr(rho_bal E_bal), where rho_const
/// and rho_bal are the class-channel outputs for `rho_i`. Clamped to [0, 1].
double success_probability(const DensityOperator& rho_i, const TwoOutcomePovm& povm,
                           const Priors& priors);

/// Optimal minimum-error success 1/2 (1 + || p_a rho_a - p_b rho_b ||_1).
double helstrom_success(const DensityOperator& rho_a, const DensityOperator& rho_b,
                        const Priors& priors);

CertaintyCertificate certainty_certificate(const DensityOperator& rho_i,
                                           double tol = default_tolerance());

/// |p1/N - (p1 sum_x |phi1(x)|^4 + sum_{k != 1} p_k sum_x |phi_k(x)|^2 |phi1(x)|^2)|
/// in a simultaneous eigenbasis of rho_i and its dephased state, phi1 the
/// leading eigenvector of rho_i.
///
/// Degenerate leading eigenvalues are resolved by taking the candidate whose
/// magnitude sequence (after making its first nonzero amplitude real
/// positive) is lexicographically largest.
///
/// Throws NotCommuting when rho_i and its dephased state do not commute
/// within `tol`, ZeroState when rho_i has no positive eigenvalue.
double eq8_balance(const DensityOperator& rho_i, double tol = default_tolerance());

/// sum_x |phi(x)|^4. Throws NotNormalized unless | ||phi|| - 1 | <= tol.
double inverse_participation(const PureState& phi, double tol = default_tolerance());

/// True iff rho_i is (within tol) a pure state with every |phi(x)|^2 = 1/N.
bool is_perfect_initial_state(const DensityOperator& rho_i, double tol = default_tolerance());

/// E_const = |phi><phi|, E_bal = I - E_const. Throws NotPerfectState unless
/// |phi><phi| passes is_perfect_initial_state.
TwoOutcomePovm build_certainty_povm(const PureState& phi, double tol = default_tolerance());

// search_perfect_state refuses N > 2^kSearchMaxBits.
inline constexpr int kSearchMaxBits = 4;

struct SearchResult {
  PureState state;
  double success = 0.0;  // equal-prior Helstrom success of the channel outputs
  int best_restart = 0;
};

/// Projected finite-difference gradient ascent on the unit sphere in C^N,
/// maximizing the equal-prior Helstrom success between the constant and
/// balanced class outputs. Runs max(1, restarts) independent starts seeded
/// from (seed, restart index); the best success wins, earliest start on ties.
SearchResult search_perfect_state(int n, std::uint64_t seed, int restarts = 20,
                                  int iterations = 500);

}  // namespace djdisc
