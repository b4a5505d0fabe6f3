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

#include "djdisc/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "djdisc/channels.hpp"
#include "djdisc/errors.hpp"

namespace djdisc {
namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(Errc::DimMismatch,
                std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  // Tr(AB) without forming AB.
  return (a.transpose().cwiseProduct(b)).sum().real();
}

// Makes the first entry with modulus above `tol` real and positive.
ComplexVector phase_normalized(const ComplexVector& v, double tol) {
  for (Eigen::Index x = 0; x < v.size(); ++x) {
    if (std::abs(v(x)) > tol) return v * (std::abs(v(x)) / v(x));
  }
  return v;
}

bool magnitudes_greater(const ComplexVector& a, const ComplexVector& b) {
  for (Eigen::Index x = 0; x < a.size(); ++x) {
    const double ma = std::abs(a(x));
    const double mb = std::abs(b(x));
    if (ma != mb) return ma > mb;
  }
  return false;
}

}  // namespace

TwoOutcomePovm::TwoOutcomePovm(ComplexMatrix e_const, ComplexMatrix e_bal, double tol)
    : e_const_(std::move(e_const)), e_bal_(std::move(e_bal)) {
  require_square(e_const_, "E_const");
  require_square(e_bal_, "E_bal");
  require_same_dim(dim(), static_cast<std::size_t>(e_bal_.rows()), "POVM elements");
  for (const auto* e : {&e_const_, &e_bal_}) {
    if (!is_hermitian(*e, tol)) throw Error(Errc::InvalidArgument, "POVM element not Hermitian");
    if (min_eigenvalue_clipped(*e, tol) < -tol) {
      throw Error(Errc::InvalidArgument, "POVM element not positive semidefinite");
    }
  }
  const auto n = e_const_.rows();
  const double completeness = (e_const_ + e_bal_ - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (completeness > tol) {
    throw Error(Errc::InvalidArgument,
                "POVM elements do not sum to identity (residual " + std::to_string(completeness) + ")");
  }
}

TwoOutcomePovm TwoOutcomePovm::from_const_element(const ComplexMatrix& e_const, double tol) {
  require_square(e_const, "E_const");
  const auto n = e_const.rows();
  return TwoOutcomePovm(e_const, ComplexMatrix::Identity(n, n) - e_const, tol);
}

TwoOutcomePovm TwoOutcomePovm::identity_half(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  const ComplexMatrix half = 0.5 * ComplexMatrix::Identity(n, n);
  return TwoOutcomePovm(half, half);
}

Priors::Priors(double p_const, double p_bal, double tol) : p_const_(p_const), p_bal_(p_bal) {
  const auto in_range = [tol](double p) { return p >= -tol && p <= 1.0 + tol; };
  if (!in_range(p_const) || !in_range(p_bal) || std::abs(p_const + p_bal - 1.0) > tol) {
    throw Error(Errc::InvalidArgument, "priors must be probabilities summing to 1, got (" +
                                           std::to_string(p_const) + ", " + std::to_string(p_bal) +
                                           ")");
  }
}

double success_probability(const DensityOperator& rho_i, const TwoOutcomePovm& povm,
                           const Priors& priors) {
  require_same_dim(rho_i.dim(), povm.dim(), "state vs POVM");
  const DensityOperator rho_const = apply_constant_channel(rho_i);
  const DensityOperator rho_bal = apply_balanced_channel(rho_i);
  const double p = priors.p_const() * real_trace_product(rho_const.matrix(), povm.e_const()) +
                   priors.p_bal() * real_trace_product(rho_bal.matrix(), povm.e_bal());
  return std::clamp(p, 0.0, 1.0);
}

double helstrom_success(const DensityOperator& rho_a, const DensityOperator& rho_b,
                        const Priors& priors) {
  require_same_dim(rho_a.dim(), rho_b.dim(), "helstrom_success states");
  const ComplexMatrix gamma = priors.p_const() * rho_a.matrix() - priors.p_bal() * rho_b.matrix();
  return std::clamp(0.5 * (1.0 + trace_norm(gamma)), 0.0, 1.0);
}

CertaintyCertificate certainty_certificate(const DensityOperator& rho_i, double tol) {
  const ComplexMatrix& rho = rho_i.matrix();
  const ComplexMatrix lambda = dephase(rho_i).matrix();
  const auto n = static_cast<double>(rho_i.dim());

  CertaintyCertificate cert;
  cert.orthogonality_residual =
      (apply_constant_channel(rho_i).matrix() * apply_balanced_channel(rho_i).matrix()).norm();
  cert.commutator_residual = commutator(rho, lambda).norm();
  cert.lambda_rho_residual = (n * lambda * rho - rho * rho).norm();
  if (cert.commutator_residual <= tol) cert.eq8_residual = eq8_balance(rho_i, tol);

  cert.verdict = cert.orthogonality_residual <= tol && cert.commutator_residual <= tol &&
                 cert.lambda_rho_residual <= tol && (!cert.eq8_residual || *cert.eq8_residual <= tol);
  return cert;
}

double eq8_balance(const DensityOperator& rho_i, double tol) {
  const ComplexMatrix& rho = rho_i.matrix();
  const ComplexMatrix lambda = dephase(rho_i).matrix();
  const double comm = commutator(rho, lambda).norm();
  if (comm > tol) {
    throw Error(Errc::NotCommuting, "||[rho, Lambda]||_F = " + std::to_string(comm));
  }

  // Simultaneous eigenbasis: diagonalize rho, then Lambda inside each
  // (near-)degenerate eigenspace of rho, which Lambda preserves.
  const EigenSystem es = hermitian_eig(rho, tol);
  const Eigen::Index dim = es.eigenvalues.size();
  ComplexMatrix basis(dim, dim);
  std::vector<double> weights(static_cast<std::size_t>(dim));
  Eigen::Index leading_begin = 0;
  for (Eigen::Index begin = 0; begin < dim;) {
    Eigen::Index end = begin + 1;
    while (end < dim && es.eigenvalues(end) - es.eigenvalues(end - 1) <= tol) ++end;
    const ComplexMatrix block = es.eigenvectors.middleCols(begin, end - begin);
    const ComplexMatrix restricted = block.adjoint() * lambda * block;
    const EigenSystem inner = hermitian_eig(0.5 * (restricted + restricted.adjoint()), tol);
    basis.middleCols(begin, end - begin) = block * inner.eigenvectors;
    for (Eigen::Index j = begin; j < end; ++j) {
      const double p = std::real(basis.col(j).dot(rho * basis.col(j)));
      weights[static_cast<std::size_t>(j)] = std::max(p, 0.0);
    }
    leading_begin = begin;
    begin = end;
  }

  Eigen::Index lead = leading_begin;
  ComplexVector phi1 = phase_normalized(basis.col(lead), tol);
  for (Eigen::Index j = leading_begin + 1; j < dim; ++j) {
    ComplexVector candidate = phase_normalized(basis.col(j), tol);
    if (magnitudes_greater(candidate, phi1)) {
      lead = j;
      phi1 = std::move(candidate);
    }
  }

  const double p1 = weights[static_cast<std::size_t>(lead)];
  if (p1 <= kClipTol) throw Error(Errc::ZeroState, "state has no positive eigenvalue");

  const RealVector mag1 = phi1.cwiseAbs2();
  double rhs = p1 * mag1.squaredNorm();
  for (Eigen::Index k = 0; k < dim; ++k) {
    if (k == lead) continue;
    rhs += weights[static_cast<std::size_t>(k)] * basis.col(k).cwiseAbs2().dot(mag1);
  }
  return std::abs(p1 / static_cast<double>(dim) - rhs);
}

double inverse_participation(const PureState& phi, double tol) {
  if (std::abs(phi.norm() - 1.0) > tol) {
    throw Error(Errc::NotNormalized, "state norm is " + std::to_string(phi.norm()));
  }
  return phi.amplitudes().cwiseAbs2().squaredNorm();
}

bool is_perfect_initial_state(const DensityOperator& rho_i, double tol) {
  const EigenSystem es = hermitian_eig(rho_i.matrix(), tol);
  if (es.eigenvalues(es.eigenvalues.size() - 1) < 1.0 - tol) return false;
  const double target = 1.0 / static_cast<double>(rho_i.dim());
  const RealVector diag = rho_i.matrix().diagonal().real();
  return (diag.array() - target).abs().maxCoeff() <= tol;
}

TwoOutcomePovm build_certainty_povm(const PureState& phi, double tol) {
  if (std::abs(phi.norm() - 1.0) > tol ||
      !is_perfect_initial_state(DensityOperator(phi.projector(), tol), tol)) {
    throw Error(Errc::NotPerfectState, "|phi(x)|^2 is not uniformly 1/N");
  }
  return TwoOutcomePovm::from_const_element(phi.projector(), tol);
}

}  // namespace djdisc
