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

#include "djdisc/linalg.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "djdisc/errors.hpp"

namespace djdisc {

double hermiticity_residual(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& a, double tol) { return hermiticity_residual(a) <= tol; }

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols() || u.size() == 0) return false;
  const auto id = ComplexMatrix::Identity(u.rows(), u.cols());
  return (u * u.adjoint() - id).cwiseAbs().maxCoeff() <= tol &&
         (u.adjoint() * u - id).cwiseAbs().maxCoeff() <= tol;
}

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() == 0 || a.rows() != a.cols()) {
    throw Error(Errc::DimMismatch, std::string(what) + " must be a non-empty square matrix, got " +
                                       std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

EigenSystem hermitian_eig(const ComplexMatrix& a, double tol) {
  require_square(a, "hermitian_eig input");
  const double residual = hermiticity_residual(a);
  if (!(residual <= tol)) {
    throw Error(Errc::NotHermitian, "max |A - A^dagger| = " + std::to_string(residual));
  }
  const ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::InvalidArgument, "eigensolver failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double trace_norm(const ComplexMatrix& a, double tol) {
  return hermitian_eig(a, tol).eigenvalues.cwiseAbs().sum();
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::DimMismatch, "frobenius_distance on " + std::to_string(a.rows()) + "x" +
                                       std::to_string(a.cols()) + " and " +
                                       std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  return (a - b).norm();
}

PureState::PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw Error(Errc::InvalidArgument, "empty state vector");
}

PureState PureState::uniform(std::span<const double> phases) {
  if (phases.empty()) throw Error(Errc::InvalidArgument, "empty phase vector");
  const double scale = 1.0 / std::sqrt(static_cast<double>(phases.size()));
  ComplexVector amps(static_cast<Eigen::Index>(phases.size()));
  for (std::size_t x = 0; x < phases.size(); ++x) {
    amps(static_cast<Eigen::Index>(x)) = std::polar(scale, phases[x]);
  }
  return PureState(std::move(amps));
}

PureState PureState::uniform(std::size_t dim) {
  if (dim == 0) throw Error(Errc::InvalidArgument, "dimension must be positive");
  const auto n = static_cast<Eigen::Index>(dim);
  return PureState(ComplexVector::Constant(n, Complex(1.0 / std::sqrt(static_cast<double>(dim)))));
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw Error(Errc::InvalidArgument, "basis index out of range");
  ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  amps(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(amps));
}

PureState PureState::normalized() const {
  const double n = norm();
  if (n == 0.0) throw Error(Errc::NotNormalized, "cannot normalize the zero vector");
  return PureState(amplitudes_ / n);
}

ComplexMatrix PureState::projector() const { return amplitudes_ * amplitudes_.adjoint(); }

double min_eigenvalue_clipped(const ComplexMatrix& a, double tol) {
  double lo = hermitian_eig(a, tol).eigenvalues(0);
  if (lo < 0.0 && lo >= -kClipTol) lo = 0.0;
  return lo;
}

DensityOperator::DensityOperator(ComplexMatrix matrix, double tol) : matrix_(std::move(matrix)) {
  require_square(matrix_, "density operator");
  const double herm = hermiticity_residual(matrix_);
  if (!(herm <= tol)) {
    throw Error(Errc::NotDensityOperator, "not Hermitian (residual " + std::to_string(herm) + ")");
  }
  const double trace_err = std::abs(matrix_.trace() - Complex(1.0));
  if (!(trace_err <= tol)) {
    throw Error(Errc::NotDensityOperator, "trace differs from 1 by " + std::to_string(trace_err));
  }
  const double lo = min_eigenvalue_clipped(matrix_, tol);
  if (lo < -tol) {
    throw Error(Errc::NotDensityOperator, "negative eigenvalue " + std::to_string(lo));
  }
}

DensityOperator DensityOperator::from_pure(const PureState& psi, double tol) {
  if (std::abs(psi.norm() - 1.0) > tol) {
    throw Error(Errc::NotNormalized, "state norm is " + std::to_string(psi.norm()));
  }
  return DensityOperator(psi.projector(), tol);
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
  if (dim == 0) throw Error(Errc::InvalidArgument, "dimension must be positive");
  const auto n = static_cast<Eigen::Index>(dim);
  return DensityOperator(ComplexMatrix::Identity(n, n) / static_cast<double>(dim));
}

ComplexMatrix support_projector(const DensityOperator& rho, double tol) {
  const EigenSystem es = hermitian_eig(rho.matrix(), tol);
  const auto n = es.eigenvalues.size();
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (es.eigenvalues(j) > tol) {
      const auto v = es.eigenvectors.col(j);
      p += v * v.adjoint();
    }
  }
  return p;
}

}  // namespace djdisc
