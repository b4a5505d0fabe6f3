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

#include <complex>
#include <cstddef>
#include <span>

#include <Eigen/Dense>

#include "djdisc/tolerance.hpp"

namespace djdisc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Eigenvalues ascending; eigenvectors are the matching orthonormal columns.
struct EigenSystem {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Largest entrywise modulus of A - A^dagger.
double hermiticity_residual(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double tol = default_tolerance());
bool is_unitary(const ComplexMatrix& u, double tol = default_tolerance());

/// Throws DimMismatch unless `a` is a non-empty square matrix.
void require_square(const ComplexMatrix& a, const char* what);

EigenSystem hermitian_eig(const ComplexMatrix& a, double tol = default_tolerance());

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const ComplexMatrix& a, double tol = default_tolerance());

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

/// A pure state |psi>. Normalization is not enforced here; operations that
/// need a unit vector check it themselves.
class PureState {
 public:
  explicit PureState(ComplexVector amplitudes);

  /// (1/sqrt(N)) sum_x exp(i theta_x) |x>.
  static PureState uniform(std::span<const double> phases);
  static PureState uniform(std::size_t dim);
  static PureState basis(std::size_t dim, std::size_t index);

  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](std::size_t x) const { return amplitudes_(static_cast<Eigen::Index>(x)); }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }
  double norm() const { return amplitudes_.norm(); }
  PureState normalized() const;

  /// |psi><psi|
  ComplexMatrix projector() const;

 private:
  ComplexVector amplitudes_;
};

/// Hermitian, positive semidefinite, unit-trace matrix. Validated on
/// construction; immutable afterwards.
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix matrix, double tol = default_tolerance());

  static DensityOperator from_pure(const PureState& psi, double tol = default_tolerance());
  static DensityOperator maximally_mixed(std::size_t dim);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }

 private:
  ComplexMatrix matrix_;
};

/// Smallest eigenvalue with values in [-kClipTol, 0) clipped to zero.
double min_eigenvalue_clipped(const ComplexMatrix& a, double tol = default_tolerance());

/// Projector onto the span of eigenvectors of `rho` with eigenvalue > tol.
ComplexMatrix support_projector(const DensityOperator& rho, double tol = default_tolerance());

}  // namespace djdisc
