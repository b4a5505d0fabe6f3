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

#include "djdisc/random.hpp"

#include <numbers>

#include "djdisc/errors.hpp"

namespace djdisc {
namespace {

ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  // Fill column-major in a fixed order so draws are reproducible.
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  }
  return g;
}

Eigen::Index checked_dim(std::size_t dim) {
  if (dim == 0) throw Error(Errc::InvalidArgument, "dimension must be positive");
  return static_cast<Eigen::Index>(dim);
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

PureState haar_pure_state(std::size_t dim, Rng& rng) {
  ComplexVector v = gaussian_matrix(checked_dim(dim), 1, rng).col(0);
  return PureState(v / v.norm());
}

DensityOperator random_density(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = gaussian_matrix(checked_dim(dim), checked_dim(dim), rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  // Remove round-off asymmetry from the product.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityOperator(std::move(rho));
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = gaussian_matrix(checked_dim(dim), checked_dim(dim), rng);
  return g + g.adjoint();
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = gaussian_matrix(checked_dim(dim), checked_dim(dim), rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase freedom of QR so the distribution is Haar.
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

std::vector<double> random_phases(std::size_t count, Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<double> phases(count);
  for (auto& theta : phases) theta = angle(rng);
  return phases;
}

}  // namespace djdisc
