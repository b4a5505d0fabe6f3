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

#include "djdisc/channels.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "djdisc/errors.hpp"

namespace djdisc {

DensityOperator apply_constant_channel(const DensityOperator& rho) { return rho; }

DensityOperator dephase(const DensityOperator& rho) {
  ComplexMatrix diag = rho.matrix().diagonal().real().cast<Complex>().asDiagonal();
  return DensityOperator(std::move(diag));
}

DensityOperator apply_balanced_channel(const DensityOperator& rho) {
  const auto n = static_cast<double>(rho.dim());
  if (rho.dim() < 2) throw Error(Errc::DimTooSmall, "balanced channel needs N >= 2");
  ComplexMatrix out = -rho.matrix();
  out.diagonal() += n * rho.matrix().diagonal().real().cast<Complex>();
  out /= (n - 1.0);
  return DensityOperator(std::move(out));
}

ClassEnsemble::ClassEnsemble(FunctionClass cls, int n, std::optional<std::vector<double>> weights,
                             double tol)
    : cls_(cls), n_(n) {
  switch (cls) {
    case FunctionClass::Constant: members_ = enumerate_constant(n); break;
    case FunctionClass::Balanced: members_ = enumerate_balanced(n); break;
    case FunctionClass::Neither:
      throw Error(Errc::PromiseViolation, "ensembles are defined for constant or balanced classes");
  }
  if (!weights) {
    weights_.assign(members_.size(), 1.0 / static_cast<double>(members_.size()));
    return;
  }
  weights_ = std::move(*weights);
  if (weights_.size() != members_.size()) {
    throw Error(Errc::BadWeights, "expected " + std::to_string(members_.size()) + " weights, got " +
                                      std::to_string(weights_.size()));
  }
  for (double w : weights_) {
    if (!(w >= 0.0)) throw Error(Errc::BadWeights, "weights must be nonnegative");
  }
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(total - 1.0) > tol) {
    throw Error(Errc::BadWeights, "weights sum to " + std::to_string(total));
  }
}

DensityOperator apply_ensemble_channel(const ClassEnsemble& ens, const DensityOperator& rho) {
  const std::size_t dim = std::size_t{1} << ens.n();
  if (rho.dim() != dim) {
    throw Error(Errc::DimMismatch, "state has dimension " + std::to_string(rho.dim()) +
                                       ", ensemble acts on " + std::to_string(dim));
  }
  const auto& members = ens.members();
  const auto& weights = ens.weights();
  ComplexMatrix acc = ComplexMatrix::Zero(rho.matrix().rows(), rho.matrix().cols());
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (weights[k] == 0.0) continue;
    const ComplexMatrix u = oracle_unitary(members[k]);
    acc += weights[k] * (u * rho.matrix() * u.adjoint());
  }
  return DensityOperator(std::move(acc));
}

}  // namespace djdisc
