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

#include <optional>
#include <vector>

#include "djdisc/linalg.hpp"
#include "djdisc/oracle.hpp"

namespace djdisc {

/// Constant-class operation: the identity map, whatever the weights of the
/// two constant oracles.
DensityOperator apply_constant_channel(const DensityOperator& rho);

/// Uniformly weighted balanced-class operation in closed form,
///   rho -> (N dephase(rho) - rho) / (N - 1).
/// Throws DimTooSmall for N < 2.
DensityOperator apply_balanced_channel(const DensityOperator& rho);

/// Keeps the computational-basis diagonal: sum_x |x><x| rho |x><x|.
DensityOperator dephase(const DensityOperator& rho);

/// A class of oracles with the probabilities p_f of applying each one.
class ClassEnsemble {
 public:
  /// `weights` follow the enumeration order of the class; absent means
  /// uniform. Throws PromiseViolation for FunctionClass::Neither,
  /// ResourceLimit from enumeration, BadWeights for invalid weights.
  ClassEnsemble(FunctionClass cls, int n, std::optional<std::vector<double>> weights = std::nullopt,
                double tol = default_tolerance());

  FunctionClass function_class() const noexcept { return cls_; }
  int n() const noexcept { return n_; }
  const std::vector<BooleanOracle>& members() const noexcept { return members_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

 private:
  FunctionClass cls_;
  int n_;
  std::vector<BooleanOracle> members_;
  std::vector<double> weights_;
};

/// sum_f p_f U_f rho U_f^dagger, accumulated in enumeration order with full
/// matrix products.
DensityOperator apply_ensemble_channel(const ClassEnsemble& ens, const DensityOperator& rho);

}  // namespace djdisc
