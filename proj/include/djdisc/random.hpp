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
#include <cstdint>
#include <random>
#include <vector>

#include "djdisc/linalg.hpp"

namespace djdisc {

using Rng = std::mt19937_64;

/// Independent stream for (seed, stream) pairs, e.g. one per search restart.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Standard complex Gaussian amplitudes, normalized.
PureState haar_pure_state(std::size_t dim, Rng& rng);

/// G G^dagger / Tr(G G^dagger) with G a square complex Gaussian matrix.
DensityOperator random_density(std::size_t dim, Rng& rng);

/// G + G^dagger with G complex Gaussian.
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);

/// Haar unitary from the QR decomposition of a complex Gaussian matrix.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

/// Uniform angles in [0, 2 pi).
std::vector<double> random_phases(std::size_t count, Rng& rng);

}  // namespace djdisc
