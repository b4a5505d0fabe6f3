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

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "djdisc/channels.hpp"
#include "djdisc/discrimination.hpp"
#include "djdisc/errors.hpp"
#include "djdisc/random.hpp"

namespace djdisc {
namespace {

constexpr double kFiniteDifferenceStep = 1e-6;
constexpr double kInitialStep = 0.1;
constexpr double kMaxStep = 1.0;
constexpr double kMinStep = 1e-14;

// Points on the unit sphere of C^N, packed as (re_0, im_0, re_1, im_1, ...).
RealVector pack(const ComplexVector& v) {
  RealVector x(2 * v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    x(2 * i) = v(i).real();
    x(2 * i + 1) = v(i).imag();
  }
  return x;
}

PureState unpack(const RealVector& x) {
  ComplexVector v(x.size() / 2);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(x(2 * i), x(2 * i + 1));
  return PureState(v / v.norm());
}

double objective(const PureState& psi) {
  const DensityOperator rho = DensityOperator::from_pure(psi);
  return helstrom_success(apply_constant_channel(rho), apply_balanced_channel(rho), Priors::equal());
}

double objective(const RealVector& x) { return objective(unpack(x)); }

RealVector tangent_gradient(const RealVector& x) {
  RealVector g(x.size());
  RealVector probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe(i) = x(i) + kFiniteDifferenceStep;
    const double up = objective(probe);
    probe(i) = x(i) - kFiniteDifferenceStep;
    const double down = objective(probe);
    probe(i) = x(i);
    g(i) = (up - down) / (2.0 * kFiniteDifferenceStep);
  }
  g -= g.dot(x) * x;
  return g;
}

struct Ascent {
  RealVector point;
  double value;
};

Ascent ascend(RealVector x, int iterations) {
  double value = objective(x);
  double step = kInitialStep;
  for (int it = 0; it < iterations && value < 1.0; ++it) {
    const RealVector g = tangent_gradient(x);
    const double gnorm = g.norm();
    if (gnorm == 0.0) break;
    const RealVector dir = g / gnorm;
    bool moved = false;
    while (step >= kMinStep) {
      RealVector candidate = x + step * dir;
      candidate.normalize();
      const double cv = objective(candidate);
      if (cv > value) {
        x = std::move(candidate);
        value = cv;
        step = std::min(step * 1.5, kMaxStep);
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
  }
  return {std::move(x), value};
}

}  // namespace

SearchResult search_perfect_state(int n, std::uint64_t seed, int restarts, int iterations) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be >= 1");
  if (n > kSearchMaxBits) {
    throw Error(Errc::ResourceLimit, "state search is limited to n <= " +
                                         std::to_string(kSearchMaxBits) + ", got " +
                                         std::to_string(n));
  }
  if (restarts < 0 || iterations < 0) {
    throw Error(Errc::InvalidArgument, "restarts and iterations must be nonnegative");
  }
  const std::size_t dim = std::size_t{1} << n;
  const int starts = std::max(restarts, 1);

  std::optional<SearchResult> best;
  for (int r = 0; r < starts; ++r) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(r));
    const PureState initial = haar_pure_state(dim, rng);
    Ascent run = ascend(pack(initial.amplitudes()), iterations);
    if (!best || run.value > best->success) {
      best = SearchResult{unpack(run.point), run.value, r};
    }
  }
  return std::move(*best);
}

}  // namespace djdisc
