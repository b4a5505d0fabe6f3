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

#include "djdisc/tolerance.hpp"

#include <atomic>

#include "djdisc/errors.hpp"

namespace djdisc {
namespace {

std::atomic<double> g_validity_tol{kDefaultValidityTol};
std::atomic<double> g_exact_tol{kDefaultExactTol};

void require_positive(double tol) {
  if (!(tol > 0.0)) throw Error(Errc::InvalidArgument, "tolerance must be positive");
}

}  // namespace

double default_tolerance() { return g_validity_tol.load(std::memory_order_relaxed); }

void set_default_tolerance(double tol) {
  require_positive(tol);
  g_validity_tol.store(tol, std::memory_order_relaxed);
}

double exact_tolerance() { return g_exact_tol.load(std::memory_order_relaxed); }

void set_exact_tolerance(double tol) {
  require_positive(tol);
  g_exact_tol.store(tol, std::memory_order_relaxed);
}

}  // namespace djdisc
