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

namespace djdisc {

// Validity checks (Hermiticity, PSD, unit trace, unitarity).
inline constexpr double kDefaultValidityTol = 1e-9;
// Equalities that hold exactly in real arithmetic.
inline constexpr double kDefaultExactTol = 1e-12;
// Eigenvalues in [-kClipTol, 0) count as zero in positivity checks.
inline constexpr double kClipTol = 1e-12;

// Process-wide defaults. Reads and writes are atomic.
double default_tolerance();
void set_default_tolerance(double tol);
double exact_tolerance();
void set_exact_tolerance(double tol);

}  // namespace djdisc
