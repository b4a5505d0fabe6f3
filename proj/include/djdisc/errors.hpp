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

#include <stdexcept>
#include <string>
#include <string_view>

namespace djdisc {

enum class Errc {
  NotHermitian,
  NotDensityOperator,
  NotUnitary,
  DimMismatch,
  DimTooSmall,
  ResourceLimit,
  BadWeights,
  NotNormalized,
  NotPerfectState,
  NotCommuting,
  ZeroState,
  PromiseViolation,
  InvalidArgument,
  MalformedInput,
};

std::string_view to_string(Errc code);

/// Library-wide exception. Every failure carries one of the `Errc` codes so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace djdisc
