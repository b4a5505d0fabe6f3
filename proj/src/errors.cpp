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

#include "djdisc/errors.hpp"

namespace djdisc {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NotDensityOperator: return "NotDensityOperator";
    case Errc::NotUnitary: return "NotUnitary";
    case Errc::DimMismatch: return "DimMismatch";
    case Errc::DimTooSmall: return "DimTooSmall";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::BadWeights: return "BadWeights";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::NotPerfectState: return "NotPerfectState";
    case Errc::NotCommuting: return "NotCommuting";
    case Errc::ZeroState: return "ZeroState";
    case Errc::PromiseViolation: return "PromiseViolation";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace djdisc
