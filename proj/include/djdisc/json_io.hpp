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

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "djdisc/discrimination.hpp"
#include "djdisc/dj.hpp"
#include "djdisc/linalg.hpp"

namespace djdisc {

using Json = nlohmann::ordered_json;

// Matrices: {"dim": N, "data": [[re, im], ...]} row-major, N^2 entries.
// States:   {"dim": N, "amplitudes": [[re, im], ...]}.
// Parsing failures throw Error(Errc::MalformedInput).

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json state_to_json(const PureState& psi);
PureState state_from_json(const Json& j);

Json povm_to_json(const TwoOutcomePovm& povm);
TwoOutcomePovm povm_from_json(const Json& j);

Json certificate_to_json(const CertaintyCertificate& cert);
Json summary_to_json(const SweepSummary& s);
Json witness_to_json(const ClassicalWitness& w);

Json parse_json(std::string_view text);

/// Reads either a state or a matrix document and returns the density
/// operator it describes. Throws MalformedInput on unreadable, malformed or
/// invalid content.
DensityOperator read_density_file(const std::filesystem::path& path);

}  // namespace djdisc
