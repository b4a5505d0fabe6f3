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

#include "djdisc/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include "djdisc/errors.hpp"

namespace djdisc {
namespace {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(Errc::MalformedInput, "complex entries must be [re, im] number pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::size_t dim_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) {
    throw Error(Errc::MalformedInput, "missing integer \"dim\"");
  }
  const auto dim = j["dim"].get<long long>();
  if (dim < 1 || dim > (1LL << kMaxOracleBits)) {
    throw Error(Errc::MalformedInput, "\"dim\" out of range: " + std::to_string(dim));
  }
  return static_cast<std::size_t>(dim);
}

const Json& array_field(const Json& j, const char* key, std::size_t expected) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw Error(Errc::MalformedInput, std::string("missing array \"") + key + "\"");
  }
  const Json& arr = j[key];
  if (arr.size() != expected) {
    throw Error(Errc::MalformedInput, std::string("\"") + key + "\" has " +
                                          std::to_string(arr.size()) + " entries, expected " +
                                          std::to_string(expected));
  }
  return arr;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(complex_to_json(m(r, c)));
  }
  return Json{{"dim", m.rows()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const std::size_t dim = dim_from_json(j);
  const Json& data = array_field(j, "data", dim * dim);
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      m(r, c) = complex_from_json(data[static_cast<std::size_t>(r * n + c)]);
    }
  }
  return m;
}

Json state_to_json(const PureState& psi) {
  Json amps = Json::array();
  for (std::size_t x = 0; x < psi.dim(); ++x) amps.push_back(complex_to_json(psi[x]));
  return Json{{"dim", psi.dim()}, {"amplitudes", std::move(amps)}};
}

PureState state_from_json(const Json& j) {
  const std::size_t dim = dim_from_json(j);
  const Json& amps = array_field(j, "amplitudes", dim);
  ComplexVector v(static_cast<Eigen::Index>(dim));
  for (std::size_t x = 0; x < dim; ++x) v(static_cast<Eigen::Index>(x)) = complex_from_json(amps[x]);
  return PureState(std::move(v));
}

Json povm_to_json(const TwoOutcomePovm& povm) {
  return Json{{"e_const", matrix_to_json(povm.e_const())}, {"e_bal", matrix_to_json(povm.e_bal())}};
}

TwoOutcomePovm povm_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("e_const") || !j.contains("e_bal")) {
    throw Error(Errc::MalformedInput, "POVM needs \"e_const\" and \"e_bal\"");
  }
  try {
    return TwoOutcomePovm(matrix_from_json(j["e_const"]), matrix_from_json(j["e_bal"]));
  } catch (const Error& e) {
    if (e.code() == Errc::MalformedInput) throw;
    throw Error(Errc::MalformedInput, e.what());
  }
}

Json certificate_to_json(const CertaintyCertificate& cert) {
  Json j{{"commutator_residual", cert.commutator_residual},
         {"lambda_rho_residual", cert.lambda_rho_residual},
         {"orthogonality_residual", cert.orthogonality_residual}};
  j["eq8_residual"] = cert.eq8_residual ? Json(*cert.eq8_residual) : Json(nullptr);
  j["verdict"] = cert.verdict;
  return j;
}

Json summary_to_json(const SweepSummary& s) {
  return Json{{"n", s.n},
              {"oracle_count", s.oracle_count},
              {"min_success", s.min_success},
              {"mean_success", s.mean_success}};
}

Json witness_to_json(const ClassicalWitness& w) {
  return Json{{"n", w.n},
              {"insufficient_queries", w.queries.size()},
              {"queries", w.queries},
              {"answers", w.answers},
              {"constant_oracle", w.constant_oracle.to_bits()},
              {"balanced_oracle", w.balanced_oracle.to_bits()},
              {"sufficient_queries", w.sufficient_queries},
              {"balanced_capacity", w.balanced_capacity},
              {"query_sets_checked", w.query_sets_checked},
              {"oracles_checked", w.oracles_checked},
              {"insufficiency_holds", w.insufficiency_holds},
              {"sufficiency_holds", w.sufficiency_holds},
              {"verified", w.verified()}};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::MalformedInput, e.what());
  }
}

DensityOperator read_density_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::MalformedInput, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const Json j = parse_json(buf.str());
  try {
    if (j.is_object() && j.contains("amplitudes")) {
      return DensityOperator::from_pure(state_from_json(j));
    }
    return DensityOperator(matrix_from_json(j));
  } catch (const Error& e) {
    if (e.code() == Errc::MalformedInput) throw;
    throw Error(Errc::MalformedInput, path.string() + ": " + e.what());
  }
}

}  // namespace djdisc
