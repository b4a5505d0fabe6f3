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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "djdisc/channels.hpp"
#include "djdisc/discrimination.hpp"
#include "djdisc/dj.hpp"
#include "djdisc/oracle.hpp"
#include "djdisc/random.hpp"
#include "../test_support.hpp"

namespace {

using namespace djdisc;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

DensityOperator pure(const PureState& psi) { return DensityOperator::from_pure(psi); }

std::vector<PureState> constructed_perfect_states(std::size_t dim, Rng& rng, int count = 20) {
  std::vector<PureState> out;
  for (int i = 0; i < count; ++i) out.push_back(PureState::uniform(random_phases(dim, rng)));
  return out;
}

// 1. Brute-force balanced average equals the closed form.
Outcome channel_closed_form() {
  Rng rng = make_rng(101);
  double worst = 0.0;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= 3; ++n) {
    const ClassEnsemble ens(FunctionClass::Balanced, n);
    for (int i = 0; i < 50; ++i) {
      const DensityOperator rho = random_density(std::size_t{1} << n, rng);
      worst = std::max(worst, frobenius_distance(apply_ensemble_channel(ens, rho).matrix(),
                                                 apply_balanced_channel(rho).matrix()));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst <= 1e-10 && secs <= 10.0,
          fmt("max residual %.3e (<= 1e-10), %.2f s (<= 10 s)", worst, secs)};
}

// 2. Certainty algorithm succeeds on every admissible oracle and every prior.
Outcome perfect_discrimination() {
  Rng rng = make_rng(102);
  const std::size_t expected_counts[] = {4, 8, 72};
  double worst_sweep = 1.0;
  double worst_prior = 1.0;
  bool counts_ok = true;
  for (int n = 1; n <= 3; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    for (const PureState& phi : constructed_perfect_states(dim, rng, 25)) {
      const TwoOutcomePovm povm = build_certainty_povm(phi);
      const SweepSummary s = sweep_all(n, phi, povm);
      counts_ok = counts_ok && s.oracle_count == expected_counts[n - 1];
      worst_sweep = std::min(worst_sweep, s.min_success);
      for (int k = 0; k <= 10; ++k) {
        worst_prior = std::min(worst_prior,
                               success_probability(pure(phi), povm, Priors::from_const(k / 10.0)));
      }
    }
  }
  return {counts_ok && worst_sweep >= 1.0 - 1e-10 && worst_prior >= 1.0 - 1e-10,
          fmt("oracle counts 4/8/72 %s, min sweep success %.16f, min over priors %.16f (>= 1 - 1e-10)",
              counts_ok ? "ok" : "WRONG", worst_sweep, worst_prior)};
}

struct UniquenessStats {
  int samples = 0;
  int false_positives = 0;
  int false_negatives = 0;
  int near_perfect_excluded = 0;
  std::vector<DensityOperator> verdict_true;
};

// 3. The certificate accepts exactly the uniform-magnitude pure states.
Outcome uniqueness(UniquenessStats& stats) {
  Rng rng = make_rng(103);
  for (int n = 1; n <= 2; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    for (int i = 0; i < 11000; ++i) {
      const DensityOperator rho = i < 10000 ? pure(haar_pure_state(dim, rng)) : random_density(dim, rng);
      ++stats.samples;
      const bool verdict = certainty_certificate(rho).verdict;
      const bool perfect = is_perfect_initial_state(rho, 1e-3);
      if (verdict) stats.verdict_true.push_back(rho);
      if (verdict && !perfect) ++stats.false_positives;
      if (!verdict && perfect) ++stats.near_perfect_excluded;
    }
    for (const PureState& phi : constructed_perfect_states(dim, rng)) {
      const DensityOperator rho = pure(phi);
      const bool verdict = certainty_certificate(rho).verdict;
      if (verdict) stats.verdict_true.push_back(rho);
      if (!verdict || !is_perfect_initial_state(rho, 1e-3)) ++stats.false_negatives;
    }
  }
  return {stats.false_positives == 0 && stats.false_negatives == 0,
          fmt("%d random states, %d false positives, %d false negatives on 40 constructed states "
              "(%d random states inside the 1e-3 band but not exactly uniform: verdict false)",
              stats.samples, stats.false_positives, stats.false_negatives,
              stats.near_perfect_excluded)};
}

// 4. sum_x |phi(x)|^4 >= 1/N, attained by uniform magnitudes.
Outcome ipr_bound() {
  Rng rng = make_rng(104);
  double worst_gap = 1.0;
  double worst_equality = 0.0;
  for (std::size_t dim : {2u, 4u, 8u}) {
    const double floor = 1.0 / static_cast<double>(dim);
    for (int i = 0; i < 10000; ++i) {
      worst_gap = std::min(worst_gap, inverse_participation(haar_pure_state(dim, rng)) - floor);
    }
    for (const PureState& phi : constructed_perfect_states(dim, rng)) {
      worst_equality = std::max(worst_equality, std::abs(inverse_participation(phi) - floor));
    }
  }
  return {worst_gap >= -1e-12 && worst_equality <= 1e-12,
          fmt("min(IPR - 1/N) %.3e (>= -1e-12), max |IPR - 1/N| on uniform states %.3e (<= 1e-12)",
              worst_gap, worst_equality)};
}

// 5. Class outputs of uniform-magnitude states are orthogonal.
Outcome orthogonality() {
  Rng rng = make_rng(105);
  double worst_product = 0.0;
  double worst_helstrom = 1.0;
  for (std::size_t dim : {2u, 4u, 8u}) {
    for (const PureState& phi : constructed_perfect_states(dim, rng)) {
      const DensityOperator rho = pure(phi);
      const DensityOperator c = apply_constant_channel(rho);
      const DensityOperator b = apply_balanced_channel(rho);
      worst_product = std::max(worst_product, (c.matrix() * b.matrix()).norm());
      worst_helstrom = std::min(worst_helstrom, helstrom_success(c, b, Priors::equal()));
    }
  }
  return {worst_product <= 1e-12 && std::abs(worst_helstrom - 1.0) <= 1e-10,
          fmt("max ||rho_const rho_bal||_F %.3e (<= 1e-12), min Helstrom %.16f (1 within 1e-10)",
              worst_product, worst_helstrom)};
}

// 6. Eigenbasis balance identity holds whenever the certificate passes.
Outcome eq8_identity(const UniquenessStats& stats) {
  double worst = 0.0;
  for (const auto& rho : stats.verdict_true) worst = std::max(worst, eq8_balance(rho));
  const double basis = eq8_balance(pure(PureState::basis(2, 0)));
  return {!stats.verdict_true.empty() && worst <= 1e-10 && std::abs(basis - 0.5) <= 1e-12,
          fmt("%zu certified states, max eq8 %.3e (<= 1e-10); |0><0| at N=2 gives %.16f (0.5 +- 1e-12)",
              stats.verdict_true.size(), worst, basis)};
}

// 7. Numerical search lands on the perfect family.
Outcome search_recovery() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 2; ++n) {
    const SearchResult r = search_perfect_state(n, 7, 20, 500);
    const bool perfect = is_perfect_initial_state(pure(r.state), 1e-3);
    ok = ok && r.success >= 1.0 - 1e-6 && perfect;
    detail += fmt("n=%d success %.12f perfect=%s; ", n, r.success, perfect ? "yes" : "no");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {ok && secs <= 30.0, detail + fmt("%.2f s (<= 30 s)", secs)};
}

// 8. Classical worst case needs 2^(n-1) + 1 queries.
Outcome classical_bound() {
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 3; ++n) {
    const ClassicalWitness w = classical_witness(n);
    const std::size_t half = std::size_t{1} << (n - 1);
    bool agree = w.queries.size() == half;
    for (std::size_t i = 0; i < w.queries.size(); ++i) {
      agree = agree && w.constant_oracle(w.queries[i]) == w.balanced_oracle(w.queries[i]);
    }
    const bool spans = classify(w.constant_oracle) == FunctionClass::Constant &&
                       classify(w.balanced_oracle) == FunctionClass::Balanced;
    ok = ok && agree && spans && w.verified() && w.sufficient_queries == half + 1;
    detail += fmt("n=%d: %zu queries insufficient, %zu sufficient (%zu query sets x %zu oracles); ",
                  n, w.queries.size(), w.sufficient_queries, w.query_sets_checked, w.oracles_checked);
  }
  return {ok, detail};
}

// 9. No measurement beats the Helstrom bound.
Outcome bound_dominance() {
  Rng rng = make_rng(109);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = -1.0;
  for (std::size_t dim : {2u, 4u}) {
    for (int i = 0; i < 200; ++i) {
      const DensityOperator rho = i % 2 ? random_density(dim, rng) : pure(haar_pure_state(dim, rng));
      const TwoOutcomePovm povm = testing::random_povm(dim, rng);
      const Priors priors = Priors::from_const(unit(rng));
      const double bound = helstrom_success(apply_constant_channel(rho), apply_balanced_channel(rho), priors);
      worst = std::max(worst, success_probability(rho, povm, priors) - bound);
    }
  }
  return {worst <= 1e-9, fmt("max(success - Helstrom) %.3e (<= 1e-9) over 400 triples", worst)};
}

}  // namespace

int main() {
  UniquenessStats stats;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 channel closed form", channel_closed_form},
      {"AC2 perfect discrimination", perfect_discrimination},
      {"AC3 uniqueness", [&] { return uniqueness(stats); }},
      {"AC4 IPR bound", ipr_bound},
      {"AC5 orthogonality", orthogonality},
      {"AC6 Eq8 identity", [&] { return eq8_identity(stats); }},
      {"AC7 search recovery", search_recovery},
      {"AC8 classical bound", classical_bound},
      {"AC9 bound dominance", bound_dominance},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o{false, ""};
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
