// Copyright 2026 The parity-lab Authors
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

#include <Eigen/Core>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parity/gf2.hpp"
#include "parity/oracle.hpp"

namespace parity {

/// Invalid experiment configuration; reported before any trial runs.
class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class LearnerKind { noiseless_classical, quantum_nonzero, quantum_majority, lpn_bruteforce, lpn_bkw };

std::string to_string(LearnerKind kind);
/// Throws config_error for an unknown name.
LearnerKind parse_learner(std::string_view name);
/// "none"/"noiseless", "classification", "depolarizing"; eta ignored for none.
NoiseModel parse_noise(std::string_view name, double eta);

struct ExperimentConfig {
  std::size_t n = 16;
  NoiseModel noise = Noiseless{};
  LearnerKind learner = LearnerKind::quantum_majority;
  double delta = 0.01;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;

  /// Planted target: fixed string, else uniform of a fixed weight, else uniform.
  std::optional<BitString> target;
  std::optional<std::size_t> weight;

  /// quantum_nonzero query count; 0 selects ceil(log2(1/δ)).
  std::uint64_t nonzero_queries = 0;
  /// lpn_bruteforce example count; 0 selects the default rule.
  std::uint64_t lpn_examples = 0;
  std::size_t block_count = 2;
  /// lpn_bkw sample budget; 0 selects bkw_recommended_budget.
  std::uint64_t sample_budget = 0;

  unsigned threads = 1;
  /// Wall time makes output machine-dependent, so it is opt-in.
  bool record_time = false;
};

/// Throws config_error on bad ranges or learner/noise pairings.
void validate(const ExperimentConfig& config);

struct TrialRecord {
  std::uint64_t trial_index = 0;
  std::size_t n = 0;
  std::string noise_model;
  double eta = 0.0;
  LearnerKind learner = LearnerKind::quantum_majority;
  std::uint64_t queries_used = 0;
  std::uint64_t retained = 0;
  bool success = false;
  std::optional<std::int64_t> wall_time_ms;
  std::uint64_t seed = 0;
};

struct ExperimentSummary {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double success_rate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double mean_queries = 0.0;
  double mean_retained = 0.0;
};

struct ExperimentResult {
  std::vector<TrialRecord> records;
  ExperimentSummary summary;
};

/// Random stream of a trial, derived from (seed, trial_index).
RandomStream trial_stream(std::uint64_t seed, std::uint64_t trial_index);

BitString plant_concept(const ExperimentConfig& config, RandomStream& rng);

/// Example count used by lpn_bruteforce when none is configured:
/// ceil(2 (n ln 2 + ln(1/δ)) / (1-2η)²).
std::uint64_t default_lpn_examples(std::size_t n, double eta, double delta);

TrialRecord run_trial(const ExperimentConfig& config, std::uint64_t trial_index);

/// Runs every trial (across `threads` workers); records are in trial order.
ExperimentResult run_experiment(const ExperimentConfig& config);

ExperimentSummary summarize(std::span<const TrialRecord> records);

/// 95% Wilson score interval.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials);

inline constexpr std::string_view kTrialCsvHeader =
    "trial_index,n,noise_model,eta,learner,queries_used,retained,success,wall_time_ms,seed";

void write_trial_csv(std::ostream& out, std::span<const TrialRecord> records);
void write_summary(std::ostream& out, const ExperimentSummary& summary);

/// Shortest round-trip text for a double, fixed across runs.
std::string format_real(double value);

/// 1/2 Σ |p - q|.
template <typename DerivedP, typename DerivedQ>
double tv_distance(const Eigen::MatrixBase<DerivedP>& p, const Eigen::MatrixBase<DerivedQ>& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("tv_distance: support size mismatch");
  }
  return 0.5 * (p - q).cwiseAbs().sum();
}

double tv_distance(const OutcomeDistribution& p, const OutcomeDistribution& q);

/// Normalized histogram of outcomes, laid out like OutcomeDistribution.
OutcomeDistribution empirical_distribution(std::size_t n, std::span<const QuantumOutcome> outcomes);

enum class VerifySuite { distributions, bounds, solvers, all };

VerifySuite parse_suite(std::string_view name);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Cross-module oracle checks; every check is seeded and deterministic.
std::vector<CheckResult> verify(VerifySuite suite);

struct SeparationRow {
  std::size_t n = 0;
  LearnerKind learner = LearnerKind::quantum_majority;
  std::string noise_model;
  double eta = 0.0;
  std::uint64_t trials = 0;
  double mean_queries = 0.0;
  double success_rate = 0.0;
  /// Elementary operations: bits measured (quantum), row operations bound n³
  /// (elimination), candidates × examples (brute force), samples × blocks (BKW).
  double mean_work = 0.0;
  std::string status;
};

inline constexpr std::size_t kSeparationBruteForceMax = 20;
inline constexpr std::size_t kSeparationBkwBlockMax = 16;

/// Quantum majority vote under Depolarizing(η) against the noiseless n-query
/// baseline and the LPN solvers on a Classification(η) oracle, for each n.
std::vector<SeparationRow> separation_report(std::span<const std::size_t> n_list, double eta,
                                             double delta, std::uint64_t trials,
                                             std::uint64_t seed, unsigned threads = 1);

inline constexpr std::string_view kSeparationCsvHeader =
    "n,learner,noise_model,eta,trials,mean_queries,success_rate,mean_work,status";

void write_separation_csv(std::ostream& out, std::span<const SeparationRow> rows);

}  // namespace parity
