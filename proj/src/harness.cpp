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

#include "parity/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ostream>
#include <thread>

#include "parity/bounds.hpp"
#include "parity/learners.hpp"

namespace parity {

std::string to_string(LearnerKind kind) {
  switch (kind) {
    case LearnerKind::noiseless_classical:
      return "noiseless_classical";
    case LearnerKind::quantum_nonzero:
      return "quantum_nonzero";
    case LearnerKind::quantum_majority:
      return "quantum_majority";
    case LearnerKind::lpn_bruteforce:
      return "lpn_bruteforce";
    case LearnerKind::lpn_bkw:
      return "lpn_bkw";
  }
  return "unknown";
}

LearnerKind parse_learner(std::string_view name) {
  for (auto kind : {LearnerKind::noiseless_classical, LearnerKind::quantum_nonzero,
                    LearnerKind::quantum_majority, LearnerKind::lpn_bruteforce,
                    LearnerKind::lpn_bkw}) {
    if (name == to_string(kind)) {
      return kind;
    }
  }
  throw config_error("unknown learner: " + std::string(name));
}

NoiseModel parse_noise(std::string_view name, double eta) {
  try {
    if (name == "none" || name == "noiseless") {
      return Noiseless{};
    }
    if (name == "classification") {
      return Classification{NoiseRate(eta)};
    }
    if (name == "depolarizing") {
      return Depolarizing{NoiseRate(eta)};
    }
  } catch (const std::invalid_argument& e) {
    throw config_error(e.what());
  }
  throw config_error("unknown noise model: " + std::string(name));
}

void validate(const ExperimentConfig& config) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) {
      throw config_error(what);
    }
  };
  require(config.n >= 1, "n must be positive");
  require(config.trials >= 1, "trials must be positive");
  require(config.threads >= 1, "threads must be positive");
  require(config.delta > 0.0 && config.delta < 0.5, "delta must lie in (0, 1/2)");
  require(!(config.target && config.weight), "give either a fixed target or a weight, not both");
  if (config.target) {
    require(config.target->size() == config.n, "fixed target length must equal n");
  }
  if (config.weight) {
    require(*config.weight <= config.n, "weight must not exceed n");
  }

  const bool noiseless = std::holds_alternative<Noiseless>(config.noise);
  const bool depolarizing = std::holds_alternative<Depolarizing>(config.noise);
  const std::string pairing = to_string(config.learner) + " cannot run against a " +
                              noise_name(config.noise) + " oracle";
  switch (config.learner) {
    case LearnerKind::noiseless_classical:
      require(noiseless, pairing);
      break;
    case LearnerKind::quantum_nonzero:
      require(!depolarizing, pairing);
      break;
    case LearnerKind::quantum_majority:
      require(depolarizing, pairing);
      require(noise_eta(config.noise) > 0.0, "quantum_majority plans k' for eta in (0, 1/2)");
      break;
    case LearnerKind::lpn_bruteforce:
      require(config.n <= kMaxBruteForceBits, "lpn_bruteforce is limited to n <= 24");
      break;
    case LearnerKind::lpn_bkw: {
      require(config.block_count >= 1 && config.block_count <= config.n,
              "block_count must lie in [1, n]");
      const std::size_t block_bits = (config.n + config.block_count - 1) / config.block_count;
      require(block_bits <= kMaxBruteForceBits, "lpn_bkw blocks are limited to 24 bits");
      break;
    }
  }
}

RandomStream trial_stream(std::uint64_t seed, std::uint64_t trial_index) {
  return RandomStream(seed).split(trial_index);
}

BitString plant_concept(const ExperimentConfig& config, RandomStream& rng) {
  if (config.target) {
    return *config.target;
  }
  if (config.weight) {
    // Partial Fisher-Yates over positions.
    std::vector<std::size_t> positions(config.n);
    for (std::size_t j = 0; j < config.n; ++j) {
      positions[j] = j + 1;
    }
    BitString a(config.n);
    for (std::size_t i = 0; i < *config.weight; ++i) {
      const auto pick = i + static_cast<std::size_t>(rng.below(config.n - i));
      std::swap(positions[i], positions[pick]);
      a.set(positions[i], true);
    }
    return a;
  }
  return BitString::uniform(config.n, rng);
}

std::uint64_t default_lpn_examples(std::size_t n, double eta, double delta) {
  const double bias = 1.0 - 2.0 * eta;
  return static_cast<std::uint64_t>(std::ceil(
      2.0 * (static_cast<double>(n) * std::log(2.0) + std::log(1.0 / delta)) / (bias * bias)));
}

namespace {

std::uint64_t nonzero_query_count(const ExperimentConfig& config) {
  if (config.nonzero_queries != 0) {
    return config.nonzero_queries;
  }
  return static_cast<std::uint64_t>(std::ceil(std::log2(1.0 / config.delta)));
}

}  // namespace

TrialRecord run_trial(const ExperimentConfig& config, std::uint64_t trial_index) {
  const auto started = std::chrono::steady_clock::now();
  const RandomStream stream = trial_stream(config.seed, trial_index);
  RandomStream target_rng = stream.split(0);
  const ParityConcept target(plant_concept(config, target_rng));
  const double eta = noise_eta(config.noise);

  TrialRecord record;
  record.trial_index = trial_index;
  record.n = config.n;
  record.noise_model = noise_name(config.noise);
  record.eta = eta;
  record.learner = config.learner;
  record.seed = config.seed;

  std::optional<BitString> a_hat;
  switch (config.learner) {
    case LearnerKind::noiseless_classical: {
      ClassicalExampleOracle oracle(target, config.noise, stream.split(1));
      const LearnerReport report = learn_noiseless_classical(oracle, config.delta);
      record.queries_used = report.queries_used;
      record.retained = report.retained;
      if (report.succeeded_selfcheck) {
        a_hat = report.a_hat;
      }
      break;
    }
    case LearnerKind::quantum_nonzero: {
      QuantumExampleOracle oracle(target, config.noise, stream.split(1));
      const LearnerReport report = learn_quantum_nonzero_report(oracle, nonzero_query_count(config));
      record.queries_used = report.queries_used;
      a_hat = report.a_hat;
      break;
    }
    case LearnerKind::quantum_majority: {
      QuantumExampleOracle oracle(target, config.noise, stream.split(1));
      const LearnerReport report = learn_quantum_majority(oracle, eta, config.delta);
      record.queries_used = report.queries_used;
      record.retained = report.retained;
      a_hat = report.a_hat;
      break;
    }
    case LearnerKind::lpn_bruteforce: {
      ClassicalExampleOracle oracle(target, config.noise, stream.split(1));
      const std::uint64_t count = config.lpn_examples != 0
                                      ? config.lpn_examples
                                      : default_lpn_examples(config.n, eta, config.delta);
      std::vector<ClassicalExample> examples(count);
      for (auto& e : examples) {
        oracle.draw(e);
      }
      record.queries_used = oracle.queries();
      a_hat = learn_lpn_bruteforce(examples, eta);
      break;
    }
    case LearnerKind::lpn_bkw: {
      ClassicalExampleOracle oracle(target, config.noise, stream.split(1));
      const std::uint64_t budget =
          config.sample_budget != 0
              ? config.sample_budget
              : bkw_recommended_budget(config.n, config.block_count, eta, config.delta);
      a_hat = learn_lpn_bkw(oracle, eta, config.block_count, budget);
      record.queries_used = oracle.queries();
      break;
    }
  }
  record.success = a_hat.has_value() && *a_hat == target.bits();
  if (config.record_time) {
    record.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - started)
                              .count();
  }
  return record;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  validate(config);
  ExperimentResult result;
  result.records.resize(config.trials);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < config.trials; i = next++) {
      result.records[i] = run_trial(config, i);
    }
  };
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(config.threads, config.trials));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(worker);
    }
  }
  result.summary = summarize(result.records);
  return result;
}

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) {
    return {0.0, 1.0};
  }
  constexpr double z = 1.959963984540054;
  const double t = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / t;
  const double denom = 1.0 + z * z / t;
  const double center = (p + z * z / (2.0 * t)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / t + z * z / (4.0 * t * t)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

ExperimentSummary summarize(std::span<const TrialRecord> records) {
  ExperimentSummary s;
  s.trials = records.size();
  double queries = 0.0;
  double retained = 0.0;
  for (const auto& r : records) {
    s.successes += r.success ? 1 : 0;
    queries += static_cast<double>(r.queries_used);
    retained += static_cast<double>(r.retained);
  }
  if (s.trials != 0) {
    const double t = static_cast<double>(s.trials);
    s.success_rate = static_cast<double>(s.successes) / t;
    s.mean_queries = queries / t;
    s.mean_retained = retained / t;
  }
  std::tie(s.ci_low, s.ci_high) = wilson_interval(s.successes, s.trials);
  return s;
}

std::string format_real(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

void write_trial_csv(std::ostream& out, std::span<const TrialRecord> records) {
  out << kTrialCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.trial_index << ',' << r.n << ',' << r.noise_model << ',' << format_real(r.eta) << ','
        << to_string(r.learner) << ',' << r.queries_used << ',' << r.retained << ','
        << (r.success ? 1 : 0) << ',';
    if (r.wall_time_ms) {
      out << *r.wall_time_ms;
    }
    out << ',' << r.seed << '\n';
  }
}

void write_summary(std::ostream& out, const ExperimentSummary& s) {
  out << "trials: " << s.trials << '\n'
      << "successes: " << s.successes << '\n'
      << "success_rate: " << format_real(s.success_rate) << '\n'
      << "success_ci95: [" << format_real(s.ci_low) << ", " << format_real(s.ci_high) << "]\n"
      << "mean_queries: " << format_real(s.mean_queries) << '\n'
      << "mean_retained: " << format_real(s.mean_retained) << '\n';
}

double tv_distance(const OutcomeDistribution& p, const OutcomeDistribution& q) {
  if (p.n != q.n) {
    throw std::invalid_argument("tv_distance: support size mismatch");
  }
  return tv_distance(p.probabilities, q.probabilities);
}

OutcomeDistribution empirical_distribution(std::size_t n, std::span<const QuantumOutcome> outcomes) {
  if (n > kMaxTableBits) {
    throw capacity_error("empirical distributions are limited to n <= 20");
  }
  OutcomeDistribution out{n, Eigen::VectorXd::Zero(std::int64_t{2} << n)};
  for (const auto& o : outcomes) {
    out.probabilities(static_cast<Eigen::Index>((o.m.to_index() << 1) | (o.b ? 1U : 0U))) += 1.0;
  }
  if (!outcomes.empty()) {
    out.probabilities /= static_cast<double>(outcomes.size());
  }
  return out;
}

VerifySuite parse_suite(std::string_view name) {
  if (name == "distributions") {
    return VerifySuite::distributions;
  }
  if (name == "bounds") {
    return VerifySuite::bounds;
  }
  if (name == "solvers") {
    return VerifySuite::solvers;
  }
  if (name == "all") {
    return VerifySuite::all;
  }
  throw config_error("unknown verify suite: " + std::string(name));
}

std::vector<SeparationRow> separation_report(std::span<const std::size_t> n_list, double eta,
                                             double delta, std::uint64_t trials,
                                             std::uint64_t seed, unsigned threads) {
  if (!(eta > 0.0 && eta < 0.5)) {
    throw config_error("separation needs eta in (0, 1/2)");
  }
  std::vector<SeparationRow> rows;
  constexpr LearnerKind kOrder[] = {LearnerKind::quantum_majority, LearnerKind::noiseless_classical,
                                    LearnerKind::lpn_bruteforce, LearnerKind::lpn_bkw};
  for (const std::size_t n : n_list) {
    for (std::size_t slot = 0; slot < std::size(kOrder); ++slot) {
      ExperimentConfig config;
      config.n = n;
      config.learner = kOrder[slot];
      config.delta = delta;
      config.trials = trials;
      config.threads = threads;
      config.seed = RandomStream::mix(RandomStream::mix(seed, n), slot);
      switch (config.learner) {
        case LearnerKind::quantum_majority:
          config.noise = Depolarizing{NoiseRate(eta)};
          break;
        case LearnerKind::noiseless_classical:
          config.noise = Noiseless{};
          break;
        default:
          config.noise = Classification{NoiseRate(eta)};
          break;
      }

      SeparationRow row;
      row.n = n;
      row.learner = config.learner;
      row.noise_model = noise_name(config.noise);
      row.eta = noise_eta(config.noise);
      const bool too_big =
          (config.learner == LearnerKind::lpn_bruteforce && n > kSeparationBruteForceMax) ||
          (config.learner == LearnerKind::lpn_bkw &&
           (n < config.block_count || (n + 1) / 2 > kSeparationBkwBlockMax));
      if (too_big) {
        row.status = "skipped_capacity";
        rows.push_back(row);
        continue;
      }

      const ExperimentResult result = run_experiment(config);
      row.trials = result.summary.trials;
      row.mean_queries = result.summary.mean_queries;
      row.success_rate = result.summary.success_rate;
      const double nd = static_cast<double>(n);
      switch (config.learner) {
        case LearnerKind::quantum_majority:
          row.mean_work = result.summary.mean_queries * (nd + 1.0);
          break;
        case LearnerKind::noiseless_classical:
          row.mean_work = result.summary.mean_retained * nd * nd * nd;
          break;
        case LearnerKind::lpn_bruteforce:
          row.mean_work = std::ldexp(result.summary.mean_queries, static_cast<int>(n));
          break;
        default:
          row.mean_work = result.summary.mean_queries * static_cast<double>(config.block_count);
          break;
      }
      row.status = "ok";
      rows.push_back(row);
    }
  }
  return rows;
}

void write_separation_csv(std::ostream& out, std::span<const SeparationRow> rows) {
  out << kSeparationCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << to_string(r.learner) << ',' << r.noise_model << ',' << format_real(r.eta)
        << ',' << r.trials << ',' << format_real(r.mean_queries) << ','
        << format_real(r.success_rate) << ',' << format_real(r.mean_work) << ',' << r.status
        << '\n';
  }
}

}  // namespace parity
