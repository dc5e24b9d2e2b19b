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

// Command-line runner: oracle dumps, single learner runs, seeded batch
// experiments, oracle verification suites and the separation table.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parity/bounds.hpp"
#include "parity/harness.hpp"
#include "parity/learners.hpp"
#include "parity/oracle.hpp"

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitConfigError = 2;

// Raw flag values; converted to an ExperimentConfig after parsing.
struct ExperimentFlags {
  std::size_t n = 16;
  std::string noise = "depolarizing";
  double eta = 0.1;
  std::string learner = "quantum_majority";
  double delta = 0.01;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::string target;
  std::optional<std::size_t> weight;
  std::uint64_t nonzero_queries = 0;
  std::uint64_t lpn_examples = 0;
  std::size_t blocks = 2;
  std::uint64_t budget = 0;
  unsigned threads = 1;
  bool timing = false;
  std::string output;
};

void add_oracle_flags(CLI::App* cmd, ExperimentFlags& f) {
  cmd->add_option("-n,--n", f.n, "Number of input bits")->capture_default_str();
  cmd->add_option("--noise", f.noise, "none | classification | depolarizing")
      ->capture_default_str();
  cmd->add_option("--eta", f.eta, "Noise rate in [0, 1/2)")->capture_default_str();
  cmd->add_option("--seed", f.seed, "64-bit seed")->capture_default_str();
  cmd->add_option("--target", f.target, "Fixed hidden string, position 1 first");
  cmd->add_option("--weight", f.weight, "Plant a uniform target of this Hamming weight");
}

void add_learner_flags(CLI::App* cmd, ExperimentFlags& f) {
  cmd->add_option("--learner", f.learner,
                  "noiseless_classical | quantum_nonzero | quantum_majority | lpn_bruteforce | "
                  "lpn_bkw")
      ->capture_default_str();
  cmd->add_option("--delta", f.delta, "Target failure probability")->capture_default_str();
  cmd->add_option("--k", f.nonzero_queries, "quantum_nonzero query count (0: ceil(log2(1/delta)))");
  cmd->add_option("--examples", f.lpn_examples, "lpn_bruteforce example count (0: default rule)");
  cmd->add_option("--blocks", f.blocks, "lpn_bkw block count")->capture_default_str();
  cmd->add_option("--budget", f.budget, "lpn_bkw sample budget (0: recommended)");
}

parity::ExperimentConfig to_config(const ExperimentFlags& f) {
  parity::ExperimentConfig c;
  c.n = f.n;
  c.noise = parity::parse_noise(f.noise, f.eta);
  c.learner = parity::parse_learner(f.learner);
  c.delta = f.delta;
  c.trials = f.trials;
  c.seed = f.seed;
  if (!f.target.empty()) {
    try {
      c.target = parity::BitString::from_text(f.target);
    } catch (const std::invalid_argument& e) {
      throw parity::config_error(e.what());
    }
  }
  c.weight = f.weight;
  c.nonzero_queries = f.nonzero_queries;
  c.lpn_examples = f.lpn_examples;
  c.block_count = f.blocks;
  c.sample_budget = f.budget;
  c.threads = f.threads;
  c.record_time = f.timing;
  return c;
}

// Writes to --output when given, else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) {
        throw parity::config_error("cannot open output file: " + path);
      }
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int run_sample(const ExperimentFlags& f, const std::string& kind, std::uint64_t count) {
  parity::ExperimentConfig c = to_config(f);
  c.learner = parity::LearnerKind::lpn_bruteforce;
  if (c.target && c.target->size() != c.n) {
    throw parity::config_error("fixed target length must equal n");
  }
  parity::RandomStream target_rng = parity::trial_stream(c.seed, 0).split(0);
  const parity::ParityConcept target(parity::plant_concept(c, target_rng));
  const parity::RandomStream oracle_rng = parity::trial_stream(c.seed, 0).split(1);

  Sink sink(f.output);
  std::ostream& out = sink.stream();
  out << "m_or_x,b_or_y\n";
  if (kind == "quantum") {
    parity::QuantumExampleOracle oracle(target, c.noise, oracle_rng);
    parity::QuantumOutcome o;
    for (std::uint64_t i = 0; i < count; ++i) {
      oracle.draw(o);
      out << o.m.to_text() << ',' << (o.b ? 1 : 0) << '\n';
    }
  } else if (kind == "classical") {
    parity::ClassicalExampleOracle oracle(target, c.noise, oracle_rng);
    parity::ClassicalExample e;
    for (std::uint64_t i = 0; i < count; ++i) {
      oracle.draw(e);
      out << e.x.to_text() << ',' << (e.y ? 1 : 0) << '\n';
    }
  } else {
    throw parity::config_error("--kind must be quantum or classical");
  }
  std::cerr << "planted target: " << target.bits().to_text() << '\n';
  return 0;
}

int run_learn(const ExperimentFlags& f) {
  parity::ExperimentConfig c = to_config(f);
  c.trials = 1;
  c.record_time = true;
  parity::validate(c);
  const parity::TrialRecord r = parity::run_trial(c, 0);
  std::cout << "learner: " << parity::to_string(r.learner) << '\n'
            << "noise_model: " << r.noise_model << '\n'
            << "eta: " << parity::format_real(r.eta) << '\n'
            << "n: " << r.n << '\n'
            << "queries_used: " << r.queries_used << '\n'
            << "retained: " << r.retained << '\n'
            << "success: " << (r.success ? "true" : "false") << '\n'
            << "wall_time_ms: " << r.wall_time_ms.value_or(0) << '\n';
  if (c.learner == parity::LearnerKind::quantum_majority) {
    const auto plan = parity::plan_retained_count(c.n, r.eta, c.delta);
    std::cout << "planned_k_prime: " << plan.k_prime << '\n'
              << "planned_total_queries: " << plan.total_queries << '\n';
  }
  return 0;
}

int run_experiment_cmd(const ExperimentFlags& f) {
  const parity::ExperimentConfig c = to_config(f);
  const parity::ExperimentResult result = parity::run_experiment(c);
  Sink sink(f.output);
  parity::write_trial_csv(sink.stream(), result.records);
  parity::write_summary(std::cerr, result.summary);
  return 0;
}

int run_verify(const std::string& suite) {
  const auto checks = parity::verify(parity::parse_suite(suite));
  bool ok = true;
  for (const auto& check : checks) {
    std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << "  (" << check.detail
              << ")\n";
    ok = ok && check.passed;
  }
  return ok ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parity learning from noisy quantum and classical example oracles"};
  app.set_config("--config", "", "Key-value config file (flags override)");
  app.require_subcommand(1);

  ExperimentFlags flags;

  auto* sample = app.add_subcommand("sample", "Dump oracle outputs as CSV");
  add_oracle_flags(sample, flags);
  std::string kind = "quantum";
  std::uint64_t count = 10;
  sample->add_option("--kind", kind, "quantum | classical")->capture_default_str();
  sample->add_option("--count", count, "Number of draws")->capture_default_str();
  sample->add_option("-o,--output", flags.output, "CSV path (default stdout)");

  auto* learn = app.add_subcommand("learn", "Run one learner once");
  add_oracle_flags(learn, flags);
  add_learner_flags(learn, flags);

  auto* experiment = app.add_subcommand("experiment", "Seeded batch of trials to CSV");
  add_oracle_flags(experiment, flags);
  add_learner_flags(experiment, flags);
  experiment->add_option("--trials", flags.trials, "Number of trials")->capture_default_str();
  experiment->add_option("--threads", flags.threads, "Worker threads")->capture_default_str();
  experiment->add_flag("--timing", flags.timing, "Record wall_time_ms (output no longer reproducible)");
  experiment->add_option("-o,--output", flags.output, "CSV path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run oracle cross-check suites");
  std::string suite = "all";
  verify->add_option("--suite", suite, "distributions | bounds | solvers | all")
      ->capture_default_str();

  auto* separation = app.add_subcommand("separation", "Quantum vs classical query comparison CSV");
  std::vector<std::size_t> n_list{64, 128, 256, 512};
  double sep_eta = 0.1;
  double sep_delta = 0.01;
  std::uint64_t sep_trials = 3;
  std::uint64_t sep_seed = 0;
  unsigned sep_threads = 1;
  std::string sep_output;
  separation->add_option("--n-list", n_list, "Values of n")->delimiter(',')->capture_default_str();
  separation->add_option("--eta", sep_eta, "Noise rate")->capture_default_str();
  separation->add_option("--delta", sep_delta, "Target failure probability")->capture_default_str();
  separation->add_option("--trials", sep_trials, "Trials per (n, learner)")->capture_default_str();
  separation->add_option("--seed", sep_seed, "64-bit seed")->capture_default_str();
  separation->add_option("--threads", sep_threads, "Worker threads")->capture_default_str();
  separation->add_option("-o,--output", sep_output, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  try {
    if (*sample) {
      return run_sample(flags, kind, count);
    }
    if (*learn) {
      return run_learn(flags);
    }
    if (*experiment) {
      return run_experiment_cmd(flags);
    }
    if (*verify) {
      return run_verify(suite);
    }
    if (*separation) {
      const auto rows =
          parity::separation_report(n_list, sep_eta, sep_delta, sep_trials, sep_seed, sep_threads);
      Sink sink(sep_output);
      parity::write_separation_csv(sink.stream(), rows);
      return 0;
    }
  } catch (const parity::config_error& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  }
  return kExitConfigError;
}
