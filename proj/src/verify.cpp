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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "parity/bounds.hpp"
#include "parity/harness.hpp"
#include "parity/learners.hpp"
#include "parity/reference.hpp"
#include "parity/statevector.hpp"

namespace parity {

namespace {

constexpr std::uint64_t kVerifySeed = 0x5eed'2014'0718ULL;

std::string describe(const char* label, double value) {
  std::ostringstream out;
  out << label << " = " << value;
  return out.str();
}

CheckResult hadamard_layer_identity() {
  RandomStream rng(kVerifySeed);
  double worst = 0.0;
  bool shape_ok = true;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int t = 0; t < 20; ++t) {
      const ParityConcept target(BitString::uniform(n, rng));
      PureStated s = prepare_example_state(target);
      apply_hadamard_all(s);
      const auto a = static_cast<Eigen::Index>(target.bits().to_index());
      const Eigen::Index hit0 = 0;
      const Eigen::Index hit1 = (a << 1) | 1;
      for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i) {
        const double mag = std::abs(s.amplitudes(i));
        if (i == hit0 || i == hit1) {
          worst = std::max(worst, std::abs(mag - M_SQRT1_2));
        } else if (mag > 1e-10) {
          shape_ok = false;
        }
      }
    }
  }
  return {"hadamard_layer_identity", shape_ok && worst <= 1e-10, describe("max |amp - 1/sqrt2|", worst)};
}

CheckResult exact_vs_statevector() {
  RandomStream rng(kVerifySeed + 1);
  double worst = 0.0;
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::uint64_t concepts = n <= 3 ? (std::uint64_t{1} << n) : 4;
    for (std::uint64_t c = 0; c < concepts; ++c) {
      const BitString a = n <= 3 ? BitString::from_index(n, c) : BitString::uniform(n, rng);
      const ParityConcept target(a);
      for (const double eta : {0.05, 0.15, 0.3}) {
        const auto closed = exact_outcome_distribution(target, Depolarizing{NoiseRate(eta)});
        const auto dense = depolarized_distribution_exact(target, eta);
        worst = std::max(worst, (closed.probabilities - dense.probabilities).cwiseAbs().maxCoeff());
      }
    }
  }
  return {"exact_vs_statevector", worst <= 1e-12, describe("max entry difference", worst)};
}

CheckResult sampler_vs_exact() {
  const ParityConcept target(BitString::from_text("101"));
  double worst = 0.0;
  std::uint64_t stream = 0;
  for (const NoiseModel noise : {NoiseModel{Noiseless{}}, NoiseModel{Classification{NoiseRate(0.15)}},
                                 NoiseModel{Depolarizing{NoiseRate(0.15)}}}) {
    RandomStream rng = RandomStream(kVerifySeed + 2).split(stream++);
    std::vector<QuantumOutcome> samples(100000);
    for (auto& o : samples) {
      o = quantum_outcome(target, noise, rng);
    }
    worst = std::max(worst, tv_distance(empirical_distribution(3, samples),
                                        exact_outcome_distribution(target, noise)));
  }
  return {"sampler_vs_exact", worst <= 0.02, describe("max TV at 1e5 samples", worst)};
}

CheckResult trajectories_vs_exact() {
  const ParityConcept target(BitString::from_text("101"));
  RandomStream rng(kVerifySeed + 3);
  std::vector<QuantumOutcome> samples(100000);
  for (auto& o : samples) {
    o = depolarized_trajectory(target, 0.15, rng);
  }
  const double tv = tv_distance(empirical_distribution(3, samples),
                                depolarized_distribution_exact(target, 0.15));
  return {"trajectories_vs_exact", tv <= 0.02, describe("TV at 1e5 trajectories", tv)};
}

CheckResult retained_mixture() {
  RandomStream rng(kVerifySeed + 4);
  double worst = 0.0;
  for (std::size_t n = 1; n <= 10; ++n) {
    for (int t = 0; t < 3; ++t) {
      const BitString a = BitString::uniform(n, rng);
      for (const double eta : {0.05, 0.2, 0.45}) {
        const auto slice = conditional_retained_distribution(ParityConcept(a), NoiseRate(eta));
        const auto mixture = reference::retained_mixture(a, eta);
        worst = std::max(worst, (slice.probabilities - mixture.probabilities).cwiseAbs().maxCoeff());
      }
    }
  }
  return {"retained_mixture", worst <= 1e-12, describe("max entry difference", worst)};
}

CheckResult bernstein_vazirani_point_mass() {
  double worst = 0.0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
      const auto dist =
          measurement_distribution(bernstein_vazirani_state(ParityConcept(BitString::from_index(n, a))));
      worst = std::max(worst, std::abs(1.0 - dist(a, true)));
    }
  }
  return {"bernstein_vazirani", worst <= 1e-12, describe("max |1 - P(a,1)|", worst)};
}

CheckResult zeta_identities() {
  double worst = 0.0;
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::size_t w = 0; w <= n; ++w) {
      for (const double eta : {0.05, 0.1, 0.25, 0.4}) {
        const double closed = zeta(n, w, eta);
        worst = std::max(worst, std::abs(closed - reference::zeta_double_sum(n, w, eta)));
        worst = std::max(worst, std::abs(closed - reference::zeta_enumerate(n, w, eta)));
      }
    }
  }
  return {"zeta_identities", worst <= 1e-12, describe("max difference", worst)};
}

CheckResult eta_prime_range() {
  bool ok = true;
  for (std::size_t n = 1; n <= 64; ++n) {
    for (std::size_t w = 0; w <= n; ++w) {
      for (double eta = 0.0; eta < 0.5; eta += 0.01) {
        const double ep = effective_error_rate(n, w, eta);
        ok = ok && ep >= eta - 1e-15 && ep <= 1.0 - eta + 1e-15;
      }
    }
  }
  return {"eta_prime_range", ok, "eta' within [eta, 1-eta] on grid"};
}

CheckResult delta_prime_constraints() {
  bool ok = true;
  for (int i = 1; i < 499; ++i) {
    const double eta = i / 1000.0;
    const double dp = select_delta_prime(eta);
    ok = ok && dp > 0.0 && dp < eta / (1.0 - eta) &&
         1.0 - dp > 0.5 / ((1.0 - 2.0 * eta) * (1.0 - eta) + eta) && eta_tilde(eta, dp) > 0.0;
  }
  return {"delta_prime_constraints", ok, "both caps strict on eta in (0.001, 0.499)"};
}

CheckResult dephased_label_error() {
  const std::size_t n = 10;
  BitString a(n);
  for (std::size_t j = 1; j <= 3; ++j) {
    a.set(j, true);
  }
  const ParityConcept target(a);
  RandomStream rng(kVerifySeed + 5);
  const NoiseModel noise = Depolarizing{NoiseRate(0.1)};
  const std::size_t draws = 100000;
  std::size_t errors = 0;
  for (std::size_t i = 0; i < draws; ++i) {
    const ClassicalExample e = classical_example(target, noise, rng);
    errors += target(e.x) != e.y ? 1 : 0;
  }
  const double expected = effective_error_rate(n, 3, 0.1);
  const double sigma = std::sqrt(expected * (1.0 - expected) / static_cast<double>(draws));
  const double observed = static_cast<double>(errors) / static_cast<double>(draws);
  return {"dephased_label_error", std::abs(observed - expected) <= 3.0 * sigma,
          describe("observed label-error rate", observed)};
}

CheckResult gaussian_elimination() {
  RandomStream rng(kVerifySeed + 6);
  bool ok = true;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.below(64));
    const BitString a = BitString::uniform(n, rng);
    Gf2System sys(n);
    for (std::size_t i = 0; i < n + 8; ++i) {
      BitString x = BitString::uniform(n, rng);
      const bool y = dot(a, x);
      sys.add(std::move(x), y);
    }
    const SolveResult r = solve(sys);
    if (rank(sys) == n) {
      const auto* got = std::get_if<BitString>(&r);
      ok = ok && got != nullptr && *got == a;
    } else {
      ok = ok && std::holds_alternative<Underdetermined>(r);
    }
  }
  return {"gaussian_elimination", ok, "solve recovers a whenever rank = n"};
}

CheckResult independence_frequency() {
  RandomStream rng(kVerifySeed + 7);
  const std::size_t n = 8;
  const std::size_t trials = 100000;
  std::size_t full = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Gf2System sys(n);
    for (std::size_t i = 0; i < n; ++i) {
      sys.add(BitString::uniform(n, rng), false);
    }
    full += rank(sys) == n ? 1 : 0;
  }
  const double freq = static_cast<double>(full) / static_cast<double>(trials);
  const double p = independence_probability(n);
  return {"independence_frequency", std::abs(freq - p) <= 0.01 && freq > 0.25,
          describe("rank-n frequency at n=8", freq)};
}

CheckResult bruteforce_recovery() {
  const std::size_t n = 12;
  std::size_t hits = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    RandomStream rng = RandomStream(kVerifySeed + 8).split(t);
    const ParityConcept target(BitString::uniform(n, rng));
    const NoiseModel noise = Classification{NoiseRate(0.125)};
    std::vector<ClassicalExample> examples(200);
    for (auto& e : examples) {
      e = classical_example(target, noise, rng);
    }
    hits += learn_lpn_bruteforce(examples, 0.125) == target.bits() ? 1 : 0;
  }
  return {"bruteforce_recovery", hits >= 95, describe("recovered of 100", static_cast<double>(hits))};
}

CheckResult bkw_agrees_with_map() {
  const std::size_t n = 16;
  const double eta = 0.1;
  const std::uint64_t budget = bkw_recommended_budget(n, 2, eta, 0.01);
  std::size_t agree = 0;
  for (std::uint64_t t = 0; t < 50; ++t) {
    const RandomStream base = RandomStream(kVerifySeed + 9).split(t);
    RandomStream target_rng = base.split(0);
    const ParityConcept target(BitString::uniform(n, target_rng));
    const NoiseModel noise = Classification{NoiseRate(eta)};
    ClassicalExampleOracle map_oracle(target, noise, base.split(1));
    std::vector<ClassicalExample> examples(200);
    for (auto& e : examples) {
      map_oracle.draw(e);
    }
    const BitString map = learn_lpn_bruteforce(examples, eta);
    ClassicalExampleOracle bkw_oracle(target, noise, base.split(2));
    const auto bkw = learn_lpn_bkw(bkw_oracle, eta, 2, budget);
    agree += bkw && *bkw == map ? 1 : 0;
  }
  return {"bkw_agrees_with_map", agree >= 45, describe("agreements of 50", static_cast<double>(agree))};
}

CheckResult majority_learner() {
  const std::size_t n = 16;
  std::size_t failures = 0;
  for (std::uint64_t t = 0; t < 20; ++t) {
    const RandomStream base = RandomStream(kVerifySeed + 10).split(t);
    RandomStream target_rng = base.split(0);
    const ParityConcept target(BitString::uniform(n, target_rng));
    QuantumExampleOracle oracle(target, Depolarizing{NoiseRate(0.2)}, base.split(1));
    failures += learn_quantum_majority(oracle, 0.2, 0.05).a_hat == target.bits() ? 0 : 1;
  }
  return {"majority_learner", failures == 0, describe("failures of 20", static_cast<double>(failures))};
}

}  // namespace

std::vector<CheckResult> verify(VerifySuite suite) {
  std::vector<CheckResult> out;
  const bool all = suite == VerifySuite::all;
  if (all || suite == VerifySuite::distributions) {
    out.push_back(hadamard_layer_identity());
    out.push_back(exact_vs_statevector());
    out.push_back(sampler_vs_exact());
    out.push_back(trajectories_vs_exact());
    out.push_back(retained_mixture());
    out.push_back(bernstein_vazirani_point_mass());
  }
  if (all || suite == VerifySuite::bounds) {
    out.push_back(zeta_identities());
    out.push_back(eta_prime_range());
    out.push_back(delta_prime_constraints());
    out.push_back(dephased_label_error());
  }
  if (all || suite == VerifySuite::solvers) {
    out.push_back(gaussian_elimination());
    out.push_back(independence_frequency());
    out.push_back(bruteforce_recovery());
    out.push_back(bkw_agrees_with_map());
    out.push_back(majority_learner());
  }
  return out;
}

}  // namespace parity
