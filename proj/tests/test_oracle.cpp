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

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "parity/harness.hpp"
#include "parity/oracle.hpp"
#include "parity/reference.hpp"

using parity::BitString;
using parity::Classification;
using parity::Depolarizing;
using parity::NoiseRate;
using parity::Noiseless;
using parity::ParityConcept;

namespace {

ParityConcept target_of(const char* text) { return ParityConcept(BitString::from_text(text)); }

parity::OutcomeDistribution sampled(const ParityConcept& f, const parity::NoiseModel& noise,
                                    std::size_t draws, std::uint64_t seed) {
  parity::QuantumExampleOracle oracle(f, noise, parity::RandomStream(seed));
  std::vector<parity::QuantumOutcome> outcomes(draws);
  for (auto& o : outcomes) {
    oracle.draw(o);
  }
  CHECK(oracle.queries() == draws);
  return parity::empirical_distribution(f.size(), outcomes);
}

}  // namespace

TEST_CASE("targets must be non-empty") {
  CHECK_THROWS_AS(ParityConcept(BitString(0)), std::invalid_argument);
  CHECK(target_of("101")(BitString::from_text("100")));
}

TEST_CASE("noise names and rates") {
  CHECK(parity::noise_name(Noiseless{}) == "noiseless");
  CHECK(parity::noise_name(Classification{NoiseRate(0.1)}) == "classification");
  CHECK(parity::noise_name(Depolarizing{NoiseRate(0.2)}) == "depolarizing");
  CHECK(parity::noise_eta(Depolarizing{NoiseRate(0.2)}) == 0.2);
  CHECK(parity::noise_eta(Noiseless{}) == 0.0);
}

TEST_CASE("noiseless quantum outcomes are (0,0) or (a,1)") {
  const ParityConcept f = target_of("0110101");
  parity::RandomStream rng(3);
  int ones = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto o = parity::quantum_outcome(f, Noiseless{}, rng);
    if (o.b) {
      REQUIRE(o.m == f.bits());
      ++ones;
    } else {
      REQUIRE(o.m.none());
    }
  }
  // Binomial(2000, 1/2), sd ~ 22.4.
  CHECK(std::abs(ones - 1000) < 4 * 23);
}

TEST_CASE("noiseless classical labels match the parity") {
  const ParityConcept f = target_of("110010111");
  parity::ClassicalExampleOracle oracle(f, Noiseless{}, parity::RandomStream(5));
  for (int i = 0; i < 500; ++i) {
    const auto e = oracle.draw();
    REQUIRE(e.y == f(e.x));
  }
}

TEST_CASE("classification noise flips labels at rate eta") {
  const ParityConcept f = target_of("1011");
  const double eta = 0.15;
  parity::ClassicalExampleOracle oracle(f, Classification{NoiseRate(eta)},
                                        parity::RandomStream(11));
  const int draws = 40000;
  int wrong = 0;
  for (int i = 0; i < draws; ++i) {
    const auto e = oracle.draw();
    wrong += e.y != f(e.x) ? 1 : 0;
  }
  const double sd = std::sqrt(eta * (1 - eta) / draws);
  CHECK(std::abs(double(wrong) / draws - eta) < 4 * sd);
}

TEST_CASE("classification noise leaves m in {0, a}, so m = a half the time") {
  const ParityConcept f = target_of("11001");
  parity::RandomStream rng(21);
  const int draws = 40000;
  int at_a = 0;
  for (int i = 0; i < draws; ++i) {
    const auto o = parity::quantum_outcome(f, Classification{NoiseRate(0.3)}, rng);
    REQUIRE((o.m.none() || o.m == f.bits()));
    at_a += o.m == f.bits() ? 1 : 0;
  }
  CHECK(std::abs(double(at_a) / draws - 0.5) < 4 * std::sqrt(0.25 / draws));
}

TEST_CASE("exact outcome distributions sum to one") {
  for (const char* a : {"0", "1", "101", "0000", "111011"}) {
    const ParityConcept f = target_of(a);
    for (const parity::NoiseModel noise :
         {parity::NoiseModel{Noiseless{}}, parity::NoiseModel{Classification{NoiseRate(0.2)}},
          parity::NoiseModel{Depolarizing{NoiseRate(0.35)}}}) {
      const auto d = parity::exact_outcome_distribution(f, noise);
      CHECK(d.probabilities.size() == (2 << f.size()));
      CHECK(d.probabilities.sum() == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(d.probabilities.minCoeff() >= 0.0);
    }
  }
}

TEST_CASE("sampler matches the exact distribution in TV") {
  const ParityConcept f = target_of("1101");
  for (const parity::NoiseModel noise :
       {parity::NoiseModel{Noiseless{}}, parity::NoiseModel{Classification{NoiseRate(0.2)}},
        parity::NoiseModel{Depolarizing{NoiseRate(0.2)}}}) {
    const auto exact = parity::exact_outcome_distribution(f, noise);
    const auto empirical = sampled(f, noise, 100000, 77);
    CHECK(parity::tv_distance(exact, empirical) <= 0.02);
  }
}

TEST_CASE("result bit is uniform under every noise model") {
  const ParityConcept f = target_of("10110");
  for (const parity::NoiseModel noise :
       {parity::NoiseModel{Noiseless{}}, parity::NoiseModel{Classification{NoiseRate(0.4)}},
        parity::NoiseModel{Depolarizing{NoiseRate(0.1)}}}) {
    CHECK(parity::marginal_result_bit(f, noise) == doctest::Approx(0.5).epsilon(1e-15));
    const auto d = parity::exact_outcome_distribution(f, noise);
    double ones = 0.0;
    for (std::uint64_t m = 0; m < (1U << f.size()); ++m) {
      ones += d(m, true);
    }
    CHECK(ones == doctest::Approx(0.5).epsilon(1e-14));
  }
}

TEST_CASE("retained distribution is the (1-eta, eta) mixture of flip laws") {
  for (const char* a : {"1", "01", "110", "10110", "0000000", "1111111111"}) {
    const ParityConcept f = target_of(a);
    for (const double eta : {0.05, 0.2, 0.45}) {
      const auto conditional = parity::conditional_retained_distribution(f, NoiseRate(eta));
      const auto mixture = parity::reference::retained_mixture(f.bits(), eta);
      CHECK(parity::tv_distance(conditional.probabilities, mixture.probabilities) <= 1e-12);
    }
  }
}

TEST_CASE("bit flip distribution") {
  const auto d = parity::bit_flip_distribution(BitString::from_text("10"), 0.25);
  // Index 0b10 is the centre.
  CHECK(d.probabilities(2) == doctest::Approx(0.5625));
  CHECK(d.probabilities(0) == doctest::Approx(0.1875));
  CHECK(d.probabilities(3) == doctest::Approx(0.1875));
  CHECK(d.probabilities(1) == doctest::Approx(0.0625));
}

TEST_CASE("depolarizing classical oracle flips x and the label independently") {
  const ParityConcept f = target_of("1111");
  const double eta = 0.1;
  parity::ClassicalExampleOracle oracle(f, Depolarizing{NoiseRate(eta)}, parity::RandomStream(8));
  const int draws = 60000;
  int wrong = 0;
  for (int i = 0; i < draws; ++i) {
    const auto e = oracle.draw();
    wrong += e.y != f(e.x) ? 1 : 0;
  }
  // x is uniform, so a flipped x is still uniform and the label stays
  // correlated only through the label flip: the observed error rate is the
  // effective rate for |a| = 4.
  const double expected = parity::effective_error_rate(4, 4, eta);
  CHECK(std::abs(double(wrong) / draws - expected) < 4 * std::sqrt(0.25 / draws));
}

TEST_CASE("oracles are deterministic in their stream") {
  const ParityConcept f = target_of("100110");
  const parity::NoiseModel noise = Depolarizing{NoiseRate(0.3)};
  parity::QuantumExampleOracle first(f, noise, parity::RandomStream(1234));
  parity::QuantumExampleOracle second(f, noise, parity::RandomStream(1234));
  parity::QuantumOutcome p;
  parity::QuantumOutcome q;
  for (int i = 0; i < 200; ++i) {
    first.draw(p);
    second.draw(q);
    REQUIRE(p.m == q.m);
    REQUIRE(p.b == q.b);
  }
}

TEST_CASE("recorded examples replay then run out") {
  const BitString x = BitString::from_text("011");
  parity::RecordedExamples src(3, {{x, true}, {x, false}});
  CHECK(src.draw().y);
  CHECK_FALSE(src.draw().y);
  CHECK(src.queries() == 2);
  CHECK_THROWS_AS(src.draw(), std::out_of_range);
  CHECK_THROWS_AS(parity::RecordedExamples(2, {{x, true}}), std::invalid_argument);
}

TEST_CASE("exact tables refuse n > 20") {
  const ParityConcept f(BitString(21));
  CHECK_THROWS_AS(parity::exact_outcome_distribution(f, Noiseless{}), parity::capacity_error);
  CHECK_THROWS_AS(parity::bit_flip_distribution(BitString(21), 0.1), parity::capacity_error);
}
