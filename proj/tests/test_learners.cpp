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

#include "parity/learners.hpp"
#include "parity/reference.hpp"

using parity::BitString;
using parity::ClassicalExample;
using parity::ParityConcept;

namespace {

BitString bits(const char* text) { return BitString::from_text(text); }

std::vector<ClassicalExample> draw_examples(const ParityConcept& f, const parity::NoiseModel& noise,
                                            std::size_t count, std::uint64_t seed) {
  parity::ClassicalExampleOracle oracle(f, noise, parity::RandomStream(seed));
  std::vector<ClassicalExample> out(count);
  for (auto& e : out) {
    oracle.draw(e);
  }
  return out;
}

}  // namespace

TEST_CASE("majority vote") {
  const std::vector<BitString> three{bits("101"), bits("101"), bits("010")};
  CHECK(parity::majority_vote(three) == bits("101"));
  // Ties go to 0.
  const std::vector<BitString> tie{bits("10"), bits("01")};
  CHECK(parity::majority_vote(tie) == bits("00"));
  CHECK_THROWS_AS(parity::majority_vote(std::vector<BitString>{}), std::invalid_argument);
  const std::vector<BitString> ragged{bits("10"), bits("1")};
  CHECK_THROWS_AS(parity::majority_vote(ragged), std::invalid_argument);
}

TEST_CASE("noiseless classical learner") {
  parity::RandomStream rng(1);
  for (std::size_t n : {1, 5, 33, 100}) {
    const ParityConcept f(BitString::uniform(n, rng));
    parity::ClassicalExampleOracle oracle(f, parity::Noiseless{}, rng.split(n));
    const auto report = parity::learn_noiseless_classical(oracle, 0.01);
    CHECK(report.succeeded_selfcheck);
    CHECK(report.a_hat == f.bits());
    CHECK(report.queries_used == n * report.retained);
    CHECK(report.retained <= parity::noiseless_round_cap(0.01));
  }
  // ceil(ln 100 / ln(4/3)) + 1
  CHECK(parity::noiseless_round_cap(0.01) == 18);
  CHECK_THROWS_AS(parity::noiseless_round_cap(0.0), std::invalid_argument);
}

TEST_CASE("nonzero-report learner fails with probability 2^-k") {
  const ParityConcept f(bits("0110"));
  const parity::NoiseModel noise = parity::Classification{parity::NoiseRate(0.3)};
  parity::RandomStream seeds(42);
  const int trials = 20000;
  const std::uint64_t k = 3;
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    parity::QuantumExampleOracle oracle(f, noise, seeds.split(t));
    const auto report = parity::learn_quantum_nonzero_report(oracle, k);
    if (report.succeeded_selfcheck) {
      REQUIRE(report.a_hat == f.bits());
    } else {
      REQUIRE(report.queries_used == k);
      ++failures;
    }
  }
  const double p = 0.125;
  CHECK(std::abs(double(failures) / trials - p) < 4 * std::sqrt(p * (1 - p) / trials));
}

TEST_CASE("nonzero-report learner never succeeds on a = 0") {
  parity::QuantumExampleOracle oracle(ParityConcept(BitString(6)), parity::Noiseless{},
                                      parity::RandomStream(3));
  const auto report = parity::learn_quantum_nonzero_report(oracle, 10);
  CHECK_FALSE(report.succeeded_selfcheck);
  CHECK(report.queries_used == 10);
}

TEST_CASE("majority learner without noise needs one retained sample") {
  const ParityConcept f(bits("1001110"));
  parity::QuantumExampleOracle oracle(f, parity::Noiseless{}, parity::RandomStream(9));
  const auto report = parity::learn_quantum_majority_with_count(oracle, 1);
  CHECK(report.a_hat == f.bits());
  CHECK(report.retained == 1);
  CHECK(report.succeeded_selfcheck);
  CHECK_THROWS_AS(parity::learn_quantum_majority_with_count(oracle, 0), std::invalid_argument);
}

TEST_CASE("majority learner under depolarizing noise") {
  parity::RandomStream rng(77);
  const double eta = 0.15;
  for (int t = 0; t < 5; ++t) {
    const ParityConcept f(BitString::uniform(12, rng));
    parity::QuantumExampleOracle oracle(f, parity::Depolarizing{parity::NoiseRate(eta)},
                                        rng.split(t));
    const auto plan = parity::plan_retained_count(12, eta, 0.05);
    const auto report = parity::learn_quantum_majority(oracle, eta, 0.05);
    CHECK(report.a_hat == f.bits());
    CHECK(report.retained == plan.k_prime);
    CHECK(report.queries_used <= plan.total_queries);
  }
}

TEST_CASE("majority learner stops at 3k' queries") {
  // A source that never reports b = 1.
  struct Silent final : parity::QuantumSource {
    std::uint64_t count = 0;
    std::size_t width() const override { return 4; }
    void draw(parity::QuantumOutcome& out) override {
      ++count;
      out = {BitString(4), false};
    }
    std::uint64_t queries() const override { return count; }
  } silent;
  const auto report = parity::learn_quantum_majority_with_count(silent, 10);
  CHECK(report.queries_used == 30);
  CHECK(report.retained == 0);
  CHECK_FALSE(report.succeeded_selfcheck);
}

TEST_CASE("brute-force LPN") {
  const std::vector<ClassicalExample> examples{
      {bits("01"), true}, {bits("10"), false}, {bits("11"), true}, {bits("01"), true}};
  CHECK(parity::learn_lpn_bruteforce(examples, 0.1) == bits("01"));
  CHECK(parity::disagreements(bits("01"), examples) == 0);
  CHECK(parity::disagreements(bits("10"), examples) == 3);
  CHECK_THROWS_AS(parity::learn_lpn_bruteforce(examples, 0.5), std::domain_error);
  CHECK_THROWS_AS(parity::learn_lpn_bruteforce({}, 0.1), std::invalid_argument);
  // Above 1/2 the worst fit wins; 00 and 10 both miss 3, smaller index kept.
  CHECK(parity::learn_lpn_bruteforce(examples, 0.9) == bits("00"));
}

TEST_CASE("brute-force LPN returns the minimum-disagreement candidate") {
  parity::RandomStream rng(12);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 6;
    const ParityConcept f(BitString::uniform(n, rng));
    const auto examples =
        draw_examples(f, parity::Classification{parity::NoiseRate(0.3)}, 25, rng.next_word());
    const BitString best = parity::learn_lpn_bruteforce(examples, 0.3);
    const std::size_t best_score = parity::disagreements(best, examples);
    for (std::uint64_t c = 0; c < (1U << n); ++c) {
      const BitString candidate = BitString::from_index(n, c);
      const std::size_t s = parity::disagreements(candidate, examples);
      REQUIRE(s >= best_score);
      if (s == best_score) {
        REQUIRE(candidate.to_index() >= best.to_index());
      }
    }
  }
}

TEST_CASE("BKW recovers the target and agrees with brute force") {
  parity::RandomStream rng(2024);
  const double eta = 0.1;
  int agree = 0;
  const int trials = 10;
  for (int t = 0; t < trials; ++t) {
    const std::size_t n = 12;
    const ParityConcept f(BitString::uniform(n, rng));
    const parity::NoiseModel noise = parity::Classification{parity::NoiseRate(eta)};
    parity::ClassicalExampleOracle oracle(f, noise, rng.split(2 * t));
    const auto budget = parity::bkw_recommended_budget(n, 2, eta, 0.01);
    const auto bkw = parity::learn_lpn_bkw(oracle, eta, 2, budget);
    const auto examples = draw_examples(f, noise, 200, rng.split(2 * t + 1).next_word());
    const BitString map = parity::learn_lpn_bruteforce(examples, eta);
    if (bkw && *bkw == map && map == f.bits()) {
      ++agree;
    }
  }
  CHECK(agree >= 9);
}

TEST_CASE("BKW argument checks") {
  parity::ClassicalExampleOracle oracle(ParityConcept(bits("1010")), parity::Noiseless{},
                                        parity::RandomStream(0));
  CHECK_THROWS_AS(parity::learn_lpn_bkw(oracle, 0.5, 2, 100), std::invalid_argument);
  CHECK_THROWS_AS(parity::learn_lpn_bkw(oracle, 0.1, 0, 100), std::invalid_argument);
  CHECK_THROWS_AS(parity::learn_lpn_bkw(oracle, 0.1, 5, 100), std::invalid_argument);
  // Too few samples to leave a vote on every bit.
  CHECK_FALSE(parity::learn_lpn_bkw(oracle, 0.1, 2, 2).has_value());
}

TEST_CASE("agreement of distinct parities is exactly 1/2") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint64_t h = 0; h < (1U << n); ++h) {
      for (std::uint64_t f = 0; f < (1U << n); ++f) {
        const BitString hb = BitString::from_index(n, h);
        const BitString fb = BitString::from_index(n, f);
        const double fast = parity::agreement(ParityConcept(hb), ParityConcept(fb));
        REQUIRE(fast == parity::reference::agreement_enumerate(hb, fb));
        REQUIRE(fast == (h == f ? 1.0 : 0.5));
      }
    }
  }
}

TEST_CASE("learners are deterministic in their stream") {
  const ParityConcept f(bits("110100101"));
  const parity::NoiseModel noise = parity::Depolarizing{parity::NoiseRate(0.2)};
  parity::QuantumExampleOracle first(f, noise, parity::RandomStream(5));
  parity::QuantumExampleOracle second(f, noise, parity::RandomStream(5));
  const auto a = parity::learn_quantum_majority_with_count(first, 500);
  const auto b = parity::learn_quantum_majority_with_count(second, 500);
  CHECK(a.a_hat == b.a_hat);
  CHECK(a.queries_used == b.queries_used);
}

TEST_CASE("about half of all queries are retained") {
  const ParityConcept f(bits("0111010010"));
  const parity::NoiseModel noise = parity::Depolarizing{parity::NoiseRate(0.25)};
  const std::uint64_t k_prime = 2000;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    parity::QuantumExampleOracle oracle(f, noise, parity::RandomStream(seed));
    const auto report = parity::learn_quantum_majority_with_count(oracle, k_prime);
    REQUIRE(report.retained == k_prime);
    // Queries until k' successes at rate 1/2: mean 2k', variance 2k'.
    const double sd = std::sqrt(2.0 * double(k_prime));
    CHECK(std::abs(double(report.queries_used) - 2.0 * double(k_prime)) < 4 * sd);
  }
}

TEST_CASE("majority success improves with the retained count") {
  const std::size_t n = 16;
  const parity::NoiseModel noise = parity::Depolarizing{parity::NoiseRate(0.3)};
  parity::RandomStream rng(606);
  std::vector<int> successes;
  for (const std::uint64_t k_prime : {3, 15, 61}) {
    int ok = 0;
    for (int t = 0; t < 400; ++t) {
      const ParityConcept f(BitString::uniform(n, rng));
      parity::QuantumExampleOracle oracle(f, noise, rng.split(t));
      ok += parity::learn_quantum_majority_with_count(oracle, k_prime).a_hat == f.bits() ? 1 : 0;
    }
    successes.push_back(ok);
  }
  CHECK(successes[0] < successes[1]);
  CHECK(successes[1] < successes[2]);
}

TEST_CASE("BKW answers never fit better than the brute-force optimum") {
  parity::RandomStream rng(4040);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 10;
    const double eta = 0.2;
    const ParityConcept f(BitString::uniform(n, rng));
    const parity::NoiseModel noise = parity::Classification{parity::NoiseRate(eta)};
    parity::ClassicalExampleOracle oracle(f, noise, rng.split(t));
    const auto bkw = parity::learn_lpn_bkw(oracle, eta, 2, 4000);
    const auto examples = draw_examples(f, noise, 60, rng.next_word());
    const BitString map = parity::learn_lpn_bruteforce(examples, eta);
    if (bkw) {
      CHECK(parity::disagreements(*bkw, examples) >= parity::disagreements(map, examples));
    }
  }
}
