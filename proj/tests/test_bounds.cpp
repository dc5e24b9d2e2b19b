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

#include "parity/bounds.hpp"
#include "parity/reference.hpp"

using doctest::Approx;

TEST_CASE("chernoff bound") {
  CHECK(parity::chernoff_bound(0, 0.3, 0.5) == 2.0);
  CHECK(parity::chernoff_bound(3, 1.0, 1.0 - 1e-16) == Approx(0.7357588823428846).epsilon(1e-12));
  CHECK(parity::chernoff_bound(300, 0.1, 0.5) == Approx(0.1641699972477976).epsilon(1e-12));
  CHECK_THROWS_AS(parity::chernoff_bound(3, 0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(parity::chernoff_bound(3, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(parity::chernoff_bound(3, 1.5, 0.5), std::invalid_argument);
}

TEST_CASE("zeta examples") {
  CHECK(parity::zeta(7, 0, 0.3) == 0.0);
  CHECK(parity::zeta(1, 1, 0.1) == Approx(0.1).epsilon(1e-15));
  CHECK(parity::zeta(10, 3, 0.1) == Approx(0.244).epsilon(1e-14));
  CHECK_THROWS_AS(parity::zeta(3, 4, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(parity::zeta(3, 1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(parity::zeta(0, 0, 0.1), std::invalid_argument);
}

TEST_CASE("zeta closed form matches the double sum and enumeration") {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::size_t w = 0; w <= n; ++w) {
      for (const double eta : {0.05, 0.1, 0.25, 0.4}) {
        const double closed = parity::zeta(n, w, eta);
        CHECK(std::abs(closed - parity::reference::zeta_double_sum(n, w, eta)) <= 1e-12);
        CHECK(std::abs(closed - parity::reference::zeta_enumerate(n, w, eta)) <= 1e-12);
        CHECK(std::abs(closed - 0.5 * (1.0 - std::pow(1.0 - 2.0 * eta, double(w)))) <= 1e-15);
      }
    }
  }
}

TEST_CASE("zeta double sum stays finite past n = 60") {
  for (const std::size_t w : {1, 17, 50, 99}) {
    const double sum = parity::reference::zeta_double_sum(100, w, 0.1);
    CHECK(std::isfinite(sum));
    CHECK(std::abs(sum - parity::zeta(100, w, 0.1)) <= 1e-10);
  }
}

TEST_CASE("effective error rate") {
  CHECK(parity::effective_error_rate(9, 0, 0.2) == Approx(0.2).epsilon(1e-15));
  CHECK(parity::effective_error_rate(1, 1, 0.1) == Approx(0.18).epsilon(1e-14));
  CHECK(parity::effective_error_rate(10, 3, 0.1) == Approx(0.2952).epsilon(1e-14));
  for (std::size_t n = 1; n <= 40; ++n) {
    for (std::size_t w = 0; w <= n; ++w) {
      for (double eta = 0.0; eta < 0.5; eta += 0.0125) {
        const double ep = parity::effective_error_rate(n, w, eta);
        REQUIRE(ep >= eta - 1e-15);
        REQUIRE(ep <= 1.0 - eta + 1e-15);
      }
    }
  }
}

TEST_CASE("delta prime selection") {
  CHECK(parity::select_delta_prime(0.25) == Approx(0.1).epsilon(1e-14));
  CHECK(parity::select_delta_prime(0.45) == Approx(0.004950495049504950).epsilon(1e-12));
  CHECK(parity::select_delta_prime(1e-6) == Approx(0.5e-6 / (1.0 - 1e-6)).epsilon(1e-12));
  CHECK_THROWS_AS(parity::select_delta_prime(0.0), std::invalid_argument);
  CHECK_THROWS_AS(parity::select_delta_prime(0.5), std::invalid_argument);

  for (int i = 1; i < 499; ++i) {
    const double eta = i / 1000.0;
    const double dp = parity::select_delta_prime(eta);
    REQUIRE(dp > 0.0);
    REQUIRE(dp < eta / (1.0 - eta));
    REQUIRE(1.0 - dp > 1.0 / (2.0 * ((1.0 - 2.0 * eta) * (1.0 - eta) + eta)));
  }
}

TEST_CASE("eta tilde") {
  CHECK(parity::eta_tilde(0.25, 1.0 / 6.0) == Approx(0.03125).epsilon(1e-14));
  CHECK(parity::eta_tilde(0.3, 0.0) == Approx(0.09).epsilon(1e-15));
  CHECK(parity::eta_tilde(0.4, 0.1) == Approx(0.136).epsilon(1e-14));
  CHECK_THROWS_AS(parity::eta_tilde(0.25, 1.0 / 3.0), std::invalid_argument);

  for (int i = 1; i < 499; ++i) {
    const double eta = i / 1000.0;
    const double dp = parity::select_delta_prime(eta);
    const double et = parity::eta_tilde(eta, dp);
    CHECK(et > 0.0);
    CHECK(et <= (1.0 - dp) * (1.0 - eta) * (1.0 - eta));
  }
}

TEST_CASE("planner") {
  // Chain recomputed in 40-digit arithmetic: δ'=0.1, η̃=0.04375,
  // threshold 69602.38...
  const auto plan = parity::plan_retained_count(64, 0.25, 0.01);
  CHECK(plan.delta_prime == Approx(0.1).epsilon(1e-14));
  CHECK(plan.eta_tilde == Approx(0.04375).epsilon(1e-13));
  CHECK(plan.k_prime == 69603);
  CHECK(plan.total_queries == 3 * 69603);

  // threshold 97443.33...
  CHECK(parity::plan_retained_count(64, 0.2, 0.01).k_prime == 97444);

  CHECK(parity::plan_retained_count(64, 0.25, 0.001).k_prime > plan.k_prime);
  CHECK(parity::plan_retained_count(64, 0.25, 0.1).k_prime < plan.k_prime);
}

TEST_CASE("planner k' grows by ln(8n/δ)/ln(4n/δ) per doubling") {
  const double eta = 0.25;
  const double delta = 0.01;
  for (std::size_t n = 16; n <= 65536; n *= 2) {
    const auto small = parity::plan_retained_count(n, eta, delta).k_prime;
    const auto big = parity::plan_retained_count(2 * n, eta, delta).k_prime;
    const double expected =
        std::log(8.0 * double(n) / delta) / std::log(4.0 * double(n) / delta);
    // Each k' is within 1 of its real-valued threshold.
    CHECK(double(big) / double(small) == Approx(expected).epsilon(2.0 / double(small)));
  }
}

TEST_CASE("planner k' is Θ(log n)") {
  const double eta = 0.2;
  const double delta = 0.01;
  double lo = 1e300;
  double hi = 0.0;
  for (std::size_t n = 16; n <= 65536; n *= 2) {
    const double ratio = double(parity::plan_retained_count(n, eta, delta).k_prime) /
                         std::log(4.0 * double(n) / delta);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  CHECK(hi / lo < 1.001);
}

TEST_CASE("(δ')² η̃ is bounded below by a multiple of (1/2 - η)^4 near 1/2") {
  double smallest = 1e300;
  for (int i = 0; i <= 99; ++i) {
    const double eta = 0.4 + i / 1000.0;
    const double dp = parity::select_delta_prime(eta);
    const double product = dp * dp * parity::eta_tilde(eta, dp);
    smallest = std::min(smallest, product / std::pow(0.5 - eta, 4));
  }
  CHECK(smallest > 0.5);
}

TEST_CASE("noise rate range") {
  CHECK(parity::NoiseRate(0.0).value() == 0.0);
  CHECK(parity::NoiseRate(0.49).value() == 0.49);
  CHECK_THROWS_AS(parity::NoiseRate(0.5), std::invalid_argument);
  CHECK_THROWS_AS(parity::NoiseRate(-0.1), std::invalid_argument);
}
