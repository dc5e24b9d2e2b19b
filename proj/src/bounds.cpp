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

#include "parity/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace parity {

namespace {

void require(bool ok, const char* what) {
  if (!ok) {
    throw std::invalid_argument(what);
  }
}

void check_zeta_args(std::size_t n, std::size_t weight_a, double eta) {
  require(n >= 1, "zeta: n must be positive");
  require(weight_a <= n, "zeta: weight exceeds n");
  require(eta >= 0.0 && eta < 0.5, "zeta: eta must lie in [0, 1/2)");
}

}  // namespace

NoiseRate::NoiseRate(double eta) : eta_(eta) {
  if (!(eta >= 0.0 && eta < 0.5)) {
    throw std::invalid_argument("noise rate must lie in [0, 1/2), got " + std::to_string(eta));
  }
}

double chernoff_bound(std::uint64_t k, double eta, double delta) {
  require(eta > 0.0 && eta <= 1.0, "chernoff_bound: eta must lie in (0, 1]");
  require(delta > 0.0 && delta < 1.0, "chernoff_bound: delta must lie in (0, 1)");
  return 2.0 * std::exp(-delta * delta * eta * static_cast<double>(k) / 3.0);
}

double zeta(std::size_t n, std::size_t weight_a, double eta) {
  check_zeta_args(n, weight_a, eta);
  return 0.5 * (1.0 - std::pow(1.0 - 2.0 * eta, static_cast<double>(weight_a)));
}

double effective_error_rate(std::size_t n, std::size_t weight_a, double eta) {
  const double z = zeta(n, weight_a, eta);
  return eta * (1.0 - z) + z * (1.0 - eta);
}

double select_delta_prime(double eta) {
  require(eta > 0.0 && eta < 0.5, "select_delta_prime: eta must lie in (0, 1/2)");
  const double ratio_cap = eta / (1.0 - eta);
  const double vote_cap = 1.0 - 1.0 / (2.0 * ((1.0 - 2.0 * eta) * (1.0 - eta) + eta));
  return 0.5 * std::min(ratio_cap, vote_cap);
}

double eta_tilde(double eta, double delta_prime) {
  require(eta > 0.0 && eta < 0.5, "eta_tilde: eta must lie in (0, 1/2)");
  require(delta_prime >= 0.0 && delta_prime < eta / (1.0 - eta),
          "eta_tilde: delta_prime must lie in [0, eta/(1-eta))");
  return eta * (1.0 - (1.0 + delta_prime) * (1.0 - eta));
}

PlannerResult plan_retained_count(std::size_t n, double eta, double delta) {
  require(n >= 1, "plan_retained_count: n must be positive");
  require(delta > 0.0 && delta < 1.0, "plan_retained_count: delta must lie in (0, 1)");
  PlannerResult plan;
  plan.delta_prime = select_delta_prime(eta);
  plan.eta_tilde = eta_tilde(eta, plan.delta_prime);
  const double threshold = 3.0 / (plan.delta_prime * plan.delta_prime * plan.eta_tilde) *
                           std::log(4.0 * static_cast<double>(n) / delta);
  plan.k_prime = static_cast<std::uint64_t>(std::floor(threshold)) + 1;
  plan.total_queries = 3 * plan.k_prime;
  return plan;
}

}  // namespace parity
