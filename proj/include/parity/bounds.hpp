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

#include <cstddef>
#include <cstdint>

namespace parity {

/// Constant noise rate η with 0 <= η < 1/2.
class NoiseRate {
 public:
  NoiseRate() = default;
  /// Throws std::invalid_argument outside [0, 1/2).
  explicit NoiseRate(double eta);

  double value() const { return eta_; }

 private:
  double eta_ = 0.0;
};

/// Loose Chernoff bound B_k(η,δ) = 2 exp(-δ²ηk/3).
///
/// Bounds Pr[|X - ηk| >= δηk] for X a sum of k Bernoulli(η) variables. It is
/// a bound, not a probability, and exceeds 1 for small k.
double chernoff_bound(std::uint64_t k, double eta, double delta);

/// Probability that independent bit flips at rate η on the n input bits change
/// the value of a parity with weight |a|. Evaluated as (1 - (1-2η)^|a|)/2.
double zeta(std::size_t n, std::size_t weight_a, double eta);

/// Label-error rate η' = η(1-ζ) + ζ(1-η) of the dephased depolarizing oracle.
/// Lies in [η, 1-η].
double effective_error_rate(std::size_t n, std::size_t weight_a, double eta);

/// δ' = min(η/(1-η), 1 - 1/(2((1-2η)(1-η)+η))) / 2.
///
/// Half of the tighter of the two caps, so both strict constraints hold.
/// Requires 0 < η < 1/2.
double select_delta_prime(double eta);

/// η̃ = η(1 - (1+δ')(1-η)); requires 0 <= δ' < η/(1-η).
double eta_tilde(double eta, double delta_prime);

struct PlannerResult {
  double delta_prime = 0.0;
  double eta_tilde = 0.0;
  std::uint64_t k_prime = 0;
  std::uint64_t total_queries = 0;
};

/// Smallest k' with k' > 3 ln(4n/δ) / ((δ')² η̃), so that the union bound over
/// per-bit majority failures stays below δ. Total queries are capped at 3k'.
PlannerResult plan_retained_count(std::size_t n, double eta, double delta);

}  // namespace parity
