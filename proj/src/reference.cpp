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

#include "parity/reference.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace parity::reference {

namespace {

double log_binomial(std::size_t n, std::size_t k) {
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

}  // namespace

double zeta_double_sum(std::size_t n, std::size_t weight_a, double eta) {
  if (weight_a > n) {
    throw std::invalid_argument("weight exceeds n");
  }
  const std::size_t rest = n - weight_a;
  double total = 0.0;
  for (std::size_t w = 1; w <= n; ++w) {
    const double flips = std::pow(eta, static_cast<double>(w)) *
                         std::pow(1.0 - eta, static_cast<double>(n - w));
    for (std::size_t k = 1; k <= w; k += 2) {
      if (k > weight_a || w - k > rest) {
        continue;
      }
      total += std::exp(log_binomial(weight_a, k) + log_binomial(rest, w - k)) * flips;
    }
  }
  return total;
}

double zeta_enumerate(std::size_t n, std::size_t weight_a, double eta) {
  if (n > kMaxTableBits) {
    throw capacity_error("zeta_enumerate is limited to n <= 20");
  }
  const std::uint64_t relevant = weight_a == 0 ? 0 : (std::uint64_t{1} << weight_a) - 1;
  double total = 0.0;
  for (std::uint64_t e = 0; e < (std::uint64_t{1} << n); ++e) {
    if ((std::popcount(e & relevant) & 1) == 0) {
      continue;
    }
    const int w = std::popcount(e);
    total += std::pow(eta, w) * std::pow(1.0 - eta, static_cast<int>(n) - w);
  }
  return total;
}

StringDistribution retained_mixture(const BitString& a, double eta) {
  const StringDistribution around_a = bit_flip_distribution(a, eta);
  const StringDistribution around_zero = bit_flip_distribution(BitString(a.size()), eta);
  return {a.size(), (1.0 - eta) * around_a.probabilities + eta * around_zero.probabilities};
}

double agreement_enumerate(const BitString& h, const BitString& f) {
  const std::size_t n = h.size();
  if (n > kMaxTableBits || f.size() != n) {
    throw std::invalid_argument("agreement_enumerate needs equal lengths <= 20");
  }
  std::uint64_t agree = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    const BitString input = BitString::from_index(n, x);
    agree += dot(h, input) == dot(f, input) ? 1 : 0;
  }
  return static_cast<double>(agree) / std::ldexp(1.0, static_cast<int>(n));
}

}  // namespace parity::reference
