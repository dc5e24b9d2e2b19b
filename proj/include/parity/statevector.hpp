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

// Dense pure-state simulator over n+1 qubits, used as an independent check on
// the structured samplers in oracle.hpp.
//
// Basis index layout: |x, b⟩ has index (index(x) << 1) | b, so qubit 0 is the
// result qubit and qubit k >= 1 holds x_{n+1-k}. This matches the (m, b)
// layout of OutcomeDistribution.

#include <Eigen/Core>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "parity/oracle.hpp"
#include "parity/random.hpp"

namespace parity {

template <typename Scalar>
using AmplitudeVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar = double>
struct PureState {
  std::size_t n_qubits = 0;
  AmplitudeVector<Scalar> amplitudes;

  Scalar norm_squared() const { return amplitudes.squaredNorm(); }
};

using PureStated = PureState<double>;

inline void check_state_capacity(std::size_t n_qubits) {
  if (n_qubits > kMaxTableBits + 1) {
    throw capacity_error("dense states are limited to 21 qubits, got " + std::to_string(n_qubits));
  }
}

template <typename Scalar = double>
PureState<Scalar> basis_state(std::size_t n_qubits, std::uint64_t index) {
  check_state_capacity(n_qubits);
  PureState<Scalar> s{n_qubits, AmplitudeVector<Scalar>::Zero(Eigen::Index{1} << n_qubits)};
  s.amplitudes(static_cast<Eigen::Index>(index)) = Scalar(1);
  return s;
}

/// H on one qubit, in place over index pairs differing in that bit.
template <typename Scalar>
void apply_hadamard(PureState<Scalar>& s, std::size_t qubit) {
  const Scalar h = Scalar(1) / std::sqrt(Scalar(2));
  const Eigen::Index stride = Eigen::Index{1} << qubit;
  const Eigen::Index dim = s.amplitudes.size();
  for (Eigen::Index i = 0; i < dim; ++i) {
    if ((i & stride) == 0) {
      const auto lo = s.amplitudes(i);
      const auto hi = s.amplitudes(i | stride);
      s.amplitudes(i) = h * (lo + hi);
      s.amplitudes(i | stride) = h * (lo - hi);
    }
  }
}

template <typename Scalar>
void apply_hadamard_all(PureState<Scalar>& s) {
  for (std::size_t q = 0; q < s.n_qubits; ++q) {
    apply_hadamard(s, q);
  }
}

enum class Pauli : std::uint8_t { I, X, Y, Z };

/// One Pauli label per qubit, indexed by qubit number.
using PauliPattern = std::vector<Pauli>;

template <typename Scalar>
void apply_pauli(PureState<Scalar>& s, std::size_t qubit, Pauli p) {
  if (p == Pauli::I) {
    return;
  }
  const std::complex<Scalar> i_unit(0, 1);
  const Eigen::Index stride = Eigen::Index{1} << qubit;
  const Eigen::Index dim = s.amplitudes.size();
  for (Eigen::Index i = 0; i < dim; ++i) {
    if ((i & stride) != 0) {
      continue;
    }
    auto& lo = s.amplitudes(i);
    auto& hi = s.amplitudes(i | stride);
    switch (p) {
      case Pauli::X:
        std::swap(lo, hi);
        break;
      case Pauli::Y: {
        // Y|0⟩ = i|1⟩, Y|1⟩ = -i|0⟩.
        const auto old_lo = lo;
        lo = -i_unit * hi;
        hi = i_unit * old_lo;
        break;
      }
      case Pauli::Z:
        hi = -hi;
        break;
      case Pauli::I:
        break;
    }
  }
}

template <typename Scalar>
void apply_pauli(PureState<Scalar>& s, const PauliPattern& pattern) {
  if (pattern.size() != s.n_qubits) {
    throw std::invalid_argument("Pauli pattern length does not match qubit count");
  }
  for (std::size_t q = 0; q < pattern.size(); ++q) {
    apply_pauli(s, q, pattern[q]);
  }
}

/// Q_f: |x,b⟩ -> |x, b ⊕ f(x)⟩. A permutation of basis amplitudes.
template <typename Scalar>
void apply_membership_oracle(PureState<Scalar>& s, const ParityConcept& target) {
  if (s.n_qubits != target.size() + 1) {
    throw std::invalid_argument("membership oracle needs n+1 qubits");
  }
  const std::uint64_t a = target.bits().to_index();
  const Eigen::Index dim = s.amplitudes.size();
  for (Eigen::Index i = 0; i < dim; i += 2) {
    const auto x = static_cast<std::uint64_t>(i) >> 1;
    if ((std::popcount(a & x) & 1) != 0) {
      std::swap(s.amplitudes(i), s.amplitudes(i + 1));
    }
  }
}

/// 2^{-n/2} Σ_x |x, f(x)⟩, built as H on the query register then Q_f.
template <typename Scalar = double>
PureState<Scalar> prepare_example_state(const ParityConcept& target) {
  auto s = basis_state<Scalar>(target.size() + 1, 0);
  for (std::size_t q = 1; q < s.n_qubits; ++q) {
    apply_hadamard(s, q);
  }
  apply_membership_oracle(s, target);
  return s;
}

template <typename Scalar>
OutcomeDistribution measurement_distribution(const PureState<Scalar>& s) {
  check_state_capacity(s.n_qubits);
  OutcomeDistribution out{s.n_qubits - 1, s.amplitudes.cwiseAbs2().template cast<double>()};
  return out;
}

/// Inverse-CDF measurement with a single uniform draw; returns the basis index.
template <typename Scalar>
std::uint64_t sample_measurement(const PureState<Scalar>& s, RandomStream& rng) {
  const double u = rng.uniform();
  double cumulative = 0.0;
  const Eigen::Index dim = s.amplitudes.size();
  for (Eigen::Index i = 0; i < dim; ++i) {
    cumulative += static_cast<double>(std::norm(s.amplitudes(i)));
    if (u < cumulative) {
      return static_cast<std::uint64_t>(i);
    }
  }
  // Rounding left u above the final cumulative sum; take the last nonzero entry.
  for (Eigen::Index i = dim - 1; i > 0; --i) {
    if (std::norm(s.amplitudes(i)) > 0) {
      return static_cast<std::uint64_t>(i);
    }
  }
  return 0;
}

inline QuantumOutcome outcome_from_index(std::size_t n, std::uint64_t index) {
  return {BitString::from_index(n, index >> 1), (index & 1U) != 0};
}

/// Independent per-qubit labels: I with probability 1-3η/2, X, Y, Z with η/2
/// each. This mixture is the depolarizing channel (1-2η)ρ + 2η I/2.
/// Requires 0 <= η <= 2/3.
PauliPattern sample_pauli_pattern(double eta, std::size_t n_qubits, RandomStream& rng);

/// Probability of a single label under the depolarizing mixture.
double pauli_probability(Pauli p, double eta);

/// Exact depolarized outcome law, averaging over all 4^{n+1} Pauli patterns
/// applied to the oracle output before the Hadamard layer. Requires n <= 6.
OutcomeDistribution depolarized_distribution_exact(const ParityConcept& target, double eta);

/// One trajectory: prepare, depolarize by a sampled pattern, Hadamard, measure.
QuantumOutcome depolarized_trajectory(const ParityConcept& target, double eta, RandomStream& rng);

/// State after the Bernstein-Vazirani circuit: |0^n⟩|1⟩ -> H^{⊗(n+1)} -> Q_f
/// -> H^{⊗(n+1)}. Noiseless, this is exactly |a, 1⟩.
PureStated bernstein_vazirani_state(const ParityConcept& target);

QuantumOutcome bernstein_vazirani(const ParityConcept& target, RandomStream& rng);

}  // namespace parity
