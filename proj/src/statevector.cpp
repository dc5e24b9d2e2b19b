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

#include "parity/statevector.hpp"

namespace parity {

double pauli_probability(Pauli p, double eta) {
  return p == Pauli::I ? 1.0 - 1.5 * eta : 0.5 * eta;
}

PauliPattern sample_pauli_pattern(double eta, std::size_t n_qubits, RandomStream& rng) {
  if (!(eta >= 0.0 && eta <= 2.0 / 3.0)) {
    throw std::invalid_argument("Pauli decomposition needs 0 <= eta <= 2/3");
  }
  const std::uint64_t t_x = RandomStream::bernoulli_threshold(0.5 * eta);
  const std::uint64_t t_y = RandomStream::bernoulli_threshold(eta);
  const std::uint64_t t_z = RandomStream::bernoulli_threshold(1.5 * eta);
  PauliPattern pattern(n_qubits, Pauli::I);
  for (auto& p : pattern) {
    const std::uint64_t w = rng.next_word();
    if (w < t_x) {
      p = Pauli::X;
    } else if (w < t_y) {
      p = Pauli::Y;
    } else if (w < t_z) {
      p = Pauli::Z;
    }
  }
  return pattern;
}

OutcomeDistribution depolarized_distribution_exact(const ParityConcept& target, double eta) {
  if (target.size() > 6) {
    throw capacity_error("exact Pauli enumeration is limited to n <= 6");
  }
  const std::size_t qubits = target.size() + 1;
  const PureStated prepared = prepare_example_state(target);
  OutcomeDistribution total{target.size(),
                            Eigen::VectorXd::Zero(prepared.amplitudes.size())};
  constexpr Pauli kLabels[] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
  const std::uint64_t patterns = std::uint64_t{1} << (2 * qubits);
  PauliPattern pattern(qubits);
  for (std::uint64_t code = 0; code < patterns; ++code) {
    double weight = 1.0;
    for (std::size_t q = 0; q < qubits; ++q) {
      pattern[q] = kLabels[(code >> (2 * q)) & 3U];
      weight *= pauli_probability(pattern[q], eta);
    }
    if (weight == 0.0) {
      continue;
    }
    PureStated s = prepared;
    apply_pauli(s, pattern);
    apply_hadamard_all(s);
    total.probabilities += weight * s.amplitudes.cwiseAbs2();
  }
  return total;
}

QuantumOutcome depolarized_trajectory(const ParityConcept& target, double eta,
                                      RandomStream& rng) {
  PureStated s = prepare_example_state(target);
  apply_pauli(s, sample_pauli_pattern(eta, s.n_qubits, rng));
  apply_hadamard_all(s);
  return outcome_from_index(target.size(), sample_measurement(s, rng));
}

PureStated bernstein_vazirani_state(const ParityConcept& target) {
  PureStated s = basis_state(target.size() + 1, 1);
  apply_hadamard_all(s);
  apply_membership_oracle(s, target);
  apply_hadamard_all(s);
  return s;
}

QuantumOutcome bernstein_vazirani(const ParityConcept& target, RandomStream& rng) {
  const PureStated s = bernstein_vazirani_state(target);
  return outcome_from_index(target.size(), sample_measurement(s, rng));
}

}  // namespace parity
