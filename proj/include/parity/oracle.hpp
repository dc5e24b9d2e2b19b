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

#include <Eigen/Core>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "parity/bounds.hpp"
#include "parity/gf2.hpp"
#include "parity/random.hpp"

namespace parity {

/// Thrown when a dense table or enumeration would exceed its size limit.
class capacity_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Hidden string a of the parity f_a(x) = ⟨a,x⟩.
class ParityConcept {
 public:
  explicit ParityConcept(BitString a);

  std::size_t size() const { return a_.size(); }
  const BitString& bits() const { return a_; }
  bool operator()(const BitString& x) const { return dot(a_, x); }

  friend bool operator==(const ParityConcept&, const ParityConcept&) = default;

 private:
  BitString a_;
};

struct Noiseless {};
/// Result bit flipped with probability η.
struct Classification {
  NoiseRate eta;
};
/// Each of the n+1 output qubits independently depolarized at rate η.
struct Depolarizing {
  NoiseRate eta;
};

using NoiseModel = std::variant<Noiseless, Classification, Depolarizing>;

/// 0 for Noiseless.
double noise_eta(const NoiseModel& noise);
/// "noiseless", "classification" or "depolarizing".
std::string noise_name(const NoiseModel& noise);

/// Post-Hadamard measurement record: query register m, result bit b.
struct QuantumOutcome {
  BitString m;
  bool b = false;
};

/// Record from the dephased (classical) example oracle.
struct ClassicalExample {
  BitString x;
  bool y = false;
};

/// Joint law of (m, b). Entry (index(m) << 1) | b holds P(m, b).
struct OutcomeDistribution {
  std::size_t n = 0;
  Eigen::VectorXd probabilities;

  double operator()(std::uint64_t m_index, bool b) const {
    return probabilities((m_index << 1) | (b ? 1U : 0U));
  }
};

/// Law of an n-bit string; entry index(m) holds P(m).
struct StringDistribution {
  std::size_t n = 0;
  Eigen::VectorXd probabilities;
};

inline constexpr std::size_t kMaxTableBits = 20;

ClassicalExample classical_example(const ParityConcept& target, const NoiseModel& noise,
                                   RandomStream& rng);

/// One post-Hadamard measurement of the (noisy) quantum example state.
///
/// Depolarizing noise acts per qubit as I, X, Y, Z with probabilities
/// 1-3η/2, η/2, η/2, η/2. X and Y flip the measured bit and I, Z do not, and
/// phases between the two branches do not affect computational-basis
/// statistics, so an outcome is (βa ⊕ e, β ⊕ e_{n+1}) with β a fair coin and
/// e independent Bernoulli(η) flips.
QuantumOutcome quantum_outcome(const ParityConcept& target, const NoiseModel& noise,
                               RandomStream& rng);

/// Closed-form joint law of (m, b). Throws capacity_error for n > 20.
OutcomeDistribution exact_outcome_distribution(const ParityConcept& target,
                                               const NoiseModel& noise);

/// Law of m given b = 1 under Depolarizing(η); equals (1-η)D_a^η + ηD_0^η.
StringDistribution conditional_retained_distribution(const ParityConcept& target, NoiseRate eta);

/// D_q^η: q corrupted by independent bit flips at rate η. Throws
/// capacity_error for n > 20.
StringDistribution bit_flip_distribution(const BitString& q, double eta);

/// Pr[b = 1].
double marginal_result_bit(const ParityConcept& target, const NoiseModel& noise);

/// Source of quantum outcomes. Learners only see the oracle through this.
class QuantumSource {
 public:
  virtual ~QuantumSource() = default;
  virtual std::size_t width() const = 0;
  virtual void draw(QuantumOutcome& out) = 0;
  virtual std::uint64_t queries() const = 0;
};

/// Source of classical examples.
class ClassicalSource {
 public:
  virtual ~ClassicalSource() = default;
  virtual std::size_t width() const = 0;
  virtual void draw(ClassicalExample& out) = 0;
  virtual std::uint64_t queries() const = 0;

  ClassicalExample draw() {
    ClassicalExample out;
    draw(out);
    return out;
  }
};

class QuantumExampleOracle final : public QuantumSource {
 public:
  QuantumExampleOracle(ParityConcept target, NoiseModel noise, RandomStream rng);

  std::size_t width() const override { return target_.size(); }
  void draw(QuantumOutcome& out) override;
  std::uint64_t queries() const override { return queries_; }

 private:
  ParityConcept target_;
  NoiseModel noise_;
  RandomStream rng_;
  std::uint64_t flip_threshold_ = 0;
  std::uint64_t queries_ = 0;
};

class ClassicalExampleOracle final : public ClassicalSource {
 public:
  ClassicalExampleOracle(ParityConcept target, NoiseModel noise, RandomStream rng);

  std::size_t width() const override { return target_.size(); }
  using ClassicalSource::draw;
  void draw(ClassicalExample& out) override;
  std::uint64_t queries() const override { return queries_; }

 private:
  ParityConcept target_;
  NoiseModel noise_;
  RandomStream rng_;
  std::uint64_t flip_threshold_ = 0;
  std::uint64_t queries_ = 0;
};

/// Replays a fixed list of examples; throws std::out_of_range when exhausted.
class RecordedExamples final : public ClassicalSource {
 public:
  RecordedExamples(std::size_t n, std::vector<ClassicalExample> examples);

  std::size_t width() const override { return n_; }
  using ClassicalSource::draw;
  void draw(ClassicalExample& out) override;
  std::uint64_t queries() const override { return next_; }

 private:
  std::size_t n_;
  std::vector<ClassicalExample> examples_;
  std::size_t next_ = 0;
};

}  // namespace parity
