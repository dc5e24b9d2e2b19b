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

#include "parity/oracle.hpp"

#include <bit>
#include <cmath>
#include <utility>

namespace parity {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Independent Bernoulli flips on every position of `e`, position 1 first.
void draw_flips(BitString& e, std::uint64_t threshold, RandomStream& rng) {
  auto words = e.words();
  std::size_t remaining = e.size();
  for (auto& w : words) {
    const std::size_t bits = remaining < 64 ? remaining : 64;
    BitString::word_type acc = 0;
    if (threshold != 0) {
      for (std::size_t i = 0; i < bits; ++i) {
        acc |= static_cast<BitString::word_type>(rng.bernoulli(threshold)) << i;
      }
    }
    w = acc;
    remaining -= bits;
  }
}

void resize_to(BitString& s, std::size_t n) {
  if (s.size() != n) {
    s = BitString(n);
  }
}

// Probability that the measured result bit is flipped relative to its branch.
double result_flip_rate(const NoiseModel& noise) { return noise_eta(noise); }

bool flips_query_register(const NoiseModel& noise) {
  return std::holds_alternative<Depolarizing>(noise);
}

void fill_quantum(const ParityConcept& target, const NoiseModel& noise, std::uint64_t threshold,
                  RandomStream& rng, QuantumOutcome& out) {
  const std::size_t n = target.size();
  resize_to(out.m, n);
  const bool branch = rng.bit();
  if (flips_query_register(noise)) {
    draw_flips(out.m, threshold, rng);
  } else {
    for (auto& w : out.m.words()) {
      w = 0;
    }
  }
  if (branch) {
    out.m ^= target.bits();
  }
  const bool result_flip = threshold != 0 && rng.bernoulli(threshold);
  out.b = branch != result_flip;
}

void fill_classical(const ParityConcept& target, const NoiseModel& noise,
                    std::uint64_t threshold, RandomStream& rng, ClassicalExample& out) {
  const std::size_t n = target.size();
  out.x = BitString::uniform(n, rng);
  bool label = target(out.x);
  if (flips_query_register(noise)) {
    BitString e(n);
    draw_flips(e, threshold, rng);
    out.x ^= e;
  }
  if (threshold != 0 && rng.bernoulli(threshold)) {
    label = !label;
  }
  out.y = label;
}

void check_table_size(std::size_t n) {
  if (n > kMaxTableBits) {
    throw capacity_error("exact distributions are limited to n <= 20, got n = " +
                         std::to_string(n));
  }
}

// η^w (1-η)^(n-w) for w = 0..n.
Eigen::VectorXd flip_weights(std::size_t n, double eta) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(n + 1));
  for (std::size_t w = 0; w <= n; ++w) {
    out(static_cast<Eigen::Index>(w)) =
        std::pow(eta, static_cast<double>(w)) * std::pow(1.0 - eta, static_cast<double>(n - w));
  }
  return out;
}

}  // namespace

ParityConcept::ParityConcept(BitString a) : a_(std::move(a)) {
  if (a_.size() == 0) {
    throw std::invalid_argument("parity target needs n >= 1");
  }
}

double noise_eta(const NoiseModel& noise) {
  return std::visit(overloaded{[](const Noiseless&) { return 0.0; },
                               [](const Classification& c) { return c.eta.value(); },
                               [](const Depolarizing& d) { return d.eta.value(); }},
                    noise);
}

std::string noise_name(const NoiseModel& noise) {
  return std::visit(overloaded{[](const Noiseless&) { return std::string("noiseless"); },
                               [](const Classification&) { return std::string("classification"); },
                               [](const Depolarizing&) { return std::string("depolarizing"); }},
                    noise);
}

ClassicalExample classical_example(const ParityConcept& target, const NoiseModel& noise,
                                   RandomStream& rng) {
  ClassicalExample out;
  fill_classical(target, noise, RandomStream::bernoulli_threshold(noise_eta(noise)), rng, out);
  return out;
}

QuantumOutcome quantum_outcome(const ParityConcept& target, const NoiseModel& noise,
                               RandomStream& rng) {
  QuantumOutcome out;
  fill_quantum(target, noise, RandomStream::bernoulli_threshold(noise_eta(noise)), rng, out);
  return out;
}

OutcomeDistribution exact_outcome_distribution(const ParityConcept& target,
                                               const NoiseModel& noise) {
  const std::size_t n = target.size();
  check_table_size(n);
  const double r = result_flip_rate(noise);
  const std::uint64_t a = target.bits().to_index();
  OutcomeDistribution dist{n, Eigen::VectorXd::Zero(std::int64_t{2} << n)};

  if (!flips_query_register(noise)) {
    // Branch β = 0 sits on m = 0, branch β = 1 on m = a.
    dist.probabilities((0 << 1) | 0) += 0.5 * (1.0 - r);
    dist.probabilities((0 << 1) | 1) += 0.5 * r;
    dist.probabilities(static_cast<Eigen::Index>((a << 1) | 1)) += 0.5 * (1.0 - r);
    dist.probabilities(static_cast<Eigen::Index>((a << 1) | 0)) += 0.5 * r;
    return dist;
  }

  const Eigen::VectorXd weights = flip_weights(n, r);
  const std::uint64_t strings = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < strings; ++m) {
    const double from_zero = weights(std::popcount(m));
    const double from_a = weights(std::popcount(m ^ a));
    for (int b = 0; b <= 1; ++b) {
      const double zero_branch = b == 0 ? 1.0 - r : r;
      const double a_branch = b == 1 ? 1.0 - r : r;
      dist.probabilities(static_cast<Eigen::Index>((m << 1) | static_cast<std::uint64_t>(b))) =
          0.5 * from_zero * zero_branch + 0.5 * from_a * a_branch;
    }
  }
  return dist;
}

StringDistribution conditional_retained_distribution(const ParityConcept& target, NoiseRate eta) {
  const OutcomeDistribution joint = exact_outcome_distribution(target, Depolarizing{eta});
  const std::size_t n = target.size();
  StringDistribution out{n, Eigen::VectorXd(std::int64_t{1} << n)};
  // Odd entries of the joint vector are the b = 1 slice.
  out.probabilities =
      Eigen::Map<const Eigen::VectorXd, 0, Eigen::InnerStride<2>>(joint.probabilities.data() + 1,
                                                                  out.probabilities.size());
  out.probabilities /= out.probabilities.sum();
  return out;
}

StringDistribution bit_flip_distribution(const BitString& q, double eta) {
  const std::size_t n = q.size();
  check_table_size(n);
  const Eigen::VectorXd weights = flip_weights(n, eta);
  const std::uint64_t center = q.to_index();
  StringDistribution out{n, Eigen::VectorXd(std::int64_t{1} << n)};
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    out.probabilities(static_cast<Eigen::Index>(m)) = weights(std::popcount(m ^ center));
  }
  return out;
}

double marginal_result_bit(const ParityConcept& target, const NoiseModel& noise) {
  (void)target;
  const double r = result_flip_rate(noise);
  // Branch 0 reports b = 1 only after a flip; branch 1 unless flipped.
  return 0.5 * r + 0.5 * (1.0 - r);
}

QuantumExampleOracle::QuantumExampleOracle(ParityConcept target, NoiseModel noise,
                                           RandomStream rng)
    : target_(std::move(target)),
      noise_(noise),
      rng_(rng),
      flip_threshold_(RandomStream::bernoulli_threshold(noise_eta(noise))) {}

void QuantumExampleOracle::draw(QuantumOutcome& out) {
  ++queries_;
  fill_quantum(target_, noise_, flip_threshold_, rng_, out);
}

ClassicalExampleOracle::ClassicalExampleOracle(ParityConcept target, NoiseModel noise,
                                               RandomStream rng)
    : target_(std::move(target)),
      noise_(noise),
      rng_(rng),
      flip_threshold_(RandomStream::bernoulli_threshold(noise_eta(noise))) {}

void ClassicalExampleOracle::draw(ClassicalExample& out) {
  ++queries_;
  fill_classical(target_, noise_, flip_threshold_, rng_, out);
}

RecordedExamples::RecordedExamples(std::size_t n, std::vector<ClassicalExample> examples)
    : n_(n), examples_(std::move(examples)) {
  for (const auto& e : examples_) {
    if (e.x.size() != n_) {
      throw std::invalid_argument("recorded example width mismatch");
    }
  }
}

void RecordedExamples::draw(ClassicalExample& out) {
  if (next_ >= examples_.size()) {
    throw std::out_of_range("recorded examples exhausted");
  }
  out = examples_[next_++];
}

}  // namespace parity
