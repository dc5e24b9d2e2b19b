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
#include <optional>
#include <span>
#include <stdexcept>

#include "parity/gf2.hpp"
#include "parity/oracle.hpp"

namespace parity {

struct LearnerReport {
  BitString a_hat;
  std::uint64_t queries_used = 0;
  /// Post-selected outcomes (majority learner) or rounds run (noiseless
  /// classical learner); zero for the other learners.
  std::uint64_t retained = 0;
  bool succeeded_selfcheck = false;
};

/// Rounds of n fresh examples solved by Gaussian elimination.
///
/// A round succeeds iff the n rows have full rank. Per-round failure is below
/// 3/4 for n > 1, so at most ceil(log_{4/3}(1/δ)) + 1 rounds are run. When
/// every round fails the report carries succeeded_selfcheck = false and a
/// zero a_hat.
LearnerReport learn_noiseless_classical(ClassicalSource& oracle, double delta);

std::uint64_t noiseless_round_cap(double delta);

/// Draws k outcomes and reports the first nonzero query register seen, or 0^n.
LearnerReport learn_quantum_nonzero_report(QuantumSource& oracle, std::uint64_t k);

/// Post-select outcomes with b = 1 until k' are retained or 3k' queries are
/// spent, then majority-vote each position. k' comes from
/// plan_retained_count(n, η, δ).
LearnerReport learn_quantum_majority(QuantumSource& oracle, double eta, double delta);

/// Same procedure with an explicit retained count.
LearnerReport learn_quantum_majority_with_count(QuantumSource& oracle, std::uint64_t k_prime);

/// Bit j is 1 iff strictly more than half of the strings have bit j set.
/// Throws std::invalid_argument for an empty list or mixed lengths.
BitString majority_vote(std::span<const BitString> strings);

/// Σ_i [⟨a, x_i⟩ ≠ y_i].
std::size_t disagreements(const BitString& a, std::span<const ClassicalExample> examples);

inline constexpr std::size_t kMaxBruteForceBits = 24;

/// Exhaustive maximum-likelihood decoder.
///
/// Minimizes disagreements when η' < 1/2 and maximizes them when η' > 1/2;
/// ties go to the smallest candidate in text order. Throws capacity_error for
/// n > 24 and std::domain_error for η' = 1/2.
BitString learn_lpn_bruteforce(std::span<const ClassicalExample> examples, double eta_prime);

/// Blockwise xor-reduction (BKW).
///
/// For each target block the remaining blocks are zeroed by bucketing samples
/// on a block and xoring colliding pairs. Reduced samples whose residual is a
/// single coordinate of the target block vote on that bit. Each target block
/// uses sample_budget / block_count fresh samples. Returns nullopt if some bit
/// receives no vote.
std::optional<BitString> learn_lpn_bkw(ClassicalSource& oracle, double eta_prime,
                                       std::size_t block_count, std::uint64_t sample_budget);

/// Sample budget giving each bit about 2 ln(2n/δ) / bias² votes, where the
/// bias after reduction is (1-2η')^(2^(block_count-1)).
std::uint64_t bkw_recommended_budget(std::size_t n, std::size_t block_count, double eta_prime,
                                     double delta);

/// Pr_x[h(x) = f(x)] under uniform x: 1 if h = f, else 1/2.
double agreement(const ParityConcept& h, const ParityConcept& f);

}  // namespace parity
