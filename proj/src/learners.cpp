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

#include "parity/learners.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "parity/bounds.hpp"

namespace parity {

std::uint64_t noiseless_round_cap(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1)");
  }
  return static_cast<std::uint64_t>(std::ceil(std::log(1.0 / delta) / std::log(4.0 / 3.0))) + 1;
}

LearnerReport learn_noiseless_classical(ClassicalSource& oracle, double delta) {
  const std::size_t n = oracle.width();
  const std::uint64_t cap = noiseless_round_cap(delta);
  const std::uint64_t start = oracle.queries();
  LearnerReport report{BitString(n), 0, 0, false};
  Gf2System sys(n);
  ClassicalExample example;
  for (std::uint64_t round = 0; round < cap && !report.succeeded_selfcheck; ++round) {
    sys.clear();
    for (std::size_t i = 0; i < n; ++i) {
      oracle.draw(example);
      sys.add(example.x, example.y);
    }
    ++report.retained;
    const SolveResult result = solve(sys);
    if (const auto* a = std::get_if<BitString>(&result)) {
      report.a_hat = *a;
      report.succeeded_selfcheck = true;
    }
  }
  report.queries_used = oracle.queries() - start;
  return report;
}

LearnerReport learn_quantum_nonzero_report(QuantumSource& oracle, std::uint64_t k) {
  const std::size_t n = oracle.width();
  const std::uint64_t start = oracle.queries();
  LearnerReport report{BitString(n), 0, 0, false};
  QuantumOutcome outcome;
  for (std::uint64_t i = 0; i < k; ++i) {
    oracle.draw(outcome);
    if (!outcome.m.none()) {
      report.a_hat = outcome.m;
      report.succeeded_selfcheck = true;
      break;
    }
  }
  report.queries_used = oracle.queries() - start;
  return report;
}

LearnerReport learn_quantum_majority(QuantumSource& oracle, double eta, double delta) {
  return learn_quantum_majority_with_count(
      oracle, plan_retained_count(oracle.width(), eta, delta).k_prime);
}

LearnerReport learn_quantum_majority_with_count(QuantumSource& oracle, std::uint64_t k_prime) {
  if (k_prime == 0) {
    throw std::invalid_argument("retained count must be positive");
  }
  const std::size_t n = oracle.width();
  const std::uint64_t start = oracle.queries();
  const std::uint64_t cap = 3 * k_prime;
  std::vector<std::uint64_t> ones(n, 0);
  std::uint64_t retained = 0;
  QuantumOutcome outcome;
  while (retained < k_prime && oracle.queries() - start < cap) {
    oracle.draw(outcome);
    if (!outcome.b) {
      continue;
    }
    ++retained;
    const auto words = outcome.m.words();
    for (std::size_t w = 0; w < words.size(); ++w) {
      for (auto bits = words[w]; bits != 0; bits &= bits - 1) {
        ++ones[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
      }
    }
  }
  LearnerReport report{BitString(n), oracle.queries() - start, retained, retained == k_prime};
  for (std::size_t j = 1; j <= n; ++j) {
    report.a_hat.set(j, 2 * ones[j - 1] > retained);
  }
  return report;
}

BitString majority_vote(std::span<const BitString> strings) {
  if (strings.empty()) {
    throw std::invalid_argument("majority_vote needs at least one string");
  }
  const std::size_t n = strings.front().size();
  std::vector<std::size_t> ones(n, 0);
  for (const auto& s : strings) {
    if (s.size() != n) {
      throw std::invalid_argument("majority_vote: length mismatch");
    }
    for (std::size_t j = 1; j <= n; ++j) {
      ones[j - 1] += s.get(j) ? 1 : 0;
    }
  }
  BitString out(n);
  for (std::size_t j = 1; j <= n; ++j) {
    out.set(j, 2 * ones[j - 1] > strings.size());
  }
  return out;
}

std::size_t disagreements(const BitString& a, std::span<const ClassicalExample> examples) {
  std::size_t count = 0;
  for (const auto& e : examples) {
    count += dot(a, e.x) != e.y ? 1 : 0;
  }
  return count;
}

BitString learn_lpn_bruteforce(std::span<const ClassicalExample> examples, double eta_prime) {
  if (examples.empty()) {
    throw std::invalid_argument("learn_lpn_bruteforce needs at least one example");
  }
  if (eta_prime == 0.5) {
    throw std::domain_error("labels carry no information at eta' = 1/2");
  }
  const std::size_t n = examples.front().x.size();
  if (n > kMaxBruteForceBits) {
    throw capacity_error("brute-force LPN is limited to n <= 24, got n = " + std::to_string(n));
  }
  const bool maximize = eta_prime > 0.5;

  // Column j holds bit j of every example; labels packed alike.
  const std::size_t m = examples.size();
  const std::size_t stride = (m + 63) / 64;
  std::vector<std::uint64_t> columns(n * stride, 0);
  std::vector<std::uint64_t> labels(stride, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& e = examples[i];
    if (e.x.size() != n) {
      throw std::invalid_argument("learn_lpn_bruteforce: example width mismatch");
    }
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    for (std::size_t j = 1; j <= n; ++j) {
      if (e.x.get(j)) {
        columns[(j - 1) * stride + i / 64] |= bit;
      }
    }
    if (e.y) {
      labels[i / 64] |= bit;
    }
  }

  // Gray-code walk: each step toggles one candidate position, so the
  // predicted-label vector changes by one column xor.
  std::vector<std::uint64_t> predicted(stride, 0);
  auto score = [&] {
    std::size_t d = 0;
    for (std::size_t w = 0; w < stride; ++w) {
      d += static_cast<std::size_t>(std::popcount(predicted[w] ^ labels[w]));
    }
    return d;
  };
  auto better = [maximize](std::size_t lhs, std::size_t rhs) {
    return maximize ? lhs > rhs : lhs < rhs;
  };

  std::uint64_t best = 0;
  std::size_t best_score = score();
  const std::uint64_t candidates = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < candidates; ++i) {
    const auto toggled = static_cast<std::size_t>(std::countr_zero(i));
    const std::uint64_t* col = columns.data() + (n - 1 - toggled) * stride;
    for (std::size_t w = 0; w < stride; ++w) {
      predicted[w] ^= col[w];
    }
    const std::uint64_t candidate = i ^ (i >> 1);
    const std::size_t s = score();
    if (better(s, best_score) || (s == best_score && candidate < best)) {
      best = candidate;
      best_score = s;
    }
  }
  return BitString::from_index(n, best);
}

namespace {

// Flat sample store for BKW: `stride` words of x then one label per sample.
struct SamplePool {
  std::size_t stride;
  std::vector<std::uint64_t> words;
  std::vector<std::uint8_t> labels;

  std::size_t size() const { return labels.size(); }
  const std::uint64_t* x(std::size_t i) const { return words.data() + i * stride; }

  void push(const std::uint64_t* xs, std::uint8_t y) {
    words.insert(words.end(), xs, xs + stride);
    labels.push_back(y);
  }
  void push_xor(const std::uint64_t* lhs, const std::uint64_t* rhs, std::uint8_t y) {
    for (std::size_t w = 0; w < stride; ++w) {
      words.push_back(lhs[w] ^ rhs[w]);
    }
    labels.push_back(y);
  }
};

// Bits [first, first+len) of the packed x (0-based positions), position
// `first` in bit 0 of the result.
std::uint64_t extract(const std::uint64_t* x, std::size_t first, std::size_t len) {
  std::uint64_t out = 0;
  std::size_t done = 0;
  while (done < len) {
    const std::size_t pos = first + done;
    const std::size_t offset = pos % 64;
    const std::size_t take = std::min<std::size_t>(64 - offset, len - done);
    std::uint64_t chunk = x[pos / 64] >> offset;
    if (take < 64) {
      chunk &= (std::uint64_t{1} << take) - 1;
    }
    out |= chunk << done;
    done += take;
  }
  return out;
}

}  // namespace

std::optional<BitString> learn_lpn_bkw(ClassicalSource& oracle, double eta_prime,
                                       std::size_t block_count, std::uint64_t sample_budget) {
  const std::size_t n = oracle.width();
  if (!(eta_prime >= 0.0 && eta_prime < 0.5)) {
    throw std::invalid_argument("learn_lpn_bkw requires 0 <= eta' < 1/2");
  }
  if (block_count == 0 || block_count > n) {
    throw std::invalid_argument("block_count must lie in [1, n]");
  }
  const std::size_t block_bits = (n + block_count - 1) / block_count;
  if (block_bits > kMaxBruteForceBits) {
    throw capacity_error("BKW bucket tables are limited to 24-bit blocks");
  }
  auto block_first = [&](std::size_t b) { return b * block_bits; };
  auto block_len = [&](std::size_t b) {
    return std::min(block_bits, n - std::min(n, block_first(b)));
  };

  const std::uint64_t per_block = sample_budget / block_count;
  const std::size_t stride = BitString::word_count(n);
  BitString a_hat(n);
  ClassicalExample example;

  for (std::size_t target = 0; target < block_count; ++target) {
    if (block_len(target) == 0) {
      continue;
    }
    SamplePool pool{stride, {}, {}};
    pool.words.reserve(per_block * stride);
    pool.labels.reserve(per_block);
    for (std::uint64_t i = 0; i < per_block; ++i) {
      oracle.draw(example);
      pool.push(example.x.words().data(), example.y ? 1 : 0);
    }

    for (std::size_t block = 0; block < block_count; ++block) {
      const std::size_t len = block_len(block);
      if (block == target || len == 0) {
        continue;
      }
      // First sample in each nonzero bucket is the representative and is
      // consumed; zero-bucket samples pass through unchanged.
      std::vector<std::int64_t> representative(std::size_t{1} << len, -1);
      SamplePool next{stride, {}, {}};
      next.words.reserve(pool.words.size());
      next.labels.reserve(pool.size());
      for (std::size_t i = 0; i < pool.size(); ++i) {
        const std::uint64_t key = extract(pool.x(i), block_first(block), len);
        if (key == 0) {
          next.push(pool.x(i), pool.labels[i]);
        } else if (representative[key] < 0) {
          representative[key] = static_cast<std::int64_t>(i);
        } else {
          const auto r = static_cast<std::size_t>(representative[key]);
          next.push_xor(pool.x(i), pool.x(r), pool.labels[i] ^ pool.labels[r]);
        }
      }
      pool = std::move(next);
    }

    const std::size_t len = block_len(target);
    std::vector<std::uint64_t> votes(len, 0);
    std::vector<std::uint64_t> ones(len, 0);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const std::uint64_t residual = extract(pool.x(i), block_first(target), len);
      if (std::popcount(residual) == 1) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(residual));
        ++votes[bit];
        ones[bit] += pool.labels[i];
      }
    }
    for (std::size_t bit = 0; bit < len; ++bit) {
      if (votes[bit] == 0) {
        return std::nullopt;
      }
      a_hat.set(block_first(target) + bit + 1, 2 * ones[bit] > votes[bit]);
    }
  }
  return a_hat;
}

std::uint64_t bkw_recommended_budget(std::size_t n, std::size_t block_count, double eta_prime,
                                     double delta) {
  if (block_count == 0 || block_count > n) {
    throw std::invalid_argument("block_count must lie in [1, n]");
  }
  const std::size_t block_bits = (n + block_count - 1) / block_count;
  if (block_bits > kMaxBruteForceBits) {
    throw capacity_error("BKW bucket tables are limited to 24-bit blocks");
  }
  const double bias =
      std::pow(1.0 - 2.0 * eta_prime, std::ldexp(1.0, static_cast<int>(block_count) - 1));
  const double votes =
      std::ceil(2.0 * std::log(2.0 * static_cast<double>(n) / delta) / (bias * bias));
  const double buckets = std::ldexp(1.0, static_cast<int>(block_bits));
  const double per_block =
      buckets * votes + buckets * static_cast<double>(block_count - 1);
  return static_cast<std::uint64_t>(per_block) * block_count;
}

double agreement(const ParityConcept& h, const ParityConcept& f) {
  if (h.size() != f.size()) {
    throw std::invalid_argument("agreement: length mismatch");
  }
  return h == f ? 1.0 : 0.5;
}

}  // namespace parity
