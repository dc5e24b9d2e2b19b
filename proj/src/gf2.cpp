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

#include "parity/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace parity {

BitString BitString::from_text(std::string_view text) {
  BitString out(text.size());
  for (std::size_t j = 1; j <= text.size(); ++j) {
    const char c = text[j - 1];
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bitstring may only contain '0' and '1': " + std::string(text));
    }
    out.set(j, c == '1');
  }
  return out;
}

BitString BitString::from_index(std::size_t n, std::uint64_t index) {
  if (n > kWordBits) {
    throw std::invalid_argument("from_index requires n <= 64");
  }
  if (n < kWordBits && (index >> n) != 0) {
    throw std::invalid_argument("index does not fit in n bits");
  }
  BitString out(n);
  for (std::size_t j = 1; j <= n; ++j) {
    out.set(j, ((index >> (n - j)) & 1U) != 0);
  }
  return out;
}

BitString BitString::uniform(std::size_t n, RandomStream& rng) {
  BitString out(n);
  for (auto& w : out.words_) {
    w = rng.next_word();
  }
  if (const std::size_t tail = n % kWordBits; tail != 0) {
    out.words_.back() &= (word_type{1} << tail) - 1;
  }
  return out;
}

BitString BitString::ones(std::size_t n) {
  BitString out(n);
  for (auto& w : out.words_) {
    w = ~word_type{0};
  }
  if (const std::size_t tail = n % kWordBits; tail != 0) {
    out.words_.back() = (word_type{1} << tail) - 1;
  }
  return out;
}

void BitString::set(std::size_t j, bool value) {
  const word_type mask = word_type{1} << ((j - 1) % kWordBits);
  word_type& w = words_[(j - 1) / kWordBits];
  w = value ? (w | mask) : (w & ~mask);
}

bool BitString::none() const {
  return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
}

std::size_t BitString::count() const {
  std::size_t total = 0;
  for (const word_type w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

std::uint64_t BitString::to_index() const {
  if (size_ > kWordBits) {
    throw std::invalid_argument("to_index requires n <= 64");
  }
  std::uint64_t index = 0;
  for (std::size_t j = 1; j <= size_; ++j) {
    index = (index << 1) | (get(j) ? 1U : 0U);
  }
  return index;
}

std::string BitString::to_text() const {
  std::string out(size_, '0');
  for (std::size_t j = 1; j <= size_; ++j) {
    if (get(j)) {
      out[j - 1] = '1';
    }
  }
  return out;
}

void BitString::check_same_size(const BitString& other) const {
  if (size_ != other.size_) {
    throw std::invalid_argument("bitstring length mismatch: " + std::to_string(size_) + " vs " +
                                std::to_string(other.size_));
  }
}

BitString& BitString::operator^=(const BitString& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] ^= other.words_[i];
  }
  return *this;
}

BitString& BitString::operator&=(const BitString& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] &= other.words_[i];
  }
  return *this;
}

bool dot(const BitString& a, const BitString& x) {
  if (a.size() != x.size()) {
    throw std::invalid_argument("dot: length mismatch");
  }
  const auto aw = a.words();
  const auto xw = x.words();
  BitString::word_type acc = 0;
  for (std::size_t i = 0; i < aw.size(); ++i) {
    acc ^= aw[i] & xw[i];
  }
  return (std::popcount(acc) & 1) != 0;
}

void Gf2System::add(BitString x, bool y) {
  if (x.size() != n_) {
    throw std::invalid_argument("Gf2System: row width " + std::to_string(x.size()) +
                                " does not match system width " + std::to_string(n_));
  }
  rows_.push_back({std::move(x), y});
}

namespace {

// Row-major packed copy of the system with the right-hand side held apart.
struct Echelon {
  std::size_t width;
  std::size_t stride;
  std::vector<BitString::word_type> words;
  std::vector<bool> rhs;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;

  explicit Echelon(const Gf2System& sys)
      : width(sys.width()), stride(BitString::word_count(sys.width())) {
    words.reserve(sys.size() * stride);
    rhs.reserve(sys.size());
    for (const auto& row : sys.rows()) {
      const auto w = row.x.words();
      words.insert(words.end(), w.begin(), w.end());
      rhs.push_back(row.y);
    }
    reduce();
  }

  std::size_t rows() const { return rhs.size(); }

  BitString::word_type* row(std::size_t r) { return words.data() + r * stride; }

  bool bit(std::size_t r, std::size_t j) {
    return ((row(r)[(j - 1) / 64] >> ((j - 1) % 64)) & 1U) != 0;
  }

  void swap_rows(std::size_t r, std::size_t s) {
    if (r == s) {
      return;
    }
    std::swap_ranges(row(r), row(r) + stride, row(s));
    const bool tmp = rhs[r];
    rhs[r] = rhs[s];
    rhs[s] = tmp;
  }

  // Reduced row echelon form; pivot column j ends up on row (pivot count).
  void reduce() {
    pivots.clear();
    for (std::size_t j = 1; j <= width && rank < rows(); ++j) {
      std::size_t pivot = rank;
      while (pivot < rows() && !bit(pivot, j)) {
        ++pivot;
      }
      if (pivot == rows()) {
        continue;
      }
      swap_rows(rank, pivot);
      for (std::size_t r = 0; r < rows(); ++r) {
        if (r != rank && bit(r, j)) {
          auto* dst = row(r);
          const auto* src = row(rank);
          for (std::size_t w = 0; w < stride; ++w) {
            dst[w] ^= src[w];
          }
          rhs[r] = rhs[r] != rhs[rank];
        }
      }
      pivots.push_back(j);
      ++rank;
    }
  }
};

}  // namespace

std::size_t rank(const Gf2System& sys) { return Echelon(sys).rank; }

SolveResult solve(const Gf2System& sys) {
  Echelon e(sys);
  for (std::size_t r = e.rank; r < e.rows(); ++r) {
    if (e.rhs[r]) {
      return Inconsistent{};
    }
  }
  if (e.rank < sys.width()) {
    return Underdetermined{e.rank};
  }
  BitString a(sys.width());
  for (std::size_t r = 0; r < e.rank; ++r) {
    a.set(e.pivots[r], e.rhs[r]);
  }
  return a;
}

double independence_probability(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("independence_probability requires n >= 1");
  }
  double p = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    p *= 1.0 - std::ldexp(1.0, static_cast<int>(j) - static_cast<int>(n));
  }
  return p;
}

}  // namespace parity
