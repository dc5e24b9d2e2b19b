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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "parity/random.hpp"

namespace parity {

/// Fixed-length string of bits packed into 64-bit words.
///
/// Positions are 1-based to match the usual a_j, x_j subscripting. Position j
/// lives in word (j-1)/64 at bit (j-1)%64. Unused high bits of the last word
/// are always zero, so word-wise equality and popcount are exact.
///
/// Textual form lists position 1 first. The integer form (`to_index`) puts
/// position 1 in the most significant of the n low bits, so integer order and
/// lexicographic order of the text coincide.
class BitString {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitString() = default;
  explicit BitString(std::size_t n) : size_(n), words_(word_count(n), 0) {}

  static BitString from_text(std::string_view text);
  static BitString from_index(std::size_t n, std::uint64_t index);
  static BitString uniform(std::size_t n, RandomStream& rng);
  static BitString ones(std::size_t n);

  std::size_t size() const { return size_; }

  bool get(std::size_t j) const {
    return ((words_[(j - 1) / kWordBits] >> ((j - 1) % kWordBits)) & 1U) != 0;
  }
  void set(std::size_t j, bool value);
  void flip(std::size_t j) { words_[(j - 1) / kWordBits] ^= word_type{1} << ((j - 1) % kWordBits); }

  bool none() const;
  std::size_t count() const;

  /// Requires n <= 64.
  std::uint64_t to_index() const;
  std::string to_text() const;

  std::span<const word_type> words() const { return words_; }
  std::span<word_type> words() { return words_; }

  BitString& operator^=(const BitString& other);
  BitString& operator&=(const BitString& other);

  friend BitString operator^(BitString lhs, const BitString& rhs) { return lhs ^= rhs; }
  friend BitString operator&(BitString lhs, const BitString& rhs) { return lhs &= rhs; }
  friend bool operator==(const BitString&, const BitString&) = default;

  static std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

 private:
  void check_same_size(const BitString& other) const;

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

/// ⟨a,x⟩ mod 2. Throws std::invalid_argument on a length mismatch.
bool dot(const BitString& a, const BitString& x);

inline std::size_t hamming_weight(const BitString& a) { return a.count(); }

/// Linear system over GF(2): rows (x_i, y_i) meaning ⟨a, x_i⟩ = y_i.
class Gf2System {
 public:
  struct Row {
    BitString x;
    bool y = false;
  };

  explicit Gf2System(std::size_t n) : n_(n) {}

  std::size_t width() const { return n_; }
  std::size_t size() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }

  void add(BitString x, bool y);
  void clear() { rows_.clear(); }

 private:
  std::size_t n_;
  std::vector<Row> rows_;
};

struct Underdetermined {
  std::size_t rank = 0;
};
struct Inconsistent {};

using SolveResult = std::variant<BitString, Underdetermined, Inconsistent>;

/// Rank of the coefficient rows.
std::size_t rank(const Gf2System& sys);

/// Gaussian elimination. Pivot rows are chosen by first set bit in the pivot
/// column with ties going to the lowest row index, so output is deterministic.
SolveResult solve(const Gf2System& sys);

/// Probability that n uniform vectors in GF(2)^n are linearly independent:
/// prod_{j=0}^{n-1} (1 - 2^{j-n}).
double independence_probability(std::size_t n);

}  // namespace parity
