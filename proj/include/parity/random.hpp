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

#include <cstdint>
#include <random>

namespace parity {

/// Deterministic, seedable pseudorandom stream.
///
/// The engine is `std::mt19937_64`, whose output sequence is fixed by the C++
/// standard. All derived draws are computed here from raw 64-bit words (the
/// standard `<random>` distributions are implementation-defined and are not
/// used), so a seed reproduces the same draws on every conforming platform.
///
/// Child streams are derived with the SplitMix64 finalizer applied to
/// `(seed, index)`; a child of a child is addressed by a path of indices.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_word() { return engine_(); }

  /// Uniform double in [0, 1) with 53 bits of resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bit() { return (engine_() >> 63) != 0; }

  /// Bernoulli draw from a precomputed threshold (see `bernoulli_threshold`).
  bool bernoulli(std::uint64_t threshold) { return engine_() < threshold; }

  bool bernoulli(double p) { return bernoulli(bernoulli_threshold(p)); }

  /// Uniform integer in [0, bound) by rejection; bound must be nonzero.
  std::uint64_t below(std::uint64_t bound);

  /// Independent child stream keyed by `index`.
  RandomStream split(std::uint64_t index) const { return RandomStream(mix(seed_, index)); }

  /// Threshold t with Pr[word < t] = p rounded to a multiple of 2^-64.
  static std::uint64_t bernoulli_threshold(double p);

  static std::uint64_t mix(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace parity
