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

// Slow, independent evaluations used to cross-check the closed forms in
// bounds.hpp and oracle.hpp. Shared by the test suites and `verify`.

#include <cstddef>

#include "parity/gf2.hpp"
#include "parity/oracle.hpp"

namespace parity::reference {

/// ζ as the double sum over total flips w and odd relevant flips k, with
/// binomials evaluated through lgamma.
double zeta_double_sum(std::size_t n, std::size_t weight_a, double eta);

/// ζ by enumerating all 2^n flip patterns (n <= 20). The relevant bits are
/// positions 1..weight_a.
double zeta_enumerate(std::size_t n, std::size_t weight_a, double eta);

/// (1-η) D_a^η + η D_0^η.
StringDistribution retained_mixture(const BitString& a, double eta);

/// Pr_x[h(x) = f(x)] by enumerating all 2^n inputs (n <= 20).
double agreement_enumerate(const BitString& h, const BitString& f);

}  // namespace parity::reference
