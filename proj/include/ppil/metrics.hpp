// Copyright 2026 The PPIL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>

#include "ppil/geometry.hpp"
#include "ppil/modring.hpp"

namespace ppil {

/// One interleaver's full evaluation.
///
/// zeta_refined (and omega_refined) are absent when the linear coefficient is
/// not a unit; entropy_bits is absent when N is not a power of two.
struct MetricsReport {
  std::int64_t N = 0;
  std::int64_t D = 0;
  std::int64_t D_E = 0;
  std::int64_t zeta = 0;
  std::int64_t epsilon = 0;
  std::optional<std::int64_t> zeta_refined;
  double omega = 0.0;
  std::optional<double> omega_refined;
  std::int64_t corner_merit = 0;
  std::optional<double> entropy_bits;
  /// D hit the local-spread clamp: no pair lies within ceil(sqrt(2N)).
  bool spread_capped = false;

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

/// Degree of non-linearity: the number of isometry orbits.
std::int64_t zeta(const InterleaverCode& code);

/// Degree of shift-invariance: the orbit size, N / zeta.
std::int64_t epsilon(const InterleaverCode& code);

/// Distinct values of f(x) - f1*x - f0 (mod N) over x = 0..zeta-1; for a
/// quadratic this is the set {f2*x^2}. Throws Unsupported when gcd(f1, N) != 1
/// and NotPermutationError when poly is not a permutation.
std::int64_t zeta_refined(const RingPolynomial& poly);

/// ln(D) * zeta.
double omega(std::int64_t d, std::int64_t zeta);

/// ln(D) * zeta'.
double omega_refined(std::int64_t d, std::int64_t zeta_refined);

/// Three-way comparison of ln(d1)*z1 against ln(d2)*z2 (-1, 0, +1).
/// Ties are detected exactly (d1^z1 == d2^z2), not by floating tolerance.
int compare_omega(std::int64_t d1, std::int64_t z1, std::int64_t d2, std::int64_t z2);

/// Minimum L1 distance from the corner (N-1, N-1) to the code.
std::int64_t corner_merit(const InterleaverCode& code);

struct ConstantChoice {
  Residue f0;
  std::int64_t merit;
  friend bool operator==(const ConstantChoice&, const ConstantChoice&) = default;
};

/// Best constant term for corner merit over all N vertical translations;
/// ties go to the smallest f0. The input's own constant term is ignored.
ConstantChoice optimize_constant(const RingPolynomial& poly, unsigned workers = 0);

/// deg(poly) * log2(N/2) bits. Throws Unsupported unless N is a power of two.
double parameter_entropy(const RingPolynomial& poly);

}  // namespace ppil
