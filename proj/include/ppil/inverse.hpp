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

#include <optional>
#include <vector>

#include "ppil/geometry.hpp"
#include "ppil/modring.hpp"

namespace ppil {

struct InverseResult {
  std::vector<Residue> inverse_perm;
  std::optional<RingPolynomial> inverse_poly;
  std::optional<int> fitted_degree;
};

std::vector<Residue> inverse_permutation(const InterleaverCode& code);

/// Lowest-degree polynomial (degree 1..max_degree) whose evaluation is the
/// inverse permutation of poly, or nullopt when none of those degrees fits.
/// Throws NotPermutationError if poly is not a permutation.
std::optional<RingPolynomial> fit_polynomial_inverse(const RingPolynomial& poly, int max_degree);

/// Inverse permutation plus, when one exists up to max_degree, the inverse
/// polynomial and its nominal degree.
InverseResult invert(const RingPolynomial& poly, int max_degree);

/// (-2^k - 1)x + 2^(k+1)x^2 mod 2^(2k-1), the inverse of the k-th
/// maximum-spread QPP. Requires 4 <= k <= 16.
RingPolynomial ms_inverse(int k);

/// h(y) = inv(y - f0): inverts g = f + f0 when inv inverts a constant-free f.
RingPolynomial shifted_inverse(const RingPolynomial& inv, Residue f0);

/// True iff outer(inner(x)) == x for every x in Z_N.
bool composes_to_identity(const RingPolynomial& outer, const RingPolynomial& inner);

}  // namespace ppil
