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

#include "ppil/inverse.hpp"

#include "ppil/error.hpp"

namespace ppil {

std::vector<Residue> inverse_permutation(const InterleaverCode& code) {
  const std::int64_t n = code.length();
  std::vector<Residue> inv(static_cast<std::size_t>(n));
  for (std::int64_t x = 0; x < n; ++x) inv[code[x]] = x;
  return inv;
}

namespace {

std::optional<RingPolynomial> fit_inverse_sequence(const std::vector<Residue>& inv,
                                                   int max_degree) {
  for (int d = 1; d <= max_degree; ++d) {
    if (auto fit = fit_polynomial(inv, d)) return fit;
  }
  return std::nullopt;
}

}  // namespace

std::optional<RingPolynomial> fit_polynomial_inverse(const RingPolynomial& poly, int max_degree) {
  return fit_inverse_sequence(inverse_permutation(InterleaverCode(poly)), max_degree);
}

InverseResult invert(const RingPolynomial& poly, int max_degree) {
  InverseResult out;
  out.inverse_perm = inverse_permutation(InterleaverCode(poly));
  out.inverse_poly = fit_inverse_sequence(out.inverse_perm, max_degree);
  if (out.inverse_poly) out.fitted_degree = out.inverse_poly->degree();
  return out;
}

RingPolynomial ms_inverse(int k) {
  if (k < 4 || k > 16) {
    throw InvalidArgument("closed-form inverse needs 4 <= k <= 16, got " + std::to_string(k));
  }
  const std::int64_t n = std::int64_t{1} << (2 * k - 1);
  return {n, {0, -(std::int64_t{1} << k) - 1, std::int64_t{1} << (k + 1)}};
}

RingPolynomial shifted_inverse(const RingPolynomial& inv, Residue f0) {
  return shift_argument(inv, -f0);
}

bool composes_to_identity(const RingPolynomial& outer, const RingPolynomial& inner) {
  if (outer.modulus() != inner.modulus()) {
    throw InvalidArgument("composition across different rings");
  }
  const auto in = eval_sequence(inner);
  for (std::int64_t x = 0; x < inner.modulus(); ++x) {
    if (outer(in[x]) != x) return false;
  }
  return true;
}

}  // namespace ppil
