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

#include "ppil/designs.hpp"

#include <cmath>
#include <numeric>

#include "ppil/error.hpp"
#include "ppil/geometry.hpp"
#include "ppil/parallel.hpp"

namespace ppil {

MsSequenceTerm ms_qpp(int k) {
  if (k < 1 || k > 16) throw InvalidArgument("ms_qpp needs 1 <= k <= 16, got " + std::to_string(k));
  const std::int64_t n = std::int64_t{1} << (2 * k - 1);
  const std::int64_t two_k = std::int64_t{1} << k;
  return {k, RingPolynomial(n, {0, two_k - 1, 2 * two_k}), k > 3};
}

UbD ub_D(std::int64_t n) {
  if (n < 2) throw InvalidArgument("ub_D needs N >= 2");
  return {std::sqrt(2.0 * static_cast<double>(n)), isqrt(2 * n)};
}

std::optional<double> ub_DE(std::int64_t n) {
  if (n == 4) return 3.0;
  if (n < 8) return std::nullopt;
  const auto nd = static_cast<double>(n);
  if (n % 2 == 0) {
    const std::int64_t p = isqrt(n / 2);
    if (p >= 2 && 2 * p * p == n) return 2.0 * (nd - 1.0) / (std::sqrt(2.0 * nd) - 1.0);
  } else {
    // p^2 + (p-1)^2 = N  <=>  2N - 1 = (2p - 1)^2.
    const std::int64_t s = isqrt(2 * n - 1);
    if (s * s == 2 * n - 1 && s >= 3) return 2.0 * (nd - 1.0) / (std::sqrt(2.0 * nd - 1.0) - 1.0);
  }
  return std::nullopt;
}

BoundReport bounds(std::int64_t n) {
  BoundReport out;
  out.N = n;
  const UbD d = ub_D(n);
  out.ub_D = d.value;
  out.ub_D_int = d.tightened;
  out.ub_DE = ub_DE(n);
  if (out.ub_DE) {
    out.ub_DE_family = n == 4        ? PackingFamily::inspection_n4
                       : n % 2 == 0 ? PackingFamily::two_p_squared
                                    : PackingFamily::centered_square;
  }
  return out;
}

std::vector<Residue> linear_ms_enumerate(std::int64_t n, unsigned workers) {
  const std::int64_t half_root = n >= 2 && n % 2 == 0 ? isqrt(n / 2) : 0;
  if (half_root < 1 || 2 * half_root * half_root != n) {
    throw InvalidArgument("linear_ms_enumerate needs N = 2n^2, got " + std::to_string(n));
  }
  const std::int64_t target = 2 * half_root;
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  parallel_for(static_cast<std::size_t>(n), workers, [&](std::size_t i) {
    const auto f1 = static_cast<Residue>(i);
    if (std::gcd(f1, n) != 1) return;
    hit[i] = qpp_spread(n, f1, 0, target) == target;
  });
  std::vector<Residue> out;
  for (std::int64_t f1 = 0; f1 < n; ++f1) {
    if (hit[f1]) out.push_back(f1);
  }
  return out;
}

}  // namespace ppil
