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

#include "ppil/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ppil/error.hpp"
#include "ppil/parallel.hpp"

namespace ppil {

std::int64_t zeta(const InterleaverCode& code) { return orbit_count(code); }

std::int64_t epsilon(const InterleaverCode& code) { return code.length() / orbit_count(code); }

std::int64_t zeta_refined(const RingPolynomial& poly) {
  const std::int64_t n = poly.modulus();
  const Residue f0 = poly.coefficient(0);
  const Residue f1 = poly.coefficient(1);
  if (std::gcd(f1, n) != 1) {
    throw Unsupported("refined non-linearity needs a unit linear coefficient; gcd(" +
                      std::to_string(f1) + ", " + std::to_string(n) + ") != 1");
  }
  const InterleaverCode code(poly);
  const std::int64_t z = orbit_count(code);
  std::vector<Residue> disturbance(static_cast<std::size_t>(z));
  for (std::int64_t x = 0; x < z; ++x) {
    disturbance[x] = sub_mod(code[x], add_mod(mul_mod(f1, x, n), f0, n), n);
  }
  std::sort(disturbance.begin(), disturbance.end());
  return std::unique(disturbance.begin(), disturbance.end()) - disturbance.begin();
}

double omega(std::int64_t d, std::int64_t zeta) {
  if (d < 1) throw InvalidArgument("spread factor must be >= 1");
  return std::log(static_cast<double>(d)) * static_cast<double>(zeta);
}

double omega_refined(std::int64_t d, std::int64_t zeta_refined) { return omega(d, zeta_refined); }

int compare_omega(std::int64_t d1, std::int64_t z1, std::int64_t d2, std::int64_t z2) {
  const bool unit1 = d1 == 1 || z1 == 0;
  const bool unit2 = d2 == 1 || z2 == 0;
  if (unit1 || unit2) return unit1 == unit2 ? 0 : (unit1 ? -1 : 1);

  const auto f1 = factorize(d1);
  const auto f2 = factorize(d2);
  bool equal = f1.size() == f2.size();
  for (std::size_t i = 0; equal && i < f1.size(); ++i) {
    equal = f1[i].prime == f2[i].prime && z1 * f1[i].exponent == z2 * f2[i].exponent;
  }
  if (equal) return 0;
  const long double lhs = std::log(static_cast<long double>(d1)) * z1;
  const long double rhs = std::log(static_cast<long double>(d2)) * z2;
  return lhs < rhs ? -1 : 1;
}

std::int64_t corner_merit(const InterleaverCode& code) {
  const std::int64_t n = code.length();
  std::int64_t best = 2 * n;
  for (std::int64_t x = 0; x < n; ++x) best = std::min(best, (n - 1 - x) + (n - 1 - code[x]));
  return best;
}

ConstantChoice optimize_constant(const RingPolynomial& poly, unsigned workers) {
  const std::int64_t n = poly.modulus();
  const InterleaverCode base(poly.with_constant(0));
  std::vector<Residue> inverse(static_cast<std::size_t>(n));
  for (std::int64_t x = 0; x < n; ++x) inverse[base[x]] = x;

  // Corner merit of f + c, visiting outputs y from the top row down and
  // stopping once the vertical gap alone reaches the best total.
  auto merit_at = [&](Residue c) {
    std::int64_t best = 2 * n;
    for (std::int64_t y = n - 1; y >= 0 && (n - 1 - y) < best; --y) {
      const Residue x = inverse[sub_mod(y, c, n)];
      best = std::min(best, (n - 1 - y) + (n - 1 - x));
    }
    return best;
  };

  constexpr std::int64_t kChunk = 256;
  const auto chunks = static_cast<std::size_t>((n + kChunk - 1) / kChunk);
  std::vector<ConstantChoice> local(chunks, ConstantChoice{0, -1});
  parallel_for(chunks, workers, [&](std::size_t i) {
    ConstantChoice best{0, -1};
    const std::int64_t lo = static_cast<std::int64_t>(i) * kChunk;
    const std::int64_t hi = std::min(n, lo + kChunk);
    for (Residue c = lo; c < hi; ++c) {
      const std::int64_t m = merit_at(c);
      if (m > best.merit) best = {c, m};
    }
    local[i] = best;
  });
  ConstantChoice best{0, -1};
  for (const auto& c : local) {
    if (c.merit > best.merit) best = c;
  }
  return best;
}

double parameter_entropy(const RingPolynomial& poly) {
  const std::int64_t n = poly.modulus();
  if ((n & (n - 1)) != 0) {
    throw Unsupported("parameter entropy is modelled for power-of-two N only, got " +
                      std::to_string(n));
  }
  return poly.degree() * std::log2(static_cast<double>(n / 2));
}

}  // namespace ppil
