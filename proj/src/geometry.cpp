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

#include "ppil/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "ppil/error.hpp"
#include "ppil/permcheck.hpp"

namespace ppil {

InterleaverCode::InterleaverCode(std::vector<Residue> perm) : perm_(std::move(perm)) {
  if (perm_.size() < 2) throw InvalidArgument("interleaver length must be >= 2");
  if (auto c = find_collision(perm_)) throw NotPermutationError(c->first, c->second, c->value);
}

InterleaverCode::InterleaverCode(const RingPolynomial& poly)
    : perm_(eval_sequence(poly)), source_(poly) {
  if (auto c = find_collision(perm_)) throw NotPermutationError(c->first, c->second, c->value);
}

std::optional<RingPolynomial> InterleaverCode::quadratic_source() const {
  if (source_ && source_->degree() <= 2) return source_;
  return std::nullopt;
}

std::int64_t spread_D(const InterleaverCode& code) {
  const std::int64_t n = code.length();
  const auto perm = code.perm();
  std::int64_t best = n + 1;
  for (std::int64_t d = 1; d < best && d <= n / 2; ++d) {
    for (std::int64_t x = 0; x < n; ++x) {
      std::int64_t y = x + d;
      if (y >= n) y -= n;
      best = std::min(best, d + circular_distance(n, perm[y], perm[x]));
    }
  }
  return best;
}

std::int64_t spread_DE(const InterleaverCode& code) {
  const std::int64_t n = code.length();
  const auto perm = code.perm();
  std::int64_t best = 2 * n;
  for (std::int64_t d = 1; d < best && d < n; ++d) {
    for (std::int64_t x = 0; x + d < n; ++x) {
      const std::int64_t dy = perm[x + d] > perm[x] ? perm[x + d] - perm[x] : perm[x] - perm[x + d];
      best = std::min(best, d + dy);
    }
  }
  return best;
}

std::int64_t local_spread_cap(std::int64_t n) noexcept {
  const std::int64_t r = isqrt(2 * n);
  return r * r == 2 * n ? r : r + 1;
}

LocalSpread local_spread(const InterleaverCode& code, Residue x) {
  const std::int64_t n = code.length();
  if (x < 0 || x >= n) throw InvalidArgument("point index outside Z_N");
  const std::int64_t cap = local_spread_cap(n);
  const auto perm = code.perm();
  std::int64_t best = cap + 1;
  for (std::int64_t d = 1; d < best && d <= n / 2; ++d) {
    const std::int64_t ahead = mod_reduce(x + d, n);
    const std::int64_t behind = mod_reduce(x - d, n);
    best = std::min(best, d + circular_distance(n, perm[ahead], perm[x]));
    best = std::min(best, d + circular_distance(n, perm[behind], perm[x]));
  }
  if (best > cap) return {cap, true};
  return {best, false};
}

LocalSpread spread_via_representatives(const InterleaverCode& code,
                                       std::span<const Residue> reps) {
  const std::int64_t n = code.length();
  const std::int64_t zeta = orbit_count(code);
  if (static_cast<std::int64_t>(reps.size()) != zeta) {
    throw InvalidArgument("expected " + std::to_string(zeta) +
                          " orbit representatives, got " + std::to_string(reps.size()));
  }
  std::vector<char> covered(static_cast<std::size_t>(zeta), 0);
  for (const Residue r : reps) {
    if (r < 0 || r >= n) throw InvalidArgument("representative outside Z_N");
    if (covered[r % zeta]++) {
      throw InvalidArgument("two representatives share the orbit of x=" + std::to_string(r));
    }
  }
  LocalSpread out{local_spread_cap(n) + 1, true};
  for (const Residue r : reps) {
    const LocalSpread s = local_spread(code, r);
    if (s.value < out.value || (s.value == out.value && !s.capped)) out = s;
  }
  return out;
}

std::vector<Translation> qpp_orbit_translations(std::int64_t n, Residue q1, Residue q2) {
  q1 = mod_reduce(q1, n);
  q2 = mod_reduce(q2, n);
  if (!is_qpp_fast(n, q1, q2)) {
    throw InvalidArgument("(" + std::to_string(q1) + ", " + std::to_string(q2) +
                          ") is not a permutation polynomial modulo " + std::to_string(n));
  }
  const std::int64_t g = std::gcd(mul_mod(2, q2, n), n);
  std::vector<Translation> out;
  out.reserve(static_cast<std::size_t>(g));
  for (std::int64_t i = 0; i < g; ++i) {
    const Residue k0 = n / g * i;
    const Residue k1 = sub_mod(mul_mod(q1, k0, n), mul_mod(q2, mul_mod(k0, k0, n), n), n);
    out.push_back({k0, k1});
  }
  return out;
}

std::vector<Translation> isometry_group_generic(const InterleaverCode& code) {
  const std::int64_t n = code.length();
  const auto perm = code.perm();
  std::vector<Translation> out;
  for (std::int64_t k0 = 0; k0 < n; ++k0) {
    const Residue k1 = sub_mod(perm[k0], perm[0], n);
    bool ok = true;
    for (std::int64_t x = 1; x < n && ok; ++x) {
      std::int64_t shifted = x + k0;
      if (shifted >= n) shifted -= n;
      ok = perm[shifted] == add_mod(perm[x], k1, n);
    }
    if (ok) out.push_back({k0, k1});
  }
  return out;
}

std::vector<Translation> isometry_group(const InterleaverCode& code) {
  if (auto q = code.quadratic_source()) {
    return qpp_orbit_translations(code.length(), q->coefficient(1), q->coefficient(2));
  }
  return isometry_group_generic(code);
}

std::int64_t orbit_count(const InterleaverCode& code) {
  const std::int64_t n = code.length();
  if (auto q = code.quadratic_source()) return n / std::gcd(mul_mod(2, q->coefficient(2), n), n);
  return n / static_cast<std::int64_t>(isometry_group_generic(code).size());
}

OrbitDecomposition orbits(const InterleaverCode& code) {
  const std::int64_t n = code.length();
  OrbitDecomposition out;
  out.translations = isometry_group(code);
  const std::int64_t zeta = n / static_cast<std::int64_t>(out.translations.size());
  out.orbits.resize(static_cast<std::size_t>(zeta));
  for (std::int64_t x = 0; x < n; ++x) out.orbits[x % zeta].push_back(code.point(x));
  out.representatives.resize(static_cast<std::size_t>(zeta));
  std::iota(out.representatives.begin(), out.representatives.end(), Residue{0});
  return out;
}

std::int64_t intra_orbit_bound(std::int64_t n, Residue q2) {
  return 2 * n / std::gcd(mul_mod(2, mod_reduce(q2, n), n), n);
}

std::map<std::int64_t, std::int64_t> spread_profile(const InterleaverCode& code, Residue x) {
  const std::int64_t n = code.length();
  if (x < 0 || x >= n) throw InvalidArgument("point index outside Z_N");
  const std::int64_t limit = isqrt(2 * n);
  std::map<std::int64_t, std::int64_t> profile;
  for (std::int64_t i = 1; i <= limit; ++i) profile[i] = 0;
  const auto perm = code.perm();
  auto tally = [&](std::int64_t y, std::int64_t d) {
    const std::int64_t dist = d + circular_distance(n, perm[y], perm[x]);
    if (dist <= limit) ++profile[dist];
  };
  for (std::int64_t d = 1; d < limit && d <= n / 2; ++d) {
    tally(mod_reduce(x + d, n), d);
    if (2 * d != n) tally(mod_reduce(x - d, n), d);
  }
  return profile;
}

std::int64_t qpp_spread(std::int64_t n, Residue f1, Residue f2, std::int64_t threshold) noexcept {
  f1 = mod_reduce(f1, n);
  f2 = mod_reduce(f2, n);
  const Residue two_f2 = mul_mod(2, f2, n);
  const std::int64_t zeta = n / std::gcd(two_f2, n);
  const std::int64_t half = n / 2;
  std::int64_t best = n + 1;
  for (std::int64_t r = 0; r < zeta; ++r) {
    // g(d) = f(r + d) - f(r) = slope*d + f2*d^2, advanced by first differences.
    const Residue slope = add_mod(f1, mul_mod(two_f2, r, n), n);
    Residue g = 0;
    Residue step = add_mod(slope, f2, n);
    for (std::int64_t d = 1; d < best && d <= half; ++d) {
      g = add_mod(g, step, n);
      step = add_mod(step, two_f2, n);
      const std::int64_t dist = d + (g < n - g ? g : n - g);
      if (dist < best) {
        best = dist;
        if (best < threshold) return best;
      }
    }
  }
  return best;
}

}  // namespace ppil
