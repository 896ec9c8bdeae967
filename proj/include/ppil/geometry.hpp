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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ppil/modring.hpp"

namespace ppil {

/// A point (x, f(x)) of an interleaver-code in Z_N^2.
struct Point {
  Residue x;
  Residue y;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// A translation (x, y) -> (x + k0, y + k1) of Z_N^2.
struct Translation {
  Residue k0;
  Residue k1;
  friend auto operator<=>(const Translation&, const Translation&) = default;
};

/// |a - b|_N: circular distance on Z_N.
constexpr std::int64_t circular_distance(std::int64_t n, Residue a, Residue b) noexcept {
  const std::int64_t d = mod_reduce(a - b, n);
  return d < n - d ? d : n - d;
}

/// Two-dimensional Lee distance.
constexpr std::int64_t lee_dist(std::int64_t n, Point p, Point q) noexcept {
  return circular_distance(n, p.x, q.x) + circular_distance(n, p.y, q.y);
}

/// L1 (Manhattan) distance, no wraparound.
constexpr std::int64_t l1_dist(Point p, Point q) noexcept {
  const std::int64_t dx = p.x > q.x ? p.x - q.x : q.x - p.x;
  const std::int64_t dy = p.y > q.y ? p.y - q.y : q.y - p.y;
  return dx + dy;
}

/// A length-N permutation seen as the point set {(x, perm[x])}.
///
/// The sequence is the only representation; points are never laid out on a
/// grid. When built from a polynomial, the polynomial is kept as `source` and
/// enables closed-form paths for quadratics.
class InterleaverCode {
 public:
  /// Throws NotPermutationError with the colliding inputs.
  explicit InterleaverCode(std::vector<Residue> perm);
  explicit InterleaverCode(const RingPolynomial& poly);

  std::int64_t length() const noexcept { return static_cast<std::int64_t>(perm_.size()); }
  std::span<const Residue> perm() const noexcept { return perm_; }
  Residue operator[](std::int64_t x) const noexcept { return perm_[x]; }
  Point point(std::int64_t x) const noexcept { return {x, perm_[x]}; }
  const std::optional<RingPolynomial>& source() const noexcept { return source_; }

  /// Source polynomial when it is quadratic or linear (the closed-form case).
  std::optional<RingPolynomial> quadratic_source() const;

 private:
  std::vector<Residue> perm_;
  std::optional<RingPolynomial> source_;
};

/// Minimum Lee distance over distinct point pairs. Scans x-offsets in
/// increasing order and stops once the offset alone reaches the current best.
std::int64_t spread_D(const InterleaverCode& code);

/// Minimum L1 distance over distinct point pairs (same windowed scan).
std::int64_t spread_DE(const InterleaverCode& code);

/// ceil(sqrt(2N)), the clamp applied to local spreads.
std::int64_t local_spread_cap(std::int64_t n) noexcept;

struct LocalSpread {
  std::int64_t value = 0;
  /// No other point lies within Lee distance cap; value holds the cap.
  bool capped = false;
  friend bool operator==(const LocalSpread&, const LocalSpread&) = default;
};

/// Distance from p_x to its nearest neighbour, clamped at local_spread_cap(N).
LocalSpread local_spread(const InterleaverCode& code, Residue x);

/// min of local_spread over one representative per orbit. Equals spread_D
/// whenever spread_D is below the cap. Throws InvalidArgument unless `reps`
/// holds exactly one x per orbit.
LocalSpread spread_via_representatives(const InterleaverCode& code,
                                       std::span<const Residue> reps);

/// Isometries of the QPP code q1*x + q2*x^2: k0(i) = N*i/gcd(2q2, N),
/// k1(i) = q1*k0(i) - q2*k0(i)^2, i = 0..gcd(2q2, N)-1.
/// Throws InvalidArgument if (q1, q2) is not a permutation polynomial.
std::vector<Translation> qpp_orbit_translations(std::int64_t n, Residue q1, Residue q2);

/// All translations mapping the code onto itself, by testing every k0 for a
/// constant difference perm[x + k0] - perm[x]. Works for any permutation.
std::vector<Translation> isometry_group_generic(const InterleaverCode& code);

/// isometry_group_generic, dispatched to the closed form for quadratic sources.
/// Sorted by k0.
std::vector<Translation> isometry_group(const InterleaverCode& code);

/// Number of orbits (degree of non-linearity). Quadratic sources use
/// N / gcd(2 f2, N).
std::int64_t orbit_count(const InterleaverCode& code);

struct OrbitDecomposition {
  std::vector<Translation> translations;
  /// orbits[r] holds the points with x == r (mod orbit count), by x.
  std::vector<std::vector<Point>> orbits;
  /// x-coordinates 0 .. orbit count - 1.
  std::vector<Residue> representatives;
};

OrbitDecomposition orbits(const InterleaverCode& code);

/// Lower bound 2N / gcd(2 q2, N) on Lee distances within one QPP orbit.
std::int64_t intra_orbit_bound(std::int64_t n, Residue q2);

/// Multiplicity of each Lee distance i = 1..floor(sqrt(2N)) from p_x.
/// Every i in range is present, zeros included.
std::map<std::int64_t, std::int64_t> spread_profile(const InterleaverCode& code, Residue x);

/// Spread factor of f1*x + f2*x^2 over Z_N (constant term irrelevant) from
/// the orbit representatives x = 0..zeta-1, scanning forward offsets only
/// with additions-only difference updates.
///
/// Returns the exact spread when it is >= threshold. Otherwise it returns
/// some value below threshold as soon as one is seen.
std::int64_t qpp_spread(std::int64_t n, Residue f1, Residue f2,
                        std::int64_t threshold = 0) noexcept;

}  // namespace ppil
