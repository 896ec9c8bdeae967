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
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ppil {

/// An element of Z_N in canonical form [0, N).
using Residue = std::int64_t;

/// Largest supported modulus. Products of two residues stay below 2^62.
inline constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

/// Canonical representative of v modulo n (n > 0), for any signed v.
constexpr Residue mod_reduce(std::int64_t v, std::int64_t n) noexcept {
  const std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

constexpr Residue add_mod(Residue a, Residue b, std::int64_t n) noexcept {
  const Residue s = a + b;
  return s >= n ? s - n : s;
}

constexpr Residue sub_mod(Residue a, Residue b, std::int64_t n) noexcept {
  return a >= b ? a - b : a - b + n;
}

constexpr Residue mul_mod(Residue a, Residue b, std::int64_t n) noexcept {
  return (a * b) % n;
}

/// Multiplicative inverse of a modulo n, if gcd(a, n) == 1.
std::optional<Residue> inverse_mod(std::int64_t a, std::int64_t n);

/// floor(sqrt(v)) computed exactly for v >= 0.
std::int64_t isqrt(std::int64_t v) noexcept;

struct PrimePower {
  std::int64_t prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-power factorization by trial division, primes ascending.
std::vector<PrimePower> factorize(std::int64_t n);

/// Polynomial f(x) = sum f_i x^i over Z_N.
///
/// Coefficients are reduced modulo N and trailing zeros trimmed at
/// construction; the nominal degree is the index of the last stored nonzero
/// coefficient (0 for constants, including the zero polynomial). Instances are
/// immutable.
class RingPolynomial {
 public:
  /// Throws InvalidArgument unless 2 <= modulus <= kMaxModulus.
  RingPolynomial(std::int64_t modulus, std::vector<std::int64_t> coefficients);
  RingPolynomial(std::int64_t modulus,
                 std::initializer_list<std::int64_t> coefficients)
      : RingPolynomial(modulus, std::vector<std::int64_t>(coefficients)) {}

  std::int64_t modulus() const noexcept { return modulus_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Residue> coefficients() const noexcept { return coeffs_; }

  /// f_i, or 0 past the nominal degree.
  Residue coefficient(int i) const noexcept {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : 0;
  }

  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0; }

  /// Horner evaluation; x may be any integer and is reduced first.
  Residue operator()(std::int64_t x) const noexcept;

  /// The same polynomial with its constant term replaced.
  RingPolynomial with_constant(std::int64_t f0) const;

  /// "15x+32x^2"-style rendering, constant first, zero terms omitted.
  std::string to_string() const;

  friend bool operator==(const RingPolynomial&, const RingPolynomial&) = default;

 private:
  std::int64_t modulus_;
  std::vector<Residue> coeffs_;
};

RingPolynomial operator+(const RingPolynomial& a, const RingPolynomial& b);
RingPolynomial operator-(const RingPolynomial& a, const RingPolynomial& b);
RingPolynomial operator*(const RingPolynomial& a, const RingPolynomial& b);

/// f(x) by Horner's rule: deg(f) multiply-add steps.
Residue eval(const RingPolynomial& poly, Residue x);

/// (f(0), ..., f(N-1)) via a finite-difference cascade of deg(f) running
/// accumulators; the inner loop performs modular additions only.
std::vector<Residue> eval_sequence(const RingPolynomial& poly);

/// m*q*prod_{i<p}(x+k+i) mod N, a polynomial vanishing on all of Z_N.
/// Throws InvalidArgument unless N == p*q with p, q >= 1.
RingPolynomial zero_polynomial(std::int64_t n, std::int64_t p, std::int64_t q,
                               Residue m, Residue k);

/// True iff a(x) == b(x) for every x in Z_N. Moduli must agree.
bool functional_equal(const RingPolynomial& a, const RingPolynomial& b);

/// p(x + shift), expanded and reduced.
RingPolynomial shift_argument(const RingPolynomial& poly, std::int64_t shift);

/// Finds a polynomial of degree <= max_degree over Z_N, N = values.size(),
/// with p(x) == values[x] for all x, or nullopt if none exists.
///
/// Works in the falling-factorial basis x(x-1)...(x-k+1): the values at
/// x = 0..d pin down k!*b_k mod N. Every solution b_k of that congruence
/// yields the same function, because (N/gcd(k!,N))*k! == 0 mod N, so a single
/// candidate verified against all N values settles existence.
std::optional<RingPolynomial> fit_polynomial(std::span<const Residue> values,
                                             int max_degree);

/// A functionally equal polynomial of minimal nominal degree. Returns the
/// input when no lower degree fits.
RingPolynomial reduce_degree(const RingPolynomial& poly);

}  // namespace ppil
