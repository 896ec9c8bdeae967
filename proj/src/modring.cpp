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

#include "ppil/modring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "ppil/error.hpp"

namespace ppil {

std::optional<Residue> inverse_mod(std::int64_t a, std::int64_t n) {
  if (n == 1) return Residue{0};
  std::int64_t old_r = mod_reduce(a, n), r = n;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) return std::nullopt;
  return mod_reduce(old_s, n);
}

std::int64_t isqrt(std::int64_t v) noexcept {
  if (v < 2) return v < 0 ? 0 : v;
  std::int64_t r = static_cast<std::int64_t>(__builtin_sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::vector<PrimePower> factorize(std::int64_t n) {
  std::vector<PrimePower> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

RingPolynomial::RingPolynomial(std::int64_t modulus,
                               std::vector<std::int64_t> coefficients)
    : modulus_(modulus), coeffs_(std::move(coefficients)) {
  if (modulus < 2 || modulus > kMaxModulus) {
    throw InvalidArgument("modulus must lie in [2, 2^31], got " +
                          std::to_string(modulus));
  }
  for (auto& c : coeffs_) c = mod_reduce(c, modulus_);
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0);
}

Residue RingPolynomial::operator()(std::int64_t x) const noexcept {
  const Residue xr = mod_reduce(x, modulus_);
  Residue acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = add_mod(mul_mod(acc, xr, modulus_), *it, modulus_);
  }
  return acc;
}

RingPolynomial RingPolynomial::with_constant(std::int64_t f0) const {
  std::vector<std::int64_t> c(coeffs_.begin(), coeffs_.end());
  c[0] = f0;
  return {modulus_, std::move(c)};
}

std::string RingPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Residue c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

namespace {

void require_same_ring(const RingPolynomial& a, const RingPolynomial& b) {
  if (a.modulus() != b.modulus()) {
    throw InvalidArgument("polynomials over different rings: Z_" +
                          std::to_string(a.modulus()) + " vs Z_" +
                          std::to_string(b.modulus()));
  }
}

}  // namespace

RingPolynomial operator+(const RingPolynomial& a, const RingPolynomial& b) {
  require_same_ring(a, b);
  const std::int64_t n = a.modulus();
  const int deg = std::max(a.degree(), b.degree());
  std::vector<std::int64_t> c(deg + 1);
  for (int i = 0; i <= deg; ++i) c[i] = add_mod(a.coefficient(i), b.coefficient(i), n);
  return {n, std::move(c)};
}

RingPolynomial operator-(const RingPolynomial& a, const RingPolynomial& b) {
  require_same_ring(a, b);
  const std::int64_t n = a.modulus();
  const int deg = std::max(a.degree(), b.degree());
  std::vector<std::int64_t> c(deg + 1);
  for (int i = 0; i <= deg; ++i) c[i] = sub_mod(a.coefficient(i), b.coefficient(i), n);
  return {n, std::move(c)};
}

RingPolynomial operator*(const RingPolynomial& a, const RingPolynomial& b) {
  require_same_ring(a, b);
  const std::int64_t n = a.modulus();
  std::vector<std::int64_t> c(a.degree() + b.degree() + 1, 0);
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coefficient(i) == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      c[i + j] = add_mod(c[i + j], mul_mod(a.coefficient(i), b.coefficient(j), n), n);
    }
  }
  return {n, std::move(c)};
}

Residue eval(const RingPolynomial& poly, Residue x) { return poly(x); }

std::vector<Residue> eval_sequence(const RingPolynomial& poly) {
  const std::int64_t n = poly.modulus();
  const int deg = poly.degree();

  // acc[k] holds the k-th forward difference at the current x.
  std::vector<Residue> acc(deg + 1);
  for (int k = 0; k <= deg; ++k) acc[k] = poly(k);
  for (int level = 1; level <= deg; ++level) {
    for (int k = deg; k >= level; --k) acc[k] = sub_mod(acc[k], acc[k - 1], n);
  }

  std::vector<Residue> out(static_cast<std::size_t>(n));
  for (std::int64_t x = 0; x < n; ++x) {
    out[x] = acc[0];
    for (int k = 0; k < deg; ++k) acc[k] = add_mod(acc[k], acc[k + 1], n);
  }
  return out;
}

RingPolynomial zero_polynomial(std::int64_t n, std::int64_t p, std::int64_t q,
                               Residue m, Residue k) {
  if (p < 1 || q < 1 || p * q != n) {
    throw InvalidArgument("zero_polynomial requires N == p*q with p, q >= 1");
  }
  RingPolynomial z(n, {mul_mod(mod_reduce(m, n), mod_reduce(q, n), n)});
  if (z.is_zero()) return z;
  for (std::int64_t i = 0; i < p; ++i) {
    z = z * RingPolynomial(n, {mod_reduce(k + i, n), 1});
  }
  return z;
}

bool functional_equal(const RingPolynomial& a, const RingPolynomial& b) {
  require_same_ring(a, b);
  const RingPolynomial diff = a - b;
  if (diff.is_zero()) return true;
  const auto seq = eval_sequence(diff);
  return std::all_of(seq.begin(), seq.end(), [](Residue v) { return v == 0; });
}

RingPolynomial shift_argument(const RingPolynomial& poly, std::int64_t shift) {
  const std::int64_t n = poly.modulus();
  const RingPolynomial linear(n, {mod_reduce(shift, n), 1});
  RingPolynomial acc(n, {0});
  for (int i = poly.degree(); i >= 0; --i) {
    acc = acc * linear + RingPolynomial(n, {poly.coefficient(i)});
  }
  return acc;
}

std::optional<RingPolynomial> fit_polynomial(std::span<const Residue> values,
                                             int max_degree) {
  const auto n = static_cast<std::int64_t>(values.size());
  if (n < 2) throw InvalidArgument("fit_polynomial needs at least two values");
  const int d = static_cast<int>(std::min<std::int64_t>(std::max(max_degree, 0), n - 1));

  // Forward differences at 0, up to order d.
  std::vector<Residue> delta(values.begin(), values.begin() + d + 1);
  for (int level = 1; level <= d; ++level) {
    for (int k = d; k >= level; --k) delta[k] = sub_mod(delta[k], delta[k - 1], n);
  }

  std::vector<std::int64_t> monomial(d + 1, 0);
  RingPolynomial falling(n, {1});  // x(x-1)...(x-k+1)
  Residue factorial = 1;           // k! mod N
  for (int k = 0; k <= d; ++k) {
    if (k > 0) {
      falling = falling * RingPolynomial(n, {mod_reduce(-(k - 1), n), 1});
      factorial = mul_mod(factorial, k % n, n);
    }
    // Solve k! * b == delta[k] (mod N).
    const std::int64_t g = std::gcd(factorial, n);
    if (delta[k] % g != 0) return std::nullopt;
    const std::int64_t m = n / g;
    Residue b = 0;
    if (m > 1) {
      const auto inv = inverse_mod((factorial / g) % m, m);
      b = mul_mod((delta[k] / g) % m, *inv, m);
    }
    if (b == 0) continue;
    for (int i = 0; i <= falling.degree(); ++i) {
      monomial[i] = add_mod(monomial[i], mul_mod(b, falling.coefficient(i), n), n);
    }
  }

  RingPolynomial candidate(n, std::move(monomial));
  const auto seq = eval_sequence(candidate);
  if (!std::equal(seq.begin(), seq.end(), values.begin())) return std::nullopt;
  return candidate;
}

RingPolynomial reduce_degree(const RingPolynomial& poly) {
  if (poly.degree() == 0) return poly;
  const auto seq = eval_sequence(poly);
  for (int d = 0; d < poly.degree(); ++d) {
    if (auto fit = fit_polynomial(seq, d)) return *fit;
  }
  return poly;
}

}  // namespace ppil
