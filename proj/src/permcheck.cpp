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

#include "ppil/permcheck.hpp"

#include "ppil/error.hpp"
#include "ppil/parallel.hpp"

namespace ppil {

std::optional<Collision> find_collision(std::span<const Residue> values) {
  const auto n = static_cast<std::int64_t>(values.size());
  std::vector<std::int64_t> seen_at(static_cast<std::size_t>(n), -1);
  for (std::int64_t x = 0; x < n; ++x) {
    const Residue v = values[x];
    if (v < 0 || v >= n) {
      throw InvalidArgument("value " + std::to_string(v) + " outside Z_" +
                            std::to_string(n));
    }
    if (seen_at[v] >= 0) return Collision{seen_at[v], x, v};
    seen_at[v] = x;
  }
  return std::nullopt;
}

bool is_permutation(const RingPolynomial& poly) {
  return !find_collision(eval_sequence(poly)).has_value();
}

QppCriterion::QppCriterion(std::int64_t n) : n_(n) {
  if (n < 2) throw InvalidArgument("modulus must be >= 2");
  for (const auto& pp : factorize(n)) {
    if (pp.prime == 2) {
      two_exponent_ = pp.exponent;
    } else {
      odd_primes_.push_back(pp.prime);
    }
  }
}

bool QppCriterion::admits_f2(Residue f2) const noexcept {
  f2 = mod_reduce(f2, n_);
  if (two_exponent_ >= 2 && f2 % 2 != 0) return false;
  for (const auto p : odd_primes_) {
    if (f2 % p != 0) return false;
  }
  return true;
}

bool QppCriterion::operator()(Residue f1, Residue f2) const noexcept {
  f1 = mod_reduce(f1, n_);
  f2 = mod_reduce(f2, n_);
  if (two_exponent_ == 1 && (f1 + f2) % 2 == 0) return false;
  if (two_exponent_ >= 2 && (f1 % 2 == 0 || f2 % 2 != 0)) return false;
  for (const auto p : odd_primes_) {
    if (f1 % p == 0 || f2 % p != 0) return false;
  }
  return true;
}

bool is_qpp_fast(std::int64_t n, Residue f1, Residue f2) {
  return QppCriterion(n)(f1, f2);
}

bool is_irreducible_degree(const RingPolynomial& poly) {
  const int deg = poly.degree();
  if (deg <= 1) return true;
  if (deg == 2) return mul_mod(2, poly.coefficient(2), poly.modulus()) != 0;
  return reduce_degree(poly).degree() == deg;
}

std::optional<QppCoefficients> exists_irreducible_qpp(std::int64_t n) {
  const QppCriterion qpp(n);
  for (Residue f2 = 1; f2 < n; ++f2) {
    if ((2 * f2) % n == 0 || !qpp.admits_f2(f2)) continue;
    for (Residue f1 = 0; f1 < n; ++f1) {
      if (qpp(f1, f2)) return QppCoefficients{f1, f2};
    }
  }
  return std::nullopt;
}

PermutationVerdict check_permutation(const RingPolynomial& poly) {
  PermutationVerdict v;
  if (poly.degree() <= 2) {
    v.method = PermutationMethod::algebraic_quadratic;
    v.is_permutation =
        is_qpp_fast(poly.modulus(), poly.coefficient(1), poly.coefficient(2));
  } else {
    v.method = PermutationMethod::brute_force;
    v.is_permutation = is_permutation(poly);
  }
  v.irreducible_degree = is_irreducible_degree(poly);
  return v;
}

std::vector<std::int64_t> scan_existence(std::int64_t n_max, unsigned workers) {
  if (n_max < 2) return {};
  const auto count = static_cast<std::size_t>(n_max - 1);
  std::vector<char> has(count, 0);
  parallel_for(count, workers, [&](std::size_t i) {
    has[i] = exists_irreducible_qpp(static_cast<std::int64_t>(i) + 2).has_value();
  });
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (has[i]) out.push_back(static_cast<std::int64_t>(i) + 2);
  }
  return out;
}

}  // namespace ppil
