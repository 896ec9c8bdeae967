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
#include <span>
#include <vector>

#include "ppil/modring.hpp"

namespace ppil {

enum class PermutationMethod { brute_force, algebraic_quadratic };

struct PermutationVerdict {
  bool is_permutation = false;
  PermutationMethod method = PermutationMethod::brute_force;
  std::optional<bool> irreducible_degree;
};

/// Two inputs mapping to the same output.
struct Collision {
  Residue first;
  Residue second;
  Residue value;
};

/// First collision of a sequence over Z_N (N = values.size()), if any.
/// Values must already be residues.
std::optional<Collision> find_collision(std::span<const Residue> values);

/// Occupancy-bitmap oracle over eval_sequence(poly).
bool is_permutation(const RingPolynomial& poly);

/// Algebraic test for f1*x + f2*x^2 over Z_N, one factorization of N shared
/// across many (f1, f2) queries.
///
/// For every prime power p^e || N:
///   p == 2, e == 1:  f1 + f2 odd
///   p == 2, e >= 2:  f1 odd, f2 even
///   p odd:           p does not divide f1, p divides f2
class QppCriterion {
 public:
  explicit QppCriterion(std::int64_t n);

  std::int64_t modulus() const noexcept { return n_; }

  /// Whether some f1 makes (f1, f2) a permutation.
  bool admits_f2(Residue f2) const noexcept;

  bool operator()(Residue f1, Residue f2) const noexcept;

 private:
  std::int64_t n_;
  int two_exponent_ = 0;
  std::vector<std::int64_t> odd_primes_;
};

bool is_qpp_fast(std::int64_t n, Residue f1, Residue f2);

/// True iff no functionally equal polynomial of lower nominal degree exists.
/// Quadratics use 2*f2 != 0 (mod N); higher degrees go through reduce_degree.
bool is_irreducible_degree(const RingPolynomial& poly);

struct QppCoefficients {
  Residue f1;
  Residue f2;
  friend bool operator==(const QppCoefficients&, const QppCoefficients&) = default;
};

/// Witness QPP of irreducible degree, smallest f2 first then smallest f1.
std::optional<QppCoefficients> exists_irreducible_qpp(std::int64_t n);

/// Permutation verdict with the method used; quadratics (any constant term)
/// go through the algebraic criterion, everything else through the oracle.
PermutationVerdict check_permutation(const RingPolynomial& poly);

/// All N in [2, n_max] admitting an irreducible QPP, ascending.
std::vector<std::int64_t> scan_existence(std::int64_t n_max, unsigned workers = 0);

}  // namespace ppil
