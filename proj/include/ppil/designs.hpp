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
#include <vector>

#include "ppil/modring.hpp"

namespace ppil {

/// Term k of the maximum-spread QPP family
/// (2^k - 1)x + 2^(k+1)x^2 mod 2^(2k-1).
struct MsSequenceTerm {
  int k = 0;
  RingPolynomial poly;
  /// k > 3. Smaller k collapse to linear permutations.
  bool strict_qpp = false;
};

/// Requires 1 <= k <= 16 (N <= 2^31).
MsSequenceTerm ms_qpp(int k);

enum class PackingFamily { two_p_squared, centered_square, inspection_n4 };

struct BoundReport {
  std::int64_t N = 0;
  /// sqrt(2N)
  double ub_D = 0.0;
  /// floor(sqrt(2N))
  std::int64_t ub_D_int = 0;
  std::optional<double> ub_DE;
  std::optional<PackingFamily> ub_DE_family;
};

struct UbD {
  double value;
  std::int64_t tightened;
};

/// (sqrt(2N), floor(sqrt(2N))).
UbD ub_D(std::int64_t n);

/// Constructive L1 spread bound, defined only on two packing families:
///   N = 2p^2:            2(N-1) / (sqrt(2N) - 1)
///   N = p^2 + (p-1)^2:   2(N-1) / (sqrt(2N-1) - 1)
/// (p >= 2), plus ub_DE(4) = 3. The families never overlap: the first is even
/// and the second odd.
std::optional<double> ub_DE(std::int64_t n);

BoundReport bounds(std::int64_t n);

/// Every unit f1 for which f1*x mod N reaches spread floor(sqrt(2N)) = 2n,
/// for N = 2n^2, ascending. Throws InvalidArgument for other N.
std::vector<Residue> linear_ms_enumerate(std::int64_t n, unsigned workers = 0);

}  // namespace ppil
