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

#include "ppil/metrics.hpp"
#include "ppil/modring.hpp"

namespace ppil {

enum class Objective { max_D, max_omega_refined };

/// Inclusive residue range for one coefficient.
struct CoefficientRange {
  Residue lo;
  Residue hi;
};

/// Candidate space of an exhaustive search. Candidates are constant-free.
///
/// coefficient_bounds[i] restricts f_{i+1}. Quadratic searches default to
/// all of Z_N; searches with degree > 2 require explicit bounds for every
/// coefficient f_1..f_degree.
struct SearchSpec {
  std::int64_t N = 0;
  int degree = 2;
  Objective objective = Objective::max_D;
  /// Spread floor factor for max_omega_refined; default_beta(N) when unset.
  std::optional<double> beta;
  std::vector<CoefficientRange> coefficient_bounds;
  /// Restrict to f1 <= N/2 and f2 <= N/2. (f1, f2) -> (N - f1, f2) and
  /// (f1, f2) -> (f1, N - f2) are reflections of the code, so the tie-broken
  /// winner is unchanged; candidates_examined and ties_at_optimum shrink.
  bool symmetry_pruning = false;
};

/// Tie-broken optimum of a search.
///
/// Ties on the objective go to the smallest leading coefficient, then the
/// next one down (f2 then f1 for quadratics). candidates_examined counts every
/// admissible candidate in the space whether or not pruning skipped its full
/// evaluation; ties_at_optimum counts candidates whose objective equals the
/// winner's exactly.
struct SearchResult {
  RingPolynomial winner{2, {0}};
  std::int64_t D = 0;
  std::int64_t zeta = 0;
  std::optional<std::int64_t> zeta_refined;
  std::optional<double> omega_refined;
  std::int64_t candidates_examined = 0;
  std::int64_t ties_at_optimum = 0;

  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

/// 0.45 for N <= 1600, 0.30 above.
double default_beta(std::int64_t n);

/// Smallest admissible spread for the omega search: ceil(beta * floor(sqrt(2N))).
std::int64_t spread_floor(std::int64_t n, double beta);

/// Maximize D over irreducible-degree PPs.
/// Throws NoQppError (degree 2 only) when N admits no irreducible QPP at all,
/// EmptySearchError when the bounded space holds no admissible candidate.
SearchResult search_max_D(const SearchSpec& spec, unsigned workers = 0);

/// Maximize ln(D)*zeta' subject to D >= spread_floor(N, beta).
/// Throws as search_max_D, plus SpreadFloorError when nothing reaches the floor.
SearchResult search_omega(const SearchSpec& spec, unsigned workers = 0);

/// Dispatch on spec.objective.
SearchResult run_search(const SearchSpec& spec, unsigned workers = 0);

/// Full MetricsReport for a permutation polynomial. Throws NotPermutationError
/// carrying a colliding pair for anything else.
MetricsReport evaluate_candidate(const RingPolynomial& poly);

}  // namespace ppil
