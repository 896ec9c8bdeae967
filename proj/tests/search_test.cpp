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


#include "ppil/search.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "ppil/error.hpp"
#include "ppil/geometry.hpp"
#include "ppil/permcheck.hpp"

namespace ppil {
namespace {

SearchSpec quadratic(std::int64_t n, Objective obj = Objective::max_D) {
  SearchSpec s;
  s.N = n;
  s.objective = obj;
  return s;
}

struct Brute {
  Residue f1 = -1, f2 = -1;
  std::int64_t d = 0, z = 0, examined = 0, ties = 0;
};

// Exhaustive max-D over constant-free irreducible QPPs, ties to smallest f2 then f1.
template <class Spread>
Brute brute_max_D(std::int64_t n, Spread spread) {
  Brute b;
  for (Residue f2 = 0; f2 < n; ++f2) {
    if (2 * f2 % n == 0) continue;
    for (Residue f1 = 0; f1 < n; ++f1) {
      if (!oracle::quadratic_is_permutation(n, f1, f2)) continue;
      ++b.examined;
      const auto d = spread(n, f1, f2);
      if (d > b.d) {
        b = Brute{f1, f2, d, 0, b.examined, 1};
      } else if (d == b.d) {
        ++b.ties;
      }
    }
  }
  return b;
}

std::int64_t oracle_spread(std::int64_t n, Residue f1, Residue f2) {
  return oracle::spread_lee(oracle::sequence({0, f1, f2}, n));
}

std::int64_t library_spread(std::int64_t n, Residue f1, Residue f2) {
  return spread_D(InterleaverCode(RingPolynomial(n, {0, f1, f2})));
}

std::int64_t quadratic_zeta_refined(std::int64_t n, Residue f2) {
  const std::int64_t z = n / oracle::gcd(2 * f2, n);
  std::set<std::int64_t> values;
  for (std::int64_t x = 0; x < z; ++x) values.insert(f2 * (x * x % n) % n);
  return static_cast<std::int64_t>(values.size());
}

TEST(SearchMaxD, TableExamples) {
  const auto r80 = search_max_D(quadratic(80));
  EXPECT_EQ(r80.D, 10);
  EXPECT_EQ(r80.winner, RingPolynomial(80, {0, 9, 20}));
  const auto r1024 = search_max_D(quadratic(1024));
  EXPECT_EQ(r1024.D, 34);
  EXPECT_EQ(r1024.winner, RingPolynomial(1024, {0, 123, 256}));
  EXPECT_EQ(r1024.zeta, 2);
}

TEST(SearchMaxD, MatchesOracleSweepUpTo48) {
  for (std::int64_t n = 2; n <= 48; ++n) {
    if (!exists_irreducible_qpp(n)) {
      EXPECT_THROW(search_max_D(quadratic(n)), NoQppError) << n;
      continue;
    }
    const auto b = brute_max_D(n, oracle_spread);
    const auto r = search_max_D(quadratic(n));
    ASSERT_EQ(r.D, b.d) << n;
    ASSERT_EQ(r.winner, RingPolynomial(n, {0, b.f1, b.f2})) << n;
    ASSERT_EQ(r.candidates_examined, b.examined) << n;
    ASSERT_EQ(r.ties_at_optimum, b.ties) << n;
  }
}

TEST(SearchMaxD, MatchesFullSpreadSweepUpTo160) {
  for (std::int64_t n = 49; n <= 160; ++n) {
    if (!exists_irreducible_qpp(n)) continue;
    const auto b = brute_max_D(n, library_spread);
    const auto r = search_max_D(quadratic(n));
    ASSERT_EQ(r.D, b.d) << n;
    ASSERT_EQ(r.winner, RingPolynomial(n, {0, b.f1, b.f2})) << n;
    ASSERT_EQ(r.candidates_examined, b.examined) << n;
    ASSERT_EQ(r.ties_at_optimum, b.ties) << n;
  }
}

TEST(SearchMaxD, WinnerIsIrreduciblePermutationWithinBound) {
  for (std::int64_t n : {96, 200, 256, 400, 512, 600}) {
    const auto r = search_max_D(quadratic(n));
    EXPECT_TRUE(is_permutation(r.winner));
    EXPECT_TRUE(is_irreducible_degree(r.winner));
    EXPECT_EQ(spread_D(InterleaverCode(r.winner)), r.D);
    EXPECT_LE(r.D, isqrt(2 * n));
    EXPECT_EQ(r.zeta, n / oracle::gcd(2 * r.winner.coefficient(2), n));
    ASSERT_TRUE(r.zeta_refined.has_value());
    EXPECT_EQ(*r.zeta_refined, zeta_refined(r.winner));
  }
}

TEST(SearchMaxD, WorkerCountDoesNotChangeResult) {
  for (std::int64_t n : {120, 256, 1000}) {
    const auto one = search_max_D(quadratic(n), 1);
    EXPECT_EQ(search_max_D(quadratic(n), 4), one);
    EXPECT_EQ(search_max_D(quadratic(n), 16), one);
  }
}

TEST(SearchMaxD, SymmetryPruningKeepsWinner) {
  for (std::int64_t n = 8; n <= 400; n += 8) {
    auto spec = quadratic(n);
    const auto full = search_max_D(spec);
    spec.symmetry_pruning = true;
    const auto pruned = search_max_D(spec);
    ASSERT_EQ(pruned.winner, full.winner) << n;
    ASSERT_EQ(pruned.D, full.D);
    ASSERT_LE(pruned.candidates_examined, full.candidates_examined);
    ASSERT_LE(pruned.ties_at_optimum, full.ties_at_optimum);
  }
}

TEST(SearchMaxD, Errors) {
  EXPECT_THROW(search_max_D(quadratic(3)), NoQppError);
  EXPECT_THROW(search_max_D(quadratic(5)), NoQppError);
  EXPECT_THROW(search_max_D(quadratic(1)), InvalidArgument);
  auto empty = quadratic(40);
  empty.coefficient_bounds = {{0, 39}, {1, 1}};
  EXPECT_THROW(search_max_D(empty), EmptySearchError);
  auto cubic = quadratic(40);
  cubic.degree = 3;
  EXPECT_THROW(search_max_D(cubic), InvalidArgument);
  auto too_many = quadratic(40);
  too_many.coefficient_bounds = {{0, 1}, {0, 1}, {0, 1}};
  EXPECT_THROW(search_max_D(too_many), InvalidArgument);
}

TEST(SearchMaxD, BoundsRestrictTheSpace) {
  auto spec = quadratic(80);
  spec.coefficient_bounds = {{0, 79}, {10, 10}};
  const auto r = search_max_D(spec);
  EXPECT_EQ(r.winner.coefficient(2), 10);
  const auto b = brute_max_D(80, [](std::int64_t n, Residue f1, Residue f2) -> std::int64_t {
    return f2 == 10 ? library_spread(n, f1, f2) : 0;
  });
  EXPECT_EQ(r.D, b.d);
  EXPECT_EQ(r.winner.coefficient(1), b.f1);
}

// Degree-3 exhaustive search over a small box against direct enumeration.
TEST(SearchMaxD, CubicBoxMatchesEnumeration) {
  const std::int64_t n = 32;
  SearchSpec spec;
  spec.N = n;
  spec.degree = 3;
  spec.coefficient_bounds = {{0, n - 1}, {0, n - 1}, {1, n - 1}};
  const auto r = search_max_D(spec);
  std::int64_t best = 0, examined = 0, ties = 0;
  std::vector<Residue> arg;
  for (Residue f3 = 1; f3 < n; ++f3) {
    for (Residue f2 = 0; f2 < n; ++f2) {
      for (Residue f1 = 0; f1 < n; ++f1) {
        const RingPolynomial p(n, {0, f1, f2, f3});
        const auto seq = oracle::sequence({0, f1, f2, f3}, n);
        if (!oracle::is_permutation(seq) || !is_irreducible_degree(p)) continue;
        ++examined;
        const auto d = oracle::spread_lee(seq);
        if (d > best) {
          best = d;
          arg = {f1, f2, f3};
          ties = 1;
        } else if (d == best) {
          ++ties;
        }
      }
    }
  }
  ASSERT_GT(examined, 0);
  EXPECT_EQ(r.D, best);
  EXPECT_EQ(r.winner, RingPolynomial(n, {0, arg[0], arg[1], arg[2]}));
  EXPECT_EQ(r.candidates_examined, examined);
  EXPECT_EQ(r.ties_at_optimum, ties);
  EXPECT_EQ(search_max_D(spec, 3), r);
}

TEST(SpreadFloor, Examples) {
  EXPECT_DOUBLE_EQ(default_beta(1600), 0.45);
  EXPECT_DOUBLE_EQ(default_beta(1601), 0.30);
  EXPECT_EQ(spread_floor(512, 0.45), 15);
  EXPECT_EQ(spread_floor(8192, 0.30), 39);
  EXPECT_EQ(spread_floor(40, 0.5), 4);
}

TEST(SearchOmega, Examples) {
  const auto r128 = search_omega(quadratic(128, Objective::max_omega_refined));
  EXPECT_EQ(r128.winner, RingPolynomial(128, {0, 7, 16}));
  EXPECT_EQ(r128.D, 8);
  EXPECT_EQ(r128.zeta_refined, 3);
  ASSERT_TRUE(r128.omega_refined.has_value());
  EXPECT_NEAR(*r128.omega_refined, 6.24, 0.005);
  const auto r2048 = search_omega(quadratic(2048, Objective::max_omega_refined));
  EXPECT_EQ(r2048.winner, RingPolynomial(2048, {0, 31, 64}));
  EXPECT_EQ(r2048.D, 32);
  EXPECT_EQ(r2048.zeta_refined, 7);
  EXPECT_NEAR(*r2048.omega_refined, 24.26, 0.005);
}

TEST(SearchOmega, MatchesEnumerationUpTo200) {
  for (std::int64_t n = 8; n <= 200; n += 4) {
    if (!exists_irreducible_qpp(n)) continue;
    const std::int64_t floor = spread_floor(n, default_beta(n));
    std::int64_t bd = 0, bz = 0, examined = 0, ties = 0;
    Residue bf1 = -1, bf2 = -1;
    for (Residue f2 = 0; f2 < n; ++f2) {
      if (2 * f2 % n == 0) continue;
      for (Residue f1 = 0; f1 < n; ++f1) {
        if (!oracle::quadratic_is_permutation(n, f1, f2)) continue;
        ++examined;
        const auto d = library_spread(n, f1, f2);
        if (d < floor) continue;
        const auto z = quadratic_zeta_refined(n, f2);
        const int c = bf1 < 0 ? 1 : compare_omega(d, z, bd, bz);
        if (c > 0) {
          bd = d, bz = z, bf1 = f1, bf2 = f2, ties = 1;
        } else if (c == 0) {
          ++ties;
        }
      }
    }
    const auto spec = quadratic(n, Objective::max_omega_refined);
    if (bf1 < 0) {
      EXPECT_THROW(search_omega(spec), SpreadFloorError) << n;
      continue;
    }
    const auto r = search_omega(spec);
    ASSERT_EQ(r.winner, RingPolynomial(n, {0, bf1, bf2})) << n;
    ASSERT_EQ(r.D, bd) << n;
    ASSERT_EQ(r.zeta_refined, bz) << n;
    ASSERT_EQ(r.candidates_examined, examined) << n;
    ASSERT_EQ(r.ties_at_optimum, ties) << n;
    ASSERT_EQ(search_omega(spec, 5), r) << n;
  }
}

TEST(SearchOmega, FloorErrorAndDispatch) {
  auto spec = quadratic(40, Objective::max_omega_refined);
  spec.beta = 0.9;
  EXPECT_THROW(search_omega(spec), SpreadFloorError);
  EXPECT_THROW(run_search(spec), SpreadFloorError);
  spec.beta = std::nullopt;
  EXPECT_EQ(run_search(spec), search_omega(spec));
  EXPECT_EQ(run_search(quadratic(40)), search_max_D(quadratic(40)));
}

TEST(SearchOmega, SymmetryPruningKeepsWinner) {
  for (std::int64_t n = 16; n <= 512; n += 16) {
    auto spec = quadratic(n, Objective::max_omega_refined);
    const auto full = search_omega(spec);
    spec.symmetry_pruning = true;
    const auto pruned = search_omega(spec);
    ASSERT_EQ(pruned.winner, full.winner) << n;
    ASSERT_EQ(pruned.omega_refined, full.omega_refined);
  }
}

TEST(EvaluateCandidate, Examples) {
  const auto q = evaluate_candidate(RingPolynomial(512, {0, 31, 64}));
  EXPECT_EQ(q.D, 32);
  EXPECT_EQ(q.zeta, 4);
  EXPECT_EQ(q.zeta_refined, 3);
  EXPECT_EQ(q.epsilon, 128);
  ASSERT_TRUE(q.entropy_bits.has_value());

  const auto bad = evaluate_candidate(RingPolynomial(512, {0, 31, 64, 64, 32, 64, 32}));
  EXPECT_EQ(bad.D, 32);
  EXPECT_EQ(bad.zeta_refined, 2);
  EXPECT_NEAR(bad.omega, 27.73, 0.005);
  EXPECT_NEAR(*bad.omega_refined, 6.93, 0.005);

  const auto six = evaluate_candidate(RingPolynomial(512, {0, 15, 16, 128, 32, 32, 64}));
  EXPECT_EQ(six.D, 26);
  EXPECT_EQ(six.zeta, 8);
  EXPECT_EQ(six.zeta_refined, 6);
  EXPECT_EQ(six.epsilon, 64);
  EXPECT_NEAR(*six.omega_refined, 19.55, 0.005);

  const auto id = evaluate_candidate(RingPolynomial(100, {0, 1}));
  EXPECT_EQ(id.D, 2);
  EXPECT_EQ(id.zeta, 1);
  EXPECT_FALSE(id.entropy_bits.has_value());

  EXPECT_THROW(evaluate_candidate(RingPolynomial(5, {0, 0, 1})), NotPermutationError);
}

TEST(EvaluateCandidate, AgreesWithOracleOnRandomQpps) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    const std::int64_t n = 8 * (1 + static_cast<std::int64_t>(rng() % 80));
    const QppCriterion qpp(n);
    Residue f1 = 0, f2 = 0;
    do {
      f1 = static_cast<Residue>(rng() % n);
      f2 = static_cast<Residue>(rng() % n);
    } while (!qpp(f1, f2));
    const auto seq = oracle::sequence({0, f1, f2}, n);
    const auto m = evaluate_candidate(RingPolynomial(n, {0, f1, f2}));
    ASSERT_EQ(m.D, oracle::spread_lee(seq));
    ASSERT_EQ(m.D_E, oracle::spread_l1(seq));
    ASSERT_EQ(m.zeta, n / oracle::gcd(2 * f2, n));
    ASSERT_EQ(m.zeta * m.epsilon, n);
    ASSERT_NEAR(m.omega, std::log(static_cast<double>(m.D)) * static_cast<double>(m.zeta), 1e-9);
  }
}

}  // namespace
}  // namespace ppil
