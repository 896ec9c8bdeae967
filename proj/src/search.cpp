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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "ppil/error.hpp"
#include "ppil/geometry.hpp"
#include "ppil/parallel.hpp"
#include "ppil/permcheck.hpp"

namespace ppil {

double default_beta(std::int64_t n) { return n <= 1600 ? 0.45 : 0.30; }

std::int64_t spread_floor(std::int64_t n, double beta) {
  if (n < 2) throw InvalidArgument("spread_floor needs N >= 2");
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw InvalidArgument("beta must be a finite non-negative number");
  }
  const double raw = beta * static_cast<double>(isqrt(2 * n));
  // Absorb representation error so 0.45 * 20 stays 9.
  return static_cast<std::int64_t>(std::ceil(raw - 1e-9));
}

namespace {

CoefficientRange resolve_range(const SearchSpec& spec, std::size_t index) {
  CoefficientRange r{0, spec.N - 1};
  if (index < spec.coefficient_bounds.size()) r = spec.coefficient_bounds[index];
  if (r.lo < 0 || r.hi >= spec.N) {
    throw InvalidArgument("coefficient range for f" + std::to_string(index + 1) +
                          " must lie in [0, N-1]");
  }
  return r;
}

void validate_spec(const SearchSpec& spec) {
  if (spec.N < 2 || spec.N > kMaxModulus) {
    throw InvalidArgument("search needs 2 <= N <= 2^31, got " + std::to_string(spec.N));
  }
  if (spec.degree < 2) throw InvalidArgument("search degree must be at least 2");
  if (spec.coefficient_bounds.size() > static_cast<std::size_t>(spec.degree)) {
    throw InvalidArgument("more coefficient bounds than coefficients");
  }
  if (spec.degree > 2 && spec.coefficient_bounds.size() != static_cast<std::size_t>(spec.degree)) {
    throw InvalidArgument("degree > 2 searches need explicit bounds for f1..f_degree");
  }
}

// Distinct values of f2*x^2 over x < zeta: the refined non-linearity of any
// QPP with this f2.
std::int64_t quadratic_zeta_refined(std::int64_t n, Residue f2, std::int64_t zeta) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::int64_t count = 0;
  for (std::int64_t x = 0; x < zeta; ++x) {
    const Residue v = mul_mod(f2, mul_mod(x, x, n), n);
    if (!seen[v]) {
      seen[v] = 1;
      ++count;
    }
  }
  return count;
}

struct ItemResult {
  std::int64_t examined = 0;
  std::int64_t best_D = 0;  // 0: nothing admissible reached the threshold
  Residue best_f1 = 0;
  std::int64_t ties = 0;
  std::int64_t zeta_refined = 0;
};

std::uint64_t pack_key(std::int64_t d, std::int64_t z) {
  return (static_cast<std::uint64_t>(d) << 32) | static_cast<std::uint64_t>(z);
}
std::int64_t key_D(std::uint64_t k) { return static_cast<std::int64_t>(k >> 32); }
std::int64_t key_Z(std::uint64_t k) { return static_cast<std::int64_t>(k & 0xffffffffu); }

// Smallest d >= 1 with ln(d)*z >= ln(dg)*zg.
std::int64_t min_competitive_D(std::int64_t z, std::int64_t dg, std::int64_t zg) {
  if (dg <= 1) return 1;
  const double est = std::exp(static_cast<double>(zg) * std::log(static_cast<double>(dg)) /
                              static_cast<double>(z));
  if (est > 4e9) return std::numeric_limits<std::int64_t>::max();
  std::int64_t d = std::max<std::int64_t>(1, static_cast<std::int64_t>(est) - 2);
  while (d > 1 && compare_omega(d - 1, z, dg, zg) >= 0) --d;
  while (compare_omega(d, z, dg, zg) < 0) ++d;
  return d;
}

struct QuadraticSpace {
  std::int64_t n;
  CoefficientRange r1;
  std::vector<Residue> f2_values;
};

QuadraticSpace quadratic_space(const SearchSpec& spec) {
  const std::int64_t n = spec.N;
  if (!exists_irreducible_qpp(n)) throw NoQppError(n);
  QuadraticSpace space{n, resolve_range(spec, 0), {}};
  CoefficientRange r2 = resolve_range(spec, 1);
  if (spec.symmetry_pruning) {
    space.r1.hi = std::min(space.r1.hi, n / 2);
    r2.hi = std::min(r2.hi, n / 2);
  }
  const QppCriterion qpp(n);
  for (Residue f2 = r2.lo; f2 <= r2.hi; ++f2) {
    if (mul_mod(2, f2, n) == 0 || !qpp.admits_f2(f2)) continue;
    space.f2_values.push_back(f2);
  }
  return space;
}

SearchResult finish_quadratic(const QuadraticSpace& space, const std::vector<ItemResult>& items,
                              std::size_t best_index, std::int64_t examined,
                              std::int64_t ties) {
  const std::int64_t n = space.n;
  const ItemResult& best = items[best_index];
  const Residue f2 = space.f2_values[best_index];
  SearchResult out;
  out.winner = RingPolynomial(n, {0, best.best_f1, f2});
  out.D = best.best_D;
  out.zeta = n / std::gcd(mul_mod(2, f2, n), n);
  out.zeta_refined = best.zeta_refined;
  out.omega_refined = omega_refined(best.best_D, best.zeta_refined);
  out.candidates_examined = examined;
  out.ties_at_optimum = ties;
  return out;
}

SearchResult quadratic_max_D(const SearchSpec& spec, unsigned workers) {
  const QuadraticSpace space = quadratic_space(spec);
  const std::int64_t n = space.n;
  const QppCriterion qpp(n);
  std::vector<ItemResult> items(space.f2_values.size());
  std::atomic<std::int64_t> shared_best{0};

  parallel_for(items.size(), workers, [&](std::size_t i) {
    const Residue f2 = space.f2_values[i];
    ItemResult& item = items[i];
    for (Residue f1 = space.r1.lo; f1 <= space.r1.hi; ++f1) {
      if (!qpp(f1, f2)) continue;
      ++item.examined;
      const std::int64_t threshold =
          std::max<std::int64_t>({1, item.best_D, shared_best.load(std::memory_order_relaxed)});
      const std::int64_t d = qpp_spread(n, f1, f2, threshold);
      if (d < threshold) continue;
      if (d > item.best_D) {
        item.best_D = d;
        item.best_f1 = f1;
        item.ties = 1;
        std::int64_t seen = shared_best.load(std::memory_order_relaxed);
        while (seen < d && !shared_best.compare_exchange_weak(seen, d)) {
        }
      } else {
        ++item.ties;
      }
    }
  });

  std::int64_t examined = 0;
  std::int64_t best_D = 0;
  std::size_t best_index = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    examined += items[i].examined;
    if (items[i].best_D > best_D) {
      best_D = items[i].best_D;
      best_index = i;
    }
  }
  if (examined == 0) throw EmptySearchError("no admissible QPP inside the coefficient bounds");
  std::int64_t ties = 0;
  for (const auto& item : items) {
    if (item.best_D == best_D) ties += item.ties;
  }
  const Residue f2 = space.f2_values[best_index];
  items[best_index].zeta_refined =
      quadratic_zeta_refined(n, f2, n / std::gcd(mul_mod(2, f2, n), n));
  return finish_quadratic(space, items, best_index, examined, ties);
}

SearchResult quadratic_omega(const SearchSpec& spec, unsigned workers) {
  const QuadraticSpace space = quadratic_space(spec);
  const std::int64_t n = space.n;
  const std::int64_t floor = spread_floor(n, spec.beta.value_or(default_beta(n)));
  const std::int64_t cap = isqrt(2 * n);
  const QppCriterion qpp(n);

  std::vector<ItemResult> items(space.f2_values.size());
  parallel_for(items.size(), workers, [&](std::size_t i) {
    const Residue f2 = space.f2_values[i];
    items[i].zeta_refined = quadratic_zeta_refined(n, f2, n / std::gcd(mul_mod(2, f2, n), n));
  });

  // Visit f2 with the largest attainable objective first so the shared best
  // rises early; results still merge in ascending f2.
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return items[a].zeta_refined > items[b].zeta_refined;
  });

  std::atomic<std::uint64_t> shared_best{0};
  parallel_for(order.size(), workers, [&](std::size_t slot) {
    const std::size_t i = order[slot];
    const Residue f2 = space.f2_values[i];
    ItemResult& item = items[i];
    const std::int64_t z = item.zeta_refined;
    std::uint64_t last_key = ~std::uint64_t{0};
    std::int64_t competitive = 1;
    for (Residue f1 = space.r1.lo; f1 <= space.r1.hi; ++f1) {
      if (!qpp(f1, f2)) continue;
      ++item.examined;
      const std::uint64_t key = shared_best.load(std::memory_order_relaxed);
      if (key != last_key) {
        last_key = key;
        competitive = min_competitive_D(z, key_D(key), key_Z(key));
      }
      const std::int64_t threshold = std::max({floor, competitive, item.best_D, std::int64_t{1}});
      if (threshold > cap) continue;
      const std::int64_t d = qpp_spread(n, f1, f2, threshold);
      if (d < threshold) continue;
      if (d > item.best_D) {
        item.best_D = d;
        item.best_f1 = f1;
        item.ties = 1;
        std::uint64_t seen = shared_best.load(std::memory_order_relaxed);
        const std::uint64_t mine = pack_key(d, z);
        while ((seen == 0 || compare_omega(d, z, key_D(seen), key_Z(seen)) > 0) &&
               !shared_best.compare_exchange_weak(seen, mine)) {
        }
      } else {
        ++item.ties;
      }
    }
  });

  std::int64_t examined = 0;
  std::optional<std::size_t> best_index;
  for (std::size_t i = 0; i < items.size(); ++i) {
    examined += items[i].examined;
    if (items[i].best_D < std::max<std::int64_t>(floor, 1)) continue;
    if (!best_index) {
      best_index = i;
      continue;
    }
    const ItemResult& b = items[*best_index];
    if (compare_omega(items[i].best_D, items[i].zeta_refined, b.best_D, b.zeta_refined) > 0) {
      best_index = i;
    }
  }
  if (examined == 0) throw EmptySearchError("no admissible QPP inside the coefficient bounds");
  if (!best_index) throw SpreadFloorError(n, floor);
  const ItemResult& b = items[*best_index];
  std::int64_t ties = 0;
  for (const auto& item : items) {
    if (item.best_D >= std::max<std::int64_t>(floor, 1) &&
        compare_omega(item.best_D, item.zeta_refined, b.best_D, b.zeta_refined) == 0) {
      ties += item.ties;
    }
  }
  return finish_quadratic(space, items, *best_index, examined, ties);
}

// Exhaustive search over explicit coefficient boxes for degree > 2.
struct GenericCandidate {
  std::vector<Residue> coeffs;  // f0 = 0, f1..f_degree
  std::int64_t D = 0;
  std::int64_t zeta = 0;
  std::optional<std::int64_t> zeta_refined;
};

// Tie order: smallest leading coefficient first, then downward.
bool precedes(const std::vector<Residue>& a, const std::vector<Residue>& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

SearchResult generic_search(const SearchSpec& spec, unsigned workers) {
  const std::int64_t n = spec.N;
  const auto deg = static_cast<std::size_t>(spec.degree);
  std::vector<CoefficientRange> ranges;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < deg; ++i) {
    CoefficientRange r = resolve_range(spec, i);
    if (spec.symmetry_pruning && i < 2) r.hi = std::min(r.hi, n / 2);
    ranges.push_back(r);
    const std::int64_t width = r.hi >= r.lo ? r.hi - r.lo + 1 : 0;
    total *= static_cast<std::uint64_t>(width);
  }
  if (total > (std::uint64_t{1} << 32)) throw InvalidArgument("coefficient box too large");
  const bool want_omega = spec.objective == Objective::max_omega_refined;
  const std::int64_t floor =
      want_omega ? spread_floor(n, spec.beta.value_or(default_beta(n))) : 0;

  std::vector<std::optional<GenericCandidate>> slots(static_cast<std::size_t>(total));
  parallel_for(slots.size(), workers, [&](std::size_t index) {
    std::vector<Residue> coeffs(deg + 1, 0);
    std::size_t rest = index;
    for (std::size_t i = 0; i < deg; ++i) {
      const auto width = static_cast<std::size_t>(ranges[i].hi - ranges[i].lo + 1);
      coeffs[i + 1] = ranges[i].lo + static_cast<Residue>(rest % width);
      rest /= width;
    }
    const RingPolynomial poly(n, coeffs);
    if (poly.degree() != spec.degree || !is_irreducible_degree(poly)) return;
    if (!is_permutation(poly)) return;
    const InterleaverCode code(poly);
    GenericCandidate c;
    c.coeffs = coeffs;
    c.zeta = orbit_count(code);
    std::vector<Residue> reps(static_cast<std::size_t>(c.zeta));
    std::iota(reps.begin(), reps.end(), Residue{0});
    c.D = spread_via_representatives(code, reps).value;
    if (std::gcd(coeffs[1], n) == 1) c.zeta_refined = zeta_refined(poly);
    slots[index] = std::move(c);
  });

  std::int64_t examined = 0;
  const GenericCandidate* best = nullptr;
  auto better = [&](const GenericCandidate& a, const GenericCandidate& b) {
    const int cmp = want_omega ? compare_omega(a.D, *a.zeta_refined, b.D, *b.zeta_refined)
                               : (a.D > b.D) - (a.D < b.D);
    if (cmp != 0) return cmp > 0;
    return precedes(a.coeffs, b.coeffs);
  };
  auto eligible = [&](const GenericCandidate& c) {
    return !want_omega || (c.zeta_refined && c.D >= std::max<std::int64_t>(floor, 1));
  };
  for (const auto& slot : slots) {
    if (!slot) continue;
    ++examined;
    if (eligible(*slot) && (!best || better(*slot, *best))) best = &*slot;
  }
  if (examined == 0) throw EmptySearchError("no admissible permutation inside the coefficient bounds");
  if (!best) throw SpreadFloorError(n, floor);
  std::int64_t ties = 0;
  for (const auto& slot : slots) {
    if (!slot || !eligible(*slot)) continue;
    const bool tie = want_omega
                         ? compare_omega(slot->D, *slot->zeta_refined, best->D,
                                         *best->zeta_refined) == 0
                         : slot->D == best->D;
    ties += tie;
  }
  SearchResult out;
  out.winner = RingPolynomial(n, best->coeffs);
  out.D = best->D;
  out.zeta = best->zeta;
  out.zeta_refined = best->zeta_refined;
  if (best->zeta_refined) out.omega_refined = omega_refined(best->D, *best->zeta_refined);
  out.candidates_examined = examined;
  out.ties_at_optimum = ties;
  return out;
}

}  // namespace

SearchResult search_max_D(const SearchSpec& spec, unsigned workers) {
  validate_spec(spec);
  if (spec.degree == 2) return quadratic_max_D(spec, workers);
  SearchSpec copy = spec;
  copy.objective = Objective::max_D;
  return generic_search(copy, workers);
}

SearchResult search_omega(const SearchSpec& spec, unsigned workers) {
  validate_spec(spec);
  if (spec.degree == 2) return quadratic_omega(spec, workers);
  SearchSpec copy = spec;
  copy.objective = Objective::max_omega_refined;
  return generic_search(copy, workers);
}

SearchResult run_search(const SearchSpec& spec, unsigned workers) {
  return spec.objective == Objective::max_D ? search_max_D(spec, workers)
                                            : search_omega(spec, workers);
}

MetricsReport evaluate_candidate(const RingPolynomial& poly) {
  const InterleaverCode code(poly);
  const std::int64_t n = code.length();
  MetricsReport r;
  r.N = n;
  r.zeta = orbit_count(code);
  r.epsilon = epsilon(code);
  std::vector<Residue> reps(static_cast<std::size_t>(r.zeta));
  std::iota(reps.begin(), reps.end(), Residue{0});
  const LocalSpread spread = spread_via_representatives(code, reps);
  r.D = spread.value;
  r.spread_capped = spread.capped;
  r.D_E = spread_DE(code);
  try {
    r.zeta_refined = zeta_refined(poly);
  } catch (const Unsupported&) {
  }
  r.omega = omega(r.D, r.zeta);
  if (r.zeta_refined) r.omega_refined = omega_refined(r.D, *r.zeta_refined);
  r.corner_merit = corner_merit(code);
  if ((n & (n - 1)) == 0) r.entropy_bits = parameter_entropy(poly);
  return r;
}

}  // namespace ppil
