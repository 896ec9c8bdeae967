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

// ppil: command-line front end. Every command prints one JSON report
// {schema_version, command, inputs, outputs, timing_ms} on stdout, except
// `export --format txt|csv`, which prints the raw sequence.
//
// Exit codes: 0 ok, 1 domain failure (not a permutation, no QPP, nothing
// above the spread floor, ...), 2 usage or parse error.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ppil/designs.hpp"
#include "ppil/error.hpp"
#include "ppil/geometry.hpp"
#include "ppil/inverse.hpp"
#include "ppil/metrics.hpp"
#include "ppil/modring.hpp"
#include "ppil/permcheck.hpp"
#include "ppil/search.hpp"

namespace {

using nlohmann::ordered_json;
using ppil::Residue;
using ppil::RingPolynomial;

constexpr const char* kSchemaVersion = "1.0";

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

// Bad command-line input discovered after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t parse_int(const std::string& text, const std::string& what) {
  std::string t = text;
  t.erase(0, t.find_first_not_of(" \t"));
  t.erase(t.find_last_not_of(" \t") + 1);
  std::int64_t v = 0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (t.empty() || ec != std::errc() || ptr != last) {
    throw UsageError("cannot parse " + what + " '" + text + "' as an integer");
  }
  return v;
}

std::int64_t checked_modulus(std::int64_t n) {
  if (n < 2 || n > ppil::kMaxModulus) {
    throw UsageError("N must satisfy 2 <= N <= 2^31, got " + std::to_string(n));
  }
  return n;
}

// "f0,f1,f2,..." -> coefficients (reduced mod N by RingPolynomial).
std::vector<Residue> parse_coefficients(const std::string& text) {
  std::vector<Residue> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_int(item, "coefficient"));
  if (out.empty() || (!text.empty() && text.back() == ',')) {
    throw UsageError("coefficients must be a comma-separated list f0,f1,f2,...");
  }
  return out;
}

RingPolynomial parse_polynomial(std::int64_t n, const std::string& coeffs) {
  return RingPolynomial(checked_modulus(n), parse_coefficients(coeffs));
}

std::vector<ppil::CoefficientRange> parse_bounds(const std::string& text) {
  std::vector<ppil::CoefficientRange> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("bounds take the form lo:hi,lo:hi,...");
    out.push_back({parse_int(item.substr(0, colon), "bound"),
                   parse_int(item.substr(colon + 1), "bound")});
  }
  return out;
}

ordered_json coefficient_array(const RingPolynomial& p) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < std::max<std::size_t>(p.coefficients().size(), 1); ++i) {
    a.push_back(p.coefficient(static_cast<int>(i)));
  }
  return a;
}

ordered_json polynomial_json(const RingPolynomial& p) {
  return {{"N", p.modulus()},
          {"text", p.to_string()},
          {"coefficients", coefficient_array(p)},
          {"degree", p.degree()}};
}

template <typename T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json metrics_json(const ppil::MetricsReport& r) {
  return {{"N", r.N},
          {"D", r.D},
          {"D_E", r.D_E},
          {"zeta", r.zeta},
          {"epsilon", r.epsilon},
          {"zeta_refined", optional_json(r.zeta_refined)},
          {"omega", r.omega},
          {"omega_refined", optional_json(r.omega_refined)},
          {"corner_merit", r.corner_merit},
          {"entropy_bits", optional_json(r.entropy_bits)},
          {"spread_capped", r.spread_capped}};
}

ordered_json collision_json(const ppil::NotPermutationError& e) {
  return {{"first", e.first()}, {"second", e.second()}, {"value", e.value()}};
}

ordered_json search_json(const ppil::SearchResult& r) {
  return {{"winner", polynomial_json(r.winner)},
          {"D", r.D},
          {"zeta", r.zeta},
          {"zeta_refined", optional_json(r.zeta_refined)},
          {"omega_refined", optional_json(r.omega_refined)},
          {"candidates_examined", r.candidates_examined},
          {"ties_at_optimum", r.ties_at_optimum}};
}

const char* family_name(ppil::PackingFamily f) {
  switch (f) {
    case ppil::PackingFamily::two_p_squared:
      return "2p^2";
    case ppil::PackingFamily::centered_square:
      return "p^2+(p-1)^2";
    case ppil::PackingFamily::inspection_n4:
      return "inspection";
  }
  return "";
}

// Permutation values, rejecting non-permutations with evidence.
std::vector<Residue> checked_sequence(const RingPolynomial& poly) {
  auto values = ppil::eval_sequence(poly);
  if (auto c = ppil::find_collision(values)) {
    throw ppil::NotPermutationError(c->first, c->second, c->value);
  }
  return values;
}

struct Context {
  unsigned workers = 0;
  ordered_json inputs = ordered_json::object();
  ordered_json outputs = ordered_json::object();
  bool raw_output = false;  // export txt/csv writes its own stdout
  std::string report_path;  // export json -o
  bool failed = false;      // report printed, but exit 1
};

// Integer-only summary of a QPP that never materializes the permutation.
ordered_json quadratic_summary(const RingPolynomial& p) {
  const std::int64_t n = p.modulus();
  const Residue f1 = p.coefficient(1);
  const Residue f2 = p.coefficient(2);
  const std::int64_t eps = std::gcd(ppil::mul_mod(2, f2, n), n);
  const std::int64_t zeta = n / eps;
  std::set<Residue> disturbance;
  for (std::int64_t x = 0; x < zeta; ++x) {
    disturbance.insert(ppil::mul_mod(f2, ppil::mul_mod(x, x, n), n));
  }
  const std::int64_t d = ppil::qpp_spread(n, f1, f2);
  const auto zr = static_cast<std::int64_t>(disturbance.size());
  return {{"D", d},
          {"zeta", zeta},
          {"zeta_refined", zr},
          {"epsilon", eps},
          {"omega_refined", ppil::omega_refined(d, zr)},
          {"D_equals_sqrt_2N", d * d == 2 * n}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation-polynomial interleaver toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  app.add_option("--workers", ctx.workers, "Worker threads for searches (0: all cores)");

  std::function<void()> action;
  std::string command;

  std::int64_t n_arg = 0;
  std::string coeffs_arg;
  auto add_poly_args = [&](CLI::App* sub) {
    sub->add_option("N", n_arg, "Modulus")->required();
    sub->add_option("coeffs", coeffs_arg, "Coefficients f0,f1,f2,...")->required();
  };

  // validate
  auto* validate = app.add_subcommand("validate", "Permutation and irreducible-degree verdict");
  add_poly_args(validate);
  validate->callback([&] {
    action = [&] {
      const RingPolynomial poly = parse_polynomial(n_arg, coeffs_arg);
      ctx.inputs = {{"N", n_arg}, {"coeffs", coeffs_arg}};
      const auto verdict = ppil::check_permutation(poly);
      ctx.outputs["polynomial"] = polynomial_json(poly);
      ctx.outputs["permutation"] = verdict.is_permutation;
      ctx.outputs["method"] = verdict.method == ppil::PermutationMethod::algebraic_quadratic
                                  ? "algebraic_quadratic"
                                  : "brute_force";
      const bool irreducible = ppil::is_irreducible_degree(poly);
      ctx.outputs["irreducible_degree"] = irreducible;
      ctx.outputs["reduced"] =
          irreducible ? ordered_json(nullptr) : polynomial_json(ppil::reduce_degree(poly));
      if (!verdict.is_permutation) {
        const auto values = ppil::eval_sequence(poly);
        const auto c = ppil::find_collision(values);
        ctx.outputs["collision"] = {{"first", c->first}, {"second", c->second}, {"value", c->value}};
        ctx.failed = true;
      }
    };
  });

  // metrics
  bool optimize_f0 = false;
  int fit_inverse = 0;
  auto* metrics = app.add_subcommand("metrics", "Full metric report of a permutation polynomial");
  add_poly_args(metrics);
  metrics->add_flag("--optimize-f0", optimize_f0, "Report the constant term maximizing corner merit");
  metrics->add_option("--fit-inverse", fit_inverse, "Fit an inverse polynomial up to this degree")
      ->check(CLI::Range(1, 64));
  metrics->callback([&] {
    action = [&] {
      const RingPolynomial poly = parse_polynomial(n_arg, coeffs_arg);
      ctx.inputs = {{"N", n_arg}, {"coeffs", coeffs_arg}, {"optimize_f0", optimize_f0},
                    {"fit_inverse", fit_inverse}};
      ctx.outputs["polynomial"] = polynomial_json(poly);
      ctx.outputs["metrics"] = metrics_json(ppil::evaluate_candidate(poly));
      if (optimize_f0) {
        const auto choice = ppil::optimize_constant(poly, ctx.workers);
        const ppil::InterleaverCode given(poly);
        ctx.outputs["optimize_f0"] = {{"f0", choice.f0},
                                      {"merit", choice.merit},
                                      {"merit_at_given_f0", ppil::corner_merit(given)}};
      }
      if (fit_inverse > 0) {
        const auto inv = ppil::fit_polynomial_inverse(poly, fit_inverse);
        ctx.outputs["inverse"] = inv ? polynomial_json(*inv) : ordered_json(nullptr);
      }
    };
  });

  // searches
  std::string bounds_arg;
  int degree_arg = 2;
  bool symmetry = false;
  std::optional<double> beta_arg;
  auto add_search_args = [&](CLI::App* sub) {
    sub->add_option("N", n_arg, "Modulus")->required();
    sub->add_option("--degree", degree_arg, "Polynomial degree (> 2 needs --bounds)");
    sub->add_option("--bounds", bounds_arg, "Ranges for f1..f_degree as lo:hi,lo:hi,...");
    sub->add_flag("--symmetry-pruning", symmetry, "Restrict f1, f2 to <= N/2");
  };
  auto run_search_command = [&](ppil::Objective objective) {
    ppil::SearchSpec spec;
    spec.N = checked_modulus(n_arg);
    spec.degree = degree_arg;
    spec.objective = objective;
    spec.beta = beta_arg;
    spec.coefficient_bounds = parse_bounds(bounds_arg);
    spec.symmetry_pruning = symmetry;
    ctx.inputs = {{"N", n_arg}, {"degree", degree_arg}, {"bounds", bounds_arg},
                  {"symmetry_pruning", symmetry}};
    if (objective == ppil::Objective::max_omega_refined) {
      const double beta = beta_arg.value_or(ppil::default_beta(spec.N));
      ctx.inputs["beta"] = beta;
      ctx.outputs["spread_floor"] = ppil::spread_floor(spec.N, beta);
    }
    const auto result = ppil::run_search(spec, ctx.workers);
    const ordered_json payload = search_json(result);
    for (const auto& [k, v] : payload.items()) ctx.outputs[k] = v;
  };
  auto* search_maxd = app.add_subcommand("search-maxd", "Exhaustive search maximizing D");
  add_search_args(search_maxd);
  search_maxd->callback([&] { action = [&] { run_search_command(ppil::Objective::max_D); }; });

  auto* search_omega = app.add_subcommand("search-omega", "Exhaustive search maximizing ln(D)*zeta'");
  add_search_args(search_omega);
  search_omega->add_option("--beta", beta_arg, "Spread floor factor")->check(CLI::Range(0.0, 1.0));
  search_omega->callback(
      [&] { action = [&] { run_search_command(ppil::Objective::max_omega_refined); }; });

  // ms-seq
  int k_arg = 0;
  auto* ms_seq = app.add_subcommand("ms-seq", "k-th maximum-spread QPP");
  ms_seq->add_option("k", k_arg, "Sequence index, 1..16")->required();
  ms_seq->callback([&] {
    action = [&] {
      ctx.inputs = {{"k", k_arg}};
      if (k_arg < 1 || k_arg > 16) throw UsageError("k must satisfy 1 <= k <= 16");
      const auto term = ppil::ms_qpp(k_arg);
      ctx.outputs["polynomial"] = polynomial_json(term.poly);
      ctx.outputs["strict_qpp"] = term.strict_qpp;
      if (term.poly.degree() == 2) {
        ctx.outputs["metrics"] = quadratic_summary(term.poly);
      } else {
        ctx.outputs["metrics"] = nullptr;
      }
      if (k_arg >= 4) {
        const auto inv = ppil::ms_inverse(k_arg);
        ctx.outputs["inverse"] = polynomial_json(inv);
        if (term.poly.modulus() <= (std::int64_t{1} << 24)) {
          ctx.outputs["inverse_composes_to_identity"] =
              ppil::composes_to_identity(inv, term.poly);
        }
      }
    };
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Spread upper bounds for N");
  bounds->add_option("N", n_arg, "Modulus")->required();
  bounds->callback([&] {
    action = [&] {
      ctx.inputs = {{"N", n_arg}};
      const auto b = ppil::bounds(checked_modulus(n_arg));
      ctx.outputs = {{"ub_D", b.ub_D},
                     {"ub_D_int", b.ub_D_int},
                     {"ub_DE", optional_json(b.ub_DE)},
                     {"ub_DE_family", b.ub_DE_family ? ordered_json(family_name(*b.ub_DE_family))
                                                     : ordered_json(nullptr)}};
    };
  });

  // orbits
  auto* orbits = app.add_subcommand("orbits", "Isometry group and orbit decomposition");
  add_poly_args(orbits);
  orbits->callback([&] {
    action = [&] {
      const RingPolynomial poly = parse_polynomial(n_arg, coeffs_arg);
      ctx.inputs = {{"N", n_arg}, {"coeffs", coeffs_arg}};
      const ppil::InterleaverCode code(poly);
      const auto dec = ppil::orbits(code);
      ordered_json translations = ordered_json::array();
      for (const auto& t : dec.translations) translations.push_back({t.k0, t.k1});
      ordered_json orbit_list = ordered_json::array();
      for (const auto& orbit : dec.orbits) {
        ordered_json pts = ordered_json::array();
        for (const auto& p : orbit) pts.push_back({p.x, p.y});
        orbit_list.push_back(std::move(pts));
      }
      ctx.outputs = {{"zeta", static_cast<std::int64_t>(dec.orbits.size())},
                     {"epsilon", static_cast<std::int64_t>(dec.translations.size())},
                     {"representatives", dec.representatives},
                     {"translations", std::move(translations)},
                     {"orbits", std::move(orbit_list)}};
    };
  });

  // profile
  Residue rep_arg = 0;
  auto* profile = app.add_subcommand("profile", "Distance profile around one code point");
  add_poly_args(profile);
  profile->add_option("--rep", rep_arg, "x-coordinate of the point");
  profile->callback([&] {
    action = [&] {
      const RingPolynomial poly = parse_polynomial(n_arg, coeffs_arg);
      ctx.inputs = {{"N", n_arg}, {"coeffs", coeffs_arg}, {"rep", rep_arg}};
      if (rep_arg < 0 || rep_arg >= n_arg) throw UsageError("--rep must lie in [0, N-1]");
      const ppil::InterleaverCode code(poly);
      ordered_json rows = ordered_json::array();
      for (const auto& [dist, count] : ppil::spread_profile(code, rep_arg)) {
        rows.push_back({{"distance", dist}, {"count", count}});
      }
      const auto local = ppil::local_spread(code, rep_arg);
      ctx.outputs = {{"profile", std::move(rows)},
                     {"local_spread", local.value},
                     {"capped", local.capped}};
    };
  });

  // linear-ms
  auto* linear_ms = app.add_subcommand("linear-ms", "Linear maximum-spread permutations for N = 2n^2");
  linear_ms->add_option("N", n_arg, "Modulus")->required();
  linear_ms->callback([&] {
    action = [&] {
      ctx.inputs = {{"N", n_arg}};
      const auto f1s = ppil::linear_ms_enumerate(checked_modulus(n_arg), ctx.workers);
      ctx.outputs = {{"count", f1s.size()}, {"f1", f1s}};
    };
  });

  // scan-existence
  std::int64_t nmax_arg = 0;
  auto* scan = app.add_subcommand("scan-existence", "Moduli up to Nmax admitting an irreducible QPP");
  scan->add_option("Nmax", nmax_arg, "Largest modulus")->required();
  scan->callback([&] {
    action = [&] {
      ctx.inputs = {{"Nmax", nmax_arg}};
      if (nmax_arg < 2 || nmax_arg > ppil::kMaxModulus) throw UsageError("Nmax must lie in [2, 2^31]");
      const auto ns = ppil::scan_existence(nmax_arg, ctx.workers);
      ctx.outputs = {{"count", ns.size()}, {"N", ns}};
    };
  });

  // export
  std::string format_arg = "txt";
  std::string output_arg;
  auto* exp = app.add_subcommand("export", "Write the permutation sequence");
  add_poly_args(exp);
  exp->add_option("--format", format_arg, "txt: f(x) per line; csv: x,fx; json: full report")
      ->check(CLI::IsMember({"txt", "csv", "json"}));
  exp->add_option("-o,--output", output_arg, "Write to this file instead of stdout");
  exp->callback([&] {
    action = [&] {
      const RingPolynomial poly = parse_polynomial(n_arg, coeffs_arg);
      ctx.inputs = {{"N", n_arg}, {"coeffs", coeffs_arg}, {"format", format_arg}};
      const auto values = checked_sequence(poly);
      if (format_arg == "json") {
        ctx.outputs["polynomial"] = polynomial_json(poly);
        ctx.outputs["metrics"] = metrics_json(ppil::evaluate_candidate(poly));
        ctx.outputs["sequence"] = values;
        ctx.report_path = output_arg;
        return;
      }
      ctx.raw_output = true;
      std::ostringstream body;
      if (format_arg == "csv") body << "x,fx\n";
      for (std::size_t x = 0; x < values.size(); ++x) {
        if (format_arg == "csv") body << x << ',';
        body << values[x] << '\n';
      }
      if (output_arg.empty()) {
        std::cout << body.str();
      } else {
        std::ofstream out(output_arg);
        out << body.str();
        if (!out) throw std::runtime_error("cannot write " + output_arg);
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ppil::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ppil::NotPermutationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    ctx.outputs = {{"error", e.what()}, {"collision", collision_json(e)}};
    ctx.raw_output = false;
    code = kExitDomain;
  } catch (const ppil::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    ctx.outputs = {{"error", e.what()}};
    ctx.raw_output = false;
    code = kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  if (ctx.failed) code = kExitDomain;
  if (ctx.raw_output) return code;

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  ordered_json report = {{"schema_version", kSchemaVersion},
                         {"command", command},
                         {"inputs", ctx.inputs},
                         {"outputs", ctx.outputs},
                         {"timing_ms", elapsed.count()}};
  if (code == kExitOk && !ctx.report_path.empty()) {
    std::ofstream out(ctx.report_path);
    out << report.dump(2) << '\n';
    if (!out) {
      std::cerr << "error: cannot write " << ctx.report_path << '\n';
      return kExitDomain;
    }
    return code;
  }
  std::cout << report.dump(2) << '\n';
  return code;
}
