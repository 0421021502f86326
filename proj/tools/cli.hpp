#ifndef DIRICHLET_TOOLS_CLI_HPP
#define DIRICHLET_TOOLS_CLI_HPP

// Command-line front end. Every library operation is reachable through one
// `<group> <verb>` pair listed in commands(); run() parses, dispatches and
// writes JSON (default) or CSV.
//
// Exit codes: 0 success, 1 failed contract in a suite run, 2 usage error or
// rejected input.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dirichlet/acceptance.hpp"
#include "dirichlet/bounds.hpp"
#include "dirichlet/frequency.hpp"
#include "dirichlet/io.hpp"
#include "dirichlet/neder.hpp"
#include "dirichlet/perron.hpp"
#include "dirichlet/report.hpp"
#include "dirichlet/riesz.hpp"
#include "dirichlet/series.hpp"

namespace dirichlet::cli {

/// Every flag of every command; each command registers the ones it reads.
struct Config {
  // output and tolerances
  std::string format = "json";
  std::string out_path;
  std::uint64_t seed = 1;
  double tol_sup = 1e-4;
  double quad_tol = 1e-12;
  double tol_slope = 1e-3;
  bool timing = false;
  // line grid
  double sigma = 1e-3;
  double grid_t_min = 0.0;
  double grid_t_max = 100.0;
  double grid_step = 1e-2;
  // frequency
  std::string kind = "log";
  std::size_t n = 100;
  std::vector<double> params;
  std::string freq_file;
  // series
  std::string coeffs = "ones";
  std::string series_file;
  std::string reference = "self";
  // operation parameters
  double k = 1.0, x = 1.0, l = 1.0, delta = 0.1, d = 2.0;
  double alpha = 1.0, beta = 1.0, t = 1.0, tau = 0.0;
  double s_re = 0.0, s_im = 0.0, w_re = 0.0, w_im = 0.0;
  double epsilon = 0.5, T = 0.0, step = 0.05;
  std::optional<double> tolerance;
  std::size_t n_index = 1, terms = 0, n_first = 2, n_last = 0;
  std::vector<double> xs;
  std::string variant = "paper", regime = "BC", family = "partial-sums";
  double regime_param = 0.0;
  std::size_t members = 0;
  bool kahan = false, with_points = true;
  long m = 3, m_max = 0, r_cap = 5000;
  std::size_t resolution = 4096, K = 1, L = 3;
  std::optional<double> c_obs;
};

/// JSON payload, plus CSV text for commands with a tabular form.
struct Result {
  json body;
  std::optional<std::string> csv;
};

enum class Input { none, frequency, series };

struct Command {
  std::string group;
  std::string verb;
  std::string operation;  ///< library operation the command exposes
  std::string help;
  Input input = Input::none;
  std::function<void(CLI::App&, Config&)> options;
  std::function<Result(const Config&)> handler;
};

namespace detail {

inline std::string pairs_csv(const std::vector<std::pair<double, double>>& rows) {
  std::ostringstream os;
  write_pairs_csv(os, rows);
  return os.str();
}

inline Frequency load_frequency(const Config& c) {
  if (!c.freq_file.empty()) return read_frequency_file(c.freq_file);
  return make_frequency(c.kind, c.params, c.n);
}

inline std::vector<complex> load_coefficients(const std::string& spec, const Frequency& f, std::uint64_t seed) {
  const auto& tags = coefficient_tags();
  if (std::find(tags.begin(), tags.end(), spec) != tags.end()) return builtin_coefficients(spec, f, seed);
  return read_coefficients_file(spec);
}

/// Series descriptor: {"frequency": <tag or {"kind","params","n"} or {"file"}>,
///                     "n": M, "coefficients": <tag or {"file"}>, "reference": <name>}.
/// Relative file paths are taken relative to the descriptor.
inline DirichletSeries load_series_descriptor(const Config& c) {
  std::ifstream in(c.series_file);
  if (!in) throw Rejection("cannot open series descriptor " + c.series_file);
  const auto j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw Rejection("series descriptor is not a JSON object");
  const auto dir = std::filesystem::path(c.series_file).parent_path();
  auto resolve = [&](const std::string& p) {
    const std::filesystem::path path(p);
    return (path.is_absolute() ? path : dir / path).string();
  };

  const std::size_t n = j.value("n", c.n);
  std::optional<Frequency> f;
  const auto& fj = j.at("frequency");
  if (fj.is_string()) {
    f = make_frequency(fj.get<std::string>(), {}, n);
  } else if (fj.contains("file")) {
    f = read_frequency_file(resolve(fj.at("file").get<std::string>()));
  } else {
    f = make_frequency(fj.at("kind").get<std::string>(), fj.value("params", std::vector<double>{}), fj.value("n", n));
  }

  std::vector<complex> coeffs;
  const auto& cj = j.at("coefficients");
  if (cj.is_string()) coeffs = builtin_coefficients(cj.get<std::string>(), *f, c.seed);
  else coeffs = read_coefficients_file(resolve(cj.at("file").get<std::string>()));
  return attach_reference(*f, std::move(coeffs), j.value("reference", c.reference));
}

inline DirichletSeries load_series(const Config& c) {
  if (!c.series_file.empty()) return load_series_descriptor(c);
  Frequency f = load_frequency(c);
  auto coeffs = load_coefficients(c.coeffs, f, c.seed);
  return attach_reference(std::move(f), std::move(coeffs), c.reference);
}

inline LineGrid grid(const Config& c) {
  LineGrid g{c.sigma, c.grid_t_min, c.grid_t_max, c.grid_step};
  g.validate();
  return g;
}

inline BoundVariant variant(const Config& c) {
  if (c.variant == "paper") return BoundVariant::paper;
  if (c.variant == "exact") return BoundVariant::exact;
  throw Rejection("variant must be 'paper' or 'exact'");
}

inline std::size_t terms(const Config& c, const DirichletSeries& d) { return c.terms == 0 ? d.size() : c.terms; }

inline std::string ratios_csv(const AbscissaEstimate& e) { return pairs_csv(e.ratios); }

inline std::string condition_csv(const ConditionReport& r) {
  std::vector<std::pair<double, double>> rows;
  for (std::size_t i = 0; i < r.log_constants.size(); ++i)
    rows.emplace_back(static_cast<double>(i + 1), static_cast<double>(r.log_constants[i]));
  return pairs_csv(rows);
}

inline std::string values_csv(const Frequency& f) {
  std::vector<std::pair<double, double>> rows;
  for (std::size_t i = 0; i < f.size(); ++i) rows.emplace_back(static_cast<double>(i + 1), f[i]);
  return pairs_csv(rows);
}

inline std::string coefficients_csv(const std::vector<complex>& c) {
  std::ostringstream os;
  write_coefficients_csv(os, c);
  return os.str();
}

// option groups --------------------------------------------------------------

inline void grid_options(CLI::App& a, Config& c) {
  a.add_option("--sigma", c.sigma, "real part of the line")->capture_default_str();
  a.add_option("--grid-t-min", c.grid_t_min, "grid start in t")->capture_default_str();
  a.add_option("--grid-t-max", c.grid_t_max, "grid end in t")->capture_default_str();
  a.add_option("--grid-step", c.grid_step, "grid step in t")->capture_default_str();
}

inline void k_option(CLI::App& a, Config& c) { a.add_option("--k", c.k, "order k")->capture_default_str(); }
inline void x_option(CLI::App& a, Config& c) { a.add_option("--x", c.x, "length x")->capture_default_str(); }
inline void s_options(CLI::App& a, Config& c) {
  a.add_option("--s-re", c.s_re, "Re s")->capture_default_str();
  a.add_option("--s-im", c.s_im, "Im s")->capture_default_str();
}
inline void n_index_option(CLI::App& a, Config& c) {
  a.add_option("--n-index", c.n_index, "1-based index N")->capture_default_str();
}
inline void variant_option(CLI::App& a, Config& c) {
  a.add_option("--variant", c.variant, "constant variant")->check(CLI::IsMember({"paper", "exact"}))->capture_default_str();
}
inline void perron_options(CLI::App& a, Config& c) {
  k_option(a, c);
  x_option(a, c);
  a.add_option("--epsilon", c.epsilon, "abscissa of the integration line")->capture_default_str();
  a.add_option("--T", c.T, "truncation height; derived from --tolerance when omitted");
  a.add_option("--step", c.step, "initial trapezoid step")->capture_default_str();
  a.add_option("--tolerance", c.tolerance, "requested accuracy");
}
inline void neder_options(CLI::App& a, Config& c) {
  x_option(a, c);
  a.add_option("--r-cap", c.r_cap, "cap on r per base point")->capture_default_str();
}

inline PerronQuery perron_query(const Config& c, const DirichletSeries& d) {
  PerronQuery q{c.x, c.k, c.epsilon, c.T, c.step, c.tolerance};
  if (q.T <= 0.0) {
    dirichlet::detail::require(d.reference_bound().has_value(), "perron: reference has no bound on [Re > 0]");
    q.T = c.tolerance ? perron_required_T(*d.reference_bound(), q, *c.tolerance) : 1000.0;
  }
  return q;
}

inline std::vector<DirichletSeries> delta_family(const Config& c, const DirichletSeries& d) {
  const std::size_t J = c.members == 0 ? d.size() : c.members;
  std::vector<DirichletSeries> fam;
  for (std::size_t j = 1; j <= J; ++j) {
    std::vector<complex> a = d.coefficients();
    if (c.family == "partial-sums") {
      for (std::size_t n = std::min(j, a.size()); n < a.size(); ++n) a[n] = 0.0;
    } else if (c.family == "decay") {
      for (auto& z : a) z *= std::exp(-static_cast<double>(j));
    } else if (c.family != "constant") {
      throw Rejection("family must be constant, partial-sums or decay");
    }
    fam.emplace_back(d.frequency(), std::move(a));
  }
  return fam;
}

inline Regime regime(const Config& c) {
  if (c.regime == "BC") return {RegimeKind::BC, 0.0};
  if (c.regime == "LC") return {RegimeKind::LC, c.regime_param};
  if (c.regime == "POLY") return {RegimeKind::POLY, c.regime_param};
  throw Rejection("regime must be LC, BC or POLY");
}

}  // namespace detail

/// The dispatch table.
inline const std::vector<Command>& commands() {
  using namespace detail;
  static const std::vector<Command> table{
      // frequency ----------------------------------------------------------
      {"freq", "make", "make_frequency", "build a frequency prefix", Input::frequency, {},
       [](const Config& c) {
         const Frequency f = load_frequency(c);
         return Result{json{{"frequency", as_json(f, true)}}, values_csv(f)};
       }},
      {"freq", "check-bc", "check_bc", "Bohr gap condition evidence", Input::frequency,
       [](CLI::App& a, Config& c) {
         a.add_option("--l", c.l, "l > 0")->capture_default_str();
         a.add_option("--delta", c.delta, "delta > 0")->capture_default_str();
       },
       [](const Config& c) {
         const auto r = check_bc(load_frequency(c), c.l, c.delta, c.tol_slope);
         return Result{as_json(r), condition_csv(r)};
       }},
      {"freq", "check-lc", "check_lc", "Landau gap condition evidence", Input::frequency,
       [](CLI::App& a, Config& c) { a.add_option("--delta", c.delta, "delta > 0")->capture_default_str(); },
       [](const Config& c) {
         const auto r = check_lc(load_frequency(c), c.delta, c.tol_slope);
         return Result{as_json(r), condition_csv(r)};
       }},
      {"freq", "check-poly", "check_poly_growth", "polynomial growth condition evidence", Input::frequency,
       [](CLI::App& a, Config& c) {
         a.add_option("--l", c.l, "l > 0")->capture_default_str();
         a.add_option("--d", c.d, "d > 0")->capture_default_str();
         a.add_option("--delta", c.delta, "delta > 0")->capture_default_str();
       },
       [](const Config& c) {
         const auto r = check_poly_growth(load_frequency(c), c.l, c.d, c.delta, c.tol_slope);
         return Result{as_json(r), condition_csv(r)};
       }},
      {"freq", "estimate-l", "estimate_L", "windowed limsup of log N / lambda_N", Input::frequency, {},
       [](const Config& c) {
         const auto e = estimate_L(load_frequency(c));
         return Result{as_json(e), ratios_csv(e)};
       }},
      {"freq", "refine", "refine_gaps", "insert points so every gap is at most 1", Input::frequency, {},
       [](const Config& c) {
         const Frequency in = load_frequency(c);
         const Frequency f = refine_gaps(in);
         return Result{json{{"inputM", in.size()}, {"frequency", as_json(f, true)}}, values_csv(f)};
       }},

      // series -------------------------------------------------------------
      {"series", "eval", "evaluate", "partial sum S_N(s)", Input::series,
       [](CLI::App& a, Config& c) {
         s_options(a, c);
         a.add_option("--terms", c.terms, "number of terms N (default all)");
         a.add_flag("--kahan", c.kahan, "compensated summation");
       },
       [](const Config& c) {
         const auto d = load_series(c);
         const complex s(c.s_re, c.s_im);
         const auto v = evaluate(d, s, terms(c, d), c.kahan ? Summation::kahan : Summation::plain);
         return Result{json{{"s", as_json(s)}, {"terms", terms(c, d)}, {"value", as_json(v)}}, {}};
       }},
      {"series", "line-sup", "line_sup", "grid sup on a vertical line with Lipschitz upper bound",
       Input::series,
       [](CLI::App& a, Config& c) {
         grid_options(a, c);
         a.add_option("--terms", c.terms, "number of terms N (default all)");
       },
       [](const Config& c) {
         const auto d = load_series(c);
         return Result{as_json(certified_line_sup(d, terms(c, d), grid(c), c.tol_sup)), {}};
       }},
      {"series", "norm", "half_plane_norm", "sup-norm estimate on [Re > 0]", Input::series,
       [](CLI::App& a, Config& c) {
         grid_options(a, c);
         a.add_option("--terms", c.terms, "number of terms N (default all)");
       },
       [](const Config& c) {
         const auto d = load_series(c);
         return Result{as_json(half_plane_norm(d, terms(c, d), grid(c), c.sigma, 4, c.tol_sup)), {}};
       }},
      {"series", "translate", "translate", "coefficients of the translate D_{s0}", Input::series,
       [](CLI::App& a, Config& c) { s_options(a, c); },
       [](const Config& c) {
         const auto t = translate(load_series(c), complex(c.s_re, c.s_im));
         return Result{json{{"s0", as_json(complex(c.s_re, c.s_im))}, {"coefficients", as_json(t.coefficients())}},
                       coefficients_csv(t.coefficients())};
       }},
      {"series", "recover", "coefficient_recover", "mean-value recovery of a_n", Input::series,
       [](CLI::App& a, Config& c) {
         n_index_option(a, c);
         a.add_option("--sigma", c.sigma, "line abscissa > 0")->capture_default_str();
         a.add_option("--T", c.T, "half-width of the averaging window")->required();
         a.add_option("--step", c.step, "trapezoid step")->capture_default_str();
       },
       [](const Config& c) {
         const auto d = load_series(c);
         const auto v = coefficient_recover(d, c.n_index, c.sigma, c.T, c.step);
         return Result{json{{"n", c.n_index}, {"value", as_json(v)}, {"stored", as_json(d.coefficients().at(c.n_index - 1))}},
                       {}};
       }},

      // riesz --------------------------------------------------------------
      {"riesz", "mean", "riesz_mean", "R_x^k(D)(s)", Input::series,
       [](CLI::App& a, Config& c) { k_option(a, c); x_option(a, c); s_options(a, c); },
       [](const Config& c) {
         const auto v = riesz_mean(load_series(c), {c.k, c.x}, complex(c.s_re, c.s_im));
         return Result{json{{"k", c.k}, {"x", c.x}, {"value", as_json(v)}}, {}};
       }},
      {"riesz", "typical", "typical_mean", "A^k_w(x)", Input::series,
       [](CLI::App& a, Config& c) {
         k_option(a, c);
         x_option(a, c);
         a.add_option("--w-re", c.w_re, "Re w")->capture_default_str();
         a.add_option("--w-im", c.w_im, "Im w")->capture_default_str();
       },
       [](const Config& c) {
         const auto v = typical_mean(load_series(c), c.k, complex(c.w_re, c.w_im), c.x);
         return Result{json{{"k", c.k}, {"x", c.x}, {"value", as_json(v)}}, {}};
       }},
      {"riesz", "abel", "check_abel_integral", "A^k(x) against k int (x-t)^{k-1} A^0(t) dt", Input::series,
       [](CLI::App& a, Config& c) { k_option(a, c); x_option(a, c); },
       [](const Config& c) { return Result{as_json(check_abel_integral(load_series(c), c.k, c.x)), {}}; }},
      {"riesz", "fractional", "check_fractional_identity", "fractional integral identity for A^1", Input::series,
       [](CLI::App& a, Config& c) {
         k_option(a, c);
         a.add_option("--t", c.t, "upper limit t > 0")->capture_default_str();
         a.add_option("--tau", c.tau, "imaginary shift tau")->capture_default_str();
         a.add_option("--quad-tol", c.quad_tol, "quadrature tolerance")->capture_default_str();
       },
       [](const Config& c) {
         return Result{as_json(check_fractional_identity(load_series(c), c.k, c.t, c.tau, c.quad_tol)), {}};
       }},
      {"riesz", "beta", "beta_identity", "Beta integral by quadrature and by Gamma functions", Input::none,
       [](CLI::App& a, Config& c) {
         a.add_option("--alpha", c.alpha, "alpha > -1")->capture_default_str();
         a.add_option("--beta", c.beta, "beta > 0")->capture_default_str();
         a.add_option("--quad-tol", c.quad_tol, "quadrature tolerance")->capture_default_str();
       },
       [](const Config& c) { return Result{as_json(beta_identity(c.alpha, c.beta, c.quad_tol)), {}}; }},
      {"riesz", "constants", "riesz_constant_exact", "Riesz norm constants, closed form and quadrature",
       Input::none, [](CLI::App& a, Config& c) { k_option(a, c); },
       [](const Config& c) {
         return Result{json{{"k", c.k},
                            {"paper", riesz_constant_paper(c.k)},
                            {"exact", riesz_constant_exact(c.k)},
                            {"majorantIntegral", riesz_majorant_integral(c.k)},
                            {"exactByQuadrature", riesz_constant_paper(c.k) * c.k * riesz_majorant_integral(c.k)}},
                       {}};
       }},
      {"riesz", "uniform-error", "riesz_uniform_error", "grid max of |R_x^k(D) - f| on [Re = sigma]",
       Input::series,
       [](CLI::App& a, Config& c) { k_option(a, c); x_option(a, c); grid_options(a, c); },
       [](const Config& c) {
         const auto e = riesz_uniform_error(load_series(c), c.k, c.sigma, c.x, grid(c));
         return Result{json{{"k", c.k}, {"x", c.x}, {"sigma", c.sigma}, {"error", as_json(e)}}, {}};
       }},
      {"riesz", "sigma-uk", "sigma_u_k_estimate", "windowed limsup of log||R_x^k|| / x", Input::series,
       [](CLI::App& a, Config& c) {
         k_option(a, c);
         grid_options(a, c);
         a.add_option("--xs", c.xs, "comma-separated increasing lengths")->delimiter(',')->required();
       },
       [](const Config& c) {
         const auto e = sigma_u_k_estimate(load_series(c), c.k, c.xs, grid(c));
         return Result{as_json(e), ratios_csv(e)};
       }},

      // abscissas ----------------------------------------------------------
      {"abscissa", "sigma-c", "sigma_c_estimate", "log|S_N(0)| / lambda_N estimator", Input::series, {},
       [](const Config& c) {
         const auto e = sigma_c_estimate(load_series(c));
         return Result{as_json(e), ratios_csv(e)};
       }},
      {"abscissa", "sigma-a", "sigma_a_estimate", "log sum|a_n| / lambda_N estimator", Input::series, {},
       [](const Config& c) {
         const auto e = sigma_a_estimate(load_series(c));
         return Result{as_json(e), ratios_csv(e)};
       }},
      {"abscissa", "sigma-u", "sigma_u_estimate", "log sup_t|S_N(it)| / lambda_N estimator", Input::series,
       [](CLI::App& a, Config& c) { grid_options(a, c); },
       [](const Config& c) {
         const auto e = sigma_u_estimate(load_series(c), grid(c));
         return Result{as_json(e), ratios_csv(e)};
       }},
      {"abscissa", "delta", "delta_sequence_estimate", "Delta estimator over a family derived from the series",
       Input::series,
       [](CLI::App& a, Config& c) {
         grid_options(a, c);
         a.add_option("--family", c.family, "constant | partial-sums | decay")->capture_default_str();
         a.add_option("--members", c.members, "family size (default M)");
       },
       [](const Config& c) {
         const auto d = load_series(c);
         const auto fam = delta_family(c, d);
         const auto e = delta_sequence_estimate(fam, grid(c));
         return Result{as_json(e), ratios_csv(e)};
       }},

      // bounds -------------------------------------------------------------
      {"bound", "sn", "sn_bound", "partial sum operator bound at order k", Input::frequency,
       [](CLI::App& a, Config& c) { n_index_option(a, c); k_option(a, c); variant_option(a, c); },
       [](const Config& c) {
         const Frequency f = load_frequency(c);
         const double lb = log_sn_bound(f, c.n_index, c.k, variant(c));
         return Result{json{{"N", c.n_index}, {"k", c.k}, {"variant", c.variant}, {"bound", as_json(std::exp(lb))},
                            {"logBound", lb}},
                       {}};
       }},
      {"bound", "sn-opt", "sn_bound_optimal", "partial sum bound minimised over k", Input::frequency,
       [](CLI::App& a, Config& c) { n_index_option(a, c); variant_option(a, c); },
       [](const Config& c) {
         return Result{as_json(sn_bound_optimal(load_frequency(c), c.n_index, variant(c))), {}};
       }},
      {"bound", "hardy", "hardy_check", "partial sum against typical means", Input::series,
       [](CLI::App& a, Config& c) { n_index_option(a, c); k_option(a, c); },
       [](const Config& c) { return Result{as_json(hardy_check(load_series(c), c.n_index, c.k)), {}}; }},
      {"bound", "kronecker", "kronecker_norm", "l1 norm of the coefficients", Input::series, {},
       [](const Config& c) {
         const auto d = load_series(c);
         return Result{as_json(kronecker_norm(d.coefficients(), d.frequency().rationally_independent())), {}};
       }},
      {"bound", "profile", "theorem_bound_profile", "bound over N at the theorem's k_N", Input::frequency,
       [](CLI::App& a, Config& c) {
         a.add_option("--regime", c.regime, "LC | BC | POLY")->check(CLI::IsMember({"LC", "BC", "POLY"}))->capture_default_str();
         a.add_option("--param", c.regime_param, "delta for LC, d for POLY");
         a.add_option("--n-first", c.n_first, "first N")->capture_default_str();
         a.add_option("--n-last", c.n_last, "last N (default M-1)");
         variant_option(a, c);
       },
       [](const Config& c) {
         const Frequency f = load_frequency(c);
         const auto p = theorem_bound_profile(f, regime(c), c.n_first, c.n_last == 0 ? f.size() : c.n_last, variant(c));
         std::vector<std::pair<double, double>> rows;
         for (const auto& r : p.rows) rows.emplace_back(static_cast<double>(r.N), r.ratio);
         return Result{as_json(p), pairs_csv(rows)};
       }},

      // perron -------------------------------------------------------------
      {"perron", "integral", "perron_integral", "truncated Perron contour integral", Input::series, perron_options,
       [](const Config& c) {
         const auto d = load_series(c);
         return Result{as_json(perron_integral(d, perron_query(c, d))), {}};
       }},
      {"perron", "vs-direct", "perron_vs_direct", "Perron integral against the direct Riesz mean", Input::series,
       perron_options,
       [](const Config& c) {
         const auto d = load_series(c);
         return Result{as_json(perron_vs_direct(d, perron_query(c, d))), {}};
       }},

      // neder --------------------------------------------------------------
      {"neder", "fejer", "fejer_polynomial", "coefficients of F_m", Input::none,
       [](CLI::App& a, Config& c) { a.add_option("--m", c.m, "m >= 1")->capture_default_str(); },
       [](const Config& c) { return Result{as_json(fejer_polynomial(c.m)), {}}; }},
      {"neder", "fejer-sup", "fejer_sup", "grid sup of |F_m| on the unit circle", Input::none,
       [](CLI::App& a, Config& c) {
         a.add_option("--m", c.m, "m >= 1")->capture_default_str();
         a.add_option("--m-max", c.m_max, "report every m up to this value instead");
         a.add_option("--resolution", c.resolution, "points on the circle")->capture_default_str();
       },
       [](const Config& c) {
         if (c.m_max == 0)
           return Result{json{{"m", c.m}, {"sup", fejer_sup(c.m, c.resolution)}}, {}};
         std::vector<std::pair<double, double>> rows;
         double mx = 0.0;
         for (long m = 1; m <= c.m_max; ++m) {
           rows.emplace_back(static_cast<double>(m), fejer_sup(m, c.resolution));
           mx = std::max(mx, rows.back().second);
         }
         json seq = json::array();
         for (const auto& [m, v] : rows) seq.push_back(v);
         return Result{json{{"mMax", c.m_max}, {"max", mx}, {"sups", seq}}, pairs_csv(rows)};
       }},
      {"neder", "construct", "neder_construct", "Neder frequency and coefficients over a base", Input::frequency,
       [](CLI::App& a, Config& c) {
         neder_options(a, c);
         a.add_flag("!--summary", c.with_points, "omit eta points and coefficients");
       },
       [](const Config& c) {
         const auto n = neder_construct(load_frequency(c), c.x, c.r_cap);
         return Result{as_json(n, c.with_points), coefficients_csv(n.coeffs)};
       }},
      {"neder", "divergence", "neder_divergence_check", "per-block lower bounds e^{-x}/4", Input::frequency,
       neder_options,
       [](const Config& c) {
         const auto n = neder_construct(load_frequency(c), c.x, c.r_cap);
         return Result{json{{"x", c.x}, {"rows", as_json(neder_divergence_check(n))}}, {}};
       }},
      {"neder", "cauchy", "neder_cauchy_check", "sup |D^L - D^K| against the Fejer bound", Input::frequency,
       [](CLI::App& a, Config& c) {
         neder_options(a, c);
         grid_options(a, c);
         a.add_option("--K", c.K, "blocks in the shorter partial construction")->capture_default_str();
         a.add_option("--L", c.L, "blocks in the longer partial construction")->capture_default_str();
         a.add_option("--c-obs", c.c_obs, "Fejer constant (default: max sup over m <= 64)");
       },
       [](const Config& c) {
         const auto n = neder_construct(load_frequency(c), c.x, c.r_cap);
         const double cobs = c.c_obs ? *c.c_obs : fejer_sup_max(64);
         auto j = as_json(neder_cauchy_check(n, c.K, c.L, grid(c), cobs));
         j["cObs"] = cobs;
         return Result{j, {}};
       }},

      // suites -------------------------------------------------------------
      {"suite", "acceptance", "run_acceptance", "run the acceptance criteria", Input::none,
       [](CLI::App& a, Config& c) { a.add_flag("--timing", c.timing, "include wall-clock seconds"); },
       [](const Config& c) {
         const auto rows = acceptance::run_acceptance(c.seed);
         json list = json::array();
         std::ostringstream table;
         std::size_t passed = 0;
         table << "id,result,name,detail\n";
         for (const auto& r : rows) {
           json row{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
           if (c.timing) row["seconds"] = r.seconds;
           list.push_back(row);
           passed += r.pass ? 1 : 0;
           table << r.id << ',' << (r.pass ? "PASS" : "FAIL") << ",\"" << r.name << "\",\"" << r.detail << "\"\n";
         }
         return Result{json{{"seed", c.seed}, {"passed", passed}, {"total", rows.size()}, {"criteria", list}},
                       table.str()};
       }},
  };
  return table;
}

inline void frequency_options(CLI::App& a, Config& c) {
  a.add_option("--kind", c.kind, "frequency generator")->capture_default_str();
  a.add_option("--n", c.n, "prefix length M")->capture_default_str();
  a.add_option("--params", c.params, "generator parameters, comma-separated")->delimiter(',');
  a.add_option("--freq-file", c.freq_file, "custom frequency file, one value per line");
}

inline void series_options(CLI::App& a, Config& c) {
  frequency_options(a, c);
  a.add_option("--coeffs", c.coeffs, "builtin coefficient tag or index,re,im CSV path")->capture_default_str();
  a.add_option("--series", c.series_file, "series descriptor JSON");
  a.add_option("--reference", c.reference, "closed form: self | geometric | none")->capture_default_str();
}

inline void common_options(CLI::App& a, Config& c) {
  a.add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  a.add_option("--out", c.out_path, "write output to this path instead of stdout");
  a.add_option("--seed", c.seed, "random seed")->capture_default_str();
  a.add_option("--tol-sup", c.tol_sup, "relative tolerance for sup refinement")->capture_default_str();
  a.add_option("--tol-slope", c.tol_slope, "slope tolerance for condition trends")->capture_default_str();
}

/// Parses `args` (without the program name), runs the command and writes
/// its report to `out` or to --out. Diagnostics go to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Experiments with general Dirichlet series", "dirichlet_lab"};
  app.require_subcommand(1);
  std::vector<std::pair<const Command*, CLI::App*>> leaves;
  std::map<std::string, CLI::App*> groups;
  for (const auto& cmd : commands()) {
    auto& g = groups[cmd.group];
    if (!g) {
      g = app.add_subcommand(cmd.group, cmd.group + " commands");
      g->require_subcommand(1);
    }
    CLI::App* leaf = g->add_subcommand(cmd.verb, cmd.help);
    common_options(*leaf, cfg);
    if (cmd.input == Input::frequency) frequency_options(*leaf, cfg);
    if (cmd.input == Input::series) series_options(*leaf, cfg);
    if (cmd.options) cmd.options(*leaf, cfg);
    leaves.emplace_back(&cmd, leaf);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const Command* chosen = nullptr;
  for (const auto& [cmd, leaf] : leaves)
    if (leaf->parsed()) chosen = cmd;
  if (!chosen) {
    err << "error: no command given\n\n" << app.help();
    return 2;
  }

  Result result;
  try {
    result = chosen->handler(cfg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::string text;
  if (cfg.format == "csv") {
    if (!result.csv) {
      err << "error: " << chosen->group << ' ' << chosen->verb << " has no CSV form; use --format json\n";
      return 2;
    }
    text = *result.csv;
  } else {
    text = result.body.dump(2) + "\n";
  }
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.out_path);
    if (!f) {
      err << "error: cannot write " << cfg.out_path << "\n";
      return 2;
    }
    f << text;
  }

  if (chosen->group == "suite" && result.body.value("passed", 0) != result.body.value("total", 0)) return 1;
  return 0;
}

}  // namespace dirichlet::cli

#endif
