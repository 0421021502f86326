#ifndef DIRICHLET_ACCEPTANCE_HPP
#define DIRICHLET_ACCEPTANCE_HPP

// End-to-end acceptance criteria. Each criterion returns one pass/fail row;
// run_acceptance executes all of them in order.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dirichlet/bounds.hpp"
#include "dirichlet/frequency.hpp"
#include "dirichlet/neder.hpp"
#include "dirichlet/perron.hpp"
#include "dirichlet/quadrature.hpp"
#include "dirichlet/random.hpp"
#include "dirichlet/riesz.hpp"
#include "dirichlet/series.hpp"

namespace dirichlet::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  std::optional<double> time_limit;  ///< seconds; exceeding it fails the row
};

namespace detail {

inline std::string fmt(double v, int prec = 6) {
  std::ostringstream os;
  os << std::setprecision(prec) << v;
  return os.str();
}

/// Random polynomial on a half-integer frequency, so every exponential has
/// period 4 pi in t and a grid over [0, 4 pi] covers the whole line.
/// M in [3, 8], lambda_1 in {0, 1/2}, gaps in {1/2, 1, 3/2}, complex normal coefficients.
inline DirichletSeries half_integer_polynomial(Rng& rng) {
  const auto M = static_cast<std::size_t>(rng.integer(3, 8));
  std::vector<double> lam(M);
  lam[0] = 0.5 * static_cast<double>(rng.integer(0, 1));
  for (std::size_t i = 1; i < M; ++i) lam[i] = lam[i - 1] + 0.5 * static_cast<double>(rng.integer(1, 3));
  std::vector<complex> c(M);
  for (auto& z : c) z = rng.complex_normal();
  return DirichletSeries::polynomial(Frequency(std::move(lam), "half-integer"), std::move(c));
}

inline LineGrid period_grid(double sigma, std::size_t points = 2048) {
  const double T = 4.0 * std::numbers::pi;
  return {sigma, 0.0, T, T / static_cast<double>(points)};
}

/// Random frequency of length M with lambda_1 in [0, 1) and gaps in [0.1, 1.5).
inline Frequency random_frequency(Rng& rng, std::size_t M) {
  std::vector<double> lam(M);
  lam[0] = rng.uniform();
  for (std::size_t i = 1; i < M; ++i) lam[i] = lam[i - 1] + rng.uniform(0.1, 1.5);
  return Frequency(std::move(lam), "random");
}

inline std::vector<complex> random_coeffs(Rng& rng, std::size_t M, double scale = 1.0) {
  std::vector<complex> c(M);
  for (auto& z : c) z = scale * rng.complex_normal();
  return c;
}

}  // namespace detail

/// 1. Beta integral by quadrature against the Gamma ratio on a 10x10 grid.
inline CriterionResult beta_identity_grid() {
  CriterionResult r{1, "beta identity on alpha, beta in [0.1, 3]", true, "", 0, 5.0};
  double worst = 0.0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      const double a = 0.1 + 2.9 * i / 9.0, b = 0.1 + 2.9 * j / 9.0;
      const auto c = beta_identity(a, b);
      worst = std::max(worst, std::abs(c.lhs - c.rhs));
    }
  r.pass = worst <= 1e-8;
  r.detail = "max |quadrature - Gamma ratio| = " + detail::fmt(worst, 3);
  return r;
}

/// 2. Abel summation identity with piecewise-exact integration.
inline CriterionResult abel_identity_random(std::uint64_t seed) {
  CriterionResult r{2, "Abel integral identity, 100 random instances", true, "", 0, 10.0};
  Rng rng(seed ^ 0x2a2a);
  const double ks[] = {0.25, 0.5, 1.0};
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto M = static_cast<std::size_t>(rng.integer(2, 20));
    const Frequency f = detail::random_frequency(rng, M);
    const DirichletSeries d(f, detail::random_coeffs(rng, M));
    double x = rng.uniform(0.0, f[M - 1] + 1.0);
    while (std::find(f.values().begin(), f.values().end(), x) != f.values().end() || x <= 0.0)
      x = rng.uniform(0.0, f[M - 1] + 1.0);
    worst = std::max(worst, check_abel_integral(d, ks[i % 3], x).residual);
  }
  r.pass = worst <= 1e-10;
  r.detail = "max residual = " + detail::fmt(worst, 3);
  return r;
}

/// 3. Hardy-type bound of a partial sum by typical means.
inline CriterionResult hardy_random(std::uint64_t seed) {
  CriterionResult r{3, "Hardy lemma, 100 random instances", true, "", 0, 30.0};
  Rng rng(seed ^ 0x3b3b);
  const double ks[] = {0.25, 0.5, 1.0};
  int violations = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 100; ++i) {
    const auto M = static_cast<std::size_t>(rng.integer(2, 20));
    const DirichletSeries d(detail::random_frequency(rng, M), detail::random_coeffs(rng, M));
    const auto N = static_cast<std::size_t>(rng.integer(1, static_cast<long>(M) - 1));
    const auto h = hardy_check(d, N, ks[i % 3]);
    if (!h.holds()) ++violations;
    if (h.rhs > 0) min_slack = std::min(min_slack, h.rhs / std::max(h.lhs, 1e-300));
  }
  r.pass = violations == 0;
  r.detail = std::to_string(violations) + " violations, min rhs/lhs = " + detail::fmt(min_slack, 4);
  return r;
}

/// 4. Perron integral against direct Riesz means, and independence of epsilon.
inline CriterionResult perron_reconciliation(std::uint64_t seed) {
  CriterionResult r{4, "Perron formula vs direct Riesz means", true, "", 0, 60.0};
  std::ostringstream os;
  bool ok = true;
  const double tol = 1e-4;

  auto certified = [&](const DirichletSeries& d, PerronQuery q) {
    q.T = perron_required_T(*d.reference_bound(), q, tol);
    q.tolerance = tol;
    return perron_vs_direct(d, q);
  };

  const auto one = DirichletSeries::polynomial(Frequency({0.0, 1.0}), {1.0, 0.0});
  const auto c1 = certified(one, {1.0, 1.0, 1.0, 0, 0.05, std::nullopt});
  const auto two = DirichletSeries::polynomial(Frequency({0.0, 1.0}), {1.0, 1.0});
  const auto c2 = certified(two, {2.0, 1.0, 0.5, 0, 0.05, std::nullopt});
  ok = ok && c1.residual <= 1e-3 && c2.residual <= 1e-3;
  os << "single " << detail::fmt(c1.residual, 3) << ", two-term " << detail::fmt(c2.residual, 3);

  Rng rng(seed ^ 0x4c4c);
  const Frequency f = detail::random_frequency(rng, 5);
  const auto five = DirichletSeries::polynomial(f, detail::random_coeffs(rng, 5, 0.5));
  const double x = f[2] + 0.5;
  const auto c5 = certified(five, {x, 1.0, 0.3, 0, 0.05, std::nullopt});
  ok = ok && c5.residual <= 1e-3;
  os << ", five-term " << detail::fmt(c5.residual, 3);

  std::vector<PerronComparison> per_eps;
  for (double eps : {0.25, 0.5, 1.0}) per_eps.push_back(certified(five, {x, 1.0, eps, 0, 0.05, std::nullopt}));
  double worst_ratio = 0.0;
  for (std::size_t i = 0; i < per_eps.size(); ++i)
    for (std::size_t j = i + 1; j < per_eps.size(); ++j) {
      const double diff = std::abs(per_eps[i].perron.value - per_eps[j].perron.value);
      const double allow = per_eps[i].perron.certificate() + per_eps[j].perron.certificate();
      worst_ratio = std::max(worst_ratio, diff / allow);
      ok = ok && diff <= allow;
    }
  os << ", cross-eps max diff/certificates " << detail::fmt(worst_ratio, 3);
  r.pass = ok;
  r.detail = os.str();
  return r;
}

/// 5. Uniform approximation of 1/(1 - e^{-s}) by first-order Riesz means.
inline CriterionResult riesz_uniform_geometric() {
  CriterionResult r{5, "Riesz uniform approximation of the geometric series", true, "", 0, std::nullopt};
  const Frequency f = make_frequency("linear", {}, 81);
  const DirichletSeries d(f, std::vector<complex>(81, 1.0), [](complex s) { return 1.0 / (1.0 - std::exp(-s)); });
  const LineGrid grid{0.5, 0.0, 2.0 * std::numbers::pi, 1e-3};
  std::vector<double> errs;
  for (double x : {10.0, 20.0, 40.0, 80.0}) errs.push_back(riesz_uniform_error(d, 1.0, 0.5, x, grid));
  bool decreasing = true;
  for (std::size_t i = 1; i < errs.size(); ++i) decreasing = decreasing && errs[i] < errs[i - 1];
  r.pass = decreasing && errs.back() < 1e-2;
  std::ostringstream os;
  os << "errors at x=10,20,40,80: " << detail::fmt(errs[0]) << ", " << detail::fmt(errs[1]) << ", "
     << detail::fmt(errs[2]) << ", " << detail::fmt(errs[3]) << (decreasing ? " (decreasing)" : " (not decreasing)")
     << "; last < 1e-2: " << (errs.back() < 1e-2 ? "yes" : "no");
  r.detail = os.str();
  return r;
}

/// 6. sup_x ||R_x^k(D)|| <= c_exact(k) ||D|| on random polynomials.
inline CriterionResult riesz_norm_bound(std::uint64_t seed) {
  CriterionResult r{6, "Riesz norm bound with the exact constant", true, "", 0, std::nullopt};
  const double e_half = riesz_constant_exact(1.0);
  const double quad = riesz_constant_paper(1.0) * riesz_majorant_integral(1.0);  // (e/pi) * pi/2
  bool ok = std::abs(e_half - std::numbers::e / 2.0) <= 1e-6 && std::abs(quad - std::numbers::e / 2.0) <= 1e-6;

  Rng rng(seed ^ 0x6d6d);
  int violations = 0;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const DirichletSeries d = detail::half_integer_polynomial(rng);
    const double norm = half_plane_norm(d, d.size(), detail::period_grid(1e-3)).upper;
    const LineTable table(d.frequency(), d.size(), detail::period_grid(1e-3));
    const double lam_max = d.frequency()[d.size() - 1];
    for (double k : {0.25, 0.5, 1.0}) {
      double sup = 0.0;
      for (int j = 1; j <= 64; ++j) {
        const double x = 2.0 * (lam_max + 1.0) * j / 64.0;
        sup = std::max(sup, table.sup(riesz_polynomial(d, {k, x}).coefficients()));
      }
      const double allow = riesz_constant_exact(k) * norm;
      worst = std::max(worst, sup / allow);
      if (sup > allow) ++violations;
    }
  }
  ok = ok && violations == 0;
  r.pass = ok;
  r.detail = "c_exact(1) = " + detail::fmt(e_half, 8) + " (quadrature " + detail::fmt(quad, 8) + "), " +
             std::to_string(violations) + " violations, max sup/bound = " + detail::fmt(worst, 4);
  return r;
}

/// 7. ||S_N(D)|| <= sn_bound(exact) ||D|| on the same random polynomials.
inline CriterionResult partial_sum_bound(std::uint64_t seed) {
  CriterionResult r{7, "partial sum operator bound", true, "", 0, std::nullopt};
  Rng rng(seed ^ 0x6d6d);
  int violations = 0;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const DirichletSeries d = detail::half_integer_polynomial(rng);
    const double norm = half_plane_norm(d, d.size(), detail::period_grid(1e-3)).upper;
    const auto sups = partial_sum_line_sups(d, detail::period_grid(1e-3));
    for (std::size_t N = 1; N + 1 <= d.size(); ++N)
      for (double k : {0.25, 0.5, 1.0}) {
        const double allow = sn_bound(d.frequency(), N, k, BoundVariant::exact) * norm;
        worst = std::max(worst, sups[N - 1] / allow);
        if (sups[N - 1] > allow) ++violations;
      }
  }
  r.pass = violations == 0;
  r.detail = std::to_string(violations) + " violations, max sup/bound = " + detail::fmt(worst, 4);
  return r;
}

/// 8. For log-primes the sup norm equals the l1 norm of the coefficients.
inline CriterionResult kronecker_l1(std::uint64_t seed) {
  CriterionResult r{8, "Kronecker l1 norm on log-primes", true, "", 0, 60.0};
  Rng rng(seed ^ 0x8e8e);
  const Frequency f = make_frequency("logprimes", {}, 5);
  const DirichletSeries d(f, detail::random_coeffs(rng, 5));
  const auto l1 = kronecker_norm(d.coefficients(), f.rationally_independent());
  const double sup = line_sup(d, 5, {1e-3, 0.0, 1e4, 0.005});
  r.pass = l1.exact && sup >= 0.95 * l1.value && sup <= l1.value + 1e-9;
  r.detail = "grid sup / l1 = " + detail::fmt(sup / l1.value, 6);
  return r;
}

/// 9. L(lambda) for log, linear and sqrt-log frequencies.
inline CriterionResult l_anchors() {
  CriterionResult r{9, "L(lambda) anchors", true, "", 0, std::nullopt};
  const auto lg = estimate_L(make_frequency("log", {}, 10000));
  bool all_one = true;
  for (const auto& [n, v] : lg.ratios) all_one = all_one && v == 1.0;
  const auto lin = estimate_L(make_frequency("linear", {}, 10000));
  const auto sq = estimate_L(make_frequency("sqrtlog", {}, 10000));
  const double last = sq.ratios.back().second;
  const bool ok_sq = sq.trend == EstimateTrend::divergent && std::abs(last - 3.034) < 1e-3;
  r.pass = all_one && lin.estimate < 0.01 && ok_sq;
  r.detail = std::string("log ratios all 1: ") + (all_one ? "yes" : "no") + ", linear estimate " +
             detail::fmt(lin.estimate, 4) + ", sqrtlog ratio at N=10^4 " + detail::fmt(last, 6) + " (" +
             to_string(sq.trend) + ")";
  return r;
}

/// 10. Condition checkers reproduce the known classification.
inline CriterionResult condition_classification() {
  CriterionResult r{10, "gap condition classification", true, "", 0, std::nullopt};
  const auto log_bc = check_bc(make_frequency("log", {}, 100), 1.0, 0.1);
  const Frequency ie2 = make_frequency("interleave-exp2", {}, 100);
  const auto ie2_bc = check_bc(ie2, 1.0, 0.1);
  const auto ie2_lc = check_lc(ie2, 0.5);
  const Frequency iee = make_frequency("interleave-expexp2", {}, 60);
  const auto iee_lc = check_lc(iee, 0.5);
  const auto iee_l = estimate_L(iee);
  const Frequency sq = make_frequency("sqrtlog", {}, 10000);
  const auto sq_lc = check_lc(sq, 0.5);
  const auto sq_l = estimate_L(sq);

  const bool a = log_bc.verdict == Verdict::evidence_for;
  const bool b = ie2_bc.verdict == Verdict::evidence_against && ie2_lc.verdict == Verdict::evidence_for;
  const bool c = iee_lc.verdict == Verdict::evidence_against && iee_l.trend == EstimateTrend::convergent;
  const bool d = sq_lc.verdict == Verdict::evidence_for && sq_l.trend == EstimateTrend::divergent;
  r.pass = a && b && c && d;
  auto yn = [](bool v) { return v ? "ok" : "MISMATCH"; };
  r.detail = std::string("log BC ") + yn(a) + "; interleave-exp2 BC-/LC+ " + yn(b) +
             "; interleave-expexp2 LC-/L=0 " + yn(c) + "; sqrtlog LC+/L=inf " + yn(d);
  return r;
}

/// 11. Neder construction: block divergence, Fejer identity, Cauchy bound.
inline CriterionResult neder_checks(std::uint64_t seed) {
  CriterionResult r{11, "Neder construction checks", true, "", 0, std::nullopt};
  const double si_pi = quad::tanh_sinh([](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }, 0.0,
                                       std::numbers::pi, 1e-14);
  std::vector<double> sups;
  for (long m = 1; m <= 64; ++m) sups.push_back(fejer_sup(m));
  const double c_obs = *std::max_element(sups.begin(), sups.end());
  // The per-m sups increase towards 2 Si(pi); bounded means below that limit
  // with shrinking increments between m = 16, 32, 64.
  const bool bounded = c_obs <= 2.0 * si_pi + 1e-12 && sups[63] - sups[31] < sups[31] - sups[15];

  Rng rng(seed ^ 0xb1b1);
  const Frequency base = make_frequency("linear", {1.0, 1.0}, 13);
  bool ok_div = true, ok_fejer = true, ok_cauchy = true;
  double worst_identity = 0.0;
  std::size_t checked = 0, exempt = 0;
  for (double x : {0.05, 0.1, 0.25}) {
    const NederConstruction c = neder_construct(base, x);
    for (const auto& row : neder_divergence_check(c)) {
      if (row.exempt) {
        ++exempt;
        continue;
      }
      ++checked;
      ok_div = ok_div && row.pass;
    }
    for (int i = 0; i < 10; ++i) {
      const complex s(rng.uniform(0.05, 1.0), rng.uniform(-20.0, 20.0));
      const complex a = neder_partial_direct(c, c.blocks.size(), s);
      const complex b = neder_partial_fejer(c, c.blocks.size(), s);
      const double err = std::abs(a - b) / std::max(1.0, std::abs(a));
      worst_identity = std::max(worst_identity, err);
      ok_fejer = ok_fejer && err <= 1e-12;
    }
    const LineGrid grid{1e-3, 0.0, 200.0, 0.01};
    for (auto [K, L] : {std::pair<std::size_t, std::size_t>{1, 3}, {2, 4}}) {
      const auto cc = neder_cauchy_check(c, K, L, grid, c_obs);
      ok_cauchy = ok_cauchy && cc.holds(1e-9);
    }
  }
  r.pass = bounded && ok_div && ok_fejer && ok_cauchy;
  std::ostringstream os;
  os << "C_obs = " << detail::fmt(c_obs, 6) << " (2 Si(pi) = " << detail::fmt(2 * si_pi, 6) << "), "
     << checked << " uncapped blocks " << (ok_div ? "all pass" : "FAIL") << " (" << exempt << " capped), "
     << "Fejer identity max rel err " << detail::fmt(worst_identity, 3) << ", Cauchy bound "
     << (ok_cauchy ? "holds" : "FAILS");
  r.detail = os.str();
  return r;
}

/// Max over N in [M/4, M] of ratio(N) / ratio(M/2) - 1.
inline double profile_excess(const BoundProfile& p, std::size_t M) {
  double at_half = 0.0, mx = 0.0;
  for (const auto& row : p.rows) {
    if (row.N == M / 2) at_half = row.ratio;
    if (row.N >= M / 4 && row.N <= M) mx = std::max(mx, row.ratio);
  }
  return mx / at_half - 1.0;
}

/// 12. Bound profiles stay flat relative to their growth envelope.
inline CriterionResult bound_profiles() {
  CriterionResult r{12, "theorem bound profiles", true, "", 0, std::nullopt};
  constexpr std::size_t M = 10000;
  const auto bc = theorem_bound_profile(make_frequency("log", {}, M + 1), {RegimeKind::BC, 0.0}, M / 4, M);
  const auto lc = theorem_bound_profile(make_frequency("linear", {}, M + 1), {RegimeKind::LC, 0.1}, M / 4, M);
  const auto po = theorem_bound_profile(make_frequency("sqrtlog", {}, M + 1), {RegimeKind::POLY, 2.0}, M / 4, M);
  const double ebc = profile_excess(bc, M), elc = profile_excess(lc, M), epo = profile_excess(po, M);
  r.pass = ebc <= 0.01 && elc <= 0.01 && epo <= 0.01;
  auto pct = [](double e) { return detail::fmt(100.0 * e, 3) + "%"; };
  r.detail = "max excess over N=M/2: BC/log " + pct(ebc) + ", LC/linear " + pct(elc) + ", POLY/sqrtlog " + pct(epo);
  return r;
}

/// Runs every criterion, timing each against its limit.
inline std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                                   const std::function<void(const CriterionResult&)>& on_row = {}) {
  const std::vector<std::function<CriterionResult()>> criteria{
      [] { return beta_identity_grid(); },
      [=] { return abel_identity_random(seed); },
      [=] { return hardy_random(seed); },
      [=] { return perron_reconciliation(seed); },
      [] { return riesz_uniform_geometric(); },
      [=] { return riesz_norm_bound(seed); },
      [=] { return partial_sum_bound(seed); },
      [=] { return kronecker_l1(seed); },
      [] { return l_anchors(); },
      [] { return condition_classification(); },
      [=] { return neder_checks(seed); },
      [] { return bound_profiles(); },
  };
  std::vector<CriterionResult> out;
  for (const auto& run : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult row;
    try {
      row = run();
    } catch (const std::exception& e) {
      row.id = static_cast<int>(out.size()) + 1;
      row.name = "criterion " + std::to_string(row.id);
      row.pass = false;
      row.detail = std::string("exception: ") + e.what();
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (row.time_limit && row.seconds > *row.time_limit) {
      row.pass = false;
      row.detail += "; exceeded time limit of " + detail::fmt(*row.time_limit) + " s";
    }
    if (on_row) on_row(row);
    out.push_back(row);
  }
  return out;
}

}  // namespace dirichlet::acceptance

#endif
