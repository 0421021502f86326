#ifndef DIRICHLET_BOUNDS_HPP
#define DIRICHLET_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dirichlet/error.hpp"
#include "dirichlet/estimate.hpp"
#include "dirichlet/frequency.hpp"
#include "dirichlet/riesz.hpp"
#include "dirichlet/series.hpp"

namespace dirichlet {

// ---------------------------------------------------------------------------
// Bohr-Cahen type estimators

namespace detail {

template <class Term>
AbscissaEstimate partial_ratio_estimate(const DirichletSeries& d, Abscissa which, Term term,
                                        const WindowOptions& opt) {
  detail::require(d.size() >= 3, to_string(which) + " estimate needs M >= 3");
  std::vector<std::pair<double, double>> ratios;
  complex sum = 0.0;
  for (std::size_t N = 1; N <= d.size(); ++N) {
    sum += term(d.coefficients()[N - 1]);
    const double lam = d.frequency()[N - 1];
    const double mag = std::abs(sum);
    if (lam > 0.0 && mag > 0.0) ratios.emplace_back(static_cast<double>(N), std::log(mag) / lam);
  }
  return windowed_limsup(which, std::move(ratios), opt);
}

}  // namespace detail

/// Ratios log|a_1 + ... + a_N| / lambda_N.
inline AbscissaEstimate sigma_c_estimate(const DirichletSeries& d, const WindowOptions& opt = {}) {
  return detail::partial_ratio_estimate(d, Abscissa::sigma_c, [](complex a) { return a; }, opt);
}

/// Ratios log(|a_1| + ... + |a_N|) / lambda_N.
inline AbscissaEstimate sigma_a_estimate(const DirichletSeries& d, const WindowOptions& opt = {}) {
  return detail::partial_ratio_estimate(d, Abscissa::sigma_a,
                                        [](complex a) { return complex(std::abs(a)); }, opt);
}

/// Ratios log(sup_t |S_N(it)|) / lambda_N with the sup taken over the grid.
inline AbscissaEstimate sigma_u_estimate(const DirichletSeries& d, const LineGrid& grid,
                                         const WindowOptions& opt = {}) {
  detail::require(d.size() >= 3, "sigma_u estimate needs M >= 3");
  const auto sups = partial_sum_line_sups(d, grid.with_sigma(0.0));
  std::vector<std::pair<double, double>> ratios;
  for (std::size_t N = 1; N <= d.size(); ++N) {
    const double lam = d.frequency()[N - 1];
    if (lam > 0.0 && sups[N - 1] > 0.0)
      ratios.emplace_back(static_cast<double>(N), std::log(sups[N - 1]) / lam);
  }
  return windowed_limsup(Abscissa::sigma_u, std::move(ratios), opt);
}

/// Surrogate for limsup over (N, j) of log(sup_t |S_N(D_j)(it)|) / lambda_N.
/// For each N the ratio is the max over the final third of family indices j;
/// the windowed limsup then runs over N.
inline AbscissaEstimate delta_sequence_estimate(std::span<const DirichletSeries> family,
                                                const LineGrid& grid, const WindowOptions& opt = {}) {
  detail::require(!family.empty(), "delta estimate: empty family");
  const Frequency& f = family.front().frequency();
  detail::require(f.size() >= 3, "delta estimate needs M >= 3");
  for (const auto& d : family)
    detail::require(d.frequency().values() == f.values(), "delta estimate: family members differ in frequency");

  const std::size_t J = family.size();
  const std::size_t j0 = J - (J + 2) / 3;
  const LineGrid g = grid.with_sigma(0.0);
  std::vector<double> best(f.size(), -std::numeric_limits<double>::infinity());
  for (std::size_t j = j0; j < J; ++j) {
    const auto sups = partial_sum_line_sups(family[j], g);
    for (std::size_t n = 0; n < f.size(); ++n)
      if (f[n] > 0.0 && sups[n] > 0.0) best[n] = std::max(best[n], std::log(sups[n]) / f[n]);
  }
  std::vector<std::pair<double, double>> ratios;
  for (std::size_t n = 0; n < f.size(); ++n)
    if (std::isfinite(best[n])) ratios.emplace_back(static_cast<double>(n + 1), best[n]);
  return windowed_limsup(Abscissa::Delta, std::move(ratios), opt);
}

// ---------------------------------------------------------------------------
// Partial-sum operator bounds

enum class BoundVariant { paper, exact };

inline std::string to_string(BoundVariant v) { return v == BoundVariant::paper ? "paper" : "exact"; }

/// log c(k) for the chosen variant, taking log k so that k far below the
/// double range (k = e^{-delta lambda_N} for large lambda_N) stays usable.
inline double log_riesz_constant(double log_k, BoundVariant v) {
  detail::require(log_k <= 0.0, "riesz constant: need 0 < k <= 1");
  const double log_e_pi = 1.0 - std::log(std::numbers::pi);
  if (log_k > -600.0) {
    const double k = std::exp(log_k);
    const double c = v == BoundVariant::paper ? riesz_constant_paper(k) : riesz_constant_exact(k);
    return std::log(c);
  }
  // Gamma(k+1) = 1, Gamma(k/2) = 2/k and Gamma((k+1)/2) = sqrt(pi) to double
  // precision here, so both variants reduce to (e/pi)/k.
  return log_e_pi - log_k;
}

/// log of 3 c(k) (lambda_{N+1} / (lambda_{N+1} - lambda_N))^k, where c(k) is
/// the Riesz norm constant of the chosen variant. N is 1-based.
inline double log_sn_bound_log_k(const Frequency& f, std::size_t N, double log_k, BoundVariant v) {
  detail::require(N >= 1 && N + 1 <= f.size(), "sn_bound: need 1 <= N and N+1 <= M");
  const long double log_ratio = std::log(static_cast<long double>(f[N])) - f.log_gap(N - 1);
  return std::log(3.0) + log_riesz_constant(log_k, v) +
         static_cast<double>(std::exp(static_cast<long double>(log_k)) * log_ratio);
}

inline double log_sn_bound(const Frequency& f, std::size_t N, double k, BoundVariant v) {
  detail::require(k > 0.0 && k <= 1.0, "sn_bound: need 0 < k <= 1");
  return log_sn_bound_log_k(f, N, std::log(k), v);
}

inline double sn_bound(const Frequency& f, std::size_t N, double k, BoundVariant v) {
  return std::exp(log_sn_bound(f, N, k, v));
}

struct OptimalBound {
  double k = 1.0;
  double log_bound = 0.0;
  double bound = 0.0;
  bool grid_fallback = false;  ///< set when the k-scan saw more than one local minimum
};

/// Minimises the bound over k in [1e-6, 1]. Golden-section search runs in
/// log k; a 64-point log-spaced scan guards it, and the smaller of the two
/// minima is returned.
inline OptimalBound sn_bound_optimal(const Frequency& f, std::size_t N, BoundVariant v) {
  constexpr double k_lo = 1e-6;
  auto g = [&](double u) { return log_sn_bound(f, N, std::min(std::exp(u), 1.0), v); };
  const double u_lo = std::log(k_lo), u_hi = 0.0;

  constexpr int scan = 64;
  std::vector<double> us(scan), gs(scan);
  for (int i = 0; i < scan; ++i) {
    us[i] = u_lo + (u_hi - u_lo) * i / (scan - 1);
    gs[i] = g(us[i]);
  }
  int local_minima = 0;
  for (int i = 0; i < scan; ++i) {
    const bool left = i == 0 || gs[i] < gs[i - 1];
    const bool right = i == scan - 1 || gs[i] <= gs[i + 1];
    if (left && right) ++local_minima;
  }
  const auto scan_best = std::min_element(gs.begin(), gs.end()) - gs.begin();

  OptimalBound r;
  r.grid_fallback = local_minima > 1;
  double best_u = us[scan_best], best_g = gs[scan_best];
  if (!r.grid_fallback) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = u_lo, b = u_hi;
    double c = b - phi * (b - a), dd = a + phi * (b - a);
    double gc = g(c), gd = g(dd);
    for (int it = 0; it < 200 && b - a > 1e-12; ++it) {
      if (gc <= gd) {
        b = dd; dd = c; gd = gc;
        c = b - phi * (b - a); gc = g(c);
      } else {
        a = c; c = dd; gc = gd;
        dd = a + phi * (b - a); gd = g(dd);
      }
    }
    const double u = gc <= gd ? c : dd;
    const double gu = std::min(gc, gd);
    if (gu <= best_g) {
      best_u = u;
      best_g = gu;
    }
  }
  r.k = std::min(std::exp(best_u), 1.0);
  r.log_bound = best_g;
  r.bound = std::exp(best_g);
  return r;
}

struct HardyCheck {
  double lhs = 0.0;  ///< |a_1 + ... + a_N|
  double rhs = 0.0;  ///< 3 gap_N^{-k} sup_{x <= lambda_{N+1}} |A^k(x)|
  double sup = 0.0;  ///< the grid sup of |A^k|
  std::size_t points = 0;
  bool holds() const { return lhs <= rhs; }
};

/// Checks |sum_{n<=N} a_n| <= 3 (lambda_{N+1} - lambda_N)^{-k} sup |A^k(x)|
/// over x in [0, lambda_{N+1}]. The x-grid contains every lambda_n up to
/// lambda_{N+1} plus uniform points, doubled until the sup is stable.
inline HardyCheck hardy_check(const DirichletSeries& d, std::size_t N, double k,
                              std::size_t initial_points = 256, int max_doublings = 8) {
  detail::require(k > 0.0 && k <= 1.0, "hardy_check: need 0 < k <= 1");
  detail::require(N >= 1 && N + 1 <= d.size(), "hardy_check: need 1 <= N and N+1 <= M");
  const Frequency& f = d.frequency();
  HardyCheck h;
  complex s = 0.0;
  for (std::size_t n = 0; n < N; ++n) s += d.coefficients()[n];
  h.lhs = std::abs(s);

  const double x_end = f[N];
  auto grid_sup = [&](std::size_t pts) {
    std::vector<double> xs(f.values().begin(), f.values().begin() + static_cast<long>(N) + 1);
    for (std::size_t i = 0; i <= pts; ++i) xs.push_back(x_end * static_cast<double>(i) / static_cast<double>(pts));
    double m = 0.0;
    for (double x : xs) m = std::max(m, std::abs(typical_mean(d, k, 0.0, x)));
    return std::pair{m, xs.size()};
  };
  auto [sup, count] = grid_sup(initial_points);
  std::size_t pts = initial_points;
  for (int i = 0; i < max_doublings; ++i) {
    pts *= 2;
    auto [next, c] = grid_sup(pts);
    const bool stable = next - sup <= 1e-9 * std::max(next, 1e-300);
    sup = std::max(sup, next);
    count = c;
    if (stable) break;
  }
  h.sup = sup;
  h.points = count;
  h.rhs = 3.0 * std::exp(-k * static_cast<double>(f.log_gap(N - 1))) * sup;
  return h;
}

struct KroneckerNorm {
  double value = 0.0;
  bool exact = false;  ///< true only for frequencies flagged rationally independent
};

/// sum |a_n|: the sup norm on [Re > 0] for rationally independent
/// frequencies and an upper bound otherwise.
inline KroneckerNorm kronecker_norm(std::span<const complex> coeffs, bool independent) {
  KroneckerNorm k;
  for (const auto& c : coeffs) k.value += std::abs(c);
  k.exact = independent;
  return k;
}

// ---------------------------------------------------------------------------
// Bound profiles along the theorem choices of k_N

enum class RegimeKind { LC, BC, POLY };

inline std::string to_string(RegimeKind r) {
  switch (r) {
    case RegimeKind::LC: return "LC";
    case RegimeKind::BC: return "BC";
    case RegimeKind::POLY: return "POLY";
  }
  return "?";
}

/// LC uses k_N = e^{-delta lambda_N}, BC uses 1/lambda_N, POLY uses
/// 1/lambda_N^d. `param` is delta for LC and d for POLY.
struct Regime {
  RegimeKind kind = RegimeKind::BC;
  double param = 0.0;

  void validate() const {
    if (kind != RegimeKind::BC) detail::require(param > 0.0, "regime parameter must be > 0");
  }
  /// log of the growth envelope e^{delta lambda}, lambda or lambda^d.
  double log_envelope(double lambda) const {
    switch (kind) {
      case RegimeKind::LC: return param * lambda;
      case RegimeKind::BC: return std::log(lambda);
      case RegimeKind::POLY: return param * std::log(lambda);
    }
    return 0.0;
  }
  double log_k_for(double lambda) const {
    switch (kind) {
      case RegimeKind::LC: return -param * lambda;
      case RegimeKind::BC: return -std::log(lambda);
      case RegimeKind::POLY: return -param * std::log(lambda);
    }
    return 0.0;
  }
};

struct ProfileRow {
  std::size_t N = 0;
  double lambda = 0.0;
  double log_k = 0.0;
  double log_bound = 0.0;
  double ratio = 0.0;  ///< bound / envelope
};

struct BoundProfile {
  Regime regime;
  BoundVariant variant = BoundVariant::paper;
  bool refined = false;  ///< refine_gaps was applied before profiling
  std::size_t M = 0;     ///< length of the profiled frequency
  std::vector<ProfileRow> rows;
};

/// Evaluates sn_bound at the theorem's k_N for N in [N_first, N_last]. The
/// frequency is refined to gaps <= 1 first when needed. Indices with
/// lambda_N <= 0, with k_N > 1, or without lambda_{N+1} are skipped.
inline BoundProfile theorem_bound_profile(const Frequency& freq, Regime regime, std::size_t N_first,
                                          std::size_t N_last, BoundVariant variant = BoundVariant::paper) {
  regime.validate();
  detail::require(N_first >= 1 && N_first <= N_last, "profile: need 1 <= N_first <= N_last");
  BoundProfile p;
  p.regime = regime;
  p.variant = variant;
  const Frequency f = freq.max_gap() > 1.0 ? refine_gaps(freq) : freq;
  p.refined = f.size() != freq.size();
  p.M = f.size();
  const std::size_t last = std::min(N_last, f.size() - 1);
  for (std::size_t N = std::max<std::size_t>(N_first, 2); N <= last; ++N) {
    const double lam = f[N - 1];
    if (!(lam > 0.0)) continue;
    const double log_k = regime.log_k_for(lam);
    if (!(log_k <= 0.0)) continue;
    ProfileRow row;
    row.N = N;
    row.lambda = lam;
    row.log_k = log_k;
    row.log_bound = log_sn_bound_log_k(f, N, log_k, variant);
    row.ratio = std::exp(row.log_bound - regime.log_envelope(lam));
    p.rows.push_back(row);
  }
  return p;
}

}  // namespace dirichlet

#endif
