#ifndef DIRICHLET_PERRON_HPP
#define DIRICHLET_PERRON_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "dirichlet/error.hpp"
#include "dirichlet/quadrature.hpp"
#include "dirichlet/riesz.hpp"
#include "dirichlet/series.hpp"

namespace dirichlet {

/// Contour integral of f(s) e^{xs} s^{-1-k} along [Re = epsilon], truncated
/// to |Im s| <= T and sampled with an initial trapezoid step.
struct PerronQuery {
  double x = 1.0;
  double k = 1.0;
  double epsilon = 0.5;
  double T = 100.0;
  double step = 0.05;
  /// When set, T must be large enough for the tail certificate to meet it,
  /// and the trapezoid rule is refined until successive values differ by
  /// less than a tenth of it.
  std::optional<double> tolerance;

  void validate() const {
    detail::require(x > 0.0, "perron: x must be > 0");
    detail::require(k >= 0.0, "perron: k must be >= 0");
    detail::require(epsilon > 0.0, "perron: epsilon must be > 0");
    detail::require(T > 0.0 && step > 0.0, "perron: need T > 0 and step > 0");
    if (tolerance) detail::require(*tolerance > 0.0, "perron: tolerance must be > 0");
  }
};

/// Bound on the discarded |t| > T part: |f| <= norm and |s|^{-1-k} <= |t|^{-1-k}
/// give norm e^{x eps} Gamma(k+1) / (pi x^k) * T^{-k} / k. Infinite for k = 0.
inline double perron_tail_bound(double norm, const PerronQuery& q) {
  if (q.k == 0.0) return std::numeric_limits<double>::infinity();
  const double pre = norm * std::exp(q.x * q.epsilon) * std::tgamma(q.k + 1.0) /
                     (std::numbers::pi * std::pow(q.x, q.k));
  return pre * std::pow(q.T, -q.k) / q.k;
}

/// Smallest T whose tail bound is at most `tol`.
inline double perron_required_T(double norm, const PerronQuery& q, double tol) {
  if (q.k == 0.0) return std::numeric_limits<double>::infinity();
  const double pre = norm * std::exp(q.x * q.epsilon) * std::tgamma(q.k + 1.0) /
                     (std::numbers::pi * std::pow(q.x, q.k));
  // Rounded up slightly so the tail bound at the returned T is <= tol.
  return std::pow(pre / (q.k * tol), 1.0 / q.k) * (1.0 + 1e-12);
}

struct PerronResult {
  complex value;
  double tail_bound = 0.0;    ///< certificate for the truncation at T
  double quad_change = 0.0;   ///< last change under step halving
  double step = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
  double certificate() const { return tail_bound + quad_change; }
};

inline PerronResult perron_integral(const DirichletSeries& d, const PerronQuery& q) {
  q.validate();
  detail::require(d.has_reference(), "perron: series has no reference evaluator");
  detail::require(d.reference_bound().has_value(), "perron: reference has no bound on [Re > 0]");
  if (q.k == 0.0)
    for (double lam : d.frequency().values())
      if (lam == q.x) throw Rejection("perron: x lies in the frequency and k = 0");

  const double norm = *d.reference_bound();
  PerronResult r;
  r.tail_bound = perron_tail_bound(norm, q);
  if (q.tolerance && r.tail_bound > *q.tolerance) {
    throw Rejection("perron: T = " + std::to_string(q.T) + " too small for tolerance; need T >= " +
                    std::to_string(perron_required_T(norm, q, *q.tolerance)));
  }

  const double tol = q.tolerance.value_or(1e-6);
  const double scale = std::tgamma(q.k + 1.0) / (2.0 * std::numbers::pi * std::pow(q.x, q.k));
  auto g = [&](double t) {
    const complex s(q.epsilon, t);
    return d.reference_at(s) * std::exp(q.x * s) * std::pow(s, -1.0 - q.k);
  };
  const auto tr = quad::trapezoid(g, -q.T, q.T, q.step, 0.1 * tol / scale);
  r.value = scale * tr.value;
  r.quad_change = scale * tr.last_change;
  r.step = tr.step;
  r.evaluations = tr.evaluations;
  r.converged = tr.converged;
  return r;
}

struct PerronComparison {
  PerronResult perron;
  complex direct;
  double residual = 0.0;
};

/// |perron_integral - riesz_mean(D, (k, x), 0)|
inline PerronComparison perron_vs_direct(const DirichletSeries& d, const PerronQuery& q) {
  PerronComparison c;
  c.perron = perron_integral(d, q);
  c.direct = riesz_mean(d, {q.k, q.x}, 0.0);
  c.residual = std::abs(c.perron.value - c.direct);
  return c;
}

}  // namespace dirichlet

#endif
