#ifndef DIRICHLET_RIESZ_HPP
#define DIRICHLET_RIESZ_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "dirichlet/error.hpp"
#include "dirichlet/estimate.hpp"
#include "dirichlet/quadrature.hpp"
#include "dirichlet/series.hpp"

namespace dirichlet {

/// Order k >= 0 and length x > 0 of a typical mean.
struct RieszParams {
  double k = 1.0;
  double x = 1.0;

  void validate() const {
    detail::require(std::isfinite(k) && k >= 0.0, "riesz: order k must be >= 0");
    detail::require(std::isfinite(x) && x > 0.0, "riesz: length x must be > 0");
  }
};

/// Weight (1 - lambda/x)^k for lambda < x, else 0. Strict inequality.
inline double riesz_weight(double lambda, const RieszParams& p) {
  if (!(lambda < p.x)) return 0.0;
  if (p.k == 0.0) return 1.0;
  return std::pow(1.0 - lambda / p.x, p.k);
}

/// R_x^k(D) as a Dirichlet polynomial on the same frequency.
inline DirichletSeries riesz_polynomial(const DirichletSeries& d, const RieszParams& p) {
  p.validate();
  std::vector<complex> c(d.size());
  for (std::size_t n = 0; n < d.size(); ++n)
    c[n] = d.coefficients()[n] * riesz_weight(d.frequency()[n], p);
  return DirichletSeries(d.frequency(), std::move(c));
}

/// R_x^k(D)(s) = sum_{lambda_n < x} a_n (1 - lambda_n/x)^k e^{-lambda_n s}
inline complex riesz_mean(const DirichletSeries& d, const RieszParams& p, complex s) {
  p.validate();
  complex acc = 0.0;
  for (std::size_t n = 0; n < d.size() && d.frequency()[n] < p.x; ++n)
    acc += d.coefficients()[n] * riesz_weight(d.frequency()[n], p) * std::exp(-d.frequency()[n] * s);
  return acc;
}

/// A^k_w(x) = sum_{lambda_n < x} a_n e^{-w lambda_n} (x - lambda_n)^k
inline complex typical_mean(const DirichletSeries& d, double k, complex w, double x) {
  detail::require(k >= 0.0, "typical_mean: k must be >= 0");
  complex acc = 0.0;
  for (std::size_t n = 0; n < d.size() && d.frequency()[n] < x; ++n) {
    const double lam = d.frequency()[n];
    const double pw = k == 0.0 ? 1.0 : std::pow(x - lam, k);
    acc += d.coefficients()[n] * std::exp(-w * lam) * pw;
  }
  return acc;
}

struct IdentityCheck {
  complex lhs;
  complex rhs;
  double residual = 0.0;
};

/// Compares A^k(x) with k int_0^x (x-t)^{k-1} A^0(t) dt. A^0 is constant
/// between consecutive lambda_n, and on [a, b] the kernel integrates exactly
/// to (x-a)^k - (x-b)^k, so the right side is a finite sum.
inline IdentityCheck check_abel_integral(const DirichletSeries& d, double k, double x) {
  detail::require(k > 0.0 && k <= 1.0, "check_abel_integral: need 0 < k <= 1");
  detail::require(x > 0.0, "check_abel_integral: need x > 0");
  const auto& lam = d.frequency().values();
  for (double l : lam)
    if (l == x) throw Rejection("check_abel_integral: x lies on a jump of A^0");

  IdentityCheck r;
  r.lhs = typical_mean(d, k, 0.0, x);
  complex partial = 0.0;
  complex rhs = 0.0;
  for (std::size_t j = 0; j < lam.size() && lam[j] < x; ++j) {
    partial += d.coefficients()[j];
    const double a = lam[j];
    const double b = (j + 1 < lam.size()) ? std::min(lam[j + 1], x) : x;
    rhs += partial * (std::pow(x - a, k) - std::pow(x - b, k));
  }
  r.rhs = rhs;
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

/// Compares Gamma(k+1)Gamma(1-k) A^1_{i tau}(t) with
/// int_0^t A^k_{i tau}(y) (t-y)^{-k} dy.
///
/// The kernel singularity at y = t is removed by y = t - u^{1/(1-k)}, which
/// turns (t-y)^{-k} dy into du/(1-k). The u-range is split where y crosses a
/// lambda_n so each piece has at most endpoint kinks.
inline IdentityCheck check_fractional_identity(const DirichletSeries& d, double k, double t,
                                               double tau, double quad_tol = 1e-12) {
  detail::require(k > 0.0 && k < 1.0, "check_fractional_identity: need 0 < k < 1");
  detail::require(t > 0.0, "check_fractional_identity: need t > 0");
  const complex w(0.0, tau);
  IdentityCheck r;
  r.lhs = std::tgamma(k + 1.0) * std::tgamma(1.0 - k) * typical_mean(d, 1.0, w, t);

  const double p = 1.0 / (1.0 - k);
  const double u_max = std::pow(t, 1.0 - k);
  std::vector<double> cuts{0.0, u_max};
  for (double lam : d.frequency().values())
    if (lam > 0.0 && lam < t) cuts.push_back(std::pow(t - lam, 1.0 - k));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto integrand = [&](double u) { return typical_mean(d, k, w, t - std::pow(u, p)); };
  complex rhs = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    rhs += quad::tanh_sinh_complex(integrand, cuts[i], cuts[i + 1], quad_tol);
  r.rhs = rhs * p;
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

struct BetaCheck {
  double lhs = 0.0;  ///< quadrature of int_0^1 v^alpha (1-v)^{beta-1} dv
  double rhs = 0.0;  ///< Gamma(alpha+1) Gamma(beta) / Gamma(alpha+beta+1)
};

inline BetaCheck beta_identity(double alpha, double beta, double quad_tol = 1e-13) {
  detail::require(alpha > -1.0 && beta > 0.0, "beta_identity: need alpha > -1 and beta > 0");
  BetaCheck b;
  b.lhs = quad::tanh_sinh2(
      [&](double v, double vc) {
        const double one_minus = vc > 0.0 ? vc : 1.0 - v;
        return std::pow(v, alpha) * std::pow(one_minus, beta - 1.0);
      },
      0.0, 1.0, quad_tol);
  b.rhs = std::tgamma(alpha + 1.0) * std::tgamma(beta) / std::tgamma(alpha + beta + 1.0);
  return b;
}

/// (e/pi) Gamma(k+1)/k, the constant displayed with the Riesz norm bound.
inline double riesz_constant_paper(double k) {
  detail::require(k > 0.0, "riesz constant: need k > 0");
  return std::numbers::e / std::numbers::pi * std::tgamma(k + 1.0) / k;
}

/// (e/pi) Gamma(k+1) I(k) with I(k) = int_0^inf (1+u^2)^{-(1+k)/2} du
///                                  = (sqrt(pi)/2) Gamma(k/2) / Gamma((k+1)/2).
/// This is the value of the majorant used to bound sup_x ||R_x^k(D)||.
inline double riesz_constant_exact(double k) {
  detail::require(k > 0.0, "riesz constant: need k > 0");
  const double I = 0.5 * std::sqrt(std::numbers::pi) * std::tgamma(0.5 * k) / std::tgamma(0.5 * (k + 1.0));
  return std::numbers::e / std::numbers::pi * std::tgamma(k + 1.0) * I;
}

/// I(k) by quadrature, independent of the Gamma closed form.
inline double riesz_majorant_integral(double k, double tol = 1e-12) {
  detail::require(k > 0.0, "riesz majorant: need k > 0");
  return quad::half_line([k](double u) { return std::pow(1.0 + u * u, -0.5 * (1.0 + k)); }, tol);
}

/// Grid max of |R_x^k(D)(sigma+it) - f(sigma+it)|.
inline double riesz_uniform_error(const DirichletSeries& d, double k, double sigma, double x,
                                  const LineGrid& grid) {
  detail::require(d.has_reference(), "riesz_uniform_error: series has no reference evaluator");
  detail::require(sigma > 0.0, "riesz_uniform_error: sigma must be > 0");
  const RieszParams p{k, x};
  p.validate();
  const LineGrid g = grid.with_sigma(sigma);
  g.validate();
  const DirichletSeries r = riesz_polynomial(d, p);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.points(); ++i) {
    const complex s(sigma, g.t(i));
    worst = std::max(worst, std::abs(evaluate(r, s, r.size()) - d.reference_at(s)));
  }
  return worst;
}

/// Ratios log(sup_t |R_x^k(D)(it)|)/x over the sample lengths xs.
inline AbscissaEstimate sigma_u_k_estimate(const DirichletSeries& d, double k,
                                           const std::vector<double>& xs, const LineGrid& grid,
                                           const WindowOptions& opt = {}) {
  detail::require(k > 0.0 && k <= 1.0, "sigma_u_k_estimate: need 0 < k <= 1");
  detail::require(std::is_sorted(xs.begin(), xs.end()), "sigma_u_k_estimate: xs must increase");
  const LineGrid g = grid.with_sigma(0.0);
  const LineTable table(d.frequency(), d.size(), g);
  std::vector<std::pair<double, double>> ratios;
  for (double x : xs) {
    detail::require(x > 0.0, "sigma_u_k_estimate: xs must be positive");
    const DirichletSeries r = riesz_polynomial(d, {k, x});
    const double sup = table.sup(r.coefficients());
    if (sup > 0.0) ratios.emplace_back(x, std::log(sup) / x);
  }
  return windowed_limsup(Abscissa::sigma_u_k, std::move(ratios), opt);
}

}  // namespace dirichlet

#endif
