#ifndef DIRICHLET_SERIES_HPP
#define DIRICHLET_SERIES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dirichlet/error.hpp"
#include "dirichlet/frequency.hpp"

namespace dirichlet {

using complex = std::complex<double>;
using Evaluator = std::function<complex(complex)>;

/// Coefficients a_1..a_M on a frequency, plus an optional closed form f for
/// the limit (or bounded extension) on [Re > 0].
class DirichletSeries {
public:
  DirichletSeries(Frequency freq, std::vector<complex> coeffs, Evaluator reference = {},
                  std::optional<double> reference_bound = std::nullopt)
      : freq_(std::move(freq)), coeffs_(std::move(coeffs)), reference_(std::move(reference)),
        reference_bound_(reference_bound) {
    detail::require(coeffs_.size() == freq_.size(),
                    "series: coefficient count " + std::to_string(coeffs_.size()) +
                        " does not match frequency length " + std::to_string(freq_.size()));
  }

  /// A Dirichlet polynomial that is its own reference; sum |a_n| bounds |f|.
  static DirichletSeries polynomial(Frequency freq, std::vector<complex> coeffs);

  const Frequency& frequency() const noexcept { return freq_; }
  const std::vector<complex>& coefficients() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool has_reference() const noexcept { return static_cast<bool>(reference_); }
  const Evaluator& reference() const noexcept { return reference_; }
  /// Upper bound for sup |f| over [Re > 0], when known.
  std::optional<double> reference_bound() const noexcept { return reference_bound_; }

  complex reference_at(complex s) const {
    detail::require(has_reference(), "series has no reference evaluator");
    return reference_(s);
  }

private:
  Frequency freq_;
  std::vector<complex> coeffs_;
  Evaluator reference_;
  std::optional<double> reference_bound_;
};

enum class Summation { plain, kahan };

namespace detail {

struct KahanComplex {
  double re = 0, im = 0, cre = 0, cim = 0;
  void add(complex z) {
    const double yr = z.real() - cre;
    const double tr = re + yr;
    cre = (tr - re) - yr;
    re = tr;
    const double yi = z.imag() - cim;
    const double ti = im + yi;
    cim = (ti - im) - yi;
    im = ti;
  }
  complex value() const { return {re, im}; }
};

}  // namespace detail

/// S_N(s) = sum_{n<=N} a_n e^{-lambda_n s}, summed in index order.
inline complex evaluate(const DirichletSeries& d, complex s, std::size_t N,
                        Summation mode = Summation::plain) {
  detail::require(N >= 1 && N <= d.size(), "evaluate: N out of range [1, M]");
  const auto& lam = d.frequency().values();
  const auto& a = d.coefficients();
  if (mode == Summation::kahan) {
    detail::KahanComplex acc;
    for (std::size_t n = 0; n < N; ++n) acc.add(a[n] * std::exp(-lam[n] * s));
    return acc.value();
  }
  complex acc = 0.0;
  for (std::size_t n = 0; n < N; ++n) acc += a[n] * std::exp(-lam[n] * s);
  return acc;
}

inline DirichletSeries DirichletSeries::polynomial(Frequency freq, std::vector<complex> coeffs) {
  double l1 = 0.0;
  for (const auto& c : coeffs) l1 += std::abs(c);
  auto f = std::make_shared<std::pair<Frequency, std::vector<complex>>>(freq, coeffs);
  Evaluator ev = [f](complex s) {
    complex acc = 0.0;
    for (std::size_t n = 0; n < f->second.size(); ++n)
      acc += f->second[n] * std::exp(-f->first[n] * s);
    return acc;
  };
  return DirichletSeries(std::move(freq), std::move(coeffs), std::move(ev), l1);
}

/// Discretisation of the vertical line [Re = sigma] restricted to
/// t in [t_min, t_max]. Points are t_min + i*step, with t_max always included.
struct LineGrid {
  double sigma = 0.0;
  double t_min = 0.0;
  double t_max = 1.0;
  double step = 1e-2;

  void validate() const {
    detail::require(std::isfinite(sigma) && sigma >= 0.0, "line grid: sigma must be >= 0");
    detail::require(t_min < t_max, "line grid: t_min must be < t_max");
    detail::require(step > 0.0 && step <= t_max - t_min, "line grid: need 0 < step <= t_max - t_min");
  }
  std::size_t intervals() const {
    return static_cast<std::size_t>(std::ceil((t_max - t_min) / step - 1e-12));
  }
  std::size_t points() const { return intervals() + 1; }
  double t(std::size_t i) const {
    return i >= intervals() ? t_max : t_min + static_cast<double>(i) * step;
  }
  LineGrid with_sigma(double s) const { return {s, t_min, t_max, step}; }
  LineGrid refined() const { return {sigma, t_min, t_max, step / 2}; }
};

/// Max over grid points of |S_N(sigma + it)|: a lower bound for the sup on
/// the line, nondecreasing under grid refinement.
inline double line_sup(const DirichletSeries& d, std::size_t N, const LineGrid& grid) {
  grid.validate();
  detail::require(N >= 1 && N <= d.size(), "line_sup: N out of range [1, M]");
  const auto& lam = d.frequency().values();
  std::vector<complex> scaled(N);
  for (std::size_t n = 0; n < N; ++n) scaled[n] = d.coefficients()[n] * std::exp(-lam[n] * grid.sigma);
  double best = 0.0;
  const std::size_t P = grid.points();
  for (std::size_t i = 0; i < P; ++i) {
    const double t = grid.t(i);
    complex acc = 0.0;
    for (std::size_t n = 0; n < N; ++n) acc += scaled[n] * std::polar(1.0, -lam[n] * t);
    best = std::max(best, std::abs(acc));
  }
  return best;
}

/// sup_t |S_N(sigma + it)| over the grid for every N = 1..M in one sweep.
inline std::vector<double> partial_sum_line_sups(const DirichletSeries& d, const LineGrid& grid) {
  grid.validate();
  const auto& lam = d.frequency().values();
  const std::size_t M = d.size();
  std::vector<complex> scaled(M);
  for (std::size_t n = 0; n < M; ++n) scaled[n] = d.coefficients()[n] * std::exp(-lam[n] * grid.sigma);
  std::vector<double> sups(M, 0.0);
  const std::size_t P = grid.points();
  for (std::size_t i = 0; i < P; ++i) {
    const double t = grid.t(i);
    complex acc = 0.0;
    for (std::size_t n = 0; n < M; ++n) {
      acc += scaled[n] * std::polar(1.0, -lam[n] * t);
      sups[n] = std::max(sups[n], std::abs(acc));
    }
  }
  return sups;
}

/// Exponentials e^{-lambda_n (sigma + i t)} tabulated on a grid, for
/// repeated sup evaluations with changing coefficient vectors.
class LineTable {
public:
  LineTable(const Frequency& freq, std::size_t N, const LineGrid& grid) : n_(N), grid_(grid) {
    grid.validate();
    detail::require(N >= 1 && N <= freq.size(), "line table: N out of range");
    p_ = grid.points();
    table_.resize(n_ * p_);
    for (std::size_t n = 0; n < n_; ++n) {
      const double decay = std::exp(-freq[n] * grid.sigma);
      for (std::size_t i = 0; i < p_; ++i) table_[n * p_ + i] = std::polar(decay, -freq[n] * grid.t(i));
    }
  }

  /// max_t |sum_{n < coeffs.size()} coeffs[n] e^{-lambda_n s}|
  double sup(std::span<const complex> coeffs) const {
    detail::require(coeffs.size() <= n_, "line table: too many coefficients");
    std::vector<complex> acc(p_, complex(0.0));
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
      if (coeffs[n] == 0.0) continue;
      const complex c = coeffs[n];
      const complex* row = &table_[n * p_];
      for (std::size_t i = 0; i < p_; ++i) acc[i] += c * row[i];
    }
    double best = 0.0;
    for (const auto& z : acc) best = std::max(best, std::abs(z));
    return best;
  }

  const LineGrid& grid() const noexcept { return grid_; }

private:
  std::size_t n_ = 0, p_ = 0;
  LineGrid grid_;
  std::vector<complex> table_;
};

/// Lipschitz constant in t of |S_N(sigma + it)|.
inline double line_lipschitz(const DirichletSeries& d, std::size_t N, double sigma) {
  double lip = 0.0;
  for (std::size_t n = 0; n < N; ++n)
    lip += std::abs(d.coefficients()[n]) * d.frequency()[n] * std::exp(-d.frequency()[n] * sigma);
  return lip;
}

/// Grid lower bound and Lipschitz upper bound for the sup on a line segment.
/// The upper bound covers [t_min, t_max]; it bounds the sup over the whole
/// line when the window spans a common period of the exponentials.
struct SupBound {
  double lower = 0.0;
  double upper = 0.0;
  double step = 0.0;  ///< grid step of the final refinement
};

inline SupBound certified_line_sup(const DirichletSeries& d, std::size_t N, const LineGrid& grid,
                                   double tol_sup = 1e-4, int max_halvings = 8) {
  LineGrid g = grid;
  double prev = line_sup(d, N, g);
  for (int h = 0; h < max_halvings; ++h) {
    const LineGrid finer = g.refined();
    const double cur = line_sup(d, N, finer);
    g = finer;
    const bool settled = std::abs(cur - prev) <= tol_sup * std::max(cur, 1e-300);
    prev = cur;
    if (settled) break;
  }
  const double lip = line_lipschitz(d, N, g.sigma);
  return {prev, prev + lip * g.step / 2.0, g.step};
}

/// Estimate of ||S_N||_inf on [Re > 0]: the largest certified line sup over
/// sigma in {sigma_min * 2^j}. The upper bound adds the drift from
/// sigma_min down to the boundary line, sum |a_n| (1 - e^{-lambda_n sigma_min}).
struct NormEstimate {
  double lower = 0.0;
  double upper = 0.0;
  double sigma_at_max = 0.0;
};

inline NormEstimate half_plane_norm(const DirichletSeries& d, std::size_t N, const LineGrid& grid,
                                    double sigma_min = 1e-3, int levels = 4, double tol_sup = 1e-4) {
  detail::require(sigma_min > 0.0, "half_plane_norm: sigma_min must be > 0");
  NormEstimate e;
  double upper_at_min = 0.0;
  for (int j = 0; j < levels; ++j) {
    const double sigma = sigma_min * std::ldexp(1.0, j);
    const SupBound b = certified_line_sup(d, N, grid.with_sigma(sigma), tol_sup);
    if (j == 0) upper_at_min = b.upper;
    if (b.lower > e.lower) {
      e.lower = b.lower;
      e.sigma_at_max = sigma;
    }
  }
  double drift = 0.0;
  for (std::size_t n = 0; n < N; ++n)
    drift += std::abs(d.coefficients()[n]) * -std::expm1(-d.frequency()[n] * sigma_min);
  e.upper = upper_at_min + drift;
  return e;
}

/// D_{s0}: coefficients a_n e^{-lambda_n s0}; the reference becomes f(s + s0).
inline DirichletSeries translate(const DirichletSeries& d, complex s0) {
  std::vector<complex> c(d.size());
  for (std::size_t n = 0; n < d.size(); ++n)
    c[n] = d.coefficients()[n] * std::exp(-d.frequency()[n] * s0);
  Evaluator ref;
  if (d.has_reference()) ref = [f = d.reference(), s0](complex s) { return f(s + s0); };
  std::optional<double> bound;
  if (s0.real() >= 0.0) bound = d.reference_bound();
  return DirichletSeries(d.frequency(), std::move(c), std::move(ref), bound);
}

/// Trapezoidal approximation of (1/2T) int_{-T}^{T} f(sigma+it) e^{(sigma+it) lambda_n} dt,
/// which tends to a_n as T grows (mean value of an almost periodic function).
/// `n` is 1-based.
inline complex coefficient_recover(const DirichletSeries& d, std::size_t n, double sigma, double T,
                                   double step) {
  detail::require(d.has_reference(), "coefficient_recover: series has no reference evaluator");
  detail::require(sigma > 0.0, "coefficient_recover: sigma must be > 0");
  detail::require(T > 0.0 && step > 0.0, "coefficient_recover: need T > 0 and step > 0");
  detail::require(n >= 1 && n <= d.size(), "coefficient_recover: index out of range");
  const double lam = d.frequency()[n - 1];
  const auto intervals = static_cast<std::size_t>(std::ceil(2.0 * T / step));
  const double h = 2.0 * T / static_cast<double>(intervals);
  complex acc = 0.0;
  for (std::size_t i = 0; i <= intervals; ++i) {
    const complex s(sigma, -T + static_cast<double>(i) * h);
    const double w = (i == 0 || i == intervals) ? 0.5 : 1.0;
    acc += w * d.reference_at(s) * std::exp(s * lam);
  }
  return acc * h / (2.0 * T);
}

}  // namespace dirichlet

#endif
