#ifndef DIRICHLET_ESTIMATE_HPP
#define DIRICHLET_ESTIMATE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace dirichlet {

enum class Abscissa { sigma_c, sigma_a, sigma_u, sigma_u_k, L, Delta };
enum class EstimateTrend { convergent, divergent, inconclusive };

inline std::string to_string(Abscissa a) {
  switch (a) {
    case Abscissa::sigma_c: return "sigma_c";
    case Abscissa::sigma_a: return "sigma_a";
    case Abscissa::sigma_u: return "sigma_u";
    case Abscissa::sigma_u_k: return "sigma_u_k";
    case Abscissa::L: return "L";
    case Abscissa::Delta: return "Delta";
  }
  return "?";
}

inline std::string to_string(EstimateTrend t) {
  switch (t) {
    case EstimateTrend::convergent: return "convergent";
    case EstimateTrend::divergent: return "divergent";
    case EstimateTrend::inconclusive: return "inconclusive";
  }
  return "?";
}

/// A finite-prefix surrogate for a limsup of ratios log(...)/lambda_N.
///
/// `ratios` holds (index, ratio) pairs where the index is N for sequence
/// estimators and the mean length x for Riesz-mean estimators. The estimate
/// is the maximum ratio over the final window of ceil(n/3) entries. When no
/// ratio is defined (e.g. every partial sum vanishes) the estimate is -inf.
struct AbscissaEstimate {
  Abscissa which = Abscissa::sigma_c;
  std::vector<std::pair<double, double>> ratios;
  double estimate = -std::numeric_limits<double>::infinity();
  std::size_t window_size = 0;
  EstimateTrend trend = EstimateTrend::inconclusive;
};

struct WindowOptions {
  /// Relative increase of the final-window max over the preceding window
  /// that still counts as convergent.
  double rel_tol = 1e-2;
  /// Fewer valid ratios than this give an inconclusive trend.
  std::size_t min_points = 6;
};

/// Fills estimate, window size and trend from `ratios` (which must be in
/// index order).
inline AbscissaEstimate windowed_limsup(Abscissa which,
                                        std::vector<std::pair<double, double>> ratios,
                                        const WindowOptions& opt = {}) {
  AbscissaEstimate e;
  e.which = which;
  e.ratios = std::move(ratios);
  const std::size_t n = e.ratios.size();
  if (n == 0) return e;

  const std::size_t w = (n + 2) / 3;
  e.window_size = w;
  auto max_over = [&](std::size_t first, std::size_t last) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = first; i < last; ++i) m = std::max(m, e.ratios[i].second);
    return m;
  };
  e.estimate = max_over(n - w, n);

  if (n < opt.min_points || n < 2 * w) {
    e.trend = EstimateTrend::inconclusive;
    return e;
  }
  const double prev = max_over(n - 2 * w, n - w);
  if (!std::isfinite(prev) || !std::isfinite(e.estimate)) {
    e.trend = EstimateTrend::inconclusive;
  } else if (e.estimate <= prev + opt.rel_tol * std::max(1.0, std::abs(prev))) {
    e.trend = EstimateTrend::convergent;
  } else {
    e.trend = EstimateTrend::divergent;
  }
  return e;
}

}  // namespace dirichlet

#endif
