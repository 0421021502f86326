#ifndef DIRICHLET_FREQUENCY_HPP
#define DIRICHLET_FREQUENCY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "dirichlet/error.hpp"
#include "dirichlet/estimate.hpp"

namespace dirichlet {

/// A finite prefix lambda_1 < lambda_2 < ... < lambda_M of a frequency.
///
/// Values are kept as doubles; the gaps are additionally kept as natural
/// logarithms in extended precision. For most frequencies the log-gaps are
/// just log(values[i+1] - values[i]). The interleaving generators place
/// points at distance e^{-n^2} or e^{-e^{n^2}}, far below the resolution of
/// a double, so there the gaps are only available through log_gap() and
/// neighbouring values may compare equal.
class Frequency {
public:
  /// Builds a frequency from explicit values, gaps taken from differences.
  /// Rejects non-finite, negative-start, too-short or non-increasing input,
  /// naming the first offending index.
  explicit Frequency(std::vector<double> values, std::string generator = "custom",
                     bool rationally_independent = false)
      : values_(std::move(values)), generator_(std::move(generator)),
        independent_(rationally_independent) {
    check_basic();
    log_gaps_.resize(values_.size() - 1);
    for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
      if (!(values_[i + 1] > values_[i]))
        throw Rejection("frequency not strictly increasing at index " + std::to_string(i + 1) +
                        " (" + std::to_string(values_[i]) + " >= " +
                        std::to_string(values_[i + 1]) + ")");
      log_gaps_[i] = std::log(static_cast<long double>(values_[i + 1]) -
                              static_cast<long double>(values_[i]));
    }
  }

  /// Builds a frequency whose gaps are known analytically (in log form).
  Frequency(std::vector<double> values, std::vector<long double> log_gaps, std::string generator,
            bool rationally_independent = false)
      : values_(std::move(values)), log_gaps_(std::move(log_gaps)),
        generator_(std::move(generator)), independent_(rationally_independent) {
    check_basic();
    detail::require(log_gaps_.size() + 1 == values_.size(), "frequency: log-gap count mismatch");
    for (std::size_t i = 0; i < log_gaps_.size(); ++i) {
      if (!std::isfinite(log_gaps_[i]))
        throw Rejection("frequency gap not representable at index " + std::to_string(i));
      if (values_[i + 1] < values_[i])
        throw Rejection("frequency not increasing at index " + std::to_string(i + 1));
      // Equal doubles are only acceptable when the true gap is below resolution.
      if (values_[i + 1] == values_[i]) {
        const long double ulp = std::nextafter(values_[i], std::numeric_limits<double>::infinity()) -
                                values_[i];
        if (log_gaps_[i] >= std::log(ulp))
          throw Rejection("frequency not strictly increasing at index " + std::to_string(i + 1));
      }
    }
  }

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const noexcept { return values_; }
  const std::vector<long double>& log_gaps() const noexcept { return log_gaps_; }
  /// log(lambda_{i+2} - lambda_{i+1}) in 1-based terms, i.e. gap after values()[i].
  long double log_gap(std::size_t i) const { return log_gaps_.at(i); }
  double gap(std::size_t i) const { return static_cast<double>(std::exp(log_gaps_.at(i))); }
  double max_gap() const {
    long double m = -std::numeric_limits<long double>::infinity();
    for (auto g : log_gaps_) m = std::max(m, g);
    return static_cast<double>(std::exp(m));
  }
  const std::string& generator() const noexcept { return generator_; }
  /// Trusted metadata: the generator guarantees Q-linear independence.
  bool rationally_independent() const noexcept { return independent_; }

  /// Leading M values as a new frequency (M >= 2).
  Frequency prefix(std::size_t m) const {
    detail::require(m >= 2 && m <= size(), "frequency prefix length out of range");
    return Frequency(std::vector<double>(values_.begin(), values_.begin() + m),
                     std::vector<long double>(log_gaps_.begin(), log_gaps_.begin() + (m - 1)),
                     generator_, independent_);
  }

private:
  void check_basic() const {
    detail::require(values_.size() >= 2, "frequency needs at least two values");
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (!std::isfinite(values_[i]))
        throw Rejection("frequency value not finite at index " + std::to_string(i));
    detail::require(values_[0] >= 0.0, "frequency must start at a nonnegative value");
  }

  std::vector<double> values_;
  std::vector<long double> log_gaps_;
  std::string generator_;
  bool independent_ = false;
};

namespace detail {

/// First `count` primes by a sieve whose bound is grown until it suffices.
inline std::vector<long> first_primes(std::size_t count) {
  std::size_t limit = 16;
  while (true) {
    const double n = static_cast<double>(std::max<std::size_t>(count, 6));
    limit = std::max(limit, static_cast<std::size_t>(n * (std::log(n) + std::log(std::log(n)))) + 16);
    std::vector<bool> composite(limit + 1, false);
    std::vector<long> primes;
    for (std::size_t p = 2; p <= limit && primes.size() < count; ++p) {
      if (composite[p]) continue;
      primes.push_back(static_cast<long>(p));
      for (std::size_t q = p * p; q <= limit; q += p) composite[q] = true;
    }
    if (primes.size() >= count) return primes;
    limit *= 2;
  }
}

}  // namespace detail

/// Builtin generator tags accepted by make_frequency.
inline const std::vector<std::string>& frequency_kinds() {
  static const std::vector<std::string> kinds{"log",       "linear",          "sqrtlog",
                                              "logprimes", "interleave-exp2", "interleave-expexp2",
                                              "custom"};
  return kinds;
}

/// Prefix of length m of a named frequency.
///
///   log                 lambda_n = log n                       (0, log 2, ...)
///   linear              lambda_n = offset + step*(n-1)          params {offset=0, step=1}
///   sqrtlog             lambda_n = sqrt(log n)
///   logprimes           lambda_n = log p_n                      (Q-linearly independent)
///   interleave-exp2     lambda_{2n-1} = n, lambda_{2n} = n + e^{-n^2}
///   interleave-expexp2  lambda_{2n-1} = n, lambda_{2n} = n + e^{-e^{n^2}}
///   custom              values taken from params
inline Frequency make_frequency(const std::string& kind, const std::vector<double>& params,
                                std::size_t m) {
  if (kind == "custom") return Frequency(params, "custom");
  detail::require(m >= 2, "frequency length M must be >= 2");
  std::vector<double> v(m);

  if (kind == "log") {
    for (std::size_t n = 1; n <= m; ++n) v[n - 1] = std::log(static_cast<double>(n));
    return Frequency(std::move(v), "log");
  }
  if (kind == "linear") {
    const double offset = params.size() > 0 ? params[0] : 0.0;
    const double step = params.size() > 1 ? params[1] : 1.0;
    detail::require(step > 0 && offset >= 0, "linear frequency needs offset >= 0, step > 0");
    for (std::size_t n = 0; n < m; ++n) v[n] = offset + step * static_cast<double>(n);
    return Frequency(std::move(v), "linear");
  }
  if (kind == "sqrtlog") {
    for (std::size_t n = 1; n <= m; ++n) v[n - 1] = std::sqrt(std::log(static_cast<double>(n)));
    return Frequency(std::move(v), "sqrtlog");
  }
  if (kind == "logprimes") {
    const auto primes = detail::first_primes(m);
    for (std::size_t n = 0; n < m; ++n) v[n] = std::log(static_cast<double>(primes[n]));
    return Frequency(std::move(v), "logprimes", true);
  }
  if (kind == "interleave-exp2" || kind == "interleave-expexp2") {
    const bool double_exp = kind == "interleave-expexp2";
    // log of the small offset e^{-n^2} resp. e^{-e^{n^2}}
    auto log_offset = [&](long double n) -> long double {
      return double_exp ? -std::exp(n * n) : -(n * n);
    };
    if (double_exp) {
      const long double n_max = std::ceil(m / 2.0L);
      detail::require(std::isfinite(std::exp(n_max * n_max)),
                      "interleave-expexp2: gaps e^{-e^{n^2}} leave the extended range for M > 212");
    }
    std::vector<long double> lg(m - 1);
    for (std::size_t i = 0; i < m; ++i) {
      const long double n = static_cast<long double>(i / 2 + 1);
      const long double off = std::exp(log_offset(n));
      v[i] = static_cast<double>(i % 2 == 0 ? n : n + off);
      if (i + 1 < m) {
        // even i: gap to n + offset is the offset; odd i: gap to n+1 is 1 - offset
        lg[i] = (i % 2 == 0) ? log_offset(n) : std::log1p(-off);
      }
    }
    return Frequency(std::move(v), std::move(lg), kind);
  }
  throw Rejection("unknown frequency kind '" + kind + "'");
}

/// Reads a custom frequency: one decimal per line, '#' starts a comment.
inline Frequency read_frequency(std::istream& in) {
  std::vector<double> v;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    double x;
    if (!(ls >> x)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw Rejection("frequency file: cannot parse line " + std::to_string(lineno));
    }
    std::string rest;
    if (ls >> rest) throw Rejection("frequency file: trailing text on line " + std::to_string(lineno));
    v.push_back(x);
  }
  return Frequency(std::move(v), "custom");
}

inline Frequency read_frequency_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Rejection("cannot open frequency file " + path);
  return read_frequency(in);
}

// ---------------------------------------------------------------------------
// Gap conditions

enum class Condition { BC, LC, POLY, L };
enum class ConditionTrend { stable, decaying, inconclusive };
enum class Verdict { evidence_for, evidence_against, inconclusive };

inline std::string to_string(Condition c) {
  switch (c) {
    case Condition::BC: return "BC";
    case Condition::LC: return "LC";
    case Condition::POLY: return "POLY";
    case Condition::L: return "L";
  }
  return "?";
}
inline std::string to_string(ConditionTrend t) {
  switch (t) {
    case ConditionTrend::stable: return "stable";
    case ConditionTrend::decaying: return "decaying";
    case ConditionTrend::inconclusive: return "inconclusive";
  }
  return "?";
}
inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::evidence_for: return "evidence-for";
    case Verdict::evidence_against: return "evidence-against";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct ConditionParams {
  double l = 0.0;
  double delta = 0.0;
  double d = 0.0;
};

/// Finite-prefix evidence for a lower gap condition gap_n >= C / w(lambda_n).
///
/// log_constants[n] = log(gap_n) + log w(lambda_n) for n = 0..M-2. A condition
/// holding for all n means the constants stay bounded below, so the trend is
/// read from the slope of the running minimum of log C over the final third.
struct ConditionReport {
  Condition condition = Condition::BC;
  ConditionParams params;
  std::vector<long double> log_constants;
  long double log_infimum = 0;
  std::size_t witness_index = 0;  ///< index attaining the infimum
  double slope = 0.0;             ///< fitted slope of the running minimum
  double tol_slope = 1e-3;
  ConditionTrend trend = ConditionTrend::inconclusive;
  Verdict verdict = Verdict::inconclusive;
};

inline Verdict verdict_for(ConditionTrend t) {
  switch (t) {
    case ConditionTrend::stable: return Verdict::evidence_for;
    case ConditionTrend::decaying: return Verdict::evidence_against;
    case ConditionTrend::inconclusive: break;
  }
  return Verdict::inconclusive;
}

namespace detail {

/// Least-squares slope of ys against their index.
inline double ls_slope(const std::vector<long double>& ys, std::size_t first) {
  const std::size_t n = ys.size() - first;
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = first; i < ys.size(); ++i) {
    const long double x = static_cast<long double>(i);
    sx += x;
    sy += ys[i];
    sxx += x * x;
    sxy += x * ys[i];
  }
  const long double nn = static_cast<long double>(n);
  const long double den = nn * sxx - sx * sx;
  if (den == 0) return 0.0;
  return static_cast<double>((nn * sxy - sx * sy) / den);
}

inline ConditionReport check_condition(const Frequency& f, Condition c, ConditionParams p,
                                       const std::function<long double(long double)>& log_weight,
                                       double tol_slope) {
  ConditionReport r;
  r.condition = c;
  r.params = p;
  r.tol_slope = tol_slope;
  const std::size_t n = f.size() - 1;
  r.log_constants.resize(n);
  std::vector<long double> running(n);
  long double run = std::numeric_limits<long double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    r.log_constants[i] = f.log_gap(i) + log_weight(static_cast<long double>(f[i]));
    if (r.log_constants[i] < run) {
      run = r.log_constants[i];
      r.witness_index = i;
    }
    running[i] = run;
  }
  r.log_infimum = run;

  const std::size_t tail = n / 3;
  if (tail < 10) {
    r.trend = ConditionTrend::inconclusive;
  } else {
    r.slope = ls_slope(running, n - tail);
    r.trend = r.slope >= -tol_slope ? ConditionTrend::stable : ConditionTrend::decaying;
  }
  r.verdict = verdict_for(r.trend);
  return r;
}

}  // namespace detail

/// Bohr's condition: gap_n >= C e^{-(l+delta) lambda_n}.
inline ConditionReport check_bc(const Frequency& f, double l, double delta, double tol_slope = 1e-3) {
  detail::require(l > 0 && delta > 0, "check_bc needs l > 0 and delta > 0");
  const long double a = static_cast<long double>(l) + delta;
  return detail::check_condition(f, Condition::BC, {l, delta, 0.0},
                                 [a](long double lam) { return a * lam; }, tol_slope);
}

/// Landau's condition: gap_n >= C e^{-e^{delta lambda_n}}. Weights are
/// handled as exponents so the double exponential never materialises.
inline ConditionReport check_lc(const Frequency& f, double delta, double tol_slope = 1e-3) {
  detail::require(delta > 0, "check_lc needs delta > 0");
  return detail::check_condition(f, Condition::LC, {0.0, delta, 0.0},
                                 [delta](long double lam) { return std::exp(delta * lam); },
                                 tol_slope);
}

/// Polynomial growth condition: gap_n >= C e^{-(l+delta) lambda_n^d}.
inline ConditionReport check_poly_growth(const Frequency& f, double l, double d, double delta,
                                         double tol_slope = 1e-3) {
  detail::require(l > 0 && d > 0, "check_poly_growth needs l > 0 and d > 0");
  detail::require(delta > 0, "check_poly_growth needs delta > 0");
  const long double a = static_cast<long double>(l) + delta;
  return detail::check_condition(f, Condition::POLY, {l, delta, d},
                                 [a, d](long double lam) { return a * std::pow(lam, (long double)d); },
                                 tol_slope);
}

/// Ratios log(N)/lambda_N for N = 2..M (lambda_N = 0 skipped) with a
/// windowed limsup; L(lambda) = 0 shows up as a convergent trend.
inline AbscissaEstimate estimate_L(const Frequency& f, const WindowOptions& opt = {}) {
  detail::require(f.size() >= 3, "estimate_L needs M >= 3");
  std::vector<std::pair<double, double>> ratios;
  ratios.reserve(f.size());
  for (std::size_t N = 2; N <= f.size(); ++N) {
    const double lam = f[N - 1];
    if (lam == 0.0) continue;
    ratios.emplace_back(static_cast<double>(N), std::log(static_cast<double>(N)) / lam);
  }
  return windowed_limsup(Abscissa::L, std::move(ratios), opt);
}

/// Inserts points so every gap is at most 1, keeping the input as a
/// subsequence. A gap g > 1 first receives lambda_n + 1, ..., lambda_n + l - 2
/// with l = ceil(g) (only when l >= 3); a leftover gap in (1, 2] is then
/// split at its midpoint.
inline Frequency refine_gaps(const Frequency& f) {
  if (f.max_gap() <= 1.0) return f;
  std::vector<double> v;
  std::vector<long double> lg;
  v.reserve(f.size());
  v.push_back(f[0]);
  auto push = [&](double next) {
    lg.push_back(std::log(static_cast<long double>(next) - v.back()));
    v.push_back(next);
  };
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    const double a = f[i];
    const double b = f[i + 1];
    if (f.log_gap(i) <= 0.0L) {
      lg.push_back(f.log_gap(i));
      v.push_back(b);
      continue;
    }
    const double g = b - a;
    const auto l = static_cast<long>(std::ceil(g));
    double last = a;
    if (l >= 3) {
      for (long j = 1; j <= l - 2; ++j) {
        last = a + static_cast<double>(j);
        push(last);
      }
    }
    if (b - last > 1.0) push(0.5 * (last + b));
    push(b);
  }
  return Frequency(std::move(v), std::move(lg), f.generator() + "+refined");
}

}  // namespace dirichlet

#endif
