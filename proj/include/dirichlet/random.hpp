#ifndef DIRICHLET_RANDOM_HPP
#define DIRICHLET_RANDOM_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace dirichlet {

/// Seeded generator with distribution code pinned here rather than taken
/// from the standard library, whose distributions are implementation-defined.
/// mt19937_64 itself is fully specified, so a seed gives the same stream on
/// every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi) {
    return lo + static_cast<long>(uniform() * static_cast<double>(hi - lo + 1));
  }
  double sign() { return (engine_() >> 63) ? 1.0 : -1.0; }
  /// Standard normal via Box-Muller.
  double normal() {
    double u = uniform();
    while (u == 0.0) u = uniform();
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
  }
  std::complex<double> complex_normal() { return {normal(), normal()}; }

private:
  std::mt19937_64 engine_;
};

}  // namespace dirichlet

#endif
