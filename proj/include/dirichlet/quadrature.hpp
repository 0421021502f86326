#ifndef DIRICHLET_QUADRATURE_HPP
#define DIRICHLET_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "dirichlet/error.hpp"

namespace dirichlet::quad {

/// Double-exponential quadrature on [a, b]; tolerates integrable endpoint
/// singularities. `f` takes (x, xc) where xc is the signed distance to the
/// nearer endpoint (a - x on the left half, b - x on the right half).
template <class F>
double tanh_sinh2(F f, double a, double b, double tol, double* error = nullptr) {
  // integrate() is not const-qualified in Boost 1.74.
  static boost::math::quadrature::tanh_sinh<double> integrator(15);
  double err = 0.0, l1 = 0.0;
  const double v = integrator.integrate(f, a, b, tol, &err, &l1);
  if (error) *error = err;
  return v;
}

template <class F>
double tanh_sinh(F f, double a, double b, double tol, double* error = nullptr) {
  return tanh_sinh2([&](double x, double) { return f(x); }, a, b, tol, error);
}

/// Complex integrand, real and imaginary parts integrated separately.
template <class F>
std::complex<double> tanh_sinh_complex(F f, double a, double b, double tol) {
  const double re = tanh_sinh([&](double x) { return f(x).real(); }, a, b, tol);
  const double im = tanh_sinh([&](double x) { return f(x).imag(); }, a, b, tol);
  return {re, im};
}

/// int_0^inf f(x) dx for f decaying at infinity.
template <class F>
double half_line(F f, double tol) {
  static boost::math::quadrature::exp_sinh<double> integrator(12);
  return integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), tol);
}

/// Composite trapezoid on [a, b] refined by step halving.
///
/// Starts from roughly `initial_step`, halves until successive values differ
/// by less than `tol` or `max_halvings` is reached. Previously computed nodes
/// are reused, so every halving costs only the new midpoints.
struct TrapezoidResult {
  std::complex<double> value;
  double last_change = std::numeric_limits<double>::infinity();
  double step = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

template <class F>
TrapezoidResult trapezoid(F f, double a, double b, double initial_step, double tol,
                             int max_halvings = 24) {
  detail::require(b > a && initial_step > 0, "trapezoid: need b > a and a positive step");
  TrapezoidResult r;
  auto n = static_cast<std::size_t>(std::ceil((b - a) / initial_step));
  if (n < 2) n = 2;
  double h = (b - a) / static_cast<double>(n);
  std::complex<double> sum = 0.5 * (f(a) + f(b));
  for (std::size_t i = 1; i < n; ++i) sum += f(a + static_cast<double>(i) * h);
  r.evaluations = n + 1;
  std::complex<double> value = sum * h;
  for (int k = 0; k < max_halvings; ++k) {
    std::complex<double> mid = 0.0;
    for (std::size_t i = 0; i < n; ++i) mid += f(a + (static_cast<double>(i) + 0.5) * h);
    r.evaluations += n;
    sum += mid;
    n *= 2;
    h *= 0.5;
    const std::complex<double> next = sum * h;
    r.last_change = std::abs(next - value);
    value = next;
    if (r.last_change < tol) {
      r.converged = true;
      break;
    }
  }
  r.value = value;
  r.step = h;
  return r;
}

}  // namespace dirichlet::quad

#endif
