#ifndef DIRICHLET_IO_HPP
#define DIRICHLET_IO_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dirichlet/error.hpp"
#include "dirichlet/frequency.hpp"
#include "dirichlet/random.hpp"
#include "dirichlet/series.hpp"

namespace dirichlet {

/// Reads coefficients from CSV with header `index,re,im`. Indices are
/// 1-based and must cover 1..M exactly once, in any order.
inline std::vector<complex> read_coefficients_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Rejection("coefficient csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "index,re,im") throw Rejection("coefficient csv: header must be 'index,re,im'");
  std::map<long, complex> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    long idx;
    double re, im;
    char c1, c2;
    std::string rest;
    if (!(ls >> idx >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',' || (ls >> rest))
      throw Rejection("coefficient csv: cannot parse line " + std::to_string(lineno));
    if (idx < 1) throw Rejection("coefficient csv: index must be >= 1 on line " + std::to_string(lineno));
    if (!rows.emplace(idx, complex(re, im)).second)
      throw Rejection("coefficient csv: duplicate index " + std::to_string(idx));
  }
  std::vector<complex> out;
  out.reserve(rows.size());
  long expect = 1;
  for (const auto& [idx, z] : rows) {
    if (idx != expect) throw Rejection("coefficient csv: missing index " + std::to_string(expect));
    out.push_back(z);
    ++expect;
  }
  return out;
}

inline std::vector<complex> read_coefficients_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Rejection("cannot open coefficient file " + path);
  return read_coefficients_csv(in);
}

inline void write_coefficients_csv(std::ostream& out, const std::vector<complex>& c) {
  out << "index,re,im\n" << std::setprecision(17);
  for (std::size_t i = 0; i < c.size(); ++i) out << i + 1 << ',' << c[i].real() << ',' << c[i].imag() << '\n';
}

/// Two-column `N,value` output for profiles and ratio sequences.
inline void write_pairs_csv(std::ostream& out, const std::vector<std::pair<double, double>>& rows) {
  out << "N,value\n" << std::setprecision(17);
  for (const auto& [n, v] : rows) out << n << ',' << v << '\n';
}

/// Builtin coefficient tags accepted by builtin_coefficients.
inline const std::vector<std::string>& coefficient_tags() {
  static const std::vector<std::string> tags{"ones",        "alternating",   "inverse-square", "exp-lambda",
                                             "random-sign", "random-normal", "first-only"};
  return tags;
}

///   ones            a_n = 1
///   alternating     a_n = (-1)^n
///   inverse-square  a_n = 1/n^2
///   exp-lambda      a_n = e^{lambda_n}
///   random-sign     a_n = +-1 from the seeded generator
///   random-normal   a_n complex standard normal from the seeded generator
///   first-only      a_1 = 1, all others 0
inline std::vector<complex> builtin_coefficients(const std::string& tag, const Frequency& f,
                                                 std::uint64_t seed) {
  const std::size_t M = f.size();
  std::vector<complex> c(M, 0.0);
  Rng rng(seed);
  for (std::size_t i = 0; i < M; ++i) {
    const double n = static_cast<double>(i + 1);
    if (tag == "ones") c[i] = 1.0;
    else if (tag == "alternating") c[i] = (i % 2 == 0) ? -1.0 : 1.0;
    else if (tag == "inverse-square") c[i] = 1.0 / (n * n);
    else if (tag == "exp-lambda") c[i] = std::exp(f[i]);
    else if (tag == "random-sign") c[i] = rng.sign();
    else if (tag == "random-normal") c[i] = rng.complex_normal();
    else if (tag == "first-only") c[i] = i == 0 ? 1.0 : 0.0;
    else throw Rejection("unknown coefficient tag '" + tag + "'");
  }
  return c;
}

/// Closed forms that can be attached to a series:
///   self       the polynomial itself, bounded by sum |a_n|
///   geometric  f(s) = 1/(1 - e^{-s}), the limit of sum e^{-ns}; unbounded near 0
inline DirichletSeries attach_reference(Frequency f, std::vector<complex> c, const std::string& ref) {
  if (ref.empty() || ref == "none") return DirichletSeries(std::move(f), std::move(c));
  if (ref == "self") return DirichletSeries::polynomial(std::move(f), std::move(c));
  if (ref == "geometric")
    return DirichletSeries(std::move(f), std::move(c), [](complex s) { return 1.0 / (1.0 - std::exp(-s)); });
  throw Rejection("unknown reference '" + ref + "'");
}

}  // namespace dirichlet

#endif
