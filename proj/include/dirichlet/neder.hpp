#ifndef DIRICHLET_NEDER_HPP
#define DIRICHLET_NEDER_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "dirichlet/error.hpp"
#include "dirichlet/frequency.hpp"
#include "dirichlet/series.hpp"

namespace dirichlet {

/// F_m(z) = sum_{j=1}^{2m-1} z^j / (m - j), with the j = m term set to 0.
struct FejerPolynomial {
  long m = 1;
  std::vector<double> coeffs;  ///< coeffs[j-1] for j = 1..2m-1

  complex operator()(complex z) const {
    complex acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = (acc + *it) * z;
    return acc;
  }
};

inline FejerPolynomial fejer_polynomial(long m) {
  detail::require(m >= 1, "fejer_polynomial: need m >= 1");
  FejerPolynomial p;
  p.m = m;
  p.coeffs.resize(static_cast<std::size_t>(2 * m - 1));
  for (long j = 1; j <= 2 * m - 1; ++j)
    p.coeffs[static_cast<std::size_t>(j - 1)] = j == m ? 0.0 : 1.0 / static_cast<double>(m - j);
  return p;
}

/// max over theta = 2 pi i / resolution of |F_m(e^{i theta})|. The unit
/// circle suffices by the maximum principle.
inline double fejer_sup(long m, std::size_t resolution = 4096) {
  detail::require(resolution >= 4, "fejer_sup: resolution must be >= 4");
  const FejerPolynomial p = fejer_polynomial(m);
  double best = 0.0;
  for (std::size_t i = 0; i < resolution; ++i) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(resolution);
    best = std::max(best, std::abs(p(std::polar(1.0, theta))));
  }
  return best;
}

/// max_{1 <= m <= m_max} fejer_sup(m).
inline double fejer_sup_max(long m_max, std::size_t resolution = 4096) {
  double c = 0.0;
  for (long m = 1; m <= m_max; ++m) c = std::max(c, fejer_sup(m, resolution));
  return c;
}

/// One base point lambda_n with its inserted points
/// lambda_n + j gap / (2r), j = 0..2r-1, stored at eta[eta_first + j].
struct NederMember {
  std::size_t base_index = 0;
  double lambda = 0.0;
  double gap = 0.0;
  long r = 1;
  bool capped = false;  ///< r was clipped to the cap
  std::size_t eta_first = 0;
};

/// I_k = {lambda_n : k <= lambda_n < k+1} and b_k = e^{-xk} / |I_k|.
struct NederBlock {
  long k = 0;
  std::vector<std::size_t> members;  ///< indices into NederConstruction::members
  double b = 0.0;
  bool cap_applied = false;
  std::size_t size() const { return members.size(); }
};

struct NederConstruction {
  double x = 0.0;
  long r_cap = 0;
  Frequency base;
  bool refined = false;  ///< base was passed through refine_gaps
  std::vector<NederMember> members;
  std::vector<NederBlock> blocks;
  Frequency eta;
  std::vector<complex> coeffs;
};

namespace detail {

/// max{r in N : r < e^{log_y}}, or `cap + 1` when that exceeds the cap.
inline long strict_floor_exp(double log_y, long cap) {
  if (log_y > std::log(static_cast<double>(cap) + 1.0)) return cap + 1;
  const double y = std::exp(log_y);
  return static_cast<long>(std::ceil(y)) - 1;
}

}  // namespace detail

/// Builds eta and the coefficients b_k / (r - j) (0 at j in {0, r}) over the
/// base points that have a successor. r_{n,k} is the largest integer below
/// e^{e^{2 x lambda_n} |I_k|}, clipped to r_cap and at least 1.
inline NederConstruction neder_construct(const Frequency& input, double x, long r_cap = 5000) {
  detail::require(input.size() >= 2, "neder_construct: base needs at least two points");
  detail::require(x > 0.0, "neder_construct: x must be > 0");
  detail::require(r_cap >= 1, "neder_construct: r_cap must be >= 1");
  const bool refine = input.max_gap() > 1.0;
  Frequency base = refine ? refine_gaps(input) : input;

  std::vector<NederMember> members;
  std::vector<NederBlock> blocks;
  for (std::size_t n = 0; n + 1 < base.size(); ++n) {
    const long k = static_cast<long>(std::floor(base[n]));
    if (blocks.empty() || blocks.back().k != k) blocks.push_back(NederBlock{k, {}, 0.0, false});
    blocks.back().members.push_back(members.size());
    members.push_back(NederMember{n, base[n], base[n + 1] - base[n], 1, false, 0});
  }

  std::vector<double> eta;
  std::vector<complex> coeffs;
  for (auto& blk : blocks) {
    const double size = static_cast<double>(blk.size());
    blk.b = std::exp(-x * static_cast<double>(blk.k)) / size;
    for (std::size_t mi : blk.members) {
      NederMember& mem = members[mi];
      const double log_y = std::exp(2.0 * x * mem.lambda) * size;
      long r = detail::strict_floor_exp(log_y, r_cap);
      if (r > r_cap) {
        r = r_cap;
        mem.capped = true;
        blk.cap_applied = true;
      }
      mem.r = std::max(r, 1L);
      mem.eta_first = eta.size();
      for (long j = 0; j < 2 * mem.r; ++j) {
        eta.push_back(mem.lambda + static_cast<double>(j) * mem.gap / static_cast<double>(2 * mem.r));
        coeffs.emplace_back(j == 0 || j == mem.r ? 0.0 : blk.b / static_cast<double>(mem.r - j));
      }
    }
  }
  // Frequency rejects any non-increasing step, which checks monotonicity
  // across member and block seams.
  Frequency eta_freq(std::move(eta), "neder(" + base.generator() + ")");
  return NederConstruction{x, r_cap, std::move(base), refine, std::move(members), std::move(blocks),
                           std::move(eta_freq), std::move(coeffs)};
}

struct DivergenceRow {
  std::size_t base_index = 0;
  long k = 0;
  long r = 1;
  double block_sum = 0.0;
  double threshold = 0.0;
  bool pass = false;
  bool exempt = false;  ///< capped members are outside the contract
};

/// Per member: sum_{j=1}^{r-1} b_k/(r-j) e^{-x(lambda_n + j gap/(2r))} against e^{-x}/4.
inline std::vector<DivergenceRow> neder_divergence_check(const NederConstruction& c) {
  std::vector<DivergenceRow> rows;
  const double threshold = std::exp(-c.x) / 4.0;
  for (const auto& blk : c.blocks) {
    for (std::size_t mi : blk.members) {
      const NederMember& m = c.members[mi];
      DivergenceRow row;
      row.base_index = m.base_index;
      row.k = blk.k;
      row.r = m.r;
      for (long j = 1; j <= m.r - 1; ++j) {
        const double pt = m.lambda + static_cast<double>(j) * m.gap / static_cast<double>(2 * m.r);
        row.block_sum += blk.b / static_cast<double>(m.r - j) * std::exp(-c.x * pt);
      }
      row.threshold = threshold;
      row.pass = row.block_sum >= threshold;
      row.exempt = m.capped;
      rows.push_back(row);
    }
  }
  return rows;
}

/// Coefficients of D^K: the construction restricted to the first K blocks.
inline std::vector<complex> neder_partial_coeffs(const NederConstruction& c, std::size_t K) {
  detail::require(K <= c.blocks.size(), "neder: K exceeds the number of blocks");
  std::vector<complex> out(c.coeffs.size(), 0.0);
  for (std::size_t b = 0; b < K; ++b)
    for (std::size_t mi : c.blocks[b].members) {
      const NederMember& m = c.members[mi];
      for (long j = 0; j < 2 * m.r; ++j) out[m.eta_first + j] = c.coeffs[m.eta_first + j];
    }
  return out;
}

/// D^K(s) summed term by term over eta.
inline complex neder_partial_direct(const NederConstruction& c, std::size_t K, complex s) {
  detail::require(K <= c.blocks.size(), "neder: K exceeds the number of blocks");
  complex acc = 0.0;
  for (std::size_t b = 0; b < K; ++b)
    for (std::size_t mi : c.blocks[b].members) {
      const NederMember& m = c.members[mi];
      for (long j = 0; j < 2 * m.r; ++j)
        acc += c.coeffs[m.eta_first + j] * std::exp(-c.eta[m.eta_first + j] * s);
    }
  return acc;
}

/// D^K(s) = sum_{k<=K} b_k sum_{n in I_k} e^{-lambda_n s} F_r(e^{-s gap/(2r)}).
inline complex neder_partial_fejer(const NederConstruction& c, std::size_t K, complex s) {
  detail::require(K <= c.blocks.size(), "neder: K exceeds the number of blocks");
  complex acc = 0.0;
  for (std::size_t b = 0; b < K; ++b) {
    const NederBlock& blk = c.blocks[b];
    complex inner = 0.0;
    for (std::size_t mi : blk.members) {
      const NederMember& m = c.members[mi];
      const FejerPolynomial F = fejer_polynomial(m.r);
      inner += std::exp(-m.lambda * s) * F(std::exp(-s * m.gap / static_cast<double>(2 * m.r)));
    }
    acc += blk.b * inner;
  }
  return acc;
}

struct CauchyCheck {
  double observed = 0.0;  ///< grid sup of |D^L - D^K|
  double bound = 0.0;     ///< c_obs sum_{k=K}^{L} b_k |I_k|
  bool holds(double slack) const { return observed <= bound + slack; }
};

/// K and L count blocks from the start (1-based positions in the bound sum).
inline CauchyCheck neder_cauchy_check(const NederConstruction& c, std::size_t K, std::size_t L,
                                      const LineGrid& grid, double c_obs) {
  detail::require(K <= L && L <= c.blocks.size(), "neder_cauchy_check: need K <= L <= blocks");
  CauchyCheck r;
  for (std::size_t b = std::max<std::size_t>(K, 1); b <= L; ++b)
    r.bound += c.blocks[b - 1].b * static_cast<double>(c.blocks[b - 1].size());
  r.bound *= c_obs;
  if (K == L) return r;

  const auto dk = neder_partial_coeffs(c, K);
  const auto dl = neder_partial_coeffs(c, L);
  std::size_t first = c.coeffs.size(), last = 0;
  std::vector<complex> diff(c.coeffs.size());
  for (std::size_t i = 0; i < diff.size(); ++i) {
    diff[i] = dl[i] - dk[i];
    if (diff[i] != 0.0) {
      first = std::min(first, i);
      last = i;
    }
  }
  if (first > last) return r;
  std::vector<double> pts(c.eta.values().begin() + static_cast<long>(first),
                          c.eta.values().begin() + static_cast<long>(last) + 1);
  std::vector<complex> sub(diff.begin() + static_cast<long>(first), diff.begin() + static_cast<long>(last) + 1);
  const DirichletSeries d(Frequency(std::move(pts), "neder-window"), std::move(sub));
  r.observed = line_sup(d, d.size(), grid);
  return r;
}

}  // namespace dirichlet

#endif
