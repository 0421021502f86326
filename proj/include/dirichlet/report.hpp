#ifndef DIRICHLET_REPORT_HPP
#define DIRICHLET_REPORT_HPP

// JSON views of the result types. Non-finite doubles become null.

#include <cmath>
#include <complex>
#include <vector>

#include "json.hpp"

#include "dirichlet/bounds.hpp"
#include "dirichlet/estimate.hpp"
#include "dirichlet/frequency.hpp"
#include "dirichlet/neder.hpp"
#include "dirichlet/perron.hpp"
#include "dirichlet/riesz.hpp"
#include "dirichlet/series.hpp"

namespace dirichlet {

using json = nlohmann::ordered_json;

inline json as_json(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }
inline json as_json(complex z) { return json{{"re", as_json(z.real())}, {"im", as_json(z.imag())}}; }

inline json as_json(const std::vector<complex>& zs) {
  json a = json::array();
  for (const auto& z : zs) a.push_back(as_json(z));
  return a;
}

inline json as_json(const Frequency& f, bool with_values = false) {
  json j{{"generator", f.generator()},
         {"M", f.size()},
         {"first", f[0]},
         {"last", f[f.size() - 1]},
         {"maxGap", as_json(f.max_gap())},
         {"rationallyIndependent", f.rationally_independent()}};
  if (with_values) j["values"] = f.values();
  return j;
}

inline json as_json(const ConditionReport& r) {
  json params = json::object();
  if (r.condition == Condition::BC || r.condition == Condition::POLY) params["l"] = r.params.l;
  params["delta"] = r.params.delta;
  if (r.condition == Condition::POLY) params["d"] = r.params.d;
  return json{{"condition", to_string(r.condition)},
              {"params", params},
              {"infimumConstant", as_json(static_cast<double>(r.log_infimum))},
              {"infimumConstantScale", "log"},
              {"witnessIndex", r.witness_index + 1},
              {"slope", as_json(r.slope)},
              {"tolSlope", r.tol_slope},
              {"trend", to_string(r.trend)},
              {"verdict", to_string(r.verdict)}};
}

inline json as_json(const AbscissaEstimate& e) {
  json ratios = json::array();
  for (const auto& [n, v] : e.ratios) ratios.push_back(json::array({n, as_json(v)}));
  return json{{"which", to_string(e.which)},
              {"estimate", std::isinf(e.estimate) ? json(e.estimate > 0 ? "+inf" : "-inf") : as_json(e.estimate)},
              {"windowSize", e.window_size},
              {"trend", to_string(e.trend)},
              {"ratios", ratios}};
}

inline json as_json(const SupBound& b) {
  return json{{"lower", as_json(b.lower)}, {"upper", as_json(b.upper)}, {"step", b.step}};
}

inline json as_json(const NormEstimate& n) {
  return json{{"lower", as_json(n.lower)}, {"upper", as_json(n.upper)}, {"sigmaAtMax", n.sigma_at_max}};
}

inline json as_json(const IdentityCheck& c) {
  return json{{"lhs", as_json(c.lhs)}, {"rhs", as_json(c.rhs)}, {"residual", as_json(c.residual)}};
}

inline json as_json(const BetaCheck& b) {
  return json{{"lhs", as_json(b.lhs)}, {"rhs", as_json(b.rhs)}, {"difference", as_json(std::abs(b.lhs - b.rhs))}};
}

inline json as_json(const OptimalBound& o) {
  return json{{"kStar", o.k}, {"bound", as_json(o.bound)}, {"logBound", as_json(o.log_bound)},
              {"gridFallback", o.grid_fallback}};
}

inline json as_json(const HardyCheck& h) {
  return json{{"lhs", as_json(h.lhs)}, {"rhs", as_json(h.rhs)}, {"supTypicalMean", as_json(h.sup)},
              {"gridPoints", h.points}, {"holds", h.holds()}};
}

inline json as_json(const KroneckerNorm& k) {
  return json{{"value", as_json(k.value)}, {"status", k.exact ? "exact" : "upper bound only"}};
}

inline json as_json(const BoundProfile& p) {
  json rows = json::array();
  for (const auto& r : p.rows)
    rows.push_back(json{{"N", r.N}, {"lambda", r.lambda}, {"logK", r.log_k},
                        {"bound", as_json(std::exp(r.log_bound))}, {"logBound", as_json(r.log_bound)},
                        {"ratio", as_json(r.ratio)}});
  return json{{"regime", to_string(p.regime.kind)}, {"param", p.regime.param},
              {"variant", to_string(p.variant)}, {"refined", p.refined}, {"M", p.M}, {"rows", rows}};
}

inline json as_json(const PerronResult& r) {
  return json{{"value", as_json(r.value)},          {"tailBound", as_json(r.tail_bound)},
              {"quadratureChange", as_json(r.quad_change)}, {"step", r.step},
              {"evaluations", r.evaluations},        {"converged", r.converged}};
}

inline json as_json(const PerronComparison& c) {
  return json{{"perron", as_json(c.perron)}, {"direct", as_json(c.direct)}, {"residual", as_json(c.residual)},
              {"certificate", as_json(c.perron.certificate())}};
}

inline json as_json(const FejerPolynomial& p) { return json{{"m", p.m}, {"coefficients", p.coeffs}}; }

inline json as_json(const NederConstruction& c, bool with_points = true) {
  json blocks = json::array();
  for (const auto& b : c.blocks) {
    json members = json::array();
    for (std::size_t mi : b.members) {
      const auto& m = c.members[mi];
      members.push_back(json{{"baseIndex", m.base_index + 1}, {"lambda", m.lambda}, {"gap", m.gap},
                             {"r", m.r}, {"capped", m.capped}});
    }
    blocks.push_back(json{{"k", b.k}, {"size", b.size()}, {"b", b.b}, {"capApplied", b.cap_applied},
                          {"members", members}});
  }
  json j{{"x", c.x}, {"rCap", c.r_cap}, {"base", as_json(c.base)}, {"baseRefined", c.refined},
         {"blocks", blocks}, {"etaSize", c.eta.size()}};
  if (with_points) {
    j["eta"] = c.eta.values();
    j["coefficients"] = as_json(c.coeffs);
  }
  return j;
}

inline json as_json(const std::vector<DivergenceRow>& rows) {
  json a = json::array();
  for (const auto& r : rows)
    a.push_back(json{{"n", r.base_index + 1}, {"k", r.k}, {"r", r.r}, {"blockSum", as_json(r.block_sum)},
                     {"threshold", r.threshold}, {"pass", r.pass}, {"exempt", r.exempt}});
  return a;
}

inline json as_json(const CauchyCheck& c) {
  return json{{"observed", as_json(c.observed)}, {"bound", as_json(c.bound)}};
}

}  // namespace dirichlet

#endif
