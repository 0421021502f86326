#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "dirichlet/dirichlet.hpp"

using namespace dirichlet;

namespace {

void expect_strictly_increasing(const Frequency& f) {
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    EXPECT_TRUE(std::isfinite(f.log_gap(i))) << "index " << i;
    EXPECT_LE(f[i], f[i + 1]) << "index " << i;
    if (f[i] == f[i + 1]) EXPECT_LT(f.log_gap(i), -30.0L) << "index " << i;
  }
}

}  // namespace

TEST(MakeFrequency, LogEndsAtLogM) {
  const auto f = make_frequency("log", {}, 5);
  EXPECT_EQ(f[0], 0.0);
  EXPECT_NEAR(f[4], 1.6094379, 1e-7);
}

TEST(MakeFrequency, LinearIsNaturalNumbersFromZero) {
  const auto f = make_frequency("linear", {}, 4);
  EXPECT_EQ(f.values(), (std::vector<double>{0, 1, 2, 3}));
}

TEST(MakeFrequency, LinearOffsetAndStep) {
  const auto f = make_frequency("linear", {1, 0.5}, 3);
  EXPECT_EQ(f.values(), (std::vector<double>{1, 1.5, 2}));
}

TEST(MakeFrequency, InterleaveExp2) {
  const auto f = make_frequency("interleave-exp2", {}, 4);
  EXPECT_DOUBLE_EQ(f[0], 1.0);
  EXPECT_DOUBLE_EQ(f[1], 1.0 + std::exp(-1.0));
  EXPECT_DOUBLE_EQ(f[2], 2.0);
  EXPECT_DOUBLE_EQ(f[3], 2.0 + std::exp(-4.0));
  EXPECT_NEAR(static_cast<double>(f.log_gap(2)), -4.0, 1e-15);
}

TEST(MakeFrequency, InterleaveExpExp2KeepsGapsBelowResolution) {
  const auto f = make_frequency("interleave-expexp2", {}, 60);
  expect_strictly_increasing(f);
  // lambda_4 - lambda_3 = e^{-e^4} is far below one ulp of 2
  EXPECT_EQ(f[2], f[3]);
  EXPECT_NEAR(static_cast<double>(f.log_gap(2)), -std::exp(4.0), 1e-9);
  EXPECT_NO_THROW(make_frequency("interleave-expexp2", {}, 212));
  EXPECT_THROW(make_frequency("interleave-expexp2", {}, 213), Rejection);
}

TEST(MakeFrequency, LogPrimesFlagsIndependence) {
  const auto f = make_frequency("logprimes", {}, 5);
  EXPECT_TRUE(f.rationally_independent());
  EXPECT_DOUBLE_EQ(f[4], std::log(11.0));
  EXPECT_FALSE(make_frequency("log", {}, 5).rationally_independent());
}

TEST(MakeFrequency, Rejections) {
  EXPECT_THROW(make_frequency("nope", {}, 5), Rejection);
  try {
    make_frequency("custom", {0, 1, 3, 2, 4}, 0);
    FAIL() << "non-monotone list accepted";
  } catch (const Rejection& e) {
    EXPECT_NE(std::string(e.what()).find("index 3"), std::string::npos) << e.what();
  }
}

TEST(MakeFrequency, AllBuiltinsAreValid) {
  for (const auto& kind : frequency_kinds()) {
    if (kind == "custom") continue;
    expect_strictly_increasing(make_frequency(kind, {}, 50));
  }
}

TEST(ReadFrequency, CommentsAndBlankLines) {
  std::istringstream in("# header\n0\n\n0.5  # half\n2\n");
  const auto f = read_frequency(in);
  EXPECT_EQ(f.values(), (std::vector<double>{0, 0.5, 2}));
}

TEST(ReadFrequency, RejectsGarbageAndDecrease) {
  std::istringstream bad("0\nfoo\n");
  EXPECT_THROW(read_frequency(bad), Rejection);
  std::istringstream dec("0\n2\n1\n");
  EXPECT_THROW(read_frequency(dec), Rejection);
}

TEST(CheckBC, LogFrequencySatisfiesBC) {
  const auto r = check_bc(make_frequency("log", {}, 100), 1, 0.1);
  EXPECT_EQ(r.verdict, Verdict::evidence_for);
}

TEST(CheckBC, InterleaveExp2FailsBC) {
  for (double l : {0.5, 1.0, 3.0}) {
    const auto r = check_bc(make_frequency("interleave-exp2", {}, 100), l, 0.05);
    EXPECT_EQ(r.verdict, Verdict::evidence_against) << "l = " << l;
  }
}

TEST(CheckBC, LinearConstantsAtLeastOne) {
  const auto r = check_bc(make_frequency("linear", {}, 10), 1, 1);
  for (auto c : r.log_constants) EXPECT_GE(c, 0.0L);
  EXPECT_EQ(r.log_infimum, 0.0L);
}

TEST(CheckBC, ShortPrefixIsInconclusive) {
  EXPECT_EQ(check_bc(make_frequency("linear", {}, 10), 1, 1).verdict, Verdict::inconclusive);
  EXPECT_EQ(check_bc(make_frequency("linear", {}, 40), 1, 1).verdict, Verdict::evidence_for);
}

TEST(CheckLC, SqrtLogSatisfiesLC) {
  EXPECT_EQ(check_lc(make_frequency("sqrtlog", {}, 10000), 0.5).verdict, Verdict::evidence_for);
}

TEST(CheckLC, InterleaveExpExp2FailsLC) {
  EXPECT_EQ(check_lc(make_frequency("interleave-expexp2", {}, 60), 0.5).verdict, Verdict::evidence_against);
}

TEST(CheckLC, LinearConstants) {
  const auto r = check_lc(make_frequency("linear", {}, 10), 1);
  for (auto c : r.log_constants) EXPECT_GE(c, 0.0L);
  EXPECT_EQ(check_lc(make_frequency("linear", {}, 40), 1).verdict, Verdict::evidence_for);
}

TEST(CheckLC, LogSpaceNeverOverflows) {
  // e^{e^{delta lambda}} overflows a double from lambda ~ 6.6 at delta = 1
  const auto r = check_lc(make_frequency("linear", {}, 500), 1.0);
  for (auto c : r.log_constants) EXPECT_TRUE(std::isfinite(c));
  EXPECT_EQ(r.verdict, Verdict::evidence_for);
}

TEST(CheckPoly, SqrtLogWithDTwo) {
  EXPECT_EQ(check_poly_growth(make_frequency("sqrtlog", {}, 10000), 2, 2, 0.1).verdict, Verdict::evidence_for);
}

TEST(CheckPoly, DOneMatchesBC) {
  const auto f = make_frequency("log", {}, 100);
  const auto p = check_poly_growth(f, 1, 1, 0.1);
  const auto b = check_bc(f, 1, 0.1);
  EXPECT_EQ(p.verdict, Verdict::evidence_for);
  EXPECT_EQ(p.verdict, b.verdict);
  ASSERT_EQ(p.log_constants.size(), b.log_constants.size());
  for (std::size_t i = 0; i < p.log_constants.size(); ++i)
    EXPECT_NEAR(static_cast<double>(p.log_constants[i]), static_cast<double>(b.log_constants[i]), 1e-14);
}

TEST(CheckConditions, LogSpaceMatchesDirectProducts) {
  const auto f = make_frequency("sqrtlog", {}, 30);
  const auto bc = check_bc(f, 1, 0.5);
  const auto lc = check_lc(f, 0.5);
  const auto pg = check_poly_growth(f, 1, 2, 0.5);
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    const double gap = f[i + 1] - f[i];
    EXPECT_NEAR(std::exp(static_cast<double>(bc.log_constants[i])), gap * std::exp(1.5 * f[i]), 1e-12);
    EXPECT_NEAR(std::exp(static_cast<double>(lc.log_constants[i])), gap * std::exp(std::exp(0.5 * f[i])), 1e-12);
    EXPECT_NEAR(std::exp(static_cast<double>(pg.log_constants[i])), gap * std::exp(1.5 * f[i] * f[i]), 1e-12);
  }
}

TEST(CheckConditions, BCImpliesLCOnBuiltins) {
  for (const auto& kind : frequency_kinds()) {
    if (kind == "custom") continue;
    const auto f = make_frequency(kind, {}, kind == "interleave-expexp2" ? 60 : 400);
    if (check_bc(f, 1, 0.1).verdict != Verdict::evidence_for) continue;
    for (double d : {0.5, 1.0}) EXPECT_EQ(check_lc(f, d).verdict, Verdict::evidence_for) << kind << " " << d;
  }
}

TEST(CheckConditions, SmallLCDeltaNeedsLongPrefixes) {
  // log C_n = -log n + n^{0.1} on the log frequency only turns upward near
  // n ~ 1e15, so a 400-term prefix still reads as decaying
  const auto f = make_frequency("log", {}, 400);
  EXPECT_EQ(check_bc(f, 1, 0.1).verdict, Verdict::evidence_for);
  EXPECT_EQ(check_lc(f, 0.1).verdict, Verdict::evidence_against);
}

TEST(CheckConditions, ParameterValidation) {
  const auto f = make_frequency("log", {}, 20);
  EXPECT_THROW(check_bc(f, 0, 0.1), Rejection);
  EXPECT_THROW(check_lc(f, -1), Rejection);
  EXPECT_THROW(check_poly_growth(f, 1, 0, 0.1), Rejection);
}

TEST(EstimateL, LogIsExactlyOne) {
  const auto e = estimate_L(make_frequency("log", {}, 1000));
  for (const auto& [n, r] : e.ratios) EXPECT_EQ(r, 1.0) << "N = " << n;
  EXPECT_EQ(e.estimate, 1.0);
}

TEST(EstimateL, LinearTendsToZero) {
  const auto e = estimate_L(make_frequency("linear", {}, 10000));
  EXPECT_LT(e.estimate, 0.01);
  EXPECT_EQ(e.trend, EstimateTrend::convergent);
}

TEST(EstimateL, SqrtLogDiverges) {
  const auto e = estimate_L(make_frequency("sqrtlog", {}, 10000));
  EXPECT_EQ(e.trend, EstimateTrend::divergent);
  EXPECT_NEAR(e.ratios.back().second, std::sqrt(std::log(10000.0)), 1e-12);
  EXPECT_NEAR(e.ratios.back().second, 3.034, 1e-3);
}

TEST(RefineGaps, HandExecutedExample) {
  const auto f = refine_gaps(Frequency({0, 3.5}));
  EXPECT_EQ(f.values(), (std::vector<double>{0, 1, 2, 2.75, 3.5}));
}

TEST(RefineGaps, NoOpAndSingleBisection) {
  EXPECT_EQ(refine_gaps(Frequency({0, 1})).values(), (std::vector<double>{0, 1}));
  EXPECT_EQ(refine_gaps(Frequency({0, 1.5})).values(), (std::vector<double>{0, 0.75, 1.5}));
}

TEST(RefineGaps, PropertyOnRandomInput) {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v{rng.uniform(0, 2)};
    const long m = rng.integer(2, 12);
    for (long i = 1; i < m; ++i) v.push_back(v.back() + rng.uniform(0.01, 7.0));
    const Frequency in(v);
    const auto out = refine_gaps(in);
    expect_strictly_increasing(out);
    EXPECT_LE(out.max_gap(), 1.0 + 1e-12);
    std::size_t j = 0;
    for (double x : v) {
      while (j < out.size() && out[j] != x) ++j;
      EXPECT_LT(j, out.size()) << "input value " << x << " lost";
    }
  }
}

TEST(RefineGaps, KeepsSubResolutionGaps) {
  const auto f = make_frequency("interleave-expexp2", {}, 8);
  const auto r = refine_gaps(f);
  EXPECT_EQ(r.size(), f.size());
}
