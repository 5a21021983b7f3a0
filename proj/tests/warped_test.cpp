#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "paraverify/warped.hpp"

using namespace paraverify;

namespace {

const Chart line_x("B", {"x"}, {{-1, 1}});
const Chart line_u("F", {"u"}, {{-1, 1}});

WarpedSpec exp_warp() {
  WarpedSpec s;
  s.base = line_x;
  s.g_base = MetricField::diagonal({cst(1)}, 1, 0);
  s.fiber = line_u;
  s.g_fiber = MetricField::diagonal({cst(1)}, 1, 0);
  s.f1 = line_x.parse("exp(x)");
  return s;
}

ErrorKind error_kind(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::unsupported;
}

}  // namespace

TEST(WarpedMetric, ExponentialWarpClosedFormConnection) {
  const WarpedSpec s = exp_warp();
  const MetricField g = build_warped_metric(s);
  for (const auto& p : sample_points(s.product_chart(), 30, 1)) {
    const auto gam = christoffel(g, p);
    EXPECT_NEAR(gam(1, 0, 1), 1.0, 1e-12);
    EXPECT_NEAR(gam(0, 1, 1), -std::exp(2 * p[0]), 1e-12);
    EXPECT_NEAR(gam(0, 0, 0), 0.0, 1e-14);
    EXPECT_NEAR(gam(1, 1, 1), 0.0, 1e-14);
  }
  const auto rep = verify_warped_formulas(s, VerifyConfig{});
  EXPECT_TRUE(rep.passed());
  for (const char* id : {"base_tangent", "mixed", "fiber_fiber"}) EXPECT_LT(rep.find(id)->max_residual, 1e-8) << id;
}

TEST(WarpedMetric, HigherDimensionalLorentzianWarp) {
  const Chart b("B", {"x", "y"}, {{0.5, 2}, {-1, 1}});
  const Chart f("F", {"u", "w"}, {{-1, 1}, {0.5, 1.5}});
  WarpedSpec s;
  s.base = b;
  s.g_base = MetricField::diagonal({cst(-1), b.parse("1 + x^2")}, 1, 1);
  s.fiber = f;
  s.g_fiber = MetricField::diagonal({cst(1), f.parse("w^2")}, 2, 0);
  s.f1 = b.parse("x^2*cosh(y)");
  EXPECT_TRUE(verify_warped_formulas(s, VerifyConfig{}).passed());
}

TEST(WarpedMetric, DoublyWarpedFormulaAndConstantWarpsGiveProduct) {
  WarpedSpec s = exp_warp();
  s.f2 = line_u.parse("exp(u)");
  const auto rep = verify_doubly_formula(s, VerifyConfig{});
  EXPECT_TRUE(rep.passed());
  EXPECT_LT(rep.find("doubly_formula")->max_residual, 1e-8);
  EXPECT_EQ(error_kind([&] { verify_warped_formulas(s, VerifyConfig{}); }), ErrorKind::inapplicable);

  WarpedSpec c = exp_warp();
  c.f1 = cst(1);
  c.f2 = cst(1);
  const MetricField g = build_doubly_warped_metric(c);
  for (const auto& p : sample_points(c.product_chart(), 20, 2)) {
    const auto m = g.eval<double>(p);
    EXPECT_LT(max_abs(m - Matrix<double>::identity(2)), 1e-12);
  }
}

TEST(WarpedMetric, NonPositiveWarpIsRejected) {
  WarpedSpec s = exp_warp();
  s.f1 = line_x.parse("x");
  EXPECT_EQ(error_kind([&] { build_warped_metric(s); }), ErrorKind::domain);
}

TEST(ForcedWarp, ParallelXiForcesConstantFiberWarp) {
  const Chart b("B", {"x", "w"}, {{-1, 1}, {-1, 1}});
  WarpedSpec s;
  s.base = b;
  s.g_base = MetricField::diagonal({cst(1), cst(1)}, 2, 0);
  s.fiber = line_u;
  s.g_fiber = MetricField::diagonal({cst(1)}, 1, 0);
  s.f1 = b.parse("exp(x)");
  s.f2 = cst(1);
  s.xi_factor = Factor::base;
  s.xi_coord = 1;
  auto rep = verify_doubly_formula(s, VerifyConfig{});
  EXPECT_LT(rep.find("xi_parallel")->max_residual, 1e-12);
  EXPECT_EQ(rep.find("forced_constant_warp")->expect, Expect::below);
  EXPECT_TRUE(rep.passed());

  // A non-constant fiber warp makes xi non-parallel; the forcing is not triggered.
  s.f2 = line_u.parse("exp(u)");
  rep = verify_doubly_formula(s, VerifyConfig{});
  EXPECT_GT(rep.find("xi_parallel")->max_residual, 1e-3);
  EXPECT_EQ(rep.find("forced_constant_warp")->status, Status::info);
}

TEST(Leaves, BaseGeodesicFiberUmbilicWithLogDerivative) {
  const Chart b("B", {"x"}, {{0.5, 2}}, {{0, inf}});
  WarpedSpec s = exp_warp();
  s.base = b;
  s.f1 = b.parse("x^2");
  const MetricField g = build_warped_metric(s);
  const std::vector<double> q = {0.3};
  EXPECT_EQ(classify_umbilic(base_leaf(s, g, q), VerifyConfig{}).verdict, UmbilicClass::totally_geodesic);
  for (double x0 : {0.7, 1.1, 1.8}) {
    const std::vector<double> p = {x0};
    const auto u = classify_umbilic(fiber_leaf(s, g, p), VerifyConfig{});
    EXPECT_EQ(u.verdict, UmbilicClass::totally_umbilical);
    // |d ln f / dx| = 2 / x0 with a unit normal d/dx.
    EXPECT_NEAR(std::abs(u.lambda_max[0]), 2.0 / x0, 1e-10);
  }
}

TEST(Splitting, DetectsWarpAndRejectsNonSplitMetric) {
  const WarpedSpec s = exp_warp();
  const MetricField g = build_warped_metric(s);
  const Chart pc = s.product_chart();
  const MetricAt at = [&](std::span<const double> p) { return g.eval<double>(p); };
  EXPECT_TRUE(detect_warped_splitting(at, pc, {0}, {1}, pc.parse("exp(2*x)"), VerifyConfig{}).report.passed());
  EXPECT_FALSE(detect_warped_splitting(at, pc, {0}, {1}, pc.parse("exp(x)"), VerifyConfig{}).report.passed());

  const Chart c("c", {"x", "u"}, {{0.1, 0.5}, {0.1, 0.5}});
  const MetricField ns(2, {cst(1), cst(0), cst(0), c.parse("1 + x*u")}, 2, 0);
  const auto rep = detect_warped_splitting([&](std::span<const double> p) { return ns.eval<double>(p); }, c, {0}, {1},
                                           std::nullopt, VerifyConfig{});
  EXPECT_GT(rep.report.find("warp_fiber_independent")->max_residual, 1e-3);
  EXPECT_FALSE(rep.report.passed());

  const MetricField mixed(2, {cst(1), c.parse("0.1*x"), c.parse("0.1*x"), cst(1)}, 2, 0);
  EXPECT_FALSE(detect_warped_splitting([&](std::span<const double> p) { return mixed.eval<double>(p); }, c, {0}, {1},
                                       std::nullopt, VerifyConfig{})
                   .report.passed());
  EXPECT_THROW(detect_warped_splitting(at, pc, {0}, {0}, std::nullopt, VerifyConfig{}), Error);
}

TEST(Splitting, XiStaysInTheBase) {
  const Chart r5("R5", {"x1", "x2", "y1", "y2", "t"}, {{-2, 2}, {-2, 2}, {-2, 2}, {-2, 2}, {-1, 1}});
  std::vector<ScalarExpr> ph(25, cst(0));
  ph[2 * 5 + 0] = ph[3 * 5 + 1] = ph[0 * 5 + 2] = ph[1 * 5 + 3] = cst(1);
  const MetricField flat = MetricField::diagonal({cst(1), cst(1), cst(-1), cst(-1), cst(1)}, 3, 2);
  const ParacontactStructure st{r5, TensorFieldExpr(5, 1, 1, ph), VectorFieldExpr::coordinate_field(5, 4),
                                CovectorFieldExpr({cst(0), cst(0), cst(0), cst(0), cst(1)}), flat};
  const Chart n("N", {"v", "s", "r", "u"}, {{0.5, 2}, {-0.5, 0.5}, {-0.5, 0.5}, {-1, 1}});
  std::vector<ScalarExpr> comps;
  for (const char* e : {"v*sinh(s+r)", "v*sinh(s-r)", "v*cosh(s+r)", "v*cosh(s-r)", "u"}) comps.push_back(n.parse(e));
  const Immersion imm{n, r5, comps, flat, st};
  EXPECT_TRUE(xi_fiber_projection(imm, {2}, VerifyConfig{}).passed());
  EXPECT_FALSE(xi_fiber_projection(imm, {3}, VerifyConfig{}).passed());
}
