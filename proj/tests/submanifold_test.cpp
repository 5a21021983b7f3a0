#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "paraverify/submanifold.hpp"
#include "paraverify/warped.hpp"

using namespace paraverify;

namespace {

const Chart r5("R5", {"x1", "x2", "y1", "y2", "t"}, {{-2, 2}, {-2, 2}, {-2, 2}, {-2, 2}, {-1, 1}});

MetricField flat5() { return MetricField::diagonal({cst(1), cst(1), cst(-1), cst(-1), cst(1)}, 3, 2); }

ParacontactStructure flat_structure() {
  std::vector<ScalarExpr> ph(25, cst(0));
  ph[2 * 5 + 0] = cst(1);
  ph[3 * 5 + 1] = cst(1);
  ph[0 * 5 + 2] = cst(1);
  ph[1 * 5 + 3] = cst(1);
  return {r5, TensorFieldExpr(5, 1, 1, ph), VectorFieldExpr::coordinate_field(5, 4),
          CovectorFieldExpr({cst(0), cst(0), cst(0), cst(0), cst(1)}), flat5()};
}

Immersion into_flat5(const Chart& src, const std::vector<std::string>& comps) {
  std::vector<ScalarExpr> c;
  for (const auto& s : comps) c.push_back(src.parse(s));
  return {src, r5, c, flat5(), flat_structure()};
}

const Chart m_chart("M", {"v", "theta", "beta", "u"}, {{0.5, 2}, {0.2, 1.2}, {0.2, 1.2}, {0.2, 1.2}});

Immersion tan_sec_immersion() {
  return into_flat5(m_chart, {"v*tan(theta)", "v*tan(beta)", "v*sec(theta)", "v*sec(beta)", "u"});
}

Immersion euclidean(const Chart& src, const std::vector<std::string>& comps, int n) {
  std::vector<ScalarExpr> c, diag(static_cast<std::size_t>(n), cst(1));
  for (const auto& s : comps) c.push_back(src.parse(s));
  std::vector<std::string> names;
  std::vector<Interval> box;
  for (int k = 0; k < n; ++k) {
    names.push_back("e" + std::to_string(k));
    box.push_back({-5, 5});
  }
  return {src, Chart("E", names, box), c, MetricField::diagonal(diag, n, 0), std::nullopt};
}

VectorFieldExpr vf(const Chart& c, const std::vector<std::string>& comps) {
  std::vector<ScalarExpr> e;
  for (const auto& s : comps) e.push_back(c.parse(s));
  return VectorFieldExpr(e);
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

TEST(Umbilic, RoundSphereHasShapeOperatorOneOverRadius) {
  const Chart s2("S2", {"th", "ph"}, {{0.3, 2.8}, {-3, 3}});
  const Immersion imm = euclidean(s2, {"2*sin(th)*cos(ph)", "2*sin(th)*sin(ph)", "2*cos(th)"}, 3);
  for (const auto& p : sample_points(s2, 20, 3)) {
    const auto pg = point_geometry(imm, p);
    ASSERT_EQ(pg.normals.size(), 1u);
    const Matrix<double> a = pg.shape(pg.normals.vectors[0]);
    const double lam = a(0, 0);
    EXPECT_NEAR(std::abs(lam), 0.5, 1e-12);
    EXPECT_LT(max_abs(a - scaled(Matrix<double>::identity(2), lam)), 1e-12);
    const Matrix<double> g = induced_metric(imm, p);
    EXPECT_NEAR(g(0, 0), 4.0, 1e-12);
    EXPECT_NEAR(g(1, 1), 4.0 * std::sin(p[0]) * std::sin(p[0]), 1e-12);
    EXPECT_NEAR(g(0, 1), 0.0, 1e-12);
  }
  const auto u = classify_umbilic(imm, VerifyConfig{});
  EXPECT_EQ(u.verdict, UmbilicClass::totally_umbilical);
  EXPECT_NEAR(std::abs(u.lambda_min[0]), 0.5, 1e-12);
  EXPECT_NEAR(std::abs(u.lambda_max[0]), 0.5, 1e-12);
  EXPECT_TRUE(check_submanifold_properties(imm, VerifyConfig{}).passed());
}

TEST(Umbilic, CircleCurvatureAndPlaneGeodesic) {
  const Chart s1("S1", {"s"}, {{-3, 3}});
  const auto circle = classify_umbilic(euclidean(s1, {"3*cos(s)", "3*sin(s)"}, 2), VerifyConfig{});
  EXPECT_NEAR(std::abs(circle.lambda_max[0]), 1.0 / 3.0, 1e-12);
  const Chart pl("P", {"a", "b"}, {{-1, 1}, {-1, 1}});
  const auto plane = classify_umbilic(euclidean(pl, {"a + b", "a - 2*b", "3*a"}, 3), VerifyConfig{});
  EXPECT_EQ(plane.verdict, UmbilicClass::totally_geodesic);
}

TEST(Umbilic, HyperboloidInMinkowskiSpace) {
  // Spacelike hyperboloid -t^2 + x^2 + y^2 = -1; the unit normal is the
  // (timelike) position vector and A = +-Id.
  const Chart h2("H2", {"a", "b"}, {{0.3, 1.2}, {-3, 3}});
  const Chart mk("R21", {"t", "x", "y"}, {{-5, 5}, {-5, 5}, {-5, 5}});
  const Immersion imm{h2, mk, {h2.parse("cosh(a)"), h2.parse("sinh(a)*cos(b)"), h2.parse("sinh(a)*sin(b)")},
                      MetricField::diagonal({cst(-1), cst(1), cst(1)}, 2, 1), std::nullopt};
  for (const auto& p : sample_points(h2, 20, 4)) {
    const auto pg = point_geometry(imm, p);
    ASSERT_EQ(pg.normals.size(), 1u);
    EXPECT_EQ(pg.normals.eps[0], -1.0);
    const Matrix<double> a = pg.shape(pg.normals.vectors[0]);
    EXPECT_NEAR(std::abs(a(0, 0)), 1.0, 1e-12);
    EXPECT_LT(max_abs(a - scaled(Matrix<double>::identity(2), a(0, 0))), 1e-12);
  }
  EXPECT_TRUE(check_submanifold_properties(imm, VerifyConfig{}).passed());
}

TEST(Frames, DegenerateImmersionsRaiseTypedErrors) {
  const Chart ab("AB", {"a", "b"}, {{-1, 1}, {-1, 1}});
  const Immersion flat = euclidean(ab, {"a", "a", "0"}, 3);
  const std::vector<double> p = {0.2, 0.3};
  EXPECT_EQ(error_kind([&] { build_point_frame<double>(flat, p); }), ErrorKind::rank_deficient);

  const Chart s("S", {"s"}, {{-1, 1}});
  const Chart mk("R11", {"t", "x"}, {{-5, 5}, {-5, 5}});
  const Immersion null_curve{s, mk, {s.parse("s"), s.parse("s")}, MetricField::diagonal({cst(-1), cst(1)}, 1, 1),
                             std::nullopt};
  const std::vector<double> q = {0.1};
  EXPECT_EQ(error_kind([&] { build_point_frame<double>(null_curve, q); }), ErrorKind::lightlike_tangent);

  // A spacelike line in R^{1,2} has one timelike and one spacelike normal.
  const Chart mk3("R12", {"t", "x", "y"}, {{-5, 5}, {-5, 5}, {-5, 5}});
  const Immersion line{s, mk3, {s.parse("s"), s.parse("2*s"), cst(0)},
                       MetricField::diagonal({cst(-1), cst(1), cst(1)}, 2, 1), std::nullopt};
  const auto pg = point_geometry(line, q);
  ASSERT_EQ(pg.normals.size(), 2u);
  EXPECT_EQ(pg.normals.eps[0] * pg.normals.eps[1], -1.0);
}

TEST(Frames, InducedChristoffelMatchesFiniteDifferenceOracle) {
  const Immersion imm = tan_sec_immersion();
  const MetricField gm =
      MetricField::diagonal({cst(-2), m_chart.parse("v^2*sec(theta)^2"), m_chart.parse("v^2*sec(beta)^2"), cst(1)}, 3, 1);
  for (const auto& p : sample_points(m_chart, 20, 9)) {
    const auto gam = induced_christoffel(imm, p);
    const auto pg = point_geometry(imm, p);
    const auto want = oracle::christoffel_fd(gm, p);
    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          EXPECT_NEAR(gam(k, i, j), want[k][i][j], 1e-6 * std::max(1.0, std::abs(want[k][i][j])));
          EXPECT_NEAR(pg.gauss(k, i, j), want[k][i][j], 1e-6 * std::max(1.0, std::abs(want[k][i][j])));
        }
  }
}

TEST(TanSec, InducedMetricIsDiagonal) {
  const Immersion imm = tan_sec_immersion();
  for (const auto& p : sample_points(m_chart, 100, 42)) {
    const Matrix<double> g = induced_metric(imm, p);
    const double st = 1 / std::cos(p[1]), sb = 1 / std::cos(p[2]);
    Matrix<double> want(4, 4);
    want(0, 0) = -2;
    want(1, 1) = p[0] * p[0] * st * st;
    want(2, 2) = p[0] * p[0] * sb * sb;
    want(3, 3) = 1;
    EXPECT_LT(max_abs(g - want), 1e-9);
  }
}

TEST(TanSec, ClassifiedPrSemiInvariantWithRankTwoInvariantPart) {
  const auto cls = classify_submanifold(tan_sec_immersion(), VerifyConfig{});
  EXPECT_EQ(cls.verdict, SubmanifoldClass::pr_semi_invariant);
  EXPECT_EQ(cls.p1_rank_min, 2);
  EXPECT_EQ(cls.p1_rank_max, 2);
  EXPECT_TRUE(cls.report.passed());
  EXPECT_LT(cls.report.find("n_circ_t")->max_residual, 1e-8);
  for (const char* id : {"t_cubed", "n_prime_cubed", "p1_idempotent", "p2_idempotent", "p1_p2"})
    EXPECT_LT(cls.report.find(id)->max_residual, 1e-9) << id;
}

TEST(TanSec, FundamentalIdentitiesAndProperties) {
  const Immersion imm = tan_sec_immersion();
  VerifyConfig cfg;
  cfg.samples = 50;
  const auto id = check_fundamental_identities(imm, cfg);
  EXPECT_TRUE(id.passed());
  for (const char* k : {"nabla_t", "nabla_n", "nabla_xi", "h_xi"}) EXPECT_LT(id.find(k)->max_residual, 1e-7) << k;
  EXPECT_TRUE(check_submanifold_properties(imm, cfg).passed());
}

TEST(TanSec, DistributionsFromTheOperators) {
  const Immersion imm = tan_sec_immersion();
  const DistributionSpec d{"computed",
                           {vf(m_chart, {"1", "0", "0", "0"}), vf(m_chart, {"0", "cos(theta)", "cos(beta)", "0"})},
                           {vf(m_chart, {"0", "cos(theta)", "-cos(beta)", "0"})},
                           false};
  EXPECT_TRUE(validate_distributions(imm, d, VerifyConfig{}).passed());
  const auto integ = distribution_integrability(imm, d, VerifyConfig{});
  EXPECT_TRUE(integ.passed());
  EXPECT_LT(integ.find("invariant_bracket")->max_residual, 1e-7);

  // d/dtheta alone is not phi-invariant.
  const DistributionSpec wrong{"wrong",
                               {vf(m_chart, {"1", "0", "0", "0"}), vf(m_chart, {"0", "1", "0", "0"})},
                               {vf(m_chart, {"0", "0", "1", "0"})},
                               false};
  EXPECT_FALSE(validate_distributions(imm, wrong, VerifyConfig{}).passed());
}

TEST(TanSec, WarpCriterionFitsExponentOne) {
  const Immersion imm = tan_sec_immersion();
  const DistributionSpec d{"computed",
                           {vf(m_chart, {"1", "0", "0", "0"}), vf(m_chart, {"0", "cos(theta)", "cos(beta)", "0"})},
                           {vf(m_chart, {"0", "cos(theta)", "-cos(beta)", "0"})},
                           false};
  WarpCriterionOptions opt;
  opt.log_warp = m_chart.parse("ln(v)");
  opt.expected = WarpOrientation::bf;
  opt.stated_exponent = 2.0;
  const auto r = warped_shape_criterion(imm, d, opt, VerifyConfig{});
  EXPECT_TRUE(r.report.passed());
  EXPECT_LT(r.bf.rank_one_residual, 1e-6);
  EXPECT_NEAR(r.bf.exponent, 1.0, 1e-9);
  EXPECT_GT(r.fb.rank_one_residual, 1e-2);
  EXPECT_NEAR(r.report.find("stated_exponent_gap")->max_residual, 1.0, 1e-9);

  // Independent cross-check: the fiber block of the induced metric scales as
  // v^(2k) along the base.
  const auto split = detect_warped_splitting([&](std::span<const double> p) { return induced_metric(imm, p); },
                                             m_chart, {0, 3}, {1, 2}, std::nullopt, VerifyConfig{});
  const auto pts = sample_points(m_chart, 100, 42);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (std::abs(pts[i][0] - 1.25) < 0.05) continue;
    const double k = std::log(split.fitted_ratio[i]) / (2 * std::log(pts[i][0] / 1.25));
    EXPECT_NEAR(k, r.bf.exponent, 1e-8);
  }
}

TEST(Classification, InvariantAntiInvariantAndXiNormal) {
  const Chart c3("N", {"a", "b", "u"}, {{-1, 1}, {-1, 1}, {-1, 1}});
  EXPECT_EQ(classify_submanifold(into_flat5(c3, {"a", "0", "b", "0", "u"}), VerifyConfig{}).verdict,
            SubmanifoldClass::invariant);
  EXPECT_EQ(classify_submanifold(into_flat5(c3, {"a", "b", "0", "0", "u"}), VerifyConfig{}).verdict,
            SubmanifoldClass::anti_invariant);
  EXPECT_EQ(classify_submanifold(into_flat5(c3, {"a", "u", "b", "0", "0"}), VerifyConfig{}).verdict,
            SubmanifoldClass::xi_not_tangent);
  // Tilting into y1 keeps phi of the tilted direction normal.
  EXPECT_EQ(classify_submanifold(into_flat5(c3, {"a", "b", "0.5*a", "0", "u"}), VerifyConfig{}).verdict,
            SubmanifoldClass::anti_invariant);
  // Tilting into y2: phi of both directions is neither tangent nor normal.
  EXPECT_EQ(classify_submanifold(into_flat5(c3, {"a", "b", "0", "0.5*a", "u"}), VerifyConfig{}).verdict,
            SubmanifoldClass::generic);
}

TEST(Identities, RequireParacosymplecticAmbient) {
  const Chart c3("N", {"a", "b", "u"}, {{-1, 1}, {-1, 1}, {-1, 1}});
  Immersion imm = into_flat5(c3, {"a", "b", "0", "0", "u"});
  imm.structure.reset();
  EXPECT_EQ(error_kind([&] { check_fundamental_identities(imm, VerifyConfig{}); }), ErrorKind::inapplicable);
}

TEST(WarpedSubmanifold, LemmaIdentitiesOnConstructedProduct) {
  const Chart n("N", {"v", "s", "r", "u"}, {{0.5, 2}, {-0.5, 0.5}, {-0.5, 0.5}, {-1, 1}});
  const Immersion imm = into_flat5(n, {"v*sinh(s+r)", "v*sinh(s-r)", "v*cosh(s+r)", "v*cosh(s-r)", "u"});
  EXPECT_EQ(classify_submanifold(imm, VerifyConfig{}).verdict, SubmanifoldClass::pr_semi_invariant);
  const auto rep = check_bxf_identities(imm, {vf(n, {"1", "0", "0", "0"}), vf(n, {"0", "1", "0", "0"}), vf(n, {"0", "0", "0", "1"})},
                                        {vf(n, {"0", "0", "1", "0"})}, n.parse("ln(v)"), VerifyConfig{});
  EXPECT_TRUE(rep.passed());
  // A wrong warp candidate breaks the warp identity.
  const auto bad = check_bxf_identities(imm, {vf(n, {"1", "0", "0", "0"}), vf(n, {"0", "1", "0", "0"}), vf(n, {"0", "0", "0", "1"})},
                                        {vf(n, {"0", "0", "1", "0"})}, n.parse("2*ln(v)"), VerifyConfig{});
  EXPECT_GT(bad.find("h_n_warp")->max_residual, 1e-3);
}
