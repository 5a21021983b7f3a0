#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "paraverify/paracontact.hpp"

using namespace paraverify;

namespace {

std::vector<ScalarExpr> swap_phi(double scale = 1.0) {
  std::vector<ScalarExpr> ph(25, cst(0));
  ph[2 * 5 + 0] = cst(scale);
  ph[3 * 5 + 1] = cst(scale);
  ph[0 * 5 + 2] = cst(scale);
  ph[1 * 5 + 3] = cst(scale);
  return ph;
}

// Five-dimensional structure with metric diag(x1^2, x2^2, -x1^2, -x2^2, 1).
ParacontactStructure five_dim(double phi_scale = 1.0) {
  const Chart c("R5", {"x1", "x2", "y1", "y2", "t"}, {{0.5, 2}, {0.5, 2}, {-2, 2}, {-2, 2}, {-1, 1}},
                {{0, inf}, {0, inf}, {-inf, inf}, {-inf, inf}, {-inf, inf}});
  return {c, TensorFieldExpr(5, 1, 1, swap_phi(phi_scale)), VectorFieldExpr::coordinate_field(5, 4),
          CovectorFieldExpr({cst(0), cst(0), cst(0), cst(0), cst(1)}),
          MetricField::diagonal({c.parse("x1^2"), c.parse("x2^2"), c.parse("-x1^2"), c.parse("-x2^2"), cst(1)}, 3, 2)};
}

// Standard para-Sasakian structure on R^3: eta = dz - 2y dx, xi = d/dz,
// g = dx^2 - dy^2 + eta^2.
ParacontactStructure para_sasakian_r3() {
  const Chart c("R3", {"x", "y", "z"}, {{-1, 1}, {-1, 1}, {-1, 1}});
  auto P = [&](const char* s) { return c.parse(s); };
  return {c,
          TensorFieldExpr(3, 1, 1, {cst(0), cst(1), cst(0), cst(1), cst(0), cst(0), cst(0), P("2*y"), cst(0)}),
          VectorFieldExpr({cst(0), cst(0), cst(1)}), CovectorFieldExpr({P("-2*y"), cst(0), cst(1)}),
          MetricField(3, {P("1 + 4*y^2"), cst(0), P("-2*y"), cst(0), cst(-1), cst(0), P("-2*y"), cst(0), cst(1)}, 2, 1)};
}

}  // namespace

TEST(AlmostParacontact, FiveDimensionalStructureSatisfiesAllAxioms) {
  const auto rep = check_almost_paracontact_metric(five_dim(), VerifyConfig{});
  EXPECT_TRUE(rep.passed());
  for (const char* id : {"phi_squared", "eta_xi", "phi_xi", "eta_phi", "metric_compatibility", "eta_metric_dual",
                         "phi_skew", "fundamental_form_skew"})
    EXPECT_LT(rep.find(id)->max_residual, 1e-12) << id;
  EXPECT_LT(rep.find("phi_rank_kernel")->max_residual, 1e-8);
  EXPECT_GT(rep.find("phi_rank_rest")->max_residual, 1e-6);
}

TEST(AlmostParacontact, PerturbedPhiIsRejected) {
  const auto rep = check_almost_paracontact_metric(five_dim(1.01), VerifyConfig{});
  EXPECT_FALSE(rep.passed());
  EXPECT_GT(rep.find("phi_squared")->max_residual, 1e-3);
  EXPECT_GT(rep.find("metric_compatibility")->max_residual, 1e-3);
}

TEST(AlmostParacontact, WrongSignatureIsRejected) {
  auto s = five_dim();
  s.g = MetricField::diagonal({s.chart.parse("x1^2"), s.chart.parse("x2^2"), s.chart.parse("x1^2"),
                               s.chart.parse("x2^2"), cst(1)},
                              5, 0);
  const auto rep = check_almost_paracontact_metric(s, VerifyConfig{});
  EXPECT_FALSE(rep.passed());
}

TEST(AlmostParacontact, FundamentalFormIsSkew) {
  const auto s = five_dim();
  const TensorFieldExpr f = fundamental_two_form(s);
  for (const auto& p : sample_points(s.chart, 20, 1)) {
    const auto m = f.eval_matrix<double>(p);
    EXPECT_LT(max_abs(m + m.transpose()), 1e-14);
    // Phi(e1, e3) = g(e1, phi e3) = g(e1, e1) = x1^2.
    EXPECT_NEAR(m(0, 2), p[0] * p[0], 1e-12);
  }
}

TEST(Classification, FiveDimensionalStructureIsParacosymplecticNotParaSasakian) {
  const auto cls = classify_structure(five_dim(), VerifyConfig{});
  EXPECT_EQ(cls.verdict, StructureClass::paracosymplectic);
  EXPECT_LT(cls.nabla_eta, 1e-8);
  EXPECT_LT(cls.nabla_form, 1e-8);
  EXPECT_GT(cls.para_sasakian, 1e-2);
  EXPECT_TRUE(cls.report.passed());
  EXPECT_LT(cls.report.find("nabla_xi_parallel")->max_residual, 1e-8);
  EXPECT_EQ(*cls.report.find_verdict("structure"), "paracosymplectic");
}

TEST(Classification, StandardParaSasakianStructure) {
  const auto s = para_sasakian_r3();
  EXPECT_TRUE(check_almost_paracontact_metric(s, VerifyConfig{}).passed());
  const auto cls = classify_structure(s, VerifyConfig{});
  EXPECT_EQ(cls.verdict, StructureClass::para_sasakian);
  EXPECT_LT(cls.para_sasakian, 1e-8);
  EXPECT_GT(cls.nabla_eta, 1e-2);
  EXPECT_LT(cls.report.find("nabla_xi_para_sasakian")->max_residual, 1e-8);
  EXPECT_LT(cls.report.find("nabla_xi_xi")->max_residual, 1e-8);
}

TEST(Classification, RescaledContactFormIsUnclassified) {
  auto s = para_sasakian_r3();
  const Chart& c = s.chart;
  s.phi = TensorFieldExpr(3, 1, 1, {cst(0), cst(1), cst(0), cst(1), cst(0), cst(0), cst(0), c.parse("y"), cst(0)});
  s.eta = CovectorFieldExpr({c.parse("-y"), cst(0), cst(1)});
  s.g = MetricField(3, {c.parse("1 + y^2"), cst(0), c.parse("-y"), cst(0), cst(-1), cst(0), c.parse("-y"), cst(0), cst(1)},
                    2, 1);
  EXPECT_TRUE(check_almost_paracontact_metric(s, VerifyConfig{}).passed());
  EXPECT_EQ(classify_structure(s, VerifyConfig{}).verdict, StructureClass::unclassified);
}
