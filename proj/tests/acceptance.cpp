// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "paraverify/builtins.hpp"

using namespace paraverify;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

char buf[1024];

template <class... A>
std::string fmt(const char* f, A... a) {
  std::snprintf(buf, sizeof buf, f, a...);
  return buf;
}

double residual(const VerificationReport& r, const std::string& id) {
  const CheckResult* c = r.find(id);
  return c ? c->max_residual : NAN;
}

const DistributionSpec& distribution(const Scenario& s, const std::string& name) {
  for (const auto& d : s.distributions)
    if (d.name == name) return d;
  throw Error(ErrorKind::schema, "missing distribution " + name);
}

Outcome ac1() {
  const Scenario s = builtin_scenario("example21");
  const auto t0 = std::chrono::steady_clock::now();
  const auto& m = s.metrics.at("g");
  const auto rep = check_christoffel_table(m.metric, s.charts.at(m.chart), s.christoffel_table->entries, true,
                                           VerifyConfig{});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  // Test-side oracle: central differences of the metric at the same points.
  double fd = 0;
  for (const auto& p : sample_points(s.charts.at(m.chart), 100, 42)) {
    const auto gam = christoffel(m.metric, p);
    const auto want = oracle::christoffel_fd(m.metric, p);
    for (int k = 0; k < 5; ++k)
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) fd = std::max(fd, std::abs(gam(k, i, j) - want[k][i][j]));
  }
  const double listed = residual(rep, "christoffel_listed"), zero = residual(rep, "christoffel_zero");
  return {listed < 1e-9 && zero < 1e-9 && fd < 1e-6 && secs < 1.0,
          fmt("listed %.2e, zero %.2e, fd oracle %.2e, %.3f s", listed, zero, fd, secs)};
}

Outcome ac2() {
  const Scenario s = builtin_scenario("example21");
  const auto cls = classify_structure(*s.structure, VerifyConfig{});
  const bool ok = cls.verdict == StructureClass::paracosymplectic && cls.nabla_eta < 1e-8 && cls.nabla_form < 1e-8 &&
                  cls.para_sasakian > 1e-2;
  return {ok, fmt("verdict %s, nabla eta %.2e, nabla Phi %.2e, para-Sasakian residual %.3f", to_string(cls.verdict),
                  cls.nabla_eta, cls.nabla_form, cls.para_sasakian)};
}

Outcome ac3() {
  const Scenario s = builtin_scenario("example51");
  double worst = 0;
  for (const auto& p : sample_points(s.immersion->source, 100, 42)) {
    const Matrix<double> g = induced_metric(*s.immersion, p);
    const double v = p[0], st = 1 / std::cos(p[1]), sb = 1 / std::cos(p[2]);
    const double want[4][4] = {{-2, 0, 0, 0}, {0, v * v * st * st, 0, 0}, {0, 0, v * v * sb * sb, 0}, {0, 0, 0, 1}};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(g(i, j) - want[i][j]));
  }
  return {worst < 1e-9, fmt("max entry deviation %.2e over 100 samples", worst)};
}

Outcome ac4() {
  const Scenario s = builtin_scenario("example51");
  const auto cls = classify_submanifold(*s.immersion, VerifyConfig{});
  const auto& r = cls.report;
  double alg = 0;
  for (const char* id : {"t_cubed", "n_prime_cubed", "p1_idempotent", "p2_idempotent", "p1_p2"})
    alg = std::max(alg, residual(r, id));
  const double nt = residual(r, "n_circ_t");
  const bool ok = cls.verdict == SubmanifoldClass::pr_semi_invariant && nt < 1e-8 && alg < 1e-9;
  return {ok, fmt("verdict %s, |n t| %.2e, t^3/n'^3/P-algebra %.2e, rank P1 = %d", to_string(cls.verdict), nt, alg,
                  cls.p1_rank_max)};
}

Outcome ac5() {
  const Scenario s = builtin_scenario("example51");
  const auto r = check_fundamental_identities(*s.immersion, VerifyConfig{});
  const double a = residual(r, "nabla_xi"), b = residual(r, "h_xi");
  return {a < 1e-7 && b < 1e-7, fmt("nabla_X xi %.2e, h(X, xi) %.2e", a, b)};
}

Outcome ac6() {
  const Scenario s = builtin_scenario("example51");
  const auto r = distribution_integrability(*s.immersion, distribution(s, "computed"), VerifyConfig{});
  const double a = residual(r, "invariant_bracket");
  return {a < 1e-7, fmt("n([X_i, X_j]) %.2e on the invariant generators", a)};
}

Outcome ac7() {
  const Scenario s = builtin_scenario("example51");
  const WarpCriterionSpec& w = s.warp_criteria.front();
  const auto res = warped_shape_criterion(*s.immersion, distribution(s, w.distribution), w.options, VerifyConfig{});
  // Independent oracle: the fiber block of the induced metric scales as v^(2k).
  const auto split = detect_warped_splitting(
      [&](std::span<const double> p) { return induced_metric(*s.immersion, p); }, s.immersion->source, {0, 3}, {1, 2},
      std::nullopt, VerifyConfig{});
  const auto pts = sample_points(s.immersion->source, 100, 42);
  double k_metric = 0;
  int used = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (std::abs(pts[i][0] - 1.25) < 0.05) continue;
    k_metric += std::log(split.fitted_ratio[i]) / (2 * std::log(pts[i][0] / 1.25));
    ++used;
  }
  k_metric /= used;
  bool flagged = false;
  for (const auto& n : res.report.notes()) flagged = flagged || n.find("stated warp") != std::string::npos;
  const bool ok = res.bf.rank_one_residual < 1e-6 && std::abs(res.bf.exponent - k_metric) < 1e-6 && flagged;
  return {ok, fmt("rank-one residual %.2e, fitted exponent %.6f (metric oracle %.6f), stated 2 flagged: %s",
                  res.bf.rank_one_residual, res.bf.exponent, k_metric, flagged ? "yes" : "no")};
}

Outcome ac8() {
  const Scenario w = builtin_scenario("synthetic_warped");
  const auto r = verify_warped_formulas(*w.warped, VerifyConfig{});
  double worst = 0;
  for (const char* id : {"base_tangent", "mixed", "fiber_fiber"}) worst = std::max(worst, residual(r, id));
  const Scenario d = builtin_scenario("synthetic_doubly");
  const double dbl = residual(verify_doubly_formula(*d.warped, VerifyConfig{}), "doubly_formula");
  return {worst < 1e-8 && dbl < 1e-8, fmt("warped formulas %.2e, doubly warped formula %.2e", worst, dbl)};
}

Outcome ac9() {
  std::mt19937_64 rng(20240917);
  double worst = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 2;
    const auto rm = oracle::random_metric(rng, n);
    const Chart c("r", oracle::coordinate_names(n), std::vector<Interval>(static_cast<std::size_t>(n), {-1, 1}));
    std::vector<ScalarExpr> e;
    for (const auto& s : rm.entries) e.push_back(c.parse(s));
    const MetricField g(n, e, rm.positive, rm.negative, c.coords);
    for (const auto& p : sample_points(c, 10, static_cast<std::uint64_t>(trial))) {
      const auto gam = christoffel(g, p);
      const auto want = oracle::christoffel_fd(g, p);
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            worst = std::max(worst, std::abs(gam(k, i, j) - want[k][i][j]) / std::max(1.0, std::abs(want[k][i][j])));
    }
  }
  return {worst < 1e-6, fmt("max relative deviation %.2e over 20 metrics x 10 points", worst)};
}

Outcome ac10() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0;
  int counted = 0;
  bool all_pass = true;
  std::string failing;
  for (const auto& b : builtin_scenarios()) {
    const auto rep = run_scenario(builtin_scenario(b.name), VerifyConfig{});
    if (!rep.passed() || rep.errors() > 0) {
      all_pass = false;
      failing += std::string(b.name) + " ";
    }
    for (const auto& c : rep.checks()) {
      for (const char* suffix : {"shape_duality", "h_symmetry", "metric_compatibility", "torsion_free"}) {
        const std::string sfx = std::string(".") + suffix;
        if (c.id.size() >= sfx.size() && c.id.compare(c.id.size() - sfx.size(), sfx.size(), sfx) == 0) {
          worst = std::max(worst, std::isfinite(c.max_residual) ? c.max_residual : INFINITY);
          ++counted;
        }
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = all_pass && worst < 1e-8 && secs < 30.0 && counted > 0;
  return {ok, fmt("%zu scenarios, %d property checks, worst %.2e, %.2f s%s%s", builtin_scenarios().size(), counted,
                  worst, secs, failing.empty() ? "" : ", failing: ", failing.c_str())};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 five-dimensional Christoffel table", ac1},
      {"AC2 paracosymplectic vs para-Sasakian discrimination", ac2},
      {"AC3 induced metric of the tan/sec immersion", ac3},
      {"AC4 PR-semi-invariant verdict and operator algebra", ac4},
      {"AC5 xi parallel and h(X, xi) = 0", ac5},
      {"AC6 invariant distribution integrable", ac6},
      {"AC7 warp rank-one fit and exponent", ac7},
      {"AC8 warped and doubly warped connection formulas", ac8},
      {"AC9 hyper-dual Christoffels vs finite differences", ac9},
      {"AC10 property suite on every builtin", ac10},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
