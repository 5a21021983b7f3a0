#pragma once

// Warped and doubly warped product metrics, their connection formulas, and a
// detector for warped splittings of a given metric.

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paraverify/chart.hpp"
#include "paraverify/connection.hpp"
#include "paraverify/fields.hpp"
#include "paraverify/parallel.hpp"
#include "paraverify/report.hpp"
#include "paraverify/submanifold.hpp"

namespace paraverify {

enum class Factor { none, base, fiber };

inline const char* to_string(Factor f) {
  switch (f) {
    case Factor::none: return "none";
    case Factor::base: return "base";
    case Factor::fiber: return "fiber";
  }
  return "?";
}

/// B x_f F, or the doubly warped f2 B x_f1 F when f2 is set. f1 is written in
/// base coordinates, f2 in fiber coordinates.
struct WarpedSpec {
  Chart base;
  MetricField g_base;
  Chart fiber;
  MetricField g_fiber;
  ScalarExpr f1 = cst(1.0);
  std::optional<ScalarExpr> f2;
  Factor xi_factor = Factor::none;  // factor carrying the unit field xi
  int xi_coord = 0;                 // coordinate of that factor along which xi points

  int base_dim() const { return base.dim(); }
  int fiber_dim() const { return fiber.dim(); }
  int dim() const { return base_dim() + fiber_dim(); }
  bool doubly() const { return f2.has_value(); }

  void validate() const {
    if (g_base.dim() != base_dim() || g_fiber.dim() != fiber_dim())
      throw Error(ErrorKind::schema, "factor metric dimension does not match its chart");
    if (f1.max_coordinate() >= base_dim()) throw Error(ErrorKind::schema, "f1 must depend on base coordinates only");
    if (f2 && f2->max_coordinate() >= fiber_dim())
      throw Error(ErrorKind::schema, "f2 must depend on fiber coordinates only");
    const int nxi = xi_factor == Factor::base ? base_dim() : fiber_dim();
    if (xi_factor != Factor::none && (xi_coord < 0 || xi_coord >= nxi))
      throw Error(ErrorKind::schema, "xi coordinate out of range");
  }

  Chart product_chart() const {
    Chart c;
    c.name = base.name + "x" + fiber.name;
    for (const auto* f : {&base, &fiber}) {
      c.coords.insert(c.coords.end(), f->coords.begin(), f->coords.end());
      c.domain.insert(c.domain.end(), f->domain.begin(), f->domain.end());
      c.box.insert(c.box.end(), f->box.begin(), f->box.end());
    }
    c.validate();
    return c;
  }

  ScalarExpr lifted_f2() const { return f2 ? f2->shifted(base_dim()) : cst(1.0); }

  Vec<double> base_part(std::span<const double> p) const {
    return Vec<double>(p.begin(), p.begin() + base_dim());
  }
  Vec<double> fiber_part(std::span<const double> p) const {
    return Vec<double>(p.begin() + base_dim(), p.end());
  }
};

namespace detail {

inline void require_positive(const ScalarExpr& f, const Chart& c, const char* what) {
  for (const auto& p : sample_points(c, 64, 0x77a7)) {
    const double v = f.eval<double>(p);
    if (!(v > 0.0)) throw Error(ErrorKind::domain, std::string(what) + " is not positive on the sampling box");
  }
}

inline MetricField warped_metric(const WarpedSpec& s, const ScalarExpr& base_scale, const ScalarExpr& fiber_scale) {
  const int nb = s.base_dim(), n = s.dim();
  std::vector<ScalarExpr> full(static_cast<std::size_t>(n * n), cst(0.0));
  auto at = [&](int i, int j) -> ScalarExpr& { return full[static_cast<std::size_t>(i * n + j)]; };
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) at(i, j) = base_scale * s.g_base.entry(i, j);
  for (int i = 0; i < s.fiber_dim(); ++i)
    for (int j = 0; j < s.fiber_dim(); ++j) at(nb + i, nb + j) = fiber_scale * s.g_fiber.entry(i, j).shifted(nb);
  const auto [pb, qb] = s.g_base.signature();
  const auto [pf, qf] = s.g_fiber.signature();
  return MetricField(n, full, pb + pf, qb + qf);
}

}  // namespace detail

/// g = g_B + f^2 g_F on the product chart.
inline MetricField build_warped_metric(const WarpedSpec& s) {
  s.validate();
  detail::require_positive(s.f1, s.base, "warping function");
  return detail::warped_metric(s, cst(1.0), pow(s.f1, 2));
}

/// g = f2^2 g_B + f1^2 g_F on the product chart.
inline MetricField build_doubly_warped_metric(const WarpedSpec& s) {
  s.validate();
  detail::require_positive(s.f1, s.base, "warping function f1");
  if (s.f2) detail::require_positive(*s.f2, s.fiber, "warping function f2");
  return detail::warped_metric(s, pow(s.lifted_f2(), 2), pow(s.f1, 2));
}

/// Connection formulas of a singly warped product on lifted coordinate fields.
inline VerificationReport verify_warped_formulas(const WarpedSpec& s, const VerifyConfig& cfg) {
  cfg.validate();
  if (s.doubly()) throw Error(ErrorKind::inapplicable, "singly warped formulas need f2 unset");
  const MetricField g = build_warped_metric(s);
  const Chart chart = s.product_chart();
  const auto pts = sample_points(chart, cfg.samples, cfg.seed);
  const int nb = s.base_dim(), n = s.dim();

  enum : std::size_t { base_tangent, mixed, fiber_fiber, grad_equiv, symmetric, count };
  auto per = parallel_map(pts.size(), [&](std::size_t si) {
    const Vec<double>& p = pts[si];
    g.check_at(p);
    const ChristoffelAtPoint gam = christoffel(g, p);
    const Vec<double> pb = s.base_part(p), pf = s.fiber_part(p);
    const ChristoffelAtPoint gam_f = christoffel(s.g_fiber, pf);
    const double fv = s.f1.eval<double>(pb);
    Vec<double> dlnf(static_cast<std::size_t>(n), 0.0);
    const Vec<double> gb = gradient(s.f1, pb);
    for (int i = 0; i < nb; ++i) dlnf[static_cast<std::size_t>(i)] = gb[static_cast<std::size_t>(i)] / fv;
    const Vec<double> grad_full = inverse_metric(g, p) * dlnf;
    const Vec<double> grad_base = inverse_metric(s.g_base, pb) * Vec<double>(dlnf.begin(), dlnf.begin() + nb);
    const Matrix<double> gm = g.eval<double>(p);

    std::vector<double> r(count, 0.0);
    for (int i = 0; i < nb; ++i)
      r[grad_equiv] = std::max(r[grad_equiv], std::abs(grad_full[static_cast<std::size_t>(i)] -
                                                       grad_base[static_cast<std::size_t>(i)]));
    for (int i = nb; i < n; ++i)
      r[grad_equiv] = std::max(r[grad_equiv], std::abs(grad_full[static_cast<std::size_t>(i)]));

    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < nb; ++j)
        for (int k = nb; k < n; ++k) r[base_tangent] = std::max(r[base_tangent], std::abs(gam(k, i, j)));
    for (int i = 0; i < nb; ++i)
      for (int u = nb; u < n; ++u)
        for (int k = 0; k < n; ++k) {
          const double expect = k == u ? dlnf[static_cast<std::size_t>(i)] : 0.0;
          r[mixed] = std::max(r[mixed], std::abs(gam(k, i, u) - expect));
          r[symmetric] = std::max(r[symmetric], std::abs(gam(k, i, u) - gam(k, u, i)));
        }
    for (int u = nb; u < n; ++u)
      for (int v = nb; v < n; ++v)
        for (int k = 0; k < n; ++k) {
          const double fiber_part = k >= nb ? gam_f(k - nb, u - nb, v - nb) : 0.0;
          const double res = gam(k, u, v) - fiber_part +
                             gm(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) *
                                 grad_full[static_cast<std::size_t>(k)];
          r[fiber_fiber] = std::max(r[fiber_fiber], std::abs(res));
        }
    return r;
  });
  MaxResiduals mr(count);
  for (const auto& r : per) mr.merge(r);
  const int ns = static_cast<int>(pts.size());
  VerificationReport rep;
  rep.below("base_tangent", "nabla_X Y tangent to B", mr[base_tangent], cfg.tol, ns);
  rep.below("mixed", "nabla_X U = nabla_U X = X(ln f) U", mr[mixed], cfg.tol, ns);
  rep.below("mixed_symmetric", "nabla_X U = nabla_U X", mr[symmetric], 1e-9, ns);
  rep.below("fiber_fiber", "nor(nabla_U V) = -g(U,V) grad(ln f)", mr[fiber_fiber], cfg.tol, ns);
  rep.below("gradient_equivalence", "grad(ln f) via g equals lift of grad via g_B", mr[grad_equiv], cfg.tol, ns);
  return rep;
}

/// nabla_X V = (X ln f1) V + (V ln f2) X on a doubly warped product, plus the
/// forcing of a constant warp when a unit factor field xi is parallel.
inline VerificationReport verify_doubly_formula(const WarpedSpec& s, const VerifyConfig& cfg) {
  cfg.validate();
  const MetricField g = build_doubly_warped_metric(s);
  const Chart chart = s.product_chart();
  const auto pts = sample_points(chart, cfg.samples, cfg.seed);
  const int nb = s.base_dim(), n = s.dim();
  const ScalarExpr f2 = s.lifted_f2();

  std::optional<VectorFieldExpr> xi;
  if (s.xi_factor != Factor::none) {
    const int c = s.xi_coord + (s.xi_factor == Factor::fiber ? nb : 0);
    std::vector<ScalarExpr> comps(static_cast<std::size_t>(n), cst(0.0));
    comps[static_cast<std::size_t>(c)] = cst(1.0) / call(Fn::sqrt, call(Fn::abs, g.entry(c, c)));
    xi = VectorFieldExpr(std::move(comps));
  }

  enum : std::size_t { formula, xi_parallel, coeff, count };
  auto per = parallel_map(pts.size(), [&](std::size_t si) {
    const Vec<double>& p = pts[si];
    g.check_at(p);
    const ChristoffelAtPoint gam = christoffel(g, p);
    const double v1 = s.f1.eval<double>(p), v2 = f2.eval<double>(p);
    const Vec<double> d1 = gradient(s.f1, p), d2 = gradient(f2, p);
    std::vector<double> r(count, 0.0);
    for (int i = 0; i < nb; ++i)
      for (int v = nb; v < n; ++v)
        for (int k = 0; k < n; ++k) {
          double expect = 0.0;
          if (k == v) expect += d1[static_cast<std::size_t>(i)] / v1;
          if (k == i) expect += d2[static_cast<std::size_t>(v)] / v2;
          r[formula] = std::max(r[formula], std::abs(gam(k, i, v) - expect));
        }
    if (xi) {
      for (int i = 0; i < n; ++i) {
        Vec<double> x(static_cast<std::size_t>(n), 0.0);
        x[static_cast<std::size_t>(i)] = 1.0;
        r[xi_parallel] = std::max(r[xi_parallel], max_abs(cov_deriv_vector(g, x, *xi, p)));
      }
      // The warp derivative along the other factor that parallel xi would force to vanish.
      const bool in_fiber = s.xi_factor == Factor::fiber;
      const int lo = in_fiber ? 0 : nb, hi = in_fiber ? nb : n;
      for (int i = lo; i < hi; ++i) {
        const double c = in_fiber ? d1[static_cast<std::size_t>(i)] / v1 : d2[static_cast<std::size_t>(i)] / v2;
        r[coeff] = std::max(r[coeff], std::abs(c));
      }
    }
    return r;
  });
  MaxResiduals mr(count);
  for (const auto& r : per) mr.merge(r);
  const int ns = static_cast<int>(pts.size());
  VerificationReport rep;
  rep.below("doubly_formula", "nabla_X V = (X ln f1) V + (V ln f2) X", mr[formula], cfg.tol, ns);
  if (xi) {
    rep.info("xi_parallel", "nabla_X xi for every X", mr[xi_parallel], ns);
    const char* anchor = "nabla xi = 0 forces the other factor's warp to be constant";
    if (mr[xi_parallel] < cfg.tol) rep.below("forced_constant_warp", anchor, mr[coeff], cfg.tol, ns);
    else rep.info("forced_constant_warp", anchor, mr[coeff], ns, "xi not parallel; forcing not triggered");
  }
  return rep;
}

struct SplittingReport {
  VerificationReport report;
  std::vector<double> fitted_ratio;  // s(p) / s(reference), per sample
};

using MetricAt = std::function<Matrix<double>(std::span<const double>)>;

/// Checks that `metric` is block diagonal over (base, fiber) and that the fiber
/// block equals s(base) times a matrix of the fiber coordinates alone.
/// candidate_s (optional) is compared with the fitted s up to its value at the
/// reference base point (the sampling-box centre).
inline SplittingReport detect_warped_splitting(const MetricAt& metric, const Chart& chart,
                                               const std::vector<int>& base, const std::vector<int>& fiber,
                                               const std::optional<ScalarExpr>& candidate_s,
                                               const VerifyConfig& cfg) {
  cfg.validate();
  std::vector<int> seen(static_cast<std::size_t>(chart.dim()), 0);
  for (int i : base) ++seen.at(static_cast<std::size_t>(i));
  for (int i : fiber) ++seen.at(static_cast<std::size_t>(i));
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
    throw Error(ErrorKind::schema, "splitting must partition the chart coordinates");

  const auto pts = sample_points(chart, cfg.samples, cfg.seed);
  auto fiber_block = [&](std::span<const double> p) {
    const Matrix<double> g = metric(p);
    Matrix<double> b(fiber.size(), fiber.size());
    for (std::size_t i = 0; i < fiber.size(); ++i)
      for (std::size_t j = 0; j < fiber.size(); ++j)
        b(i, j) = g(static_cast<std::size_t>(fiber[i]), static_cast<std::size_t>(fiber[j]));
    return b;
  };
  auto ratio = [&](std::span<const double> p, double& fact) {
    Vec<double> ref(p.begin(), p.end());
    for (int i : base) {
      const auto& b = chart.box[static_cast<std::size_t>(i)];
      ref[static_cast<std::size_t>(i)] = 0.5 * (b.lo + b.hi);
    }
    const Matrix<double> f = fiber_block(p), f0 = fiber_block(ref);
    double num = 0, den = 0;
    for (std::size_t i = 0; i < f.rows(); ++i)
      for (std::size_t j = 0; j < f.cols(); ++j) {
        num += f(i, j) * f0(i, j);
        den += f0(i, j) * f0(i, j);
      }
    const double r = den > 0 ? num / den : NAN;
    fact = max_abs(f - scaled(f0, r)) / std::max(max_abs(f), 1.0);
    return std::pair{r, ref};
  };

  struct Sample {
    double block = 0, fact = 0, indep = 0, cand = 0, r = 0;
  };
  auto per = parallel_map(pts.size(), [&](std::size_t si) {
    const Vec<double>& p = pts[si];
    Sample s;
    const Matrix<double> g = metric(p);
    for (int i : base)
      for (int j : fiber)
        s.block = std::max(s.block, std::abs(g(static_cast<std::size_t>(i), static_cast<std::size_t>(j))));
    double f1 = 0, f2 = 0;
    const auto [r, ref] = ratio(p, f1);
    s.r = r;
    auto rng = rng_for(cfg.seed, 0xb10c, si);
    Vec<double> p2 = p;
    for (int i : fiber) {
      const auto& b = chart.box[static_cast<std::size_t>(i)];
      p2[static_cast<std::size_t>(i)] = uniform(rng, b.lo, b.hi);
    }
    const double r2 = ratio(p2, f2).first;
    s.fact = std::max(f1, f2);
    s.indep = std::abs(r - r2) / std::max(std::abs(r), 1.0);
    if (candidate_s) {
      const double want = candidate_s->eval<double>(p) / candidate_s->eval<double>(ref);
      s.cand = std::abs(r - want) / std::max(std::abs(want), 1.0);
    }
    return s;
  });

  SplittingReport out;
  double block = 0, fact = 0, indep = 0, cand = 0;
  for (const auto& s : per) {
    block = std::max(block, s.block);
    fact = std::max(fact, s.fact);
    indep = std::max(indep, s.indep);
    cand = std::max(cand, s.cand);
    out.fitted_ratio.push_back(s.r);
  }
  const int ns = static_cast<int>(pts.size());
  auto& rep = out.report;
  rep.below("block_orthogonal", "g(TB, TF) = 0", block, cfg.tol, ns);
  rep.below("fiber_factorization", "fiber block = s(base) g_F(fiber)", fact, cfg.tol, ns);
  rep.below("warp_fiber_independent", "fitted s independent of fiber coordinates", indep, cfg.tol, ns);
  if (candidate_s) rep.below("warp_candidate", "fitted s = candidate s", cand, cfg.tol, ns);
  return out;
}

/// Fiber components of xi on a split submanifold; a proper warped product
/// keeps xi in the base.
inline VerificationReport xi_fiber_projection(const Immersion& imm, const std::vector<int>& fiber,
                                              const VerifyConfig& cfg) {
  cfg.validate();
  imm.validate();
  imm.require_structure();
  const auto pts = sample_points(imm.source, cfg.samples, cfg.seed);
  auto per = parallel_map(pts.size(), [&](std::size_t si) {
    const auto f = build_point_frame<double>(imm, pts[si]);
    const Vec<double> xi = f.tangential(f.xi);
    double r = 0;
    for (int i : fiber) r = std::max(r, std::abs(xi[static_cast<std::size_t>(i)]));
    return r;
  });
  VerificationReport rep;
  rep.below("xi_fiber_component", "xi has no fiber component", *std::max_element(per.begin(), per.end()),
            cfg.tol, static_cast<int>(pts.size()));
  return rep;
}

/// B x {q} and {p} x F as immersions into the product, at the given factor points.
inline Immersion base_leaf(const WarpedSpec& s, const MetricField& g, std::span<const double> fiber_point) {
  const Chart product = s.product_chart();
  std::vector<ScalarExpr> comps;
  for (int i = 0; i < s.base_dim(); ++i) comps.push_back(coord(i));
  for (double v : fiber_point) comps.push_back(cst(v));
  return Immersion{s.base, product, std::move(comps), g, std::nullopt};
}

inline Immersion fiber_leaf(const WarpedSpec& s, const MetricField& g, std::span<const double> base_point) {
  const Chart product = s.product_chart();
  std::vector<ScalarExpr> comps;
  for (double v : base_point) comps.push_back(cst(v));
  for (int i = 0; i < s.fiber_dim(); ++i) comps.push_back(coord(i));
  return Immersion{s.fiber, product, std::move(comps), g, std::nullopt};
}

}  // namespace paraverify
