#pragma once

// Almost paracontact metric structures (phi, xi, eta, g) on one chart and their
// classification as paracosymplectic or para-Sasakian.

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "paraverify/chart.hpp"
#include "paraverify/connection.hpp"
#include "paraverify/fields.hpp"
#include "paraverify/linalg.hpp"
#include "paraverify/parallel.hpp"
#include "paraverify/report.hpp"

namespace paraverify {

struct ParacontactStructure {
  Chart chart;
  TensorFieldExpr phi;  // phi^i_j, valence (1,1)
  VectorFieldExpr xi;
  CovectorFieldExpr eta;
  MetricField g;

  void validate() const {
    const int n = chart.dim();
    if (phi.dim != n || phi.contravariant != 1 || phi.covariant != 1)
      throw Error(ErrorKind::schema, "phi must be a (1,1) tensor on the structure chart");
    if (xi.dim() != n || eta.dim() != n || g.dim() != n)
      throw Error(ErrorKind::schema, "xi, eta and g must live on the structure chart");
  }

  /// Values of (phi, xi, eta, g) at a point of the chart.
  template <class T>
  struct AtPoint {
    Matrix<T> phi;
    Vec<T> xi;
    Vec<T> eta;
    Matrix<T> g;
  };

  template <class T>
  AtPoint<T> at(std::span<const T> p) const {
    return {phi.eval_matrix<T>(p), xi.eval<T>(p), eta.eval<T>(p), g.eval<T>(p)};
  }
};

/// Phi_ij = g_ik phi^k_j, so that Phi(X, Y) = g(X, phi Y).
inline TensorFieldExpr fundamental_two_form(const ParacontactStructure& s) {
  const int n = s.chart.dim();
  std::vector<ScalarExpr> c;
  c.reserve(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ScalarExpr e = cst(0.0);
      for (int k = 0; k < n; ++k) e = e + s.g.entry(i, k) * s.phi.at(k, j);
      c.push_back(e);
    }
  return TensorFieldExpr(n, 0, 2, std::move(c));
}

namespace detail {

inline constexpr int vector_pairs_per_sample = 3;

inline double bilinear(const Matrix<double>& m, const Vec<double>& x, const Vec<double>& y) {
  return inner(m, x, y);
}

}  // namespace detail

/// Numerical check of the almost paracontact metric axioms at sampled points
/// and random vector pairs.
inline VerificationReport check_almost_paracontact_metric(const ParacontactStructure& s,
                                                          const VerifyConfig& cfg) {
  cfg.validate();
  s.validate();
  const auto pts = sample_points(s.chart, cfg.samples, cfg.seed);
  const TensorFieldExpr big_phi = fundamental_two_form(s);
  const std::size_t n = static_cast<std::size_t>(s.chart.dim());

  enum : std::size_t { phi_sq, eta_xi, phi_xi, eta_phi, sv_null, compat, dual, skew, form_skew, count };
  std::vector<double> min_sv_rest(pts.size(), inf);

  auto per = parallel_map(pts.size(), [&](std::size_t si) {
    const Vec<double>& p = pts[si];
    s.g.check_at(p);
    const auto a = s.at<double>(p);
    std::vector<double> r(count, 0.0);

    const Matrix<double> phi2 = a.phi * a.phi;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double expect = (i == j ? 1.0 : 0.0) - a.xi[i] * a.eta[j];
        r[phi_sq] = std::max(r[phi_sq], std::abs(phi2(i, j) - expect));
      }
    r[eta_xi] = std::abs(dot(a.eta, a.xi) - 1.0);
    r[phi_xi] = max_abs(a.phi * a.xi);
    r[eta_phi] = max_abs(a.phi.transpose() * a.eta);

    const Vec<double> sv = singular_values(a.phi);
    r[sv_null] = sv.front();
    double rest = inf;
    for (std::size_t i = 1; i < sv.size(); ++i) rest = std::min(rest, sv[i]);

    const Matrix<double> form = big_phi.eval_matrix<double>(p);
    auto rng = rng_for(cfg.seed, 0x2a11, si);
    for (int k = 0; k < detail::vector_pairs_per_sample; ++k) {
      const Vec<double> x = random_vector(rng, n);
      const Vec<double> y = random_vector(rng, n);
      const Vec<double> px = a.phi * x, py = a.phi * y;
      const double gxy = inner(a.g, x, y);
      r[compat] = std::max(r[compat], std::abs(gxy + inner(a.g, px, py) - dot(a.eta, x) * dot(a.eta, y)));
      r[dual] = std::max(r[dual], std::abs(inner(a.g, x, a.xi) - dot(a.eta, x)));
      r[skew] = std::max(r[skew], std::abs(inner(a.g, px, y) + inner(a.g, x, py)));
      r[form_skew] = std::max(r[form_skew], std::abs(detail::bilinear(form, x, y) + detail::bilinear(form, y, x)));
    }
    min_sv_rest[si] = rest;
    return r;
  });

  MaxResiduals m(count);
  for (const auto& r : per) m.merge(r);
  const double rest = *std::min_element(min_sv_rest.begin(), min_sv_rest.end());
  const int ns = static_cast<int>(pts.size());

  VerificationReport rep;
  rep.below("phi_squared", "phi^2 = Id - eta (x) xi", m[phi_sq], cfg.tol, ns);
  rep.below("eta_xi", "eta(xi) = 1", m[eta_xi], cfg.tol, ns);
  rep.below("phi_xi", "phi xi = 0", m[phi_xi], cfg.tol, ns);
  rep.below("eta_phi", "eta o phi = 0", m[eta_phi], cfg.tol, ns);
  rep.below("phi_rank_kernel", "rank(phi) = dim - 1 (smallest singular value)", m[sv_null], 1e-8, ns);
  rep.above("phi_rank_rest", "rank(phi) = dim - 1 (remaining singular values)", rest, 1e-6, ns);
  rep.below("metric_compatibility", "g(X,Y) = -g(phi X, phi Y) + eta(X) eta(Y)", m[compat], cfg.tol, ns);
  rep.below("eta_metric_dual", "g(X, xi) = eta(X)", m[dual], cfg.tol, ns);
  rep.below("phi_skew", "g(phi X, Y) = -g(X, phi Y)", m[skew], cfg.tol, ns);
  rep.below("fundamental_form_skew", "Phi(X,Y) = g(X, phi Y) antisymmetric", m[form_skew], cfg.tol, ns);

  const int dim = s.chart.dim();
  const auto [pp, qq] = s.g.signature();
  const bool odd = dim % 2 == 1;
  const bool sig = odd && pp == (dim + 1) / 2 && qq == dim / 2;
  rep.below("signature", "signature of g is (n+1, n)", sig ? 0.0 : 1.0, 0.5, ns,
            "declared (" + std::to_string(pp) + "," + std::to_string(qq) + ")");
  return rep;
}

enum class StructureClass { paracosymplectic, para_sasakian, unclassified };

inline const char* to_string(StructureClass c) {
  switch (c) {
    case StructureClass::paracosymplectic: return "paracosymplectic";
    case StructureClass::para_sasakian: return "para_sasakian";
    case StructureClass::unclassified: return "unclassified";
  }
  return "?";
}

struct StructureClassification {
  StructureClass verdict = StructureClass::unclassified;
  double nabla_eta = 0.0;
  double nabla_form = 0.0;
  double para_sasakian = 0.0;
  VerificationReport report;
};

/// Paracosymplectic iff nabla eta and nabla Phi vanish at every sample;
/// para-Sasakian iff (nabla_X phi) Y = -g(X,Y) xi + eta(Y) X for random X, Y.
inline StructureClassification classify_structure(const ParacontactStructure& s,
                                                  const VerifyConfig& cfg) {
  cfg.validate();
  s.validate();
  const auto pts = sample_points(s.chart, cfg.samples, cfg.seed);
  const TensorFieldExpr big_phi = fundamental_two_form(s);
  const TensorFieldExpr eta_t(s.chart.dim(), 0, 1, s.eta.comps);
  const int n = s.chart.dim();
  const auto un = static_cast<std::size_t>(n);

  enum : std::size_t { d_eta, d_form, sasaki, xi_par, xi_sas, xi_xi, closed_eta, closed_form, count };
  auto per = parallel_map(pts.size(), [&](std::size_t si) {
    const Vec<double>& p = pts[si];
    s.g.check_at(p);
    const ChristoffelAtPoint gam = christoffel(s.g, p);
    const auto a = s.at<double>(p);
    std::vector<double> r(count, 0.0);

    std::vector<Vec<double>> nabla_phi(un);  // nabla_k phi, flattened (i, j)
    std::vector<Vec<double>> d_form_k(un);
    for (int k = 0; k < n; ++k) {
      r[d_eta] = std::max(r[d_eta], max_abs(cov_deriv_tensor(s.g, eta_t, k, p, &gam)));
      r[d_form] = std::max(r[d_form], max_abs(cov_deriv_tensor(s.g, big_phi, k, p, &gam)));
      nabla_phi[static_cast<std::size_t>(k)] = cov_deriv_tensor(s.g, s.phi, k, p, &gam);
    }

    // Exterior derivatives (almost paracosymplectic: d eta = 0, d Phi = 0).
    std::vector<Matrix<double>> dform(un, Matrix<double>(un, un));
    Matrix<double> deta(un, un);
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        deta(static_cast<std::size_t>(k), static_cast<std::size_t>(i)) =
            eval_hyperdual(s.eta.comps[static_cast<std::size_t>(i)], p, k, k).d1;
        for (int j = 0; j < n; ++j)
          dform[static_cast<std::size_t>(k)](static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
              eval_hyperdual(big_phi.at(i, j), p, k, k).d1;
      }
    }
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = 0; j < un; ++j) {
        r[closed_eta] = std::max(r[closed_eta], std::abs(deta(i, j) - deta(j, i)));
        for (std::size_t k = 0; k < un; ++k)
          r[closed_form] = std::max(r[closed_form],
                                    std::abs(dform[i](j, k) + dform[j](k, i) + dform[k](i, j)));
      }

    auto rng = rng_for(cfg.seed, 0x5a5a, si);
    for (int q = 0; q < detail::vector_pairs_per_sample; ++q) {
      const Vec<double> x = random_vector(rng, un);
      const Vec<double> y = random_vector(rng, un);
      // (nabla_X phi) Y
      Vec<double> lhs(un, 0.0);
      for (std::size_t k = 0; k < un; ++k)
        for (std::size_t i = 0; i < un; ++i)
          for (std::size_t j = 0; j < un; ++j) lhs[i] += x[k] * nabla_phi[k][i * un + j] * y[j];
      const double gxy = inner(a.g, x, y);
      const double ey = dot(a.eta, y);
      Vec<double> res(un);
      for (std::size_t i = 0; i < un; ++i) res[i] = lhs[i] + gxy * a.xi[i] - ey * x[i];
      r[sasaki] = std::max(r[sasaki], max_abs(res));

      const Vec<double> nx = cov_deriv_vector(s.g, x, s.xi, p);
      r[xi_par] = std::max(r[xi_par], max_abs(nx));
      r[xi_sas] = std::max(r[xi_sas], max_abs(nx + a.phi * x));
    }
    r[xi_xi] = max_abs(cov_deriv_vector(s.g, a.xi, s.xi, p));
    return r;
  });

  MaxResiduals m(count);
  for (const auto& r : per) m.merge(r);
  const int ns = static_cast<int>(pts.size());

  StructureClassification out;
  out.nabla_eta = m[d_eta];
  out.nabla_form = m[d_form];
  out.para_sasakian = m[sasaki];
  const bool cosym = m[d_eta] < cfg.tol && m[d_form] < cfg.tol;
  const bool sas = m[sasaki] < cfg.tol;
  if (cosym) out.verdict = StructureClass::paracosymplectic;
  else if (sas) out.verdict = StructureClass::para_sasakian;

  auto& rep = out.report;
  rep.info("nabla_eta", "nabla eta = 0", m[d_eta], ns);
  rep.info("nabla_fundamental_form", "nabla Phi = 0", m[d_form], ns);
  rep.info("para_sasakian", "(nabla_X phi) Y = -g(X,Y) xi + eta(Y) X", m[sasaki], ns);
  rep.info("d_eta", "d eta = 0", m[closed_eta], ns);
  rep.info("d_fundamental_form", "d Phi = 0", m[closed_form], ns);
  if (cosym) {
    rep.below("nabla_xi_parallel", "nabla_X xi = 0 on a paracosymplectic manifold", m[xi_par], cfg.tol, ns);
    rep.below("closed_forms", "paracosymplectic implies d eta = 0 and d Phi = 0",
              std::max(m[closed_eta], m[closed_form]), cfg.tol, ns);
  }
  if (sas) {
    rep.below("nabla_xi_para_sasakian", "nabla_X xi = -phi X", m[xi_sas], cfg.tol, ns);
    rep.below("nabla_xi_xi", "nabla_xi xi = 0", m[xi_xi], cfg.tol, ns);
  }
  if (cosym && sas) rep.note("structure passes both the paracosymplectic and para-Sasakian tests");
  rep.verdict("structure", to_string(out.verdict));
  return out;
}

}  // namespace paraverify
