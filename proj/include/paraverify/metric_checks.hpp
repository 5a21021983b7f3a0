#pragma once

// Connection-level property checks on a metric: compatibility, torsion,
// Christoffel symmetry, and comparison against a tabulated connection.

#include <algorithm>
#include <cmath>
#include <vector>

#include "paraverify/chart.hpp"
#include "paraverify/connection.hpp"
#include "paraverify/fields.hpp"
#include "paraverify/parallel.hpp"
#include "paraverify/report.hpp"

namespace paraverify {

namespace detail {

/// X^k = a_k + sum_j b_kj x_j with coefficients in [-1, 1].
inline VectorFieldExpr random_affine_field(std::mt19937_64& rng, int n) {
  std::vector<ScalarExpr> comps;
  for (int k = 0; k < n; ++k) {
    ScalarExpr e = cst(uniform(rng, -1.0, 1.0));
    for (int j = 0; j < n; ++j) e = e + uniform(rng, -1.0, 1.0) * coord(j);
    comps.push_back(e);
  }
  return VectorFieldExpr(std::move(comps));
}

}  // namespace detail

/// Metric compatibility and torsion-freeness on random affine fields, and
/// lower-index symmetry of the Christoffel symbols.
inline VerificationReport check_connection_properties(const MetricField& g, const Chart& chart,
                                                      const VerifyConfig& cfg) {
  cfg.validate();
  if (g.dim() != chart.dim()) throw Error(ErrorKind::schema, "metric and chart dimensions differ");
  const auto pts = sample_points(chart, cfg.samples, cfg.seed);
  const int n = g.dim();
  enum : std::size_t { compat, torsion, symmetry, count };
  auto per = parallel_map(pts.size(), [&](std::size_t si) {
    const Vec<double>& p = pts[si];
    g.check_at(p);
    auto rng = rng_for(cfg.seed, 0xc0de, si);
    const VectorFieldExpr x = detail::random_affine_field(rng, n);
    const VectorFieldExpr y = detail::random_affine_field(rng, n);
    const VectorFieldExpr z = detail::random_affine_field(rng, n);
    const ChristoffelAtPoint gam = christoffel(g, p);
    const Matrix<double> gm = g.eval<double>(p);
    const Vec<double> xp = x(p), yp = y(p), zp = z(p);
    const Vec<double> nxy = field_jacobian(y, p) * xp + gam.contract(xp, yp);
    const Vec<double> nxz = field_jacobian(z, p) * xp + gam.contract(xp, zp);
    const Vec<double> nyx = field_jacobian(x, p) * yp + gam.contract(yp, xp);
    std::vector<double> r(count, 0.0);
    const double xg = dot(gradient(g.pairing(y, z), p), xp);
    r[compat] = std::abs(xg - inner(gm, nxy, zp) - inner(gm, yp, nxz));
    r[torsion] = max_abs(nxy - nyx - lie_bracket(x, y, p));
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) r[symmetry] = std::max(r[symmetry], std::abs(gam(k, i, j) - gam(k, j, i)));
    return r;
  });
  MaxResiduals mr(count);
  for (const auto& r : per) mr.merge(r);
  const int ns = static_cast<int>(pts.size());
  VerificationReport rep;
  rep.below("metric_compatibility", "X g(Y,Z) = g(nabla_X Y, Z) + g(Y, nabla_X Z)", mr[compat], cfg.tol, ns);
  rep.below("torsion_free", "nabla_X Y - nabla_Y X = [X,Y]", mr[torsion], cfg.tol, ns);
  rep.below("christoffel_symmetry", "Gamma^k_ij = Gamma^k_ji", mr[symmetry], 1e-12, ns);
  return rep;
}

struct ChristoffelEntry {
  int k = 0, i = 0, j = 0;
  ScalarExpr value;
};

inline constexpr double christoffel_table_tol = 1e-9;

/// Listed entries (and their (i, j) mirror) must match; when `complete`, every
/// other entry must vanish.
inline VerificationReport check_christoffel_table(const MetricField& g, const Chart& chart,
                                                  const std::vector<ChristoffelEntry>& table, bool complete,
                                                  const VerifyConfig& cfg) {
  cfg.validate();
  const int n = g.dim();
  for (const auto& e : table)
    if (std::min({e.k, e.i, e.j}) < 0 || std::max({e.k, e.i, e.j}) >= n)
      throw Error(ErrorKind::schema, "Christoffel table index out of range");
  const auto pts = sample_points(chart, cfg.samples, cfg.seed);
  auto per = parallel_map(pts.size(), [&](std::size_t si) {
    const Vec<double>& p = pts[si];
    const ChristoffelAtPoint gam = christoffel(g, p);
    ChristoffelAtPoint want(n);
    std::vector<char> listed(static_cast<std::size_t>(n * n * n), 0);
    for (const auto& e : table) {
      const double v = e.value.eval<double>(p);
      want(e.k, e.i, e.j) = v;
      want(e.k, e.j, e.i) = v;
      listed[static_cast<std::size_t>((e.k * n + e.i) * n + e.j)] = 1;
      listed[static_cast<std::size_t>((e.k * n + e.j) * n + e.i)] = 1;
    }
    std::vector<double> r(2, 0.0);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const double d = std::abs(gam(k, i, j) - want(k, i, j));
          if (listed[static_cast<std::size_t>((k * n + i) * n + j)]) r[0] = std::max(r[0], d);
          else if (complete) r[1] = std::max(r[1], d);
        }
    return r;
  });
  MaxResiduals mr(2);
  for (const auto& r : per) mr.merge(r);
  const int ns = static_cast<int>(pts.size());
  VerificationReport rep;
  rep.below("christoffel_listed", "tabulated Gamma^k_ij", mr[0], christoffel_table_tol, ns,
            std::to_string(table.size()) + " listed entries");
  if (complete) rep.below("christoffel_zero", "unlisted Gamma^k_ij = 0", mr[1], christoffel_table_tol, ns);
  return rep;
}

}  // namespace paraverify
