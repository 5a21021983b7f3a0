#pragma once

// Levi-Civita connection of a MetricField at a point, with partial derivatives
// of the metric taken from hyper-dual evaluation.

#include <span>
#include <vector>

#include "paraverify/error.hpp"
#include "paraverify/expr.hpp"
#include "paraverify/fields.hpp"
#include "paraverify/linalg.hpp"

namespace paraverify {

/// Gamma^k_ij at one point, symmetric in (i, j).
class ChristoffelAtPoint {
 public:
  ChristoffelAtPoint() = default;
  explicit ChristoffelAtPoint(int dim)
      : dim_(dim), g_(static_cast<std::size_t>(dim * dim * dim), 0.0) {}

  int dim() const { return dim_; }

  double& operator()(int k, int i, int j) { return g_[index(k, i, j)]; }
  double operator()(int k, int i, int j) const { return g_[index(k, i, j)]; }

  /// Gamma(X, Y)^k = Gamma^k_ij X^i Y^j.
  Vec<double> contract(const Vec<double>& x, const Vec<double>& y) const {
    Vec<double> out(static_cast<std::size_t>(dim_), 0.0);
    for (int k = 0; k < dim_; ++k)
      for (int i = 0; i < dim_; ++i) {
        if (x[static_cast<std::size_t>(i)] == 0.0) continue;
        for (int j = 0; j < dim_; ++j)
          out[static_cast<std::size_t>(k)] +=
              (*this)(k, i, j) * x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      }
    return out;
  }

 private:
  std::size_t index(int k, int i, int j) const {
    return static_cast<std::size_t>((k * dim_ + i) * dim_ + j);
  }

  int dim_ = 0;
  std::vector<double> g_;
};

/// Gamma^k_ij = 1/2 g^kl (d_i g_jl + d_j g_il - d_l g_ij) from the inverse
/// metric and the partials dg[l](i, j) = d_l g_ij.
inline ChristoffelAtPoint christoffel_from_partials(const Matrix<double>& ginv,
                                                    const std::vector<Matrix<double>>& dg) {
  const int n = static_cast<int>(ginv.rows());
  ChristoffelAtPoint gam(n);
  auto d = [&](int l, int i, int j) {
    return dg[static_cast<std::size_t>(l)](static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  };
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int l = 0; l < n; ++l)
          s += ginv(static_cast<std::size_t>(k), static_cast<std::size_t>(l)) *
               (d(i, j, l) + d(j, i, l) - d(l, i, j));
        gam(k, i, j) = 0.5 * s;
        gam(k, j, i) = 0.5 * s;
      }
    }
  return gam;
}

/// Partials d_l g_ij at p, one matrix per direction l.
inline std::vector<Matrix<double>> metric_partials(const MetricField& g, std::span<const double> p) {
  const int n = g.dim();
  std::vector<Matrix<double>> dg(static_cast<std::size_t>(n),
                                 Matrix<double>(static_cast<std::size_t>(n), static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const ScalarExpr& e = g.entry(i, j);
      if (e.is_constant()) continue;
      for (int l = 0; l < n; ++l) {
        const double v = eval_hyperdual(e, p, l, l).d1;
        dg[static_cast<std::size_t>(l)](static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
        dg[static_cast<std::size_t>(l)](static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = v;
      }
    }
  return dg;
}

inline Matrix<double> inverse_metric(const MetricField& g, std::span<const double> p) {
  return LU<double>(g.eval<double>(p), ErrorKind::degenerate_metric, "degenerate metric").inverse();
}

inline ChristoffelAtPoint christoffel(const MetricField& g, std::span<const double> p) {
  if (static_cast<int>(p.size()) != g.dim())
    throw Error(ErrorKind::domain, "point dimension does not match metric");
  return christoffel_from_partials(inverse_metric(g, p), metric_partials(g, p));
}

/// Jacobian dY^k/dx^i of a vector field at p, as a matrix (k, i).
inline Matrix<double> field_jacobian(const VectorFieldExpr& y, std::span<const double> p) {
  const std::size_t n = p.size();
  Matrix<double> j(y.comps.size(), n);
  for (std::size_t k = 0; k < y.comps.size(); ++k) {
    if (y.comps[k].is_constant()) continue;
    for (std::size_t i = 0; i < n; ++i)
      j(k, i) = eval_hyperdual(y.comps[k], p, static_cast<int>(i), static_cast<int>(i)).d1;
  }
  return j;
}

/// (nabla_X Y)^k = X^i d_i Y^k + Gamma^k_ij X^i Y^j, X given by its value at p.
inline Vec<double> cov_deriv_vector(const MetricField& g, const Vec<double>& x,
                                    const VectorFieldExpr& y, std::span<const double> p) {
  const ChristoffelAtPoint gam = christoffel(g, p);
  return field_jacobian(y, p) * x + gam.contract(x, y(p));
}

inline Vec<double> cov_deriv_vector(const MetricField& g, const VectorFieldExpr& x,
                                    const VectorFieldExpr& y, std::span<const double> p) {
  return cov_deriv_vector(g, x(p), y, p);
}

/// nabla_k T for valence (0,1), (0,2) or (1,1); components flattened row-major
/// over the tensor's own indices.
inline Vec<double> cov_deriv_tensor(const MetricField& g, const TensorFieldExpr& t, int k,
                                    std::span<const double> p, const ChristoffelAtPoint* pre = nullptr) {
  const int n = g.dim();
  const bool ok = (t.contravariant == 0 && (t.covariant == 1 || t.covariant == 2)) ||
                  (t.contravariant == 1 && t.covariant == 1);
  if (!ok)
    throw Error(ErrorKind::unsupported, "covariant derivative of valence (" +
                                            std::to_string(t.contravariant) + "," +
                                            std::to_string(t.covariant) + ")");
  if (t.dim != n) throw Error(ErrorKind::domain, "tensor dimension does not match metric");
  ChristoffelAtPoint local;
  if (!pre) local = christoffel(g, p);
  const ChristoffelAtPoint& gam = pre ? *pre : local;
  const Vec<double> vals = t.eval_flat<double>(p);
  Vec<double> d(vals.size(), 0.0);
  for (std::size_t c = 0; c < t.comps.size(); ++c)
    if (!t.comps[c].is_constant()) d[c] = eval_hyperdual(t.comps[c], p, k, k).d1;

  auto at = [&](int i, int j) { return vals[static_cast<std::size_t>(i * n + j)]; };
  Vec<double> out(vals.size(), 0.0);
  if (t.rank() == 1) {
    for (int i = 0; i < n; ++i) {
      double s = d[static_cast<std::size_t>(i)];
      for (int l = 0; l < n; ++l) s -= gam(l, k, i) * vals[static_cast<std::size_t>(l)];
      out[static_cast<std::size_t>(i)] = s;
    }
    return out;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = d[static_cast<std::size_t>(i * n + j)];
      for (int l = 0; l < n; ++l) {
        if (t.contravariant == 0) {
          s -= gam(l, k, i) * at(l, j) + gam(l, k, j) * at(i, l);
        } else {
          s += gam(i, k, l) * at(l, j) - gam(l, k, j) * at(i, l);
        }
      }
      out[static_cast<std::size_t>(i * n + j)] = s;
    }
  return out;
}

/// [X, Y]^k = X^i d_i Y^k - Y^i d_i X^k.
inline Vec<double> lie_bracket(const VectorFieldExpr& x, const VectorFieldExpr& y,
                               std::span<const double> p) {
  return field_jacobian(y, p) * x(p) - field_jacobian(x, p) * y(p);
}

}  // namespace paraverify
