#pragma once

// Coordinate-component fields built from ScalarExpr. Components are indexed
// by the coordinates of a single chart; nothing here knows about charts
// beyond the dimension.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "paraverify/chart.hpp"
#include "paraverify/error.hpp"
#include "paraverify/expr.hpp"
#include "paraverify/linalg.hpp"

namespace paraverify {

struct VectorFieldExpr {
  std::vector<ScalarExpr> comps;

  VectorFieldExpr() = default;
  explicit VectorFieldExpr(std::vector<ScalarExpr> c) : comps(std::move(c)) {}

  static VectorFieldExpr coordinate_field(int dim, int k) {
    std::vector<ScalarExpr> c(static_cast<std::size_t>(dim), cst(0.0));
    c[static_cast<std::size_t>(k)] = cst(1.0);
    return VectorFieldExpr(std::move(c));
  }

  static VectorFieldExpr constant(const Vec<double>& v) {
    std::vector<ScalarExpr> c;
    for (double x : v) c.push_back(cst(x));
    return VectorFieldExpr(std::move(c));
  }

  int dim() const { return static_cast<int>(comps.size()); }

  template <class T>
  Vec<T> eval(std::span<const T> p) const {
    Vec<T> out;
    out.reserve(comps.size());
    for (const auto& c : comps) out.push_back(c.eval<T>(p));
    return out;
  }

  Vec<double> operator()(std::span<const double> p) const { return eval<double>(p); }
};

/// Covector components eta_i.
struct CovectorFieldExpr {
  std::vector<ScalarExpr> comps;

  CovectorFieldExpr() = default;
  explicit CovectorFieldExpr(std::vector<ScalarExpr> c) : comps(std::move(c)) {}

  int dim() const { return static_cast<int>(comps.size()); }

  template <class T>
  Vec<T> eval(std::span<const T> p) const {
    Vec<T> out;
    out.reserve(comps.size());
    for (const auto& c : comps) out.push_back(c.eval<T>(p));
    return out;
  }
};

/// Tensor field of valence (r, s): r contravariant indices first, then s
/// covariant ones, stored row-major over dim^(r+s) components.
struct TensorFieldExpr {
  int dim = 0;
  int contravariant = 0;
  int covariant = 0;
  std::vector<ScalarExpr> comps;

  TensorFieldExpr() = default;
  TensorFieldExpr(int d, int r, int s, std::vector<ScalarExpr> c)
      : dim(d), contravariant(r), covariant(s), comps(std::move(c)) {
    std::size_t expect = 1;
    for (int i = 0; i < r + s; ++i) expect *= static_cast<std::size_t>(d);
    if (comps.size() != expect)
      throw Error(ErrorKind::schema, "tensor field has " + std::to_string(comps.size()) +
                                         " components, expected " + std::to_string(expect));
  }

  int rank() const { return contravariant + covariant; }

  const ScalarExpr& at(int i, int j) const {
    return comps[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) +
                 static_cast<std::size_t>(j)];
  }

  /// Rank-2 components as a matrix (row = first index).
  template <class T>
  Matrix<T> eval_matrix(std::span<const T> p) const {
    if (rank() != 2) throw Error(ErrorKind::unsupported, "matrix view of a non rank-2 tensor");
    Matrix<T> m(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = at(i, j).eval<T>(p);
    return m;
  }

  template <class T>
  Vec<T> eval_flat(std::span<const T> p) const {
    Vec<T> out;
    out.reserve(comps.size());
    for (const auto& c : comps) out.push_back(c.eval<T>(p));
    return out;
  }
};

/// Symmetric metric g_ij. Only the upper triangle is stored, so symmetry is
/// exact by construction.
class MetricField {
 public:
  MetricField() = default;

  /// From a full row-major matrix; the lower triangle must print identically
  /// to the upper one.
  MetricField(int dim, const std::vector<ScalarExpr>& row_major, int positive, int negative,
              std::span<const std::string> names = {})
      : dim_(dim), positive_(positive), negative_(negative) {
    if (row_major.size() != static_cast<std::size_t>(dim * dim))
      throw Error(ErrorKind::schema, "metric needs " + std::to_string(dim * dim) + " entries");
    if (positive + negative != dim)
      throw Error(ErrorKind::schema, "declared signature does not add up to the dimension");
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j) {
        const auto& u = row_major[static_cast<std::size_t>(i * dim + j)];
        const auto& l = row_major[static_cast<std::size_t>(j * dim + i)];
        if (i != j && u.to_string(names) != l.to_string(names))
          throw Error(ErrorKind::schema, "metric entries (" + std::to_string(i) + "," +
                                             std::to_string(j) + ") and transposed differ");
        upper_.push_back(u);
      }
  }

  static MetricField diagonal(const std::vector<ScalarExpr>& diag, int positive, int negative) {
    const int n = static_cast<int>(diag.size());
    std::vector<ScalarExpr> full(static_cast<std::size_t>(n * n), cst(0.0));
    for (int i = 0; i < n; ++i) full[static_cast<std::size_t>(i * n + i)] = diag[static_cast<std::size_t>(i)];
    return MetricField(n, full, positive, negative);
  }

  int dim() const { return dim_; }
  std::pair<int, int> signature() const { return {positive_, negative_}; }

  const ScalarExpr& entry(int i, int j) const {
    if (i > j) std::swap(i, j);
    // Packed upper triangle, row by row.
    const int offset = i * dim_ - i * (i - 1) / 2;
    return upper_[static_cast<std::size_t>(offset + (j - i))];
  }

  template <class T>
  Matrix<T> eval(std::span<const T> p) const {
    Matrix<T> m(static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i)
      for (int j = i; j < dim_; ++j) {
        const T v = entry(i, j).eval<T>(p);
        m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
        m(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = v;
      }
    return m;
  }

  Matrix<double> operator()(std::span<const double> p) const { return eval<double>(p); }

  /// Throws if g is (numerically) degenerate at p or its eigenvalue signs do
  /// not match the declared signature.
  void check_at(std::span<const double> p) const {
    const Matrix<double> m = eval<double>(p);
    const double det = LU<double>(m, ErrorKind::degenerate_metric, "degenerate metric").determinant();
    if (!(std::abs(det) > 1e-12)) throw Error(ErrorKind::degenerate_metric, "metric determinant vanishes");
    const auto [p_, q_] = signature_of(m);
    if (p_ != positive_ || q_ != negative_)
      throw Error(ErrorKind::signature_mismatch,
                  "metric signature (" + std::to_string(p_) + "," + std::to_string(q_) +
                      ") differs from declared (" + std::to_string(positive_) + "," +
                      std::to_string(negative_) + ")");
  }

  /// Full row-major entries, for serialisation.
  std::vector<ScalarExpr> row_major() const {
    std::vector<ScalarExpr> out;
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) out.push_back(entry(i, j));
    return out;
  }

  /// g(Y, Z) as a scalar expression.
  ScalarExpr pairing(const VectorFieldExpr& y, const VectorFieldExpr& z) const {
    ScalarExpr s = cst(0.0);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        s = s + entry(i, j) * y.comps[static_cast<std::size_t>(i)] * z.comps[static_cast<std::size_t>(j)];
    return s;
  }

 private:
  int dim_ = 0;
  int positive_ = 0;
  int negative_ = 0;
  std::vector<ScalarExpr> upper_;
};

}  // namespace paraverify
