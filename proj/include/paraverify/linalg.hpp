#pragma once

// Small dense linear algebra on any scalar that supports + - * / and
// value_of(). Matrices here are at most a handful of rows, so everything is
// straightforward row-major storage without blocking.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "paraverify/elementary.hpp"
#include "paraverify/error.hpp"
#include "paraverify/hyperdual.hpp"

namespace paraverify {

template <class T>
using Vec = std::vector<T>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T(0.0))
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1.0);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec<T> col(std::size_t j) const {
    Vec<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_col(std::size_t j, const Vec<T>& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  static Matrix from_columns(const std::vector<Vec<T>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class T>
Vec<T> operator*(const Matrix<T>& a, const Vec<T>& x) {
  Vec<T> y(a.rows(), T(0.0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

template <class T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
  return a;
}

template <class T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
  return a;
}

template <class T>
Matrix<T> scaled(Matrix<T> a, const T& s) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) *= s;
  return a;
}

template <class T>
Vec<T> operator+(Vec<T> a, const Vec<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class T>
Vec<T> operator-(Vec<T> a, const Vec<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class T>
Vec<T> scaled(Vec<T> a, const T& s) {
  for (auto& x : a) x *= s;
  return a;
}

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  T s(0.0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// g(u, v) for a bilinear form given by its matrix.
template <class T>
T inner(const Matrix<T>& g, const Vec<T>& u, const Vec<T>& v) {
  T s(0.0);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) s += u[i] * g(i, j) * v[j];
  return s;
}

inline double max_abs(const Vec<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

inline double max_abs(const Matrix<double>& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

inline double norm2(const Vec<double>& v) { return std::sqrt(dot(v, v)); }

template <class T>
Vec<double> values(const Vec<T>& v) {
  Vec<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = value_of(v[i]);
  return out;
}

template <class T>
Matrix<double> values(const Matrix<T>& a) {
  Matrix<double> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = value_of(a(i, j));
  return out;
}

inline Vec<double> derivs(const Vec<Dual<double>>& v) {
  Vec<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].d;
  return out;
}

inline Matrix<double> derivs(const Matrix<Dual<double>>& a) {
  Matrix<double> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).d;
  return out;
}

inline constexpr double pivot_floor = 1e-12;

/// LU factorisation with partial pivoting. Pivots smaller than 1e-12 in
/// magnitude are reported as degeneracy with the caller-supplied kind.
template <class T>
class LU {
 public:
  LU() = default;
  explicit LU(Matrix<T> a, ErrorKind on_singular = ErrorKind::degenerate_metric,
              const char* what = "singular matrix")
      : lu_(std::move(a)), perm_(lu_.rows()) {
    const std::size_t n = lu_.rows();
    if (lu_.cols() != n) throw Error(ErrorKind::unsupported, "LU of non-square matrix");
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      double best = std::abs(value_of(lu_(k, k)));
      for (std::size_t i = k + 1; i < n; ++i) {
        const double c = std::abs(value_of(lu_(i, k)));
        if (c > best) { best = c; p = i; }
      }
      if (best < pivot_floor) throw Error(on_singular, what);
      if (p != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
        std::swap(perm_[k], perm_[p]);
        sign_ = -sign_;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        lu_(i, k) = lu_(i, k) / lu_(k, k);
        const T f = lu_(i, k);
        for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
      }
    }
  }

  std::size_t size() const { return lu_.rows(); }

  Vec<T> solve(const Vec<T>& b) const {
    const std::size_t n = lu_.rows();
    Vec<T> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[perm_[i]];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
    for (std::size_t ii = n; ii-- > 0;) {
      for (std::size_t j = ii + 1; j < n; ++j) x[ii] -= lu_(ii, j) * x[j];
      x[ii] = x[ii] / lu_(ii, ii);
    }
    return x;
  }

  Matrix<T> solve(const Matrix<T>& b) const {
    Matrix<T> x(b.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) x.set_col(j, solve(b.col(j)));
    return x;
  }

  Matrix<T> inverse() const { return solve(Matrix<T>::identity(lu_.rows())); }

  T determinant() const {
    T d(sign_);
    for (std::size_t i = 0; i < lu_.rows(); ++i) d *= lu_(i, i);
    return d;
  }

 private:
  Matrix<T> lu_;
  std::vector<std::size_t> perm_;
  double sign_ = 1.0;
};

struct SymmetricEigen {
  Vec<double> values;     // ascending
  Matrix<double> vectors;  // column i belongs to values[i]
};

/// Cyclic Jacobi rotations on a symmetric matrix.
inline SymmetricEigen symmetric_eigen(Matrix<double> a) {
  const std::size_t n = a.rows();
  Matrix<double> v = Matrix<double>::identity(n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
  SymmetricEigen out{Vec<double>(n), Matrix<double>(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = a(order[i], order[i]);
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, i) = v(k, order[i]);
  }
  return out;
}

/// Eigenvalues of a symmetric matrix, ascending.
inline Vec<double> symmetric_eigenvalues(const Matrix<double>& a) { return symmetric_eigen(a).values; }

/// Singular values, ascending, via the eigenvalues of A^T A.
inline Vec<double> singular_values(const Matrix<double>& a) {
  Vec<double> ev = symmetric_eigenvalues(a.transpose() * a);
  for (auto& x : ev) x = std::sqrt(std::max(0.0, x));
  return ev;
}

/// (positive, negative) eigenvalue counts of a symmetric matrix. Eigenvalues
/// with magnitude below zero_tol count toward neither.
inline std::pair<int, int> signature_of(const Matrix<double>& a, double zero_tol = 1e-12) {
  int p = 0, q = 0;
  for (double e : symmetric_eigenvalues(a)) {
    if (e > zero_tol) ++p;
    else if (e < -zero_tol) ++q;
  }
  return {p, q};
}

/// Numerical rank from singular values relative to the largest one.
inline int numerical_rank(const Matrix<double>& a, double rel_tol = 1e-8) {
  const Vec<double> sv = singular_values(a);
  if (sv.empty()) return 0;
  const double top = sv.back();
  if (top == 0.0) return 0;
  int r = 0;
  for (double s : sv)
    if (s > rel_tol * top) ++r;
  return r;
}

}  // namespace paraverify
