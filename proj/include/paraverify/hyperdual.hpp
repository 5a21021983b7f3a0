#pragma once

// Forward-mode numbers used to get exact partial derivatives out of
// expression evaluation.
//
//   Dual<T>    : value + one directional derivative. Nests (Dual<Dual<double>>).
//   HyperDual  : value, two directional derivatives and the mixed second
//                derivative; eps1^2 = eps2^2 = 0, eps1*eps2 != 0.

#include <cmath>
#include <ostream>

namespace paraverify {

template <class T>
struct Dual {
  T v{};
  T d{};

  constexpr Dual() = default;
  constexpr Dual(double c) : v(c), d(0.0) {}  // NOLINT: implicit lift of constants
  constexpr Dual(T value, T deriv) : v(value), d(deriv) {}

  Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
  Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
  Dual& operator*=(const Dual& o) { d = d * o.v + v * o.d; v *= o.v; return *this; }
  Dual& operator/=(const Dual& o) {
    d = (d * o.v - v * o.d) / (o.v * o.v);
    v /= o.v;
    return *this;
  }
};

template <class T> Dual<T> operator+(Dual<T> a, const Dual<T>& b) { return a += b; }
template <class T> Dual<T> operator-(Dual<T> a, const Dual<T>& b) { return a -= b; }
template <class T> Dual<T> operator*(Dual<T> a, const Dual<T>& b) { return a *= b; }
template <class T> Dual<T> operator/(Dual<T> a, const Dual<T>& b) { return a /= b; }
template <class T> Dual<T> operator-(const Dual<T>& a) { return {-a.v, -a.d}; }
template <class T> Dual<T> operator+(Dual<T> a, double b) { a.v += b; return a; }
template <class T> Dual<T> operator+(double b, Dual<T> a) { a.v += b; return a; }
template <class T> Dual<T> operator-(Dual<T> a, double b) { a.v -= b; return a; }
template <class T> Dual<T> operator-(double b, const Dual<T>& a) { return {b - a.v, -a.d}; }
template <class T> Dual<T> operator*(Dual<T> a, double b) { a.v *= b; a.d *= b; return a; }
template <class T> Dual<T> operator*(double b, Dual<T> a) { a.v *= b; a.d *= b; return a; }
template <class T> Dual<T> operator/(Dual<T> a, double b) { a.v /= b; a.d /= b; return a; }
template <class T> Dual<T> operator/(double b, const Dual<T>& a) { return Dual<T>(b) / a; }

template <class T>
std::ostream& operator<<(std::ostream& os, const Dual<T>& x) {
  return os << "(" << x.v << " + " << x.d << " eps)";
}

struct HyperDual {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d12 = 0.0;

  constexpr HyperDual() = default;
  constexpr HyperDual(double c) : v(c) {}  // NOLINT: implicit lift of constants
  constexpr HyperDual(double value, double e1, double e2, double e12)
      : v(value), d1(e1), d2(e2), d12(e12) {}

  HyperDual& operator+=(const HyperDual& o) {
    v += o.v; d1 += o.d1; d2 += o.d2; d12 += o.d12;
    return *this;
  }
  HyperDual& operator-=(const HyperDual& o) {
    v -= o.v; d1 -= o.d1; d2 -= o.d2; d12 -= o.d12;
    return *this;
  }
  HyperDual& operator*=(const HyperDual& o) {
    const double nd12 = d12 * o.v + d1 * o.d2 + d2 * o.d1 + v * o.d12;
    d1 = d1 * o.v + v * o.d1;
    d2 = d2 * o.v + v * o.d2;
    d12 = nd12;
    v *= o.v;
    return *this;
  }
};

inline HyperDual operator+(HyperDual a, const HyperDual& b) { return a += b; }
inline HyperDual operator-(HyperDual a, const HyperDual& b) { return a -= b; }
inline HyperDual operator*(HyperDual a, const HyperDual& b) { return a *= b; }
inline HyperDual operator-(const HyperDual& a) { return {-a.v, -a.d1, -a.d2, -a.d12}; }

/// f applied through its first two derivatives at x.v.
inline HyperDual chain(const HyperDual& x, double f0, double f1, double f2) {
  return {f0, f1 * x.d1, f1 * x.d2, f1 * x.d12 + f2 * x.d1 * x.d2};
}

inline HyperDual reciprocal(const HyperDual& x) {
  const double r = 1.0 / x.v;
  return chain(x, r, -r * r, 2.0 * r * r * r);
}

inline HyperDual operator/(const HyperDual& a, const HyperDual& b) { return a * reciprocal(b); }

inline std::ostream& operator<<(std::ostream& os, const HyperDual& x) {
  return os << "(" << x.v << ", " << x.d1 << ", " << x.d2 << ", " << x.d12 << ")";
}

// value_of strips derivative parts; comparisons and pivoting use it.
inline double value_of(double x) { return x; }
template <class T> double value_of(const Dual<T>& x) { return value_of(x.v); }
inline double value_of(const HyperDual& x) { return x.v; }

/// Derivative part of a first-order dual.
inline double deriv_of(const Dual<double>& x) { return x.d; }

}  // namespace paraverify
