#pragma once

#include <cmath>
#include <type_traits>
#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>

#include "paraverify/error.hpp"
#include "paraverify/hyperdual.hpp"

namespace paraverify {

enum class Fn { sin, cos, tan, sec, sinh, cosh, exp, ln, sqrt, abs };

inline constexpr Fn all_functions[] = {Fn::sin,  Fn::cos,  Fn::tan, Fn::sec,  Fn::sinh,
                                       Fn::cosh, Fn::exp,  Fn::ln,  Fn::sqrt, Fn::abs};

inline std::string_view name_of(Fn f) {
  switch (f) {
    case Fn::sin: return "sin";
    case Fn::cos: return "cos";
    case Fn::tan: return "tan";
    case Fn::sec: return "sec";
    case Fn::sinh: return "sinh";
    case Fn::cosh: return "cosh";
    case Fn::exp: return "exp";
    case Fn::ln: return "ln";
    case Fn::sqrt: return "sqrt";
    case Fn::abs: return "abs";
  }
  return "?";
}

/// Value, first and second derivative of a scalar function at one point.
struct Taylor2 {
  double f0, f1, f2;
};

namespace detail {

inline constexpr double pole_guard = 1e-12;

[[noreturn]] inline void domain_error(std::string_view what, double x) {
  throw Error(ErrorKind::domain, std::string(what) + " at " + std::to_string(x));
}

inline void require_finite(double y, std::string_view what, double x) {
  if (!std::isfinite(y)) domain_error(std::string(what) + " is not finite", x);
}

}  // namespace detail

inline Taylor2 taylor(Fn f, double x) {
  switch (f) {
    case Fn::sin: return {std::sin(x), std::cos(x), -std::sin(x)};
    case Fn::cos: return {std::cos(x), -std::sin(x), -std::cos(x)};
    case Fn::tan: {
      const double c = std::cos(x);
      if (std::abs(c) < detail::pole_guard) detail::domain_error("tan pole", x);
      const double t = std::tan(x);
      const double s2 = 1.0 / (c * c);
      return {t, s2, 2.0 * s2 * t};
    }
    case Fn::sec: {
      const double c = std::cos(x);
      if (std::abs(c) < detail::pole_guard) detail::domain_error("sec pole", x);
      const double s = 1.0 / c;
      const double t = std::tan(x);
      return {s, s * t, s * t * t + s * s * s};
    }
    case Fn::sinh: return {std::sinh(x), std::cosh(x), std::sinh(x)};
    case Fn::cosh: return {std::cosh(x), std::sinh(x), std::cosh(x)};
    case Fn::exp: {
      const double e = std::exp(x);
      detail::require_finite(e, "exp", x);
      return {e, e, e};
    }
    case Fn::ln: {
      if (!(x > 0.0)) detail::domain_error("ln of non-positive argument", x);
      return {std::log(x), 1.0 / x, -1.0 / (x * x)};
    }
    case Fn::sqrt: {
      if (x < 0.0) detail::domain_error("sqrt of negative argument", x);
      const double s = std::sqrt(x);
      if (s == 0.0) return {0.0, INFINITY, -INFINITY};
      return {s, 0.5 / s, -0.25 / (s * x)};
    }
    case Fn::abs: return {std::abs(x), x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0), 0.0};
  }
  return {NAN, NAN, NAN};
}

/// x^(num/den) with den > 0 in lowest terms. Negative bases are allowed when
/// den is odd (real root).
inline Taylor2 taylor_pow(double x, std::int64_t num, std::int64_t den) {
  if (x == 0.0 && num < 0) detail::domain_error("zero raised to a negative power", x);
  if (x < 0.0 && den % 2 == 0) detail::domain_error("even root of negative base", x);
  // x^(n/den); for x < 0 (odd den) the sign follows the parity of n.
  auto raw = [&](std::int64_t n) -> double {
    const double e = static_cast<double>(n) / static_cast<double>(den);
    if (x >= 0.0) return std::pow(x, e);
    const double mag = std::pow(-x, e);
    return (n % 2 == 0) ? mag : -mag;
  };
  const double r = static_cast<double>(num) / static_cast<double>(den);
  const double f0 = raw(num);
  detail::require_finite(f0, "power", x);
  const double f1 = (num == 0) ? 0.0 : r * raw(num - den);
  const double f2 = (num == 0 || num == den) ? 0.0 : r * (r - 1.0) * raw(num - 2 * den);
  return {f0, f1, f2};
}

inline double lift(double, Taylor2 t) { return t.f0; }
inline Dual<double> lift(const Dual<double>& x, Taylor2 t) { return {t.f0, t.f1 * x.d}; }
inline HyperDual lift(const HyperDual& x, Taylor2 t) { return chain(x, t.f0, t.f1, t.f2); }

template <class T>
T apply(Fn f, const T& x) {
  return lift(x, taylor(f, value_of(x)));
}

template <class T>
T rational_pow(const T& x, std::int64_t num, std::int64_t den) {
  if constexpr (std::is_same_v<T, double>) {
    // Avoid spurious non-finite derivative factors when only the value is needed.
    if (x == 0.0 && num > 0) return 0.0;
  }
  return lift(x, taylor_pow(value_of(x), num, den));
}

template <class T>
T divide(const T& a, const T& b) {
  if (value_of(b) == 0.0) detail::domain_error("division by zero", value_of(a));
  return a / b;
}

// Short spellings used by the geometry code on Dual/double scalars.
template <class T> T sqrt_of(const T& x) { return apply(Fn::sqrt, x); }
template <class T> T abs_of(const T& x) { return apply(Fn::abs, x); }

}  // namespace paraverify
