#pragma once

// Immutable expression trees over chart coordinates.
//
// A ScalarExpr is a shared handle to a const node; copying is cheap and
// evaluation is reentrant. Evaluation is templated on the number type so the
// same tree yields plain values (double), one directional derivative
// (Dual<double>) or exact first and second partials (HyperDual).

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "paraverify/elementary.hpp"
#include "paraverify/error.hpp"
#include "paraverify/hyperdual.hpp"

namespace paraverify {

class ScalarExpr {
 public:
  enum class Kind { constant, coordinate, sum, product, quotient, power, negate, function };

  struct Node {
    Kind kind = Kind::constant;
    double value = 0.0;         // constant
    int coord = -1;             // coordinate index
    std::int64_t num = 1;       // power exponent numerator
    std::int64_t den = 1;       // power exponent denominator (> 0)
    Fn fn = Fn::sin;            // function
    std::shared_ptr<const Node> a, b;
  };

  ScalarExpr() : ScalarExpr(constant(0.0)) {}

  static ScalarExpr constant(double c) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::constant;
    n->value = c;
    return ScalarExpr(std::move(n));
  }

  static ScalarExpr coordinate(int index) {
    if (index < 0) throw Error(ErrorKind::parse, "negative coordinate index");
    auto n = std::make_shared<Node>();
    n->kind = Kind::coordinate;
    n->coord = index;
    return ScalarExpr(std::move(n));
  }

  static ScalarExpr binary(Kind k, const ScalarExpr& lhs, const ScalarExpr& rhs) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = lhs.node_;
    n->b = rhs.node_;
    return ScalarExpr(std::move(n));
  }

  static ScalarExpr negate(const ScalarExpr& e) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::negate;
    n->a = e.node_;
    return ScalarExpr(std::move(n));
  }

  static ScalarExpr power(const ScalarExpr& base, std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw Error(ErrorKind::parse, "zero denominator in exponent");
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    auto n = std::make_shared<Node>();
    n->kind = Kind::power;
    n->a = base.node_;
    n->num = num;
    n->den = den;
    return ScalarExpr(std::move(n));
  }

  static ScalarExpr function(Fn f, const ScalarExpr& arg) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::function;
    n->fn = f;
    n->a = arg.node_;
    return ScalarExpr(std::move(n));
  }

  const Node& node() const { return *node_; }
  Kind kind() const { return node_->kind; }

  bool is_constant() const { return node_->kind == Kind::constant; }
  bool is_constant(double c) const { return is_constant() && node_->value == c; }

  /// Largest coordinate index referenced, or -1 for closed expressions.
  int max_coordinate() const { return max_coord(*node_); }

  template <class T>
  T eval(std::span<const T> point) const {
    return eval_node<T>(*node_, point);
  }

  double operator()(std::span<const double> point) const { return eval<double>(point); }

  /// Fully parenthesised infix text using the given coordinate names.
  std::string to_string(std::span<const std::string> names) const {
    std::string out;
    print(*node_, names, out);
    return out;
  }

  /// Copy with every coordinate index i replaced by map[i].
  ScalarExpr remap(std::span<const int> map) const { return ScalarExpr(remap_node(node_, map)); }

  /// Copy with every coordinate index shifted by offset.
  ScalarExpr shifted(int offset) const {
    std::vector<int> map(static_cast<std::size_t>(std::max(0, max_coordinate() + 1)));
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i) + offset;
    return remap(map);
  }

  /// Copy with coordinate i replaced by the expression subs[i] (composition).
  ScalarExpr substitute(std::span<const ScalarExpr> subs) const {
    return ScalarExpr(subst_node(node_, subs));
  }

 private:
  explicit ScalarExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static int max_coord(const Node& n) {
    int m = n.kind == Kind::coordinate ? n.coord : -1;
    if (n.a) m = std::max(m, max_coord(*n.a));
    if (n.b) m = std::max(m, max_coord(*n.b));
    return m;
  }

  template <class T>
  static T eval_node(const Node& n, std::span<const T> p) {
    switch (n.kind) {
      case Kind::constant: return T(n.value);
      case Kind::coordinate:
        if (static_cast<std::size_t>(n.coord) >= p.size())
          throw Error(ErrorKind::domain, "coordinate index out of range");
        return p[static_cast<std::size_t>(n.coord)];
      case Kind::sum: return eval_node<T>(*n.a, p) + eval_node<T>(*n.b, p);
      case Kind::product: return eval_node<T>(*n.a, p) * eval_node<T>(*n.b, p);
      case Kind::quotient: return divide(eval_node<T>(*n.a, p), eval_node<T>(*n.b, p));
      case Kind::power: return rational_pow(eval_node<T>(*n.a, p), n.num, n.den);
      case Kind::negate: return -eval_node<T>(*n.a, p);
      case Kind::function: return apply(n.fn, eval_node<T>(*n.a, p));
    }
    return T(0.0);
  }

  static void print_number(double v, std::string& out) {
    if (v == std::trunc(v) && std::abs(v) < 1e15) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.0f", v);
      out += buf;
      return;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
  }

  static void print(const Node& n, std::span<const std::string> names, std::string& out) {
    switch (n.kind) {
      case Kind::constant:
        if (n.value < 0.0 || std::signbit(n.value)) {
          out += "(-";
          print_number(-n.value, out);
          out += ")";
        } else {
          print_number(n.value, out);
        }
        return;
      case Kind::coordinate:
        if (static_cast<std::size_t>(n.coord) < names.size())
          out += names[static_cast<std::size_t>(n.coord)];
        else
          out += "x" + std::to_string(n.coord);
        return;
      case Kind::sum:
        out += "(";
        print(*n.a, names, out);
        if (n.b->kind == Kind::negate) {
          out += " - ";
          print(*n.b->a, names, out);
        } else {
          out += " + ";
          print(*n.b, names, out);
        }
        out += ")";
        return;
      case Kind::product:
      case Kind::quotient:
        out += "(";
        print(*n.a, names, out);
        out += n.kind == Kind::product ? " * " : " / ";
        print(*n.b, names, out);
        out += ")";
        return;
      case Kind::power:
        out += "(";
        print(*n.a, names, out);
        out += ")^";
        if (n.den == 1 && n.num >= 0) {
          out += std::to_string(n.num);
        } else {
          out += "(" + std::to_string(n.num);
          if (n.den != 1) out += "/" + std::to_string(n.den);
          out += ")";
        }
        return;
      case Kind::negate:
        out += "(-";
        print(*n.a, names, out);
        out += ")";
        return;
      case Kind::function:
        out += name_of(n.fn);
        out += "(";
        print(*n.a, names, out);
        out += ")";
        return;
    }
  }

  static std::shared_ptr<const Node> remap_node(const std::shared_ptr<const Node>& n,
                                                std::span<const int> map) {
    if (n->kind == Kind::coordinate) {
      auto c = std::make_shared<Node>(*n);
      if (static_cast<std::size_t>(n->coord) >= map.size())
        throw Error(ErrorKind::domain, "coordinate remap out of range");
      c->coord = map[static_cast<std::size_t>(n->coord)];
      return c;
    }
    if (!n->a) return n;
    auto c = std::make_shared<Node>(*n);
    c->a = remap_node(n->a, map);
    if (n->b) c->b = remap_node(n->b, map);
    return c;
  }

  static std::shared_ptr<const Node> subst_node(const std::shared_ptr<const Node>& n,
                                                std::span<const ScalarExpr> subs) {
    if (n->kind == Kind::coordinate) {
      if (static_cast<std::size_t>(n->coord) >= subs.size())
        throw Error(ErrorKind::domain, "substitution index out of range");
      return subs[static_cast<std::size_t>(n->coord)].node_;
    }
    if (!n->a) return n;
    auto c = std::make_shared<Node>(*n);
    c->a = subst_node(n->a, subs);
    if (n->b) c->b = subst_node(n->b, subs);
    return c;
  }

  std::shared_ptr<const Node> node_;
};

// Builders with light constant folding (0 and 1 only); no general
// simplification is attempted.
inline ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b) {
  if (a.is_constant(0.0)) return b;
  if (b.is_constant(0.0)) return a;
  if (a.is_constant() && b.is_constant())
    return ScalarExpr::constant(a.node().value + b.node().value);
  return ScalarExpr::binary(ScalarExpr::Kind::sum, a, b);
}

inline ScalarExpr operator-(const ScalarExpr& a) {
  if (a.is_constant()) return ScalarExpr::constant(-a.node().value);
  return ScalarExpr::negate(a);
}

inline ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b) { return a + (-b); }

inline ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
  if (a.is_constant(0.0) || b.is_constant(0.0)) return ScalarExpr::constant(0.0);
  if (a.is_constant(1.0)) return b;
  if (b.is_constant(1.0)) return a;
  if (a.is_constant() && b.is_constant())
    return ScalarExpr::constant(a.node().value * b.node().value);
  return ScalarExpr::binary(ScalarExpr::Kind::product, a, b);
}

inline ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b) {
  if (b.is_constant(1.0)) return a;
  if (a.is_constant(0.0) && !b.is_constant(0.0)) return ScalarExpr::constant(0.0);
  return ScalarExpr::binary(ScalarExpr::Kind::quotient, a, b);
}

inline ScalarExpr operator*(double c, const ScalarExpr& e) { return ScalarExpr::constant(c) * e; }
inline ScalarExpr operator+(double c, const ScalarExpr& e) { return ScalarExpr::constant(c) + e; }

inline ScalarExpr pow(const ScalarExpr& e, std::int64_t num, std::int64_t den = 1) {
  if (num == 0) return ScalarExpr::constant(1.0);
  if (num == 1 && den == 1) return e;
  return ScalarExpr::power(e, num, den);
}

inline ScalarExpr call(Fn f, const ScalarExpr& e) { return ScalarExpr::function(f, e); }
inline ScalarExpr coord(int i) { return ScalarExpr::coordinate(i); }
inline ScalarExpr cst(double c) { return ScalarExpr::constant(c); }

/// Value and exact partials d/dx_dir1, d/dx_dir2 and d^2/dx_dir1 dx_dir2 at p.
/// dir1 == dir2 is allowed; d12 is then the pure second partial.
inline HyperDual eval_hyperdual(const ScalarExpr& e, std::span<const double> p, int dir1,
                                int dir2) {
  const auto n = p.size();
  if (dir1 < 0 || dir2 < 0 || static_cast<std::size_t>(dir1) >= n ||
      static_cast<std::size_t>(dir2) >= n)
    throw Error(ErrorKind::domain, "derivative direction out of range");
  std::vector<HyperDual> hp(n);
  for (std::size_t i = 0; i < n; ++i) {
    hp[i] = HyperDual(p[i]);
    if (static_cast<int>(i) == dir1) hp[i].d1 = 1.0;
    if (static_cast<int>(i) == dir2) hp[i].d2 = 1.0;
  }
  return e.eval<HyperDual>(hp);
}

/// Value and first partial along one coordinate direction.
inline Dual<double> eval_dual(const ScalarExpr& e, std::span<const double> p, int dir) {
  std::vector<Dual<double>> dp(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    dp[i] = Dual<double>(p[i], static_cast<int>(i) == dir ? 1.0 : 0.0);
  return e.eval<Dual<double>>(dp);
}

/// Gradient of e at p (all first partials).
inline std::vector<double> gradient(const ScalarExpr& e, std::span<const double> p) {
  std::vector<double> g(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) g[k] = eval_dual(e, p, static_cast<int>(k)).d;
  return g;
}

}  // namespace paraverify
