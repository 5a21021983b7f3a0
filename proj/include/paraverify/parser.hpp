#pragma once

// Recursive-descent parser for the coordinate-expression grammar:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | base ('^' exponent)?
//   base   := number | ident | func '(' expr ')' | '(' expr ')'
//   exponent := ['-'] integer | '(' ['-'] integer ['/' integer] ')'
//
// Identifiers resolve to coordinate names; `pi` is the only named constant.

#include <cctype>
#include <cstdlib>
#include <numbers>
#include <span>
#include <string>
#include <string_view>

#include "paraverify/error.hpp"
#include "paraverify/expr.hpp"

namespace paraverify {

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, std::span<const std::string> names)
      : text_(text), names_(names) {}

  ScalarExpr parse() {
    ScalarExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::parse, msg + " at column " + std::to_string(pos_ + 1) + " in \"" +
                                      std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  ScalarExpr expr() {
    ScalarExpr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = ScalarExpr::binary(ScalarExpr::Kind::sum, lhs, term());
      } else if (accept('-')) {
        lhs = ScalarExpr::binary(ScalarExpr::Kind::sum, lhs, ScalarExpr::negate(term()));
      } else {
        return lhs;
      }
    }
  }

  ScalarExpr term() {
    ScalarExpr lhs = factor();
    for (;;) {
      if (accept('*')) {
        lhs = ScalarExpr::binary(ScalarExpr::Kind::product, lhs, factor());
      } else if (accept('/')) {
        lhs = ScalarExpr::binary(ScalarExpr::Kind::quotient, lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  ScalarExpr factor() {
    if (accept('-')) return ScalarExpr::negate(factor());
    ScalarExpr b = base();
    if (accept('^')) {
      auto [num, den] = exponent();
      return ScalarExpr::power(b, num, den);
    }
    return b;
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    return std::strtoll(std::string(text_.substr(start, pos_ - start)).c_str(), nullptr, 10);
  }

  std::pair<std::int64_t, std::int64_t> exponent() {
    if (accept('(')) {
      const bool neg = accept('-');
      std::int64_t num = integer();
      std::int64_t den = 1;
      if (accept('/')) den = integer();
      if (den == 0) fail("zero denominator in exponent");
      expect(')');
      return {neg ? -num : num, den};
    }
    const bool neg = accept('-');
    const std::int64_t num = integer();
    return {neg ? -num : num, 1};
  }

  ScalarExpr number() {
    char* end = nullptr;
    const std::string buf(text_.substr(pos_));
    const double v = std::strtod(buf.c_str(), &end);
    const auto used = static_cast<std::size_t>(end - buf.c_str());
    if (used == 0) fail("malformed number");
    pos_ += used;
    return ScalarExpr::constant(v);
  }

  ScalarExpr base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (accept('(')) {
      ScalarExpr e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view id = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == id) return ScalarExpr::coordinate(static_cast<int>(i));
      for (Fn f : all_functions) {
        if (name_of(f) == id) {
          expect('(');
          ScalarExpr arg = expr();
          expect(')');
          return ScalarExpr::function(f, arg);
        }
      }
      if (id == "pi") return ScalarExpr::constant(std::numbers::pi);
      pos_ = start;
      fail("unknown identifier '" + std::string(id) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ScalarExpr parse_expression(std::string_view text, std::span<const std::string> names) {
  return detail::ExprParser(text, names).parse();
}

}  // namespace paraverify
