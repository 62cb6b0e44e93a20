// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0

#include "reldb/expr.hpp"

#include <cctype>

namespace hy {

SymId op_marker(DerivOp op) {
  return reg().aux(std::string("@") + op_token(op));
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(std::string_view s, const ExprContext& ctx) : s_(s), ctx_(ctx) {}

  Fraction parse_all() {
    Fraction f = expr();
    skip_ws();
    if (pos_ < s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

  Fraction parse_eq() {
    Fraction l = expr();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '=') {
      ++pos_;
      Fraction r = expr();
      skip_ws();
      if (pos_ < s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
      return l - r;
    }
    if (pos_ < s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return l;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, ctx_.line, ctx_.col + static_cast<int>(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Fraction expr() {
    skip_ws();
    Fraction acc = term();
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Fraction term() {
    Fraction acc = unary();
    for (;;) {
      if (eat('*')) {
        acc = acc * unary();
      } else if (eat('/')) {
        size_t at = pos_;
        Fraction d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  Fraction unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Fraction power() {
    Fraction b = atom();
    if (eat('^')) {
      skip_ws();
      bool neg = eat('-');
      skip_ws();
      size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (st == pos_) fail("expected integer exponent");
      if (pos_ - st > 6) fail("exponent too large");
      long k = std::stol(std::string(s_.substr(st, pos_ - st)));
      if (neg) {
        if (b.is_zero()) fail("division by zero");
        return b.pow(-k);
      }
      return b.pow(k);
    }
    return b;
  }

  std::string ident() {
    skip_ws();
    size_t st = pos_;
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) fail("expected identifier");
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(st, pos_ - st));
  }

  // Atom name: ident | ~ident | OP(atom) | ~OP(atom).
  SymId atom_symbol(size_t depth = 0) {
    if (depth > 8) fail("derivative nesting too deep");
    skip_ws();
    bool bar = false;
    if (pos_ < s_.size() && s_[pos_] == '~') {
      bar = true;
      ++pos_;
    }
    size_t at = pos_;
    std::string id = ident();
    skip_ws();
    SymId s;
    if (pos_ < s_.size() && s_[pos_] == '(') {
      auto op = op_from_token(id);
      if (!op) {
        pos_ = at;
        fail("unknown operator '" + id + "'");
      }
      ++pos_;
      SymId inner = atom_symbol(depth + 1);
      if (!eat(')')) fail("expected ')'");
      s = reg().deriv(*op, inner);
    } else {
      s = resolve(id, at);
    }
    return bar ? reg().conj(s) : s;
  }

  SymId resolve(const std::string& id, size_t at) {
    if (ctx_.declared && !reg().is_np_scalar_name(id) && !ctx_.declared(id)) {
      pos_ = at;
      fail("undeclared symbol '" + id + "'");
    }
    if (ctx_.strict) {
      auto f = reg().find(id);
      if (!f) {
        pos_ = at;
        fail("undeclared symbol '" + id + "'");
      }
      return *f;
    }
    return reg().intern(id);
  }

  Fraction atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Fraction f = expr();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (c == '[') {
      size_t at = ++pos_;
      while (pos_ < s_.size() && s_[pos_] != ']') ++pos_;
      if (pos_ >= s_.size()) fail("expected ']'");
      std::string name(s_.substr(at, pos_ - at));
      ++pos_;
      if (!ctx_.ref) {
        pos_ = at;
        fail("relation references not allowed here");
      }
      auto f = ctx_.ref(name);
      if (!f) {
        pos_ = at;
        fail("unknown relation '" + name + "'");
      }
      return *f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Integer v(std::string(s_.substr(st, pos_ - st)), 10);
      return Fraction(Polynomial(Rational(v)));
    }
    if (c == '~' || ident_start(c)) {
      if (ctx_.op_markers && c != '~') {
        size_t save = pos_;
        std::string id = ident();
        skip_ws();
        auto op = op_from_token(id);
        if (op && (pos_ >= s_.size() || s_[pos_] != '('))
          return Fraction(Polynomial::var(op_marker(*op)));
        pos_ = save;
      }
      return Fraction(Polynomial::var(atom_symbol()));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const ExprContext& ctx_;
  size_t pos_ = 0;
};

}  // namespace

Fraction parse_fraction(std::string_view text, const ExprContext& ctx) {
  try {
    return Parser(text, ctx).parse_all();
  } catch (const AlgebraError& e) {
    throw ParseError(e.what(), ctx.line, ctx.col);
  }
}

Fraction parse_equation(std::string_view text, const ExprContext& ctx) {
  try {
    return Parser(text, ctx).parse_eq();
  } catch (const AlgebraError& e) {
    throw ParseError(e.what(), ctx.line, ctx.col);
  }
}

Polynomial parse_expr(std::string_view text, const ExprContext& ctx) {
  Fraction f = parse_fraction(text, ctx).cancelled();
  if (!f.is_polynomial()) throw ParseError("non-polynomial result", ctx.line, ctx.col);
  return f.num();
}

}  // namespace hy
