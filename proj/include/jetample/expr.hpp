#pragma once

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jetample/poly.hpp"

namespace jetample {

// Recursive-descent parser for polynomial expressions over a coefficient
// field C. Grammar (documented in docs/formats.md):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/')? factor)*        juxtaposition multiplies
//   factor := ('-'|'+')* atom ('^' nat)*
//   atom   := nat | name | '(' expr ')'
// Names resolve to variables first, then through `constants`. Division is
// exact and only by constant subexpressions.
template <class C>
class ExprParser {
 public:
  using ConstantResolver = std::function<std::optional<C>(const std::string&)>;

  ExprParser(std::vector<std::string> var_names, ConstantResolver constants = nullptr)
      : vars_(std::move(var_names)), constants_(std::move(constants)) {}

  // Additional spelling for an existing variable (e.g. x0 for x).
  void add_alias(const std::string& alias, unsigned var_index) {
    require(var_index < vars_.size(), Errc::Domain, "alias variable index");
    aliases_.emplace_back(alias, var_index);
  }

  SparsePoly<C> parse(const std::string& text) const {
    Cursor cur{text, 0};
    SparsePoly<C> p = parse_expr(cur);
    skip_ws(cur);
    require(cur.pos == cur.text.size(), Errc::Parse,
            "unexpected trailing input at offset " + std::to_string(cur.pos) + " in '" + text + "'");
    return p;
  }

 private:
  struct Cursor {
    const std::string& text;
    std::size_t pos;
  };

  unsigned nvars() const { return static_cast<unsigned>(vars_.size()); }

  static void skip_ws(Cursor& c) {
    while (c.pos < c.text.size() && std::isspace(static_cast<unsigned char>(c.text[c.pos]))) ++c.pos;
  }
  static bool peek(Cursor& c, char ch) {
    skip_ws(c);
    return c.pos < c.text.size() && c.text[c.pos] == ch;
  }
  static bool eat(Cursor& c, char ch) {
    if (peek(c, ch)) {
      ++c.pos;
      return true;
    }
    return false;
  }

  SparsePoly<C> parse_expr(Cursor& c) const {
    SparsePoly<C> acc = parse_term(c);
    for (;;) {
      if (eat(c, '+')) {
        acc = acc + parse_term(c);
      } else if (eat(c, '-')) {
        acc = acc - parse_term(c);
      } else {
        return acc;
      }
    }
  }

  bool at_atom_start(Cursor& c) const {
    skip_ws(c);
    if (c.pos >= c.text.size()) return false;
    char ch = c.text[c.pos];
    return std::isdigit(static_cast<unsigned char>(ch)) ||
           std::isalpha(static_cast<unsigned char>(ch)) || ch == '_' || ch == '(';
  }

  SparsePoly<C> parse_term(Cursor& c) const {
    SparsePoly<C> acc = parse_factor(c);
    for (;;) {
      if (eat(c, '*')) {
        acc = acc * parse_factor(c);
      } else if (eat(c, '/')) {
        SparsePoly<C> d = parse_factor(c);
        require(d.is_constant(), Errc::Parse, "division only by constants");
        C dc = d.constant_value();
        require(!coeff_is_zero(dc), Errc::Parse, "division by zero");
        acc = (C(1) / dc) * acc;
      } else if (at_atom_start(c)) {
        acc = acc * parse_factor(c);  // juxtaposition
      } else {
        return acc;
      }
    }
  }

  SparsePoly<C> parse_factor(Cursor& c) const {
    bool neg = false;
    for (;;) {
      if (eat(c, '-')) {
        neg = !neg;
      } else if (eat(c, '+')) {
      } else {
        break;
      }
    }
    SparsePoly<C> base = parse_atom(c);
    while (eat(c, '^')) {
      skip_ws(c);
      std::size_t start = c.pos;
      while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) ++c.pos;
      require(c.pos > start, Errc::Parse, "exponent must be a nonnegative integer");
      unsigned long e = std::stoul(c.text.substr(start, c.pos - start));
      require(e <= 512, Errc::Parse, "exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return neg ? -base : base;
  }

  SparsePoly<C> parse_atom(Cursor& c) const {
    skip_ws(c);
    require(c.pos < c.text.size(), Errc::Parse, "unexpected end of expression");
    char ch = c.text[c.pos];
    if (ch == '(') {
      ++c.pos;
      SparsePoly<C> inner = parse_expr(c);
      require(eat(c, ')'), Errc::Parse, "missing ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = c.pos;
      while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) ++c.pos;
      Int n(c.text.substr(start, c.pos - start));
      return SparsePoly<C>::constant(nvars(), C(Rational(n)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = c.pos;
      while (c.pos < c.text.size() &&
             (std::isalnum(static_cast<unsigned char>(c.text[c.pos])) || c.text[c.pos] == '_' ||
              c.text[c.pos] == '\'')) {
        ++c.pos;
      }
      std::string name = c.text.substr(start, c.pos - start);
      for (unsigned i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return SparsePoly<C>::variable(nvars(), i);
      }
      for (const auto& [alias, idx] : aliases_) {
        if (alias == name) return SparsePoly<C>::variable(nvars(), idx);
      }
      if (constants_) {
        if (auto v = constants_(name)) return SparsePoly<C>::constant(nvars(), *v);
      }
      fail(Errc::Parse, "unknown name '" + name + "'");
    }
    fail(Errc::Parse, std::string("unexpected character '") + ch + "'");
  }

  std::vector<std::string> vars_;
  std::vector<std::pair<std::string, unsigned>> aliases_;
  ConstantResolver constants_;
};

// Germ polynomials are over Q in variables x, y (aliases x0, x1, z1, z2).
inline QPoly parse_germ_poly(const std::string& text) {
  ExprParser<Rational> p({"x", "y"});
  p.add_alias("x0", 0);
  p.add_alias("x1", 1);
  p.add_alias("z1", 0);
  p.add_alias("z2", 1);
  return p.parse(text);
}

inline Eisenstein parse_eisenstein(const std::string& text) {
  ExprParser<Eisenstein> p({}, [](const std::string& n) -> std::optional<Eisenstein> {
    if (n == "w") return Eisenstein::omega();
    return std::nullopt;
  });
  SparsePoly<Eisenstein> poly = p.parse(text);
  require(poly.is_constant(), Errc::Parse, "expected a scalar expression");
  return poly.constant_value();
}

}  // namespace jetample
