#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "jetample/eisenstein.hpp"
#include "jetample/rational.hpp"

namespace jetample {

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const Eisenstein& c) { return c.is_zero(); }
inline bool coeff_is_one(const Rational& c) { return c == 1; }
inline bool coeff_is_one(const Eisenstein& c) { return c == Eisenstein(1); }
inline bool coeff_is_minus_one(const Rational& c) { return c == -1; }
inline bool coeff_is_minus_one(const Eisenstein& c) { return c == Eisenstein(-1); }
inline std::string coeff_str(const Rational& c) { return to_string(c); }
inline std::string coeff_str(const Eisenstein& c) {
  return c.is_rational() ? c.str() : "(" + c.str() + ")";
}

// Multivariate polynomial with exponent-vector keys and no stored zeros.
// The variable count is fixed per value; mixed-arity operations are errors.
template <class C>
class SparsePoly {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, C>;

  SparsePoly() : nvars_(0) {}
  explicit SparsePoly(unsigned nvars) : nvars_(nvars) {}

  static SparsePoly constant(unsigned nvars, const C& c) {
    SparsePoly p(nvars);
    if (!coeff_is_zero(c)) p.terms_[Exponents(nvars, 0)] = c;
    return p;
  }
  static SparsePoly variable(unsigned nvars, unsigned i) {
    require(i < nvars, Errc::Domain, "variable index out of range");
    SparsePoly p(nvars);
    Exponents e(nvars, 0);
    e[i] = 1;
    p.terms_[e] = C(1);
    return p;
  }
  static SparsePoly monomial(unsigned nvars, Exponents e, const C& c) {
    require(e.size() == nvars, Errc::DimensionMismatch, "exponent arity");
    SparsePoly p(nvars);
    if (!coeff_is_zero(c)) p.terms_[std::move(e)] = c;
    return p;
  }

  unsigned nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree_of(terms_.begin()->first) == 0);
  }
  C constant_value() const {
    if (terms_.empty()) return C(0);
    require(is_constant(), Errc::Domain, "not a constant polynomial");
    return terms_.begin()->second;
  }

  static int total_degree_of(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
  }

  // Max total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree_of(e));
    return d;
  }
  // Min total degree (the order of vanishing at the origin); -1 for zero.
  int order() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int t = total_degree_of(e);
      if (d < 0 || t < d) d = t;
    }
    return d;
  }

  int degree_in(unsigned var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  void add_term(const Exponents& e, const C& c) {
    require(e.size() == nvars_, Errc::DimensionMismatch, "exponent arity");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!coeff_is_zero(c)) terms_.emplace(e, c);
    } else {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
    require(a.nvars_ == b.nvars_, Errc::DimensionMismatch, "polynomial arity");
    SparsePoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
    require(a.nvars_ == b.nvars_, Errc::DimensionMismatch, "polynomial arity");
    SparsePoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, C(0) - c);
    return out;
  }
  friend SparsePoly operator-(const SparsePoly& a) {
    SparsePoly out(a.nvars_);
    for (const auto& [e, c] : a.terms_) out.terms_[e] = C(0) - c;
    return out;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    require(a.nvars_ == b.nvars_, Errc::DimensionMismatch, "polynomial arity");
    SparsePoly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.nvars_);
        for (unsigned i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  friend SparsePoly operator*(const C& c, const SparsePoly& a) {
    SparsePoly out(a.nvars_);
    for (const auto& [e, cc] : a.terms_) {
      C v = c * cc;
      if (!coeff_is_zero(v)) out.terms_[e] = v;
    }
    return out;
  }

  SparsePoly pow(unsigned k) const {
    SparsePoly out = constant(nvars_, C(1));
    SparsePoly base = *this;
    while (k) {
      if (k & 1u) out = out * base;
      base = base * base;
      k >>= 1u;
    }
    return out;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  C eval(const std::vector<C>& point) const {
    require(point.size() == nvars_, Errc::DimensionMismatch, "evaluation point arity");
    C out(0);
    for (const auto& [e, c] : terms_) {
      C term = c;
      for (unsigned i = 0; i < nvars_; ++i) {
        for (int j = 0; j < e[i]; ++j) term *= point[i];
      }
      out += term;
    }
    return out;
  }

  // Replace variable `var` by `repl` (same arity); other variables untouched.
  SparsePoly substitute(unsigned var, const SparsePoly& repl) const {
    require(var < nvars_, Errc::Domain, "substitute variable index");
    require(repl.nvars_ == nvars_, Errc::DimensionMismatch, "substitute arity");
    SparsePoly out(nvars_);
    std::map<int, SparsePoly> powers;  // cache repl^k
    powers[0] = constant(nvars_, C(1));
    for (const auto& [e, c] : terms_) {
      int k = e[var];
      auto it = powers.find(k);
      if (it == powers.end()) it = powers.emplace(k, repl.pow(static_cast<unsigned>(k))).first;
      Exponents rest = e;
      rest[var] = 0;
      out = out + (SparsePoly::monomial(nvars_, rest, c) * it->second);
    }
    return out;
  }

  // Exact division by var^e; error when some term has a smaller exponent.
  SparsePoly divide_by_var_power(unsigned var, int e) const {
    SparsePoly out(nvars_);
    for (const auto& [ex, c] : terms_) {
      require(ex[var] >= e, Errc::Domain, "not divisible by requested variable power");
      Exponents r = ex;
      r[var] -= e;
      out.terms_[r] = c;
    }
    return out;
  }

  // Terms with exponent 0 in `var` (the restriction var = 0), arity kept.
  SparsePoly restrict_var_zero(unsigned var) const {
    SparsePoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) out.terms_[e] = c;
    }
    return out;
  }

  // Lowest-degree homogeneous part.
  SparsePoly lowest_form() const {
    SparsePoly out(nvars_);
    int o = order();
    for (const auto& [e, c] : terms_) {
      if (total_degree_of(e) == o) out.terms_[e] = c;
    }
    return out;
  }

  // Coefficient list 1, v, v^2, ... when the polynomial only involves `var`.
  std::vector<C> univariate_coeffs(unsigned var) const {
    std::vector<C> out(static_cast<std::size_t>(std::max(0, degree_in(var)) + 1), C(0));
    for (const auto& [e, c] : terms_) {
      for (unsigned i = 0; i < nvars_; ++i) {
        require(i == var || e[i] == 0, Errc::Domain, "polynomial is not univariate");
      }
      out[static_cast<std::size_t>(e[var])] = c;
    }
    if (is_zero()) out.assign(1, C(0));
    return out;
  }

  std::string str(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, C>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
      int da = total_degree_of(a.first), db = total_degree_of(b.first);
      if (da != db) return da < db;
      return a.first < b.first;
    });
    std::string out;
    for (const auto& [e, c] : ordered) {
      std::string mono;
      for (unsigned i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += i < names.size() ? names[i] : "x" + std::to_string(i);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      std::string cs = coeff_str(c);
      std::string piece;
      if (mono.empty()) {
        piece = cs;
      } else if (coeff_is_one(c)) {
        piece = mono;
      } else if (coeff_is_minus_one(c)) {
        piece = "-" + mono;
      } else {
        piece = cs + "*" + mono;
      }
      if (out.empty()) {
        out = piece;
      } else if (!piece.empty() && piece[0] == '-') {
        out += " - " + piece.substr(1);
      } else {
        out += " + " + piece;
      }
    }
    return out;
  }

 private:
  unsigned nvars_;
  Terms terms_;
};

using QPoly = SparsePoly<Rational>;
using EPoly = SparsePoly<Eisenstein>;

}  // namespace jetample
