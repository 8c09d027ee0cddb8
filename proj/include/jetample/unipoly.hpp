#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "jetample/errors.hpp"
#include "jetample/poly.hpp"
#include "jetample/rational.hpp"

namespace jetample {

// Dense univariate polynomial over Q, ascending coefficients, no trailing zeros.
using UniPoly = std::vector<Rational>;

inline void uni_trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int uni_degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

inline bool uni_is_zero(const UniPoly& p) { return p.empty(); }

inline UniPoly uni_add(UniPoly a, const UniPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  uni_trim(a);
  return a;
}

inline UniPoly uni_scale(const Rational& c, UniPoly p) {
  if (c == 0) return {};
  for (auto& x : p) x *= c;
  return p;
}

inline UniPoly uni_sub(UniPoly a, const UniPoly& b) { return uni_add(std::move(a), uni_scale(Rational(-1), b)); }

inline UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  uni_trim(out);
  return out;
}

inline Rational uni_eval(const UniPoly& p, const Rational& t) {
  Rational out(0);
  for (std::size_t i = p.size(); i-- > 0;) out = out * t + p[i];
  return out;
}

// Quotient and remainder over the field Q; b must be nonzero.
inline std::pair<UniPoly, UniPoly> uni_divmod(UniPoly a, const UniPoly& b) {
  require(!uni_is_zero(b), Errc::Domain, "univariate division by zero");
  UniPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size()) {
    Rational c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();  // leading term cancels exactly
    uni_trim(a);
    if (a.size() < b.size()) break;
  }
  uni_trim(q);
  return {q, a};
}

inline UniPoly uni_exact_div(UniPoly a, const UniPoly& b) {
  auto [q, r] = uni_divmod(std::move(a), b);
  require(uni_is_zero(r), Errc::Domain, "univariate division is not exact");
  return q;
}

// Monic gcd; gcd(0,0) = 0.
inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
  while (!uni_is_zero(b)) {
    a = uni_divmod(std::move(a), b).second;
    std::swap(a, b);
  }
  if (!a.empty() && a.back() != 1) {
    Rational inv = 1 / a.back();
    for (auto& c : a) c *= inv;
  }
  return a;
}

// Divisors of |n|, positive, unsorted; trial-division budget guards huge inputs.
inline std::vector<Int> divisors_of(Int n, long budget = 2000000) {
  if (n < 0) n = -n;
  require(n != 0, Errc::Domain, "divisors of zero");
  std::vector<std::pair<Int, int>> factors;
  long steps = 0;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    require(++steps < budget, Errc::ExceededCap, "factoring budget exhausted");
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Int> divs{Int(1)};
  for (const auto& [p, e] : factors) {
    std::size_t base = divs.size();
    Int pk(1);
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
    require(divs.size() < 200000, Errc::ExceededCap, "divisor list too large");
  }
  return divs;
}

// Exact division by (t - root); remainder must vanish.
inline UniPoly uni_deflate(const UniPoly& p, const Rational& root) {
  return uni_exact_div(p, UniPoly{-root, Rational(1)});
}

// All rational roots with multiplicities, ascending. If `residual` is given it
// receives p with every rational-root factor removed.
inline std::vector<std::pair<Rational, int>> uni_rational_roots(UniPoly p, UniPoly* residual = nullptr) {
  require(!uni_is_zero(p), Errc::Domain, "roots of the zero polynomial");
  std::vector<std::pair<Rational, int>> roots;
  int zero_mult = 0;
  while (p.size() > 1 && p.front() == 0) {
    p.erase(p.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);
  if (p.size() > 1) {
    // clear denominators: candidates num/den with num | c0, den | lead
    Int lcm(1);
    for (const auto& c : p) lcm = lcm / gcd(lcm, denominator(c)) * denominator(c);
    std::vector<Int> ic(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) ic[i] = numerator(p[i] * Rational(lcm));
    std::vector<Rational> candidates;
    for (const Int& num : divisors_of(ic.front())) {
      for (const Int& den : divisors_of(ic.back())) {
        Rational r(num, den);
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const Rational& t : candidates) {
      int mult = 0;
      while (p.size() > 1 && uni_eval(p, t) == 0) {
        p = uni_deflate(p, t);
        ++mult;
      }
      if (mult > 0) roots.emplace_back(t, mult);
    }
  }
  std::sort(roots.begin(), roots.end());
  if (residual) *residual = std::move(p);
  return roots;
}

// Coefficients in the second variable: entry j is the x-polynomial on y^j.
inline std::vector<UniPoly> coeffs_in_y(const QPoly& p) {
  require(p.nvars() == 2, Errc::DimensionMismatch, "expected a bivariate polynomial");
  std::vector<UniPoly> out(static_cast<std::size_t>(std::max(0, p.degree_in(1)) + 1));
  for (const auto& [e, c] : p.terms()) {
    UniPoly& row = out[static_cast<std::size_t>(e[1])];
    if (row.size() <= static_cast<std::size_t>(e[0])) row.resize(static_cast<std::size_t>(e[0]) + 1, Rational(0));
    row[static_cast<std::size_t>(e[0])] = c;
  }
  for (auto& row : out) uni_trim(row);
  return out;
}

inline QPoly from_coeffs_in_y(const std::vector<UniPoly>& rows) {
  QPoly out(2);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (std::size_t i = 0; i < rows[j].size(); ++i) {
      if (rows[j][i] != 0) out.add_term({static_cast<int>(i), static_cast<int>(j)}, rows[j][i]);
    }
  }
  return out;
}

namespace detail {

inline UniPoly content_in_y(const std::vector<UniPoly>& rows) {
  UniPoly c;
  for (const auto& row : rows) c = uni_gcd(c, row);
  return c;
}

inline std::vector<UniPoly> primitive_in_y(std::vector<UniPoly> rows, const UniPoly& content) {
  for (auto& row : rows) {
    if (!uni_is_zero(row)) row = uni_exact_div(std::move(row), content);
  }
  return rows;
}

inline int degree_y(const std::vector<UniPoly>& rows) {
  for (std::size_t j = rows.size(); j-- > 0;) {
    if (!uni_is_zero(rows[j])) return static_cast<int>(j);
  }
  return -1;
}

// Pseudo-remainder of a by b in (Q[x])[y]; deg_y a >= deg_y b >= 0 required.
inline std::vector<UniPoly> pseudo_rem(std::vector<UniPoly> a, const std::vector<UniPoly>& b) {
  int db = degree_y(b);
  UniPoly lb = b[static_cast<std::size_t>(db)];
  for (int da = degree_y(a); da >= db; da = degree_y(a)) {
    UniPoly la = a[static_cast<std::size_t>(da)];
    std::vector<UniPoly> next(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) next[j] = uni_mul(a[j], lb);
    for (int j = 0; j <= db; ++j) {
      std::size_t k = static_cast<std::size_t>(j + da - db);
      next[k] = uni_sub(std::move(next[k]), uni_mul(la, b[static_cast<std::size_t>(j)]));
    }
    a = std::move(next);
    if (degree_y(a) < 0) break;
  }
  a.resize(static_cast<std::size_t>(std::max(0, degree_y(a)) + 1));
  return a;
}

}  // namespace detail

// Greatest common divisor in Q[x,y], determined up to a rational unit.
// Primitive pseudo-remainder sequence in (Q[x])[y].
inline QPoly bivariate_gcd(const QPoly& F, const QPoly& G) {
  if (F.is_zero()) return G;
  if (G.is_zero()) return F;
  auto a = coeffs_in_y(F);
  auto b = coeffs_in_y(G);
  UniPoly ca = detail::content_in_y(a);
  UniPoly cb = detail::content_in_y(b);
  UniPoly cont = uni_gcd(ca, cb);
  a = detail::primitive_in_y(std::move(a), ca);
  b = detail::primitive_in_y(std::move(b), cb);
  if (detail::degree_y(a) < detail::degree_y(b)) std::swap(a, b);
  while (detail::degree_y(b) > 0) {
    auto r = detail::pseudo_rem(a, b);
    if (detail::degree_y(r) < 0) {
      // b divides a up to content: gcd of primitive parts is pp(b)
      std::vector<UniPoly> out(b.size());
      for (std::size_t j = 0; j < b.size(); ++j) out[j] = uni_mul(b[j], cont);
      return from_coeffs_in_y(out);
    }
    a = std::move(b);
    b = detail::primitive_in_y(r, detail::content_in_y(r));
  }
  // primitive parts are coprime in y; only the x-content survives
  std::vector<UniPoly> out{cont};
  return from_coeffs_in_y(out);
}

}  // namespace jetample
