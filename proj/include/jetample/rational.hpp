#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "jetample/errors.hpp"

namespace jetample {

// Arbitrary-precision integers and rationals. cpp_rational keeps the
// canonical form we rely on everywhere: reduced, denominator > 0.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline int sgn(const Rational& r) { return r.sign(); }
inline int sgn(const Int& n) { return n.sign(); }

// "p/q" with "/q" omitted for integers; exactly cpp_rational's str().
inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const Int& n) { return n.str(); }

inline Rational parse_rational(const std::string& s) {
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  skip_ws();
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
  skip_ws();
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  require(i > start, Errc::Parse, "expected digits in rational: '" + s + "'");
  Int p(s.substr(start, i - start));
  Int q = 1;
  skip_ws();
  if (i < s.size() && s[i] == '/') {
    ++i;
    skip_ws();
    start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    require(i > start, Errc::Parse, "expected denominator digits in rational: '" + s + "'");
    q = Int(s.substr(start, i - start));
    require(q != 0, Errc::Parse, "zero denominator in '" + s + "'");
  }
  skip_ws();
  require(i == s.size(), Errc::Parse, "trailing characters in rational: '" + s + "'");
  Rational r(p, q);
  return neg ? Rational(-r) : r;
}

inline Int floor_rat(const Rational& r) {
  Int q = num(r) / den(r);
  if (num(r) < 0 && q * den(r) != num(r)) --q;
  return q;
}

inline Int ceil_rat(const Rational& r) { return -floor_rat(-r); }

inline Rational pow_rat(const Rational& base, unsigned e) {
  Rational out = 1;
  Rational b = base;
  while (e) {
    if (e & 1u) out *= b;
    b *= b;
    e >>= 1u;
  }
  return out;
}

// Integer square root (floor). n >= 0.
inline Int isqrt(const Int& n) {
  require(n >= 0, Errc::Domain, "isqrt of negative");
  return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
  if (n < 0) return false;
  Int r = isqrt(n);
  if (r * r == n) {
    if (root) *root = r;
    return true;
  }
  return false;
}

// sqrt(r) as an exact rational if r is a square of one.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  Int np, dp;
  if (is_perfect_square(num(r), &np) && is_perfect_square(den(r), &dp)) return Rational(np, dp);
  return std::nullopt;
}

// Largest s with s^2 | n, so n = s^2 * squarefree. Trial division; inputs at
// this artifact's scale are small. `budget` bounds the divisors tried.
inline bool squarefree_split(const Int& n_in, Int& square_root_part, Int& squarefree,
                             std::uint64_t budget = 1'000'000) {
  require(n_in > 0, Errc::Domain, "squarefree_split needs positive input");
  Int n = n_in;
  Int s = 1;
  Int sf = 1;
  Int d = 2;
  std::uint64_t steps = 0;
  while (d * d <= n) {
    if (++steps > budget) return false;
    if (n % d == 0) {
      unsigned m = 0;
      while (n % d == 0) {
        n /= d;
        ++m;
      }
      for (unsigned j = 0; j + 1 < m; j += 2) s *= d;
      if (m % 2) sf *= d;
    }
    ++d;
  }
  sf *= n;  // leftover prime
  square_root_part = s;
  squarefree = sf;
  return true;
}

}  // namespace jetample
