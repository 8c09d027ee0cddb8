#pragma once

#include <compare>
#include <map>
#include <string>

#include "jetample/rational.hpp"

namespace jetample {

// Exact value of the form q or sqrt(q), q rational >= 0 in the sqrt case.
// Normalized: sqrt of a perfect square collapses to the rational kind, so
// equality of values implies equality of representations.
class RootValue {
 public:
  RootValue() : rat_(0), is_sqrt_(false) {}
  explicit RootValue(Rational q) : rat_(std::move(q)), is_sqrt_(false) {}
  RootValue(long n) : rat_(n), is_sqrt_(false) {}

  static RootValue sqrt_of(const Rational& q) {
    require(q >= 0, Errc::Domain, "sqrt of negative rational");
    if (auto r = rational_sqrt(q)) return RootValue(*r);
    RootValue v;
    v.rat_ = q;
    v.is_sqrt_ = true;
    return v;
  }

  bool is_rational() const { return !is_sqrt_; }
  // The rational value, or the radicand in the sqrt case.
  const Rational& payload() const { return rat_; }

  Rational square() const { return is_sqrt_ ? rat_ : rat_ * rat_; }
  int sign() const { return is_sqrt_ ? (rat_ > 0 ? 1 : 0) : sgn(rat_); }

  // Value scaled by a nonnegative rational.
  RootValue scaled(const Rational& c) const {
    require(c >= 0, Errc::Domain, "RootValue scaling expects c >= 0");
    if (!is_sqrt_) return RootValue(rat_ * c);
    return sqrt_of(rat_ * c * c);
  }

  std::string str() const {
    return is_sqrt_ ? "sqrt(" + to_string(rat_) + ")" : to_string(rat_);
  }

  friend bool operator==(const RootValue& a, const RootValue& b) {
    return a.is_sqrt_ == b.is_sqrt_ && a.rat_ == b.rat_;
  }

  // Total order agreeing with the real values. Sign analysis first, then
  // squares (both sides nonnegative there), never approximation.
  friend std::strong_ordering operator<=>(const RootValue& a, const RootValue& b) {
    if (a == b) return std::strong_ordering::equal;
    int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa < sb ? std::strong_ordering::less : std::strong_ordering::greater;
    if (sa == 0) return std::strong_ordering::equal;  // both zero, caught by == above
    Rational qa = a.square(), qb = b.square();
    std::strong_ordering by_sq = qa < qb   ? std::strong_ordering::less
                                 : qa > qb ? std::strong_ordering::greater
                                           : std::strong_ordering::equal;
    if (by_sq == std::strong_ordering::equal) {
      // Equal squares with equal signs but distinct normal forms cannot
      // happen: one would be sqrt of a perfect square.
      return std::strong_ordering::equal;
    }
    return sa > 0 ? by_sq : (by_sq == std::strong_ordering::less ? std::strong_ordering::greater
                                                                 : std::strong_ordering::less);
  }

  friend bool operator<(const RootValue& a, const RootValue& b) { return (a <=> b) < 0; }
  friend bool operator<=(const RootValue& a, const RootValue& b) { return (a <=> b) <= 0; }
  friend bool operator>(const RootValue& a, const RootValue& b) { return (a <=> b) > 0; }
  friend bool operator>=(const RootValue& a, const RootValue& b) { return (a <=> b) >= 0; }

 private:
  Rational rat_;
  bool is_sqrt_;
};

// Finite sum  c0 + sum_i c_i * sqrt(d_i)  with d_i > 1 squarefree integers.
// Canonical: zero coefficients dropped, so the value is 0 iff no terms.
// That grounds the exact sign test: square roots of distinct squarefree
// integers are linearly independent over the rationals.
class SqrtSum {
 public:
  SqrtSum() = default;

  static SqrtSum of(const Rational& c) {
    SqrtSum s;
    s.add_rational(c);
    return s;
  }

  void add_rational(const Rational& c) { add_term(1, c); }

  // Add c * sqrt(q), q >= 0 rational.
  void add_sqrt_multiple(const Rational& c, const Rational& q) {
    require(q >= 0, Errc::Domain, "sqrt of negative in SqrtSum");
    if (c == 0 || q == 0) return;
    // sqrt(p/r) = sqrt(p*r)/r
    Int rad = num(q) * den(q);
    Int s, sf;
    require(squarefree_split(rad, s, sf), Errc::ExceededCap,
            "radicand too large to factor exactly");
    add_term(sf, c * Rational(s, den(q)));
  }

  // Add c / v for a positive RootValue v.
  void add_reciprocal_multiple(const Rational& c, const RootValue& v) {
    require(v.sign() > 0, Errc::Domain, "division by nonpositive RootValue");
    if (v.is_rational()) {
      add_rational(c / v.payload());
    } else {
      // c / sqrt(q) = (c/q) * sqrt(q)
      add_sqrt_multiple(c / v.payload(), v.payload());
    }
  }

  bool is_zero() const { return terms_.empty(); }

  // Exact sign. Mixed-sign sums are decided by interval refinement; the
  // canonical form guarantees a nonzero value, so refinement terminates.
  int sign() const {
    if (terms_.empty()) return 0;
    bool all_pos = true, all_neg = true;
    for (const auto& [d, c] : terms_) {
      (c > 0 ? all_neg : all_pos) = false;
    }
    if (all_pos) return 1;
    if (all_neg) return -1;
    for (unsigned bits = 16;; bits *= 2) {
      require(bits <= (1u << 20), Errc::ExceededCap, "sqrt-sum sign refinement budget");
      Rational lo = 0, hi = 0;
      Int scale = Int(1) << bits;
      for (const auto& [d, c] : terms_) {
        if (d == 1) {
          lo += c;
          hi += c;
          continue;
        }
        Int root_lo = isqrt(d * scale * scale);  // floor(sqrt(d) * 2^bits)
        Rational rlo(root_lo, scale), rhi(root_lo + 1, scale);
        if (c > 0) {
          lo += c * rlo;
          hi += c * rhi;
        } else {
          lo += c * rhi;
          hi += c * rlo;
        }
      }
      if (lo > 0) return 1;
      if (hi < 0) return -1;
    }
  }

  int compare(const Rational& c) const {
    SqrtSum t = *this;
    t.add_rational(-c);
    return t.sign();
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [d, c] : terms_) {
      std::string piece = d == 1 ? to_string(c) : to_string(c) + "*sqrt(" + to_string(d) + ")";
      if (!first) out += c >= 0 ? " + " : " ";
      out += piece;
      first = false;
    }
    return out;
  }

 private:
  void add_term(const Int& squarefree, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(squarefree);
    if (it == terms_.end()) {
      terms_.emplace(squarefree, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Int, Rational> terms_;  // squarefree radicand (1 = rational part) -> coefficient
};

}  // namespace jetample
