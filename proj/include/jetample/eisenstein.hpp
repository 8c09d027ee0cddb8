#pragma once

#include <string>

#include "jetample/rational.hpp"

namespace jetample {

// Element a + b*w of the field Q(w), w a primitive cube root of unity,
// so w^2 = -1 - w. Exact field arithmetic; norm(a + b*w) = a^2 - a*b + b^2.
class Eisenstein {
 public:
  Eisenstein() : a_(0), b_(0) {}
  Eisenstein(Rational a) : a_(std::move(a)), b_(0) {}
  Eisenstein(long a) : a_(a), b_(0) {}
  Eisenstein(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Eisenstein omega() { return Eisenstein(0, 1); }

  const Rational& re1() const { return a_; }  // coefficient of 1
  const Rational& rew() const { return b_; }  // coefficient of w

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

  Eisenstein conj() const { return Eisenstein(a_ - b_, -b_); }  // w -> w^2

  friend Eisenstein operator+(const Eisenstein& x, const Eisenstein& y) {
    return Eisenstein(x.a_ + y.a_, x.b_ + y.b_);
  }
  friend Eisenstein operator-(const Eisenstein& x, const Eisenstein& y) {
    return Eisenstein(x.a_ - y.a_, x.b_ - y.b_);
  }
  friend Eisenstein operator-(const Eisenstein& x) { return Eisenstein(-x.a_, -x.b_); }
  // (a+bw)(c+dw) = ac + (ad+bc)w + bd w^2 = (ac-bd) + (ad+bc-bd)w
  friend Eisenstein operator*(const Eisenstein& x, const Eisenstein& y) {
    return Eisenstein(x.a_ * y.a_ - x.b_ * y.b_,
                      x.a_ * y.b_ + x.b_ * y.a_ - x.b_ * y.b_);
  }
  friend Eisenstein operator/(const Eisenstein& x, const Eisenstein& y) {
    require(!y.is_zero(), Errc::Domain, "Eisenstein division by zero");
    Rational n = y.norm();
    Eisenstein t = x * y.conj();
    return Eisenstein(t.a_ / n, t.b_ / n);
  }
  Eisenstein& operator+=(const Eisenstein& y) { return *this = *this + y; }
  Eisenstein& operator-=(const Eisenstein& y) { return *this = *this - y; }
  Eisenstein& operator*=(const Eisenstein& y) { return *this = *this * y; }

  friend bool operator==(const Eisenstein& x, const Eisenstein& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Eisenstein& x, const Eisenstein& y) { return !(x == y); }

  Eisenstein pow(long e) const {
    if (e < 0) return Eisenstein(1) / pow(-e);
    Eisenstein out(1), base = *this;
    unsigned long u = static_cast<unsigned long>(e);
    while (u) {
      if (u & 1ul) out *= base;
      base *= base;
      u >>= 1ul;
    }
    return out;
  }

  // "a+b*w" with zero pieces omitted ("0" when both vanish).
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    if (a_ != 0) out += to_string(a_);
    if (b_ != 0) {
      if (!out.empty() && b_ > 0) out += "+";
      if (b_ == 1) {
        out += "w";
      } else if (b_ == -1) {
        out += "-w";
      } else {
        out += to_string(b_) + "*w";
      }
    }
    return out;
  }

  // Deterministic ordering for canonical forms (not a field order).
  friend bool operator<(const Eisenstein& x, const Eisenstein& y) {
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
  }

 private:
  Rational a_, b_;
};

}  // namespace jetample
