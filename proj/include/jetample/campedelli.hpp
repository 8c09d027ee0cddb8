#pragma once

#include <array>
#include <cctype>
#include <string>
#include <vector>

#include "jetample/eisenstein.hpp"
#include "jetample/expr.hpp"

namespace jetample {

// ---------------------------------------------------------------------------
// Points of P^2 x P^2 over Q(w) and the Z3+Z3 action
// ---------------------------------------------------------------------------

// Coordinates are projective on each factor independently: equality holds up
// to a nonzero scalar per factor.
struct BiPoint {
  std::array<Eisenstein, 3> x;
  std::array<Eisenstein, 3> y;
};

inline void validate_bipoint(const BiPoint& p) {
  bool xz = p.x[0].is_zero() && p.x[1].is_zero() && p.x[2].is_zero();
  bool yz = p.y[0].is_zero() && p.y[1].is_zero() && p.y[2].is_zero();
  require(!xz && !yz, Errc::Domain, "each projective factor needs a nonzero coordinate");
}

inline std::string to_string(const BiPoint& p) {
  auto factor = [](const std::array<Eisenstein, 3>& v) {
    return "[" + v[0].str() + "," + v[1].str() + "," + v[2].str() + "]";
  };
  return "(" + factor(p.x) + "," + factor(p.y) + ")";
}

// Literal syntax "([e,e,e],[e,e,e])" with Eisenstein coordinate expressions.
inline BiPoint parse_bipoint(const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    require(pos < text.size() && text[pos] == c, Errc::Parse,
            std::string("expected '") + c + "' in bi-point literal");
    ++pos;
  };
  auto factor = [&] {
    expect('[');
    std::array<Eisenstein, 3> out;
    for (int i = 0; i < 3; ++i) {
      skip();
      std::size_t start = pos;
      int depth = 0;
      while (pos < text.size()) {
        char c = text[pos];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == ',' || c == ']')) break;
        ++pos;
      }
      out[i] = parse_eisenstein(text.substr(start, pos - start));
      expect(i == 2 ? ']' : ',');
    }
    return out;
  };
  BiPoint p;
  expect('(');
  p.x = factor();
  expect(',');
  p.y = factor();
  expect(')');
  skip();
  require(pos == text.size(), Errc::Parse, "trailing input after bi-point literal");
  validate_bipoint(p);
  return p;
}

// (s, t): s applications of the coordinate shift, then t of the diagonal
// scaling. The generators commute up to per-factor scalars, so these 9
// elements are the whole group projectively.
struct GroupElement {
  long s = 0;
  long t = 0;
};

inline GroupElement compose(const GroupElement& g, const GroupElement& h) {
  return {(g.s + h.s) % 3, (g.t + h.t) % 3};
}

inline std::array<GroupElement, 9> group_elements() {
  std::array<GroupElement, 9> out;
  for (long s = 0; s < 3; ++s) {
    for (long t = 0; t < 3; ++t) out[3 * s + t] = {s, t};
  }
  return out;
}

inline BiPoint act(const GroupElement& g, BiPoint p) {
  long s = ((g.s % 3) + 3) % 3;
  long t = ((g.t % 3) + 3) % 3;
  for (long r = 0; r < s; ++r) {
    p.x = {p.x[1], p.x[2], p.x[0]};
    p.y = {p.y[1], p.y[2], p.y[0]};
  }
  const Eisenstein w = Eisenstein::omega();
  for (long r = 0; r < t; ++r) {
    // x twists by (1, w, w^2), y by the conjugate weights (1, w^2, w)
    p.x = {p.x[0], w * p.x[1], w.pow(2) * p.x[2]};
    p.y = {p.y[0], w.pow(2) * p.y[1], w * p.y[2]};
  }
  return p;
}

// Proportionality of nonzero coordinate triples: all 2x2 minors vanish.
inline bool factor_proportional(const std::array<Eisenstein, 3>& a,
                                const std::array<Eisenstein, 3>& b) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
    }
  }
  return true;
}

inline bool projectively_equal(const BiPoint& p, const BiPoint& q) {
  validate_bipoint(p);
  validate_bipoint(q);
  return factor_proportional(p.x, q.x) && factor_proportional(p.y, q.y);
}

inline bool same_orbit(const BiPoint& p, const BiPoint& q) {
  for (const GroupElement& g : group_elements()) {
    if (projectively_equal(act(g, p), q)) return true;
  }
  return false;
}

// Distinct images of p under the 9 group elements, up to projective equality.
inline std::vector<BiPoint> orbit(const BiPoint& p) {
  std::vector<BiPoint> out;
  for (const GroupElement& g : group_elements()) {
    BiPoint image = act(g, p);
    bool seen = false;
    for (const BiPoint& q : out) seen = seen || projectively_equal(image, q);
    if (!seen) out.push_back(image);
  }
  return out;
}

// ---------------------------------------------------------------------------
// The defining equations
// ---------------------------------------------------------------------------

// The three lambda-separated pieces of the complete-intersection membership
// test: the diagonal bilinear form, and the two factors of the cubic
// equation. When cubic_term and product_term vanish together, the point lies
// on the intersection for EVERY lambda.
struct IntersectionSplit {
  bool diagonal = false;      // sum x_i y_i = 0
  bool cubic_term = false;    // (sum x_i^3)(sum y_i^3) = 0
  bool product_term = false;  // prod x_i y_i = 0
  bool for_all_lambda() const { return diagonal && cubic_term && product_term; }
};

inline IntersectionSplit intersection_split(const BiPoint& p) {
  validate_bipoint(p);
  Eisenstein diag, cx, cy, prod(1);
  for (int i = 0; i < 3; ++i) {
    diag += p.x[i] * p.y[i];
    cx += p.x[i].pow(3);
    cy += p.y[i].pow(3);
    prod *= p.x[i] * p.y[i];
  }
  return {diag.is_zero(), (cx * cy).is_zero(), prod.is_zero()};
}

// Membership in the bi-degree complete intersection for one exact lambda.
inline bool on_complete_intersection(const BiPoint& p, const Eisenstein& lambda) {
  validate_bipoint(p);
  Eisenstein diag, cx, cy, prod(1);
  for (int i = 0; i < 3; ++i) {
    diag += p.x[i] * p.y[i];
    cx += p.x[i].pow(3);
    cy += p.y[i].pow(3);
    prod *= p.x[i] * p.y[i];
  }
  return diag.is_zero() && (cx * cy - lambda * prod).is_zero();
}

// The conjugate pair of twisted bilinear equations cutting out the points
// whose degree-2 cluster the tri-canonical system contracts:
//   sum w^{ai} x_i y_{i+b} = 0   and   sum w^{-ai} x_i y_{i-b} = 0,
// indices cyclic mod 3.
inline bool on_twisted_pair(const BiPoint& p, long a, long b) {
  validate_bipoint(p);
  const Eisenstein w = Eisenstein::omega();
  auto wpow = [&](long e) { return w.pow(((e % 3) + 3) % 3); };
  auto idx = [](long i) { return static_cast<std::size_t>(((i % 3) + 3) % 3); };
  Eisenstein plus, minus;
  for (long i = 0; i < 3; ++i) {
    plus += wpow(a * i) * p.x[static_cast<std::size_t>(i)] * p.y[idx(i + b)];
    minus += wpow(-a * i) * p.x[static_cast<std::size_t>(i)] * p.y[idx(i - b)];
  }
  return plus.is_zero() && minus.is_zero();
}

// ---------------------------------------------------------------------------
// The four contracted clusters and their verification
// ---------------------------------------------------------------------------

struct CampedelliSolution {
  long a, b;
  BiPoint first, second;
};

// The four twist classes (a,b) with, for each, two solution points of the
// intersection-plus-twisted-pair system lying in different orbits.
inline std::array<CampedelliSolution, 4> campedelli_solutions() {
  const Eisenstein one(1), zero(0);
  const Eisenstein w = Eisenstein::omega();
  const Eisenstein w2 = w.pow(2);
  return {{
      {1, 0, {{zero, zero, one}, {one, -one, zero}}, {{one, -one, zero}, {zero, zero, one}}},
      {0, 1, {{zero, one, -one}, {one, one, one}}, {{one, one, one}, {zero, one, -one}}},
      {1, 1, {{zero, one, -w2}, {one, w2, one}}, {{one, w, one}, {zero, one, -w}}},
      {1, 2, {{one, w2, one}, {zero, one, -w2}}, {{zero, one, -w}, {one, w, one}}},
  }};
}

struct CampedelliPointCheck {
  std::string point;  // rendered coordinates
  IntersectionSplit split;
  bool twisted_pair = false;
  bool ok() const { return split.for_all_lambda() && twisted_pair; }
};

struct CampedelliCaseResult {
  long a = 0, b = 0;
  CampedelliPointCheck first, second;
  bool distinct_orbits = false;
  bool ok() const { return first.ok() && second.ok() && distinct_orbits; }
};

struct CampedelliReport {
  std::vector<CampedelliCaseResult> cases;
  bool all_ok = false;
  std::string conclusion;
};

// For each of the four twist classes: both listed points solve the
// intersection equations for every lambda (checked term by term) and the
// twisted pair, and the two points lie in distinct orbits. A green report
// certifies that on the quotient Campedelli surface each cluster contracted
// by the tri-canonical system splits into two points, i.e. the tri-canonical
// class is 1-jet spanned but not 1-jet ample.
inline CampedelliReport campedelli_verify() {
  CampedelliReport rep;
  rep.all_ok = true;
  for (const CampedelliSolution& sol : campedelli_solutions()) {
    CampedelliCaseResult cr;
    cr.a = sol.a;
    cr.b = sol.b;
    auto check = [&](const BiPoint& p) {
      CampedelliPointCheck pc;
      pc.point = to_string(p);
      pc.split = intersection_split(p);
      pc.twisted_pair = on_twisted_pair(p, sol.a, sol.b);
      return pc;
    };
    cr.first = check(sol.first);
    cr.second = check(sol.second);
    cr.distinct_orbits = !same_orbit(sol.first, sol.second);
    rep.all_ok = rep.all_ok && cr.ok();
    rep.cases.push_back(cr);
  }
  rep.conclusion =
      rep.all_ok
          ? "every contracted degree-2 cluster splits into two points in distinct orbits, for "
            "every lambda: the tri-canonical class is 1-jet spanned but not 1-jet ample"
          : "verification failed; see the per-case records";
  return rep;
}

}  // namespace jetample
