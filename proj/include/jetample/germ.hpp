#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "jetample/errors.hpp"
#include "jetample/expr.hpp"
#include "jetample/poly.hpp"
#include "jetample/rational.hpp"
#include "jetample/unipoly.hpp"

namespace jetample {

// Plane curve germ at the origin: nonzero bivariate polynomial over Q with no
// constant term. order() >= 1 is the multiplicity at the origin.
struct CurveGerm {
  QPoly poly;

  explicit CurveGerm(QPoly p) : poly(std::move(p)) {
    require(poly.nvars() == 2, Errc::DimensionMismatch, "germ must be bivariate");
    require(!poly.is_zero(), Errc::Domain, "germ polynomial is zero");
    require(poly.order() >= 1, Errc::Domain, "germ does not vanish at the origin");
  }

  int order() const { return poly.order(); }
  int degree() const { return poly.degree(); }
  std::string str() const { return poly.str({"x", "y"}); }
};

inline CurveGerm parse_germ(const std::string& text) { return CurveGerm(parse_germ_poly(text)); }

// Two-generator ideal in Q[[x,y]]. Finite colength (no common factor through
// the origin) is not checked here; colength() is the checker.
struct GermIdeal {
  CurveGerm f, g;
  GermIdeal(CurveGerm f_, CurveGerm g_) : f(std::move(f_)), g(std::move(g_)) {}
  GermIdeal(const std::string& f_, const std::string& g_) : f(parse_germ(f_)), g(parse_germ(g_)) {}
};

using ClusterDegree = Int;

namespace detail {

// (total degree, a, b): map order is graded lex, begin() = lowest monomial.
using Mono = std::array<int, 3>;
using TruncRow = std::map<Mono, Rational>;

inline Mono mono(int a, int b) { return {a + b, a, b}; }

inline long monomials_below(int w) {
  // |{ (a,b) : a+b < w }|
  return w <= 0 ? 0 : static_cast<long>(w) * (w + 1) / 2;
}

// Deterministic across toolchains, unlike uniform_int_distribution.
inline long rng_pick(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace detail

// Row-echelon span of { monomial * f, monomial * g } inside Q[x,y]/m^trunc,
// rows keyed by their lowest monomial. The row space is exactly the image of
// the ideal (f,g) in the truncated ring.
class Staircase {
 public:
  Staircase(const QPoly& f, const QPoly& g, int trunc) : trunc_(trunc) {
    feed(f);
    feed(g);
  }

  int truncation() const { return trunc_; }

  long pivots_below(int w) const {
    long n = 0;
    for (const auto& [pivot, row] : rows_) {
      if (pivot[0] >= w) break;
      ++n;
    }
    return n;
  }

  // Codimension of the row space among monomials of total degree < w.
  Int codim_below(int w) const { return Int(detail::monomials_below(w) - pivots_below(w)); }

  // Fully reduce p's truncation; true iff the remainder has no term of total
  // degree < w.
  bool reduces_to_zero_below(const QPoly& p, int w) const {
    detail::TruncRow r = truncate(p);
    reduce(r);
    return r.empty() || r.begin()->first[0] >= w;
  }

 private:
  int trunc_;
  std::map<detail::Mono, detail::TruncRow> rows_;

  detail::TruncRow truncate(const QPoly& p) const {
    detail::TruncRow r;
    for (const auto& [e, c] : p.terms()) {
      if (e[0] + e[1] < trunc_) r[detail::mono(e[0], e[1])] = c;
    }
    return r;
  }

  // r -= c * row.  c by value: the caller's coefficient lives in r and the
  // cancellation of the pivot term erases it mid-loop.
  static void axpy(detail::TruncRow& r, Rational c, const detail::TruncRow& row) {
    for (const auto& [m, v] : row) {
      auto it = r.find(m);
      if (it == r.end()) {
        r.emplace(m, -c * v);
      } else {
        it->second -= c * v;
        if (it->second == 0) r.erase(it);
      }
    }
  }

  void reduce(detail::TruncRow& r) const {
    while (!r.empty()) {
      auto it = rows_.find(r.begin()->first);
      if (it == rows_.end()) return;
      axpy(r, r.begin()->second, it->second);
    }
  }

  void insert(detail::TruncRow r) {
    reduce(r);
    if (r.empty()) return;
    Rational inv = 1 / r.begin()->second;
    for (auto& [m, v] : r) v *= inv;
    detail::Mono pivot = r.begin()->first;
    rows_.emplace(pivot, std::move(r));
  }

  void feed(const QPoly& h) {
    int limit = trunc_ - 1 - h.order();
    QPoly x = QPoly::variable(2, 0), y = QPoly::variable(2, 1);
    for (int a = 0; a <= limit; ++a) {
      QPoly xa = x.pow(static_cast<unsigned>(a));
      for (int b = 0; a + b <= limit; ++b) {
        insert(truncate(xa * y.pow(static_cast<unsigned>(b)) * h));
      }
    }
  }
};

struct StableBasis {
  Staircase stairs;   // at the larger truncation of the agreeing pair
  int proven_window;  // m^proven_window lies inside the ideal
  Int colength;
};

// Truncate at N = deg f + deg g + 2, doubling N until the codimensions in the
// safe windows (degrees < N - max deg) of two consecutive rounds agree. The
// windowed codimension at truncation N equals dim Q[[x,y]]/((f,g) + m^W) with
// W = N - max deg exactly, so agreement at W1 < W2 forces the chain to be
// stationary at W1, and m^W1 then lies inside the ideal (Nakayama).
inline StableBasis stabilize(const GermIdeal& I, int cap = 64) {
  const QPoly& f = I.f.poly;
  const QPoly& g = I.g.poly;
  int maxdeg = std::max(f.degree(), g.degree());
  int n = f.degree() + g.degree() + 2;
  require(n <= cap, Errc::ExceededCap, "initial truncation exceeds the cap");
  std::optional<Staircase> prev(std::in_place, f, g, n);
  Int prev_codim = prev->codim_below(n - maxdeg);
  while (2 * n <= cap) {
    int n2 = 2 * n;
    Staircase next(f, g, n2);
    Int codim = next.codim_below(n2 - maxdeg);
    if (codim == prev_codim) return {std::move(next), n - maxdeg, codim};
    prev.emplace(std::move(next));
    prev_codim = codim;
    n = n2;
  }
  QPoly h = bivariate_gcd(f, g);
  if (h.eval({Rational(0), Rational(0)}) == 0) {
    fail(Errc::InfiniteColength,
         "generators share the factor " + h.str({"x", "y"}) + " through the origin");
  }
  fail(Errc::ExceededCap, "truncation cap exceeded without stabilization");
}

// dim over Q of Q[[x,y]]/(f,g).
inline ClusterDegree colength(const GermIdeal& I, int cap = 64) { return stabilize(I, cap).colength; }

namespace detail {

// One staircase at truncation n+2 settles both questions: the windowed
// codimensions there equal dim Q[[x,y]]/((f,g)+m^w) for w <= n+2, and
// agreement at (n+1, n+2) forces m^{n+1} inside the ideal (Nakayama), making
// the smaller codimension the full colength. Disagreement refutes containment
// outright, so no truncation growth is ever needed.
inline std::optional<Int> colength_if_contains(const QPoly& f, const QPoly& g, long n) {
  Staircase s(f, g, static_cast<int>(n) + 2);
  Int c1 = s.codim_below(static_cast<int>(n) + 1);
  Int c2 = s.codim_below(static_cast<int>(n) + 2);
  if (c1 != c2) return std::nullopt;
  return c1;
}

}  // namespace detail

// True iff m^{n+1} (every monomial of total degree n+1) lies in the ideal.
inline bool contains_power(const GermIdeal& I, long n, int cap = 64) {
  require(n >= 0, Errc::Domain, "power index must be nonnegative");
  StableBasis sb = stabilize(I, cap);
  if (n + 1 >= sb.proven_window) return true;
  for (long a = 0; a <= n + 1; ++a) {
    QPoly m = QPoly::monomial(2, {static_cast<int>(a), static_cast<int>(n + 1 - a)}, Rational(1));
    if (!sb.stairs.reduces_to_zero_below(m, sb.proven_window)) return false;
  }
  return true;
}

// One infinitely near point where both transforms pass: label is "origin",
// "t=<root>" (intersection with the exceptional line at a finite direction),
// or "vertical".
struct BlowupNode {
  std::string label;
  Int e1, e2;
  std::vector<BlowupNode> children;
};

struct NoetherOutcome {
  ClusterDegree degree;  // sum of e1*e2 over the tree
  Int multiplicity_sum;  // sum of e1+e2 over the tree
  Int node_count;
  BlowupNode tree;
};

namespace detail {

struct NoetherAccum {
  Int degree = 0, msum = 0, nodes = 0;
  int depth_cap;
};

inline BlowupNode blow_up(const QPoly& f, const QPoly& g, std::string label, int depth, NoetherAccum& acc) {
  require(depth < acc.depth_cap, Errc::DepthExceeded, "blow-up depth cap exceeded");
  int e1 = f.order(), e2 = g.order();
  acc.degree += Int(e1) * e2;
  acc.msum += Int(e1) + e2;
  acc.nodes += 1;
  BlowupNode node{std::move(label), Int(e1), Int(e2), {}};

  QPoly x = QPoly::variable(2, 0), y = QPoly::variable(2, 1);
  // chart covering directions y = t*x: substitute (x, xy), divide by x^e
  QPoly f1 = f.substitute(1, x * y).divide_by_var_power(0, e1);
  QPoly g1 = g.substitute(1, x * y).divide_by_var_power(0, e2);
  UniPoly p = f1.restrict_var_zero(0).univariate_coeffs(1);
  UniPoly q = g1.restrict_var_zero(0).univariate_coeffs(1);
  uni_trim(p);
  uni_trim(q);
  UniPoly h = uni_gcd(std::move(p), std::move(q));
  if (uni_degree(h) >= 1) {
    UniPoly residual;
    auto roots = uni_rational_roots(h, &residual);
    if (uni_degree(residual) >= 1) {
      fail(Errc::NonRationalCenter,
           "strict transforms meet at irrational directions (factor in t: " +
               from_coeffs_in_y({residual}).str({"t", ""}) + ")");
    }
    for (const auto& [t, mult] : roots) {
      QPoly shift = y + QPoly::constant(2, t);
      node.children.push_back(
          blow_up(f1.substitute(1, shift), g1.substitute(1, shift), "t=" + to_string(t), depth + 1, acc));
    }
  }
  // chart covering the vertical direction: substitute (xy, y), divide by y^e
  QPoly f2 = f.substitute(0, x * y).divide_by_var_power(1, e1);
  QPoly g2 = g.substitute(0, x * y).divide_by_var_power(1, e2);
  if (f2.eval({Rational(0), Rational(0)}) == 0 && g2.eval({Rational(0), Rational(0)}) == 0) {
    node.children.push_back(blow_up(f2, g2, "vertical", depth + 1, acc));
  }
  return node;
}

}  // namespace detail

// Local intersection number as the sum of e1*e2 over all infinitely near
// points where both strict transforms pass, by iterated blow-up.
inline NoetherOutcome noether_degree(const GermIdeal& I, int depth_cap = 32) {
  QPoly h = bivariate_gcd(I.f.poly, I.g.poly);
  if (h.eval({Rational(0), Rational(0)}) == 0) {
    fail(Errc::InfiniteColength,
         "generators share the factor " + h.str({"x", "y"}) + " through the origin");
  }
  detail::NoetherAccum acc;
  acc.depth_cap = depth_cap;
  BlowupNode tree = detail::blow_up(I.f.poly, I.g.poly, "origin", 0, acc);
  // sum(e1*e2) <= sum(e1)*sum(e2) <= (sum(e1+e2)/2)^2
  require(4 * acc.degree <= acc.msum * acc.msum, Errc::Domain, "blow-up tree bookkeeping failed");
  return {acc.degree, acc.msum, acc.nodes, std::move(tree)};
}

// Largest colength of a complete-intersection cluster whose ideal contains
// m^{n+1}: floor((n+2)^2 / 4).
inline Int l_n(long n) {
  require(n >= 0, Errc::Domain, "l_n index must be nonnegative");
  return Int(n + 2) * (n + 2) / 4;
}

// The extremal monomial ideal: (x^{k+1}, y^{k+1}) for n = 2k, (x^k, y^{k+1})
// for n = 2k-1.
inline GermIdeal l_n_witness(long n) {
  require(n >= 0, Errc::Domain, "witness index must be nonnegative");
  long a = (n + 2) / 2, b = (n + 3) / 2;
  QPoly xa = QPoly::monomial(2, {static_cast<int>(a), 0}, Rational(1));
  QPoly yb = QPoly::monomial(2, {0, static_cast<int>(b)}, Rational(1));
  return {CurveGerm(xa), CurveGerm(yb)};
}

struct SearchSpec {
  int max_deg = 0;  // 0: default n+2
  long samples = 500;
  std::uint64_t seed = 0;
};

struct LnReport {
  long n = 0;
  Int ln;
  // (a) the designated extremal ideal
  std::string witness_f, witness_g;
  Int witness_colength;
  bool witness_ok = false;
  // (b) every monomial pair (x^a, y^b) containing m^{n+1}
  Int monomial_max;
  long monomial_count = 0;
  bool monomial_ok = false;
  // (c) random two-generator ideals containing m^{n+1}
  long samples_requested = 0, samples_accepted = 0, samples_tried = 0;
  bool random_ok = false;
  std::uint64_t seed = 0;
  std::vector<std::string> counterexamples;
  bool ok = false;
};

inline LnReport l_n_certify(long n, SearchSpec spec = {}) {
  require(n >= 0, Errc::Domain, "l_n index must be nonnegative");
  LnReport rep;
  rep.n = n;
  rep.ln = l_n(n);
  rep.seed = spec.seed;
  int max_deg = spec.max_deg > 0 ? spec.max_deg : static_cast<int>(n) + 2;

  GermIdeal w = l_n_witness(n);
  rep.witness_f = w.f.str();
  rep.witness_g = w.g.str();
  rep.witness_colength = colength(w);
  rep.witness_ok = rep.witness_colength == rep.ln && contains_power(w, n) &&
                   (n == 0 || !contains_power(w, n - 1));
  if (!rep.witness_ok) {
    rep.counterexamples.push_back("witness (" + rep.witness_f + ", " + rep.witness_g + ")");
  }

  rep.monomial_max = 0;
  for (int a = 1; a <= n + 2; ++a) {
    for (int b = 1; b <= n + 2; ++b) {
      GermIdeal m(CurveGerm(QPoly::monomial(2, {a, 0}, Rational(1))),
                  CurveGerm(QPoly::monomial(2, {0, b}, Rational(1))));
      if (!contains_power(m, n)) continue;
      ++rep.monomial_count;
      Int c = colength(m);
      if (c > rep.monomial_max) rep.monomial_max = c;
      if (c > rep.ln) {
        rep.counterexamples.push_back("monomial pair (x^" + std::to_string(a) + ", y^" +
                                      std::to_string(b) + ") colength " + c.str());
      }
    }
  }
  rep.monomial_ok = rep.monomial_max == rep.ln;

  rep.samples_requested = spec.samples;
  rep.random_ok = true;
  std::mt19937_64 rng(spec.seed);
  const long coeff_pool[4] = {-2, -1, 1, 2};
  auto random_germ = [&](int min_ord) {
    QPoly p(2);
    while (p.is_zero() || p.order() < min_ord) {
      p = QPoly(2);
      for (int a = 0; a <= max_deg; ++a) {
        for (int b = 0; a + b <= max_deg; ++b) {
          if (a + b < min_ord || a + b == 0) continue;
          if (detail::rng_pick(rng, 0, 1)) {
            p.add_term({a, b}, Rational(coeff_pool[detail::rng_pick(rng, 0, 3)]));
          }
        }
      }
    }
    return p;
  };
  long tries_cap = spec.samples * 200;
  while (rep.samples_accepted < spec.samples && rep.samples_tried < tries_cap) {
    ++rep.samples_tried;
    int o1 = static_cast<int>(detail::rng_pick(rng, 1, std::min<long>(max_deg, n + 1)));
    int o2 = static_cast<int>(detail::rng_pick(rng, 1, std::max<long>(1, std::min<long>(max_deg, n + 2 - o1))));
    QPoly f = random_germ(o1), g = random_germ(o2);
    auto c = detail::colength_if_contains(f, g, n);
    if (!c) continue;
    ++rep.samples_accepted;
    if (*c > rep.ln) {
      rep.random_ok = false;
      rep.counterexamples.push_back("(" + f.str({"x", "y"}) + ", " + g.str({"x", "y"}) +
                                    ") colength " + c->str());
    }
  }
  rep.ok = rep.witness_ok && rep.monomial_ok && rep.random_ok &&
           rep.samples_accepted == rep.samples_requested;
  return rep;
}

struct StarReport {
  int k = 0;
  Int lk;
  long partitions_checked = 0;
  bool nonstrict_ok = true;  // sum of l_{k_i - 1} <= l_k for every partition of k+1
  // partitions with at least two parts where equality holds (strictness gap)
  std::vector<std::vector<int>> equality_cases;
};

inline StarReport star_inequality(int k) {
  require(k >= 1, Errc::Domain, "star inequality needs k >= 1");
  StarReport rep;
  rep.k = k;
  rep.lk = l_n(k);
  std::vector<int> parts;
  auto descend = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      ++rep.partitions_checked;
      Int sum = 0;
      for (int p : parts) sum += l_n(p - 1);
      if (sum > rep.lk) rep.nonstrict_ok = false;
      if (parts.size() >= 2 && sum == rep.lk) rep.equality_cases.push_back(parts);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  descend(descend, k + 1, k + 1);
  return rep;
}

// Very-ampleness order sufficient for generating k-jets: l_k - 1 = floor(k(k+4)/4).
inline Int very_ample_order_for_jets(long k) {
  require(k >= 0, Errc::Domain, "jet order must be nonnegative");
  return l_n(k) - 1;
}

}  // namespace jetample
