#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "jetample/linalg.hpp"
#include "jetample/resolution.hpp"
#include "jetample/simplex.hpp"

namespace jetample {

// Numeric divisor class in the fixed basis of a surface lattice.
struct DivisorClass {
  Vec coords;
  bool cartier = true;  // user-asserted; recomputed against the model's Cartier moduli

  std::size_t rank() const { return coords.size(); }
  bool is_zero() const { return vec_is_zero(coords); }
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.coords == b.coords;
  }
  friend bool operator<(const DivisorClass& a, const DivisorClass& b) {
    return a.coords < b.coords;
  }
};

struct NamedCurve {
  DivisorClass cls;
  std::string label;
};

struct PointDatum {
  std::string label;
  // Smooth point when graph is absent.
  std::optional<ResolutionGraph> graph;
  bool smooth() const { return !graph.has_value(); }
};

// A projective surface presented as numerical data: intersection form of
// signature (1, rank-1), canonical class, a curve list asserted by the model
// author to generate the pseudoeffective cone, and marked points.
//
// Every verdict derived from the curve list inherits that assertion; reports
// carry the caveat string below.
struct SurfaceModel {
  std::string name;
  Mat gram;
  Vec canonical;
  std::vector<NamedCurve> curves;
  std::vector<PointDatum> points;
  std::vector<std::string> basis_labels;
  std::set<std::string> flags;
  // Divisor coords c are Cartier iff cartier_moduli[i] divides c_i for all i
  // (all-ones by default: integral = Cartier).
  std::vector<Int> cartier_moduli;

  std::size_t rank() const { return gram.rows(); }
  bool flag(const std::string& f) const { return flags.count(f) > 0; }

  const PointDatum* find_point(const std::string& label) const {
    for (const auto& p : points) {
      if (p.label == label) return &p;
    }
    return nullptr;
  }
};

inline const char* kCurveListCaveat =
    "relative to the declared curve list (asserted to generate the effective cone)";

// Render a class in the model's basis labels, e.g. "3H - 2E".
inline std::string class_to_string(const SurfaceModel& m, const Vec& coords) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    std::string label = i < m.basis_labels.size() ? m.basis_labels[i] : "e" + std::to_string(i);
    Rational c = coords[i];
    if (out.empty()) {
      if (c == -1) out += "-";
      else if (c != 1) out += to_string(c) + "*";
    } else {
      out += c < 0 ? " - " : " + ";
      Rational a = c < 0 ? -c : c;
      if (a != 1) out += to_string(a) + "*";
    }
    out += label;
  }
  return out.empty() ? "0" : out;
}

inline Rational intersect(const SurfaceModel& m, const Vec& a, const Vec& b) {
  require(a.size() == m.rank() && b.size() == m.rank(), Errc::DimensionMismatch,
          "divisor class arity vs model rank");
  return dot(a, m.gram.mul(b));
}

inline Rational intersect(const SurfaceModel& m, const DivisorClass& a, const DivisorClass& b) {
  return intersect(m, a.coords, b.coords);
}

inline Rational self_intersection(const SurfaceModel& m, const Vec& a) {
  return intersect(m, a, a);
}

inline bool class_is_cartier(const SurfaceModel& m, const Vec& coords) {
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!is_integer(coords[i])) return false;
    Int mod = i < m.cartier_moduli.size() ? m.cartier_moduli[i] : Int(1);
    if (mod > 1 && num(coords[i]) % mod != 0) return false;
  }
  return true;
}

inline DivisorClass make_class(const SurfaceModel& m, Vec coords) {
  DivisorClass d{std::move(coords), false};
  d.cartier = class_is_cartier(m, d.coords);
  return d;
}

struct ModelDiagnostics {
  bool ok = true;
  Signature signature;
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
};

// Structural validation: symmetric Gram with Hodge-index signature
// (1, rank-1), arities, curve pairings. Curve self-intersections below
// `selfint_floor` and negative pairwise products are reported.
inline ModelDiagnostics validate_model(const SurfaceModel& m, long selfint_floor = -8) {
  ModelDiagnostics d;
  auto err = [&d](const std::string& s) {
    d.ok = false;
    d.errors.push_back(s);
  };
  if (!m.gram.is_symmetric()) err("intersection matrix is not symmetric");
  if (m.canonical.size() != m.rank()) err("canonical class arity mismatch");
  if (m.gram.is_symmetric()) {
    d.signature = signature_of(m.gram);
    if (d.signature.positive != 1 || d.signature.zero != 0 ||
        d.signature.negative != m.rank() - 1) {
      err("intersection form must have signature (1," + std::to_string(m.rank() - 1) +
          "); got " + d.signature.str());
    }
  }
  for (const auto& c : m.curves) {
    if (c.cls.rank() != m.rank()) {
      err("curve '" + c.label + "' arity mismatch");
      continue;
    }
    if (c.cls.is_zero()) err("curve '" + c.label + "' is the zero class");
  }
  if (!d.ok) return d;
  for (std::size_t i = 0; i < m.curves.size(); ++i) {
    Rational sq = self_intersection(m, m.curves[i].cls.coords);
    if (sq < selfint_floor) {
      d.warnings.push_back("curve '" + m.curves[i].label + "' has self-intersection " +
                           to_string(sq) + " below the floor " + std::to_string(selfint_floor));
    }
    for (std::size_t j = i + 1; j < m.curves.size(); ++j) {
      Rational p = intersect(m, m.curves[i].cls, m.curves[j].cls);
      if (p < 0 && !m.flag("allow-shared-components")) {
        d.warnings.push_back("curves '" + m.curves[i].label + "' and '" + m.curves[j].label +
                             "' meet negatively (" + to_string(p) +
                             "); distinct irreducible curves cannot; flag allow-shared-components "
                             "if the list repeats components");
      }
    }
  }
  for (const auto& p : m.points) {
    if (p.graph) {
      try {
        validate_graph(*p.graph);
      } catch (const Error& e) {
        err("point '" + p.label + "': " + e.what());
      }
    }
  }
  return d;
}

// Nef against the declared curve list, plus the Hodge-index sanity d^2 >= 0.
inline bool is_nef(const SurfaceModel& m, const DivisorClass& d) {
  for (const auto& c : m.curves) {
    if (intersect(m, d, c.cls) < 0) return false;
  }
  return self_intersection(m, d.coords) >= 0;
}

struct PseffWitness {
  // Either an explicit nonnegative combination of listed curves, or the
  // sufficient-condition fast path (d^2 >= 0, d.L > 0 for a nef L).
  struct Combination {
    std::vector<Rational> coefficients;  // parallel to model.curves
  };
  struct FastPath {
    std::string nef_witness_label;
  };
  std::variant<Combination, FastPath> how;
};

struct PseffResult {
  bool pseudoeffective = false;
  std::optional<PseffWitness> witness;
};

// Exact cone membership in the span of the declared curves.
inline PseffResult is_pseudoeffective(const SurfaceModel& m, const DivisorClass& d) {
  require(d.rank() == m.rank(), Errc::DimensionMismatch, "class arity");
  std::vector<Vec> gens;
  gens.reserve(m.curves.size());
  for (const auto& c : m.curves) gens.push_back(c.cls.coords);
  auto lam = cone_membership(gens, d.coords);
  PseffResult out;
  if (lam) {
    out.pseudoeffective = true;
    out.witness = PseffWitness{PseffWitness::Combination{*lam}};
  }
  return out;
}

// Sufficient condition fast path: d^2 >= 0 and d.L > 0 for a nef L. When
// no L is supplied, nef members of the curve list are scanned. Returns a
// verdict only when the condition fires; callers needing a definite "no"
// must use the cone test.
inline std::optional<PseffWitness> pseudoeffective_fast_path(
    const SurfaceModel& m, const DivisorClass& d,
    const std::optional<DivisorClass>& nef_l = std::nullopt) {
  if (self_intersection(m, d.coords) < 0) return std::nullopt;
  auto try_one = [&](const DivisorClass& l, const std::string& label)
      -> std::optional<PseffWitness> {
    if (!is_nef(m, l)) return std::nullopt;
    if (intersect(m, d, l) > 0) return PseffWitness{PseffWitness::FastPath{label}};
    return std::nullopt;
  };
  if (nef_l) {
    if (auto w = try_one(*nef_l, "supplied nef class")) return w;
  }
  for (const auto& c : m.curves) {
    if (auto w = try_one(c.cls, c.label)) return w;
  }
  return std::nullopt;
}

struct ZariskiPair {
  DivisorClass positive;                      // P: nef against the curve list
  std::vector<std::pair<std::size_t, Rational>> negative;  // N = sum n_i * curves[i], n_i > 0
  Vec negative_coords;                        // N in the lattice basis
};

// Zariski decomposition d = P + N by the support-growing fixpoint loop:
// N is supported on curves meeting the remainder negatively, solved from
// (d - N).C = 0 on the support, support enlarged until P is curve-nef.
inline ZariskiPair zariski_decompose(const SurfaceModel& m, const DivisorClass& d) {
  require(d.rank() == m.rank(), Errc::DimensionMismatch, "class arity");
  auto pseff = is_pseudoeffective(m, d);
  require(pseff.pseudoeffective, Errc::NotPseudoeffective,
          "zariski decomposition needs a pseudoeffective class " +
              std::string(kCurveListCaveat));

  std::set<std::size_t> support;
  for (;;) {
    // Solve sum_j n_j (C_j . C_i) = d . C_i over the current support.
    std::vector<std::size_t> idx(support.begin(), support.end());
    Vec n_coeffs(idx.size(), Rational(0));
    if (!idx.empty()) {
      Mat gs(idx.size(), idx.size());
      Vec rhs(idx.size());
      for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = 0; b < idx.size(); ++b) {
          gs(a, b) = intersect(m, m.curves[idx[a]].cls, m.curves[idx[b]].cls);
        }
        rhs[a] = intersect(m, d, m.curves[idx[a]].cls);
      }
      require(is_negative_definite(gs), Errc::IndefiniteSupport,
              "support Gram block is not negative definite");
      auto sol = gs.solve(rhs);
      require(sol.has_value(), Errc::IndefiniteSupport, "singular support system");
      n_coeffs = *sol;
    }
    Vec n_vec(m.rank(), Rational(0));
    for (std::size_t a = 0; a < idx.size(); ++a) {
      n_vec = vec_add(n_vec, vec_scale(n_coeffs[a], m.curves[idx[a]].cls.coords));
    }
    Vec p_vec = vec_sub(d.coords, n_vec);

    bool grew = false;
    for (std::size_t j = 0; j < m.curves.size(); ++j) {
      if (support.count(j)) continue;
      if (intersect(m, p_vec, m.curves[j].cls.coords) < 0) {
        support.insert(j);
        grew = true;
      }
    }
    if (grew) continue;

    ZariskiPair out;
    out.positive = make_class(m, p_vec);
    out.negative_coords = n_vec;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      if (n_coeffs[a] != 0) {
        require(n_coeffs[a] > 0, Errc::IndefiniteSupport,
                "negative part received a negative multiplicity; curve list inconsistent");
        out.negative.emplace_back(idx[a], n_coeffs[a]);
      }
    }
    require(self_intersection(m, p_vec) >= 0, Errc::Signature,
            "curve-nef remainder with negative square: model inconsistent with Hodge index");
    // P.C = 0 for every support curve by construction; assert anyway.
    for (const auto& [j, c] : out.negative) {
      require(intersect(m, p_vec, m.curves[j].cls.coords) == 0, Errc::Domain,
              "orthogonality failure in zariski decomposition");
    }
    return out;
  }
}

// Bigness of a pseudoeffective class: positive part has positive square.
inline bool is_big(const SurfaceModel& m, const DivisorClass& d) {
  ZariskiPair z = zariski_decompose(m, d);
  return self_intersection(m, z.positive.coords) > 0;
}

}  // namespace jetample
