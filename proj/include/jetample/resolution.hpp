#pragma once

#include <string>
#include <vector>

#include "jetample/linalg.hpp"

namespace jetample {

// Dual graph of the exceptional set of a resolution of a normal surface
// singularity: integer intersection matrix of the components E_i plus their
// geometric genera (zero when omitted).
struct ResolutionGraph {
  Mat egram;
  std::vector<long> genera;  // empty means all zero

  std::size_t size() const { return egram.rows(); }
  long genus(std::size_t i) const { return i < genera.size() ? genera[i] : 0; }

  // K_Y . E_i from adjunction on the resolution.
  Rational canonical_dot(std::size_t i) const {
    return -egram(i, i) - 2 + 2 * genus(i);
  }
};

inline bool graph_is_connected(const ResolutionGraph& g) {
  std::size_t n = g.size();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack = {0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (!seen[j] && g.egram(i, j) != 0) {
        seen[j] = true;
        stack.push_back(j);
      }
    }
  }
  for (bool s : seen) {
    if (!s) return false;
  }
  return true;
}

// Laufer's algorithm. Start at sum E_i; while some Z.E_i > 0, add E_i.
// Negative definiteness bounds the loop. The result is independent of the
// order in which violating indices are chosen.
inline Vec fundamental_cycle(const ResolutionGraph& g) {
  std::size_t n = g.size();
  require(n > 0, Errc::Domain, "empty resolution graph");
  require(is_negative_definite(g.egram), Errc::IndefiniteGraph,
          "resolution graph must be negative definite");
  Vec z(n, Rational(1));
  for (;;) {
    Vec gz = g.egram.mul(z);
    std::size_t i = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (gz[j] > 0) {
        i = j;
        break;
      }
    }
    if (i == n) return z;
    z[i] += 1;
  }
}

// Discrepancy cycle: the rational solution of Delta . E_i = -K_Y . E_i.
inline Vec discrepancy_cycle(const ResolutionGraph& g) {
  std::size_t n = g.size();
  Vec rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = g.egram(i, i) + 2 - 2 * g.genus(i);
  auto sol = g.egram.solve(rhs);
  require(sol.has_value(), Errc::IndefiniteGraph, "singular intersection matrix");
  return *sol;
}

inline Rational cycle_pairing(const ResolutionGraph& g, const Vec& a, const Vec& b) {
  return dot(a, g.egram.mul(b));
}

// Arithmetic genus of an exceptional cycle D: 1 + (D^2 + K_Y.D)/2.
inline Rational cycle_arithmetic_genus(const ResolutionGraph& g, const Vec& d) {
  Rational kd = 0;
  for (std::size_t i = 0; i < g.size(); ++i) kd += d[i] * g.canonical_dot(i);
  return 1 + (cycle_pairing(g, d, d) + kd) / 2;
}

// Structural checks. Throws with a specific code on the first failure:
// integrality/symmetry, nonnegative off-diagonal, negative definiteness,
// connectedness, the (-1, genus 0) non-minimality tell, and the necessary
// rationality condition p_a(Z) = 0 for the fundamental cycle.
inline void validate_graph(const ResolutionGraph& g, bool require_rational = true) {
  std::size_t n = g.size();
  require(n > 0, Errc::Domain, "empty resolution graph");
  require(g.egram.is_symmetric(), Errc::Domain, "graph matrix must be symmetric");
  require(g.genera.empty() || g.genera.size() == n, Errc::DimensionMismatch,
          "genera arity mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    require(g.genus(i) >= 0, Errc::Domain, "negative genus");
    for (std::size_t j = 0; j < n; ++j) {
      require(is_integer(g.egram(i, j)), Errc::Domain, "graph matrix must be integral");
      if (i != j) {
        require(g.egram(i, j) >= 0, Errc::Domain,
                "distinct exceptional components must meet nonnegatively");
      }
    }
    require(g.egram(i, i) < 0, Errc::IndefiniteGraph, "exceptional component with E^2 >= 0");
    if (g.egram(i, i) == -1 && g.genus(i) == 0) {
      fail(Errc::NotMinimal, "component " + std::to_string(i) +
                                 " is a (-1)-curve; resolution is not minimal");
    }
  }
  require(is_negative_definite(g.egram), Errc::IndefiniteGraph,
          "resolution graph must be negative definite");
  require(graph_is_connected(g), Errc::NotConnected, "resolution graph must be connected");
  if (require_rational) {
    Vec z = fundamental_cycle(g);
    Rational pa = cycle_arithmetic_genus(g, z);
    require(pa == 0, Errc::NotRationalSingularity,
            "fundamental cycle has arithmetic genus " + to_string(pa) +
                "; rational singularity requires 0");
  }
}

// delta_k = -((k+1) Z + Delta)^2, the threshold controlling k-jet spanning
// at the singular point. Strictly increasing in k.
inline Rational delta_k(const ResolutionGraph& g, long k) {
  require(k >= 0, Errc::Domain, "delta_k needs k >= 0");
  Vec z = fundamental_cycle(g);
  Vec d = discrepancy_cycle(g);
  Vec w(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) w[i] = Rational(k + 1) * z[i] + d[i];
  return -cycle_pairing(g, w, w);
}

// delta(x, k): (k+1)^2 at a smooth point, -(k Z + Delta)^2 at a rational
// singularity (one step below delta_k, matching m^k against m^(k+1)).
inline Rational delta_point_smooth(long k) {
  require(k >= 1, Errc::Domain, "delta_point needs k >= 1");
  return Rational((k + 1)) * (k + 1);
}

inline Rational delta_point(const ResolutionGraph& g, long k) {
  require(k >= 1, Errc::Domain, "delta_point needs k >= 1");
  return delta_k(g, k - 1);
}

// deg O/m^(k+1): (k+1)(k+2)/2 at a smooth point; (k+1)(-k Z^2 + 2)/2 at a
// rational singularity. Always an integer.
inline Int trivial_degree_bound_smooth(long k) {
  require(k >= 0, Errc::Domain, "degree bound needs k >= 0");
  return Int(k + 1) * Int(k + 2) / 2;
}

inline Int trivial_degree_bound(const ResolutionGraph& g, long k) {
  require(k >= 0, Errc::Domain, "degree bound needs k >= 0");
  Vec z = fundamental_cycle(g);
  Rational zsq = cycle_pairing(g, z, z);
  Rational v = Rational(k + 1) * (-Rational(k) * zsq + 2) / 2;
  require(is_integer(v), Errc::Domain, "degree bound must be integral");
  return num(v);
}

// Chain graph with all components rational of self-intersection -2.
inline ResolutionGraph du_val_chain(std::size_t n) {
  ResolutionGraph g;
  g.egram = Mat(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g.egram(i, i) = -2;
    if (i + 1 < n) {
      g.egram(i, i + 1) = 1;
      g.egram(i + 1, i) = 1;
    }
  }
  return g;
}

}  // namespace jetample
