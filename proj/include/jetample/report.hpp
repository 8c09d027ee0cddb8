#pragma once
// JSON and text renderings of results. The JSON mirrors the text output
// field by field; rationals and roots are emitted as exact strings, never
// floating point.

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "campedelli.hpp"
#include "certify.hpp"
#include "germ.hpp"
#include "surface.hpp"

namespace jetample {

using Json = nlohmann::ordered_json;

// --- Seshadri values ---------------------------------------------------

inline Json json_of(const SeshadriValue& s) {
  Json j;
  j["value"] = s.value.str();
  if (s.curve) j["witness_curve"] = s.curve->label;
  j["self_intersection_bound"] = s.self_intersection_bound;
  j["warnings"] = s.warnings;
  return j;
}

inline void render_text(std::ostream& out, const SeshadriValue& s) {
  out << "seshadri: " << s.value.str();
  if (s.curve) out << "  (witness curve " << s.curve->label << ")";
  if (s.self_intersection_bound) out << "  (self-intersection bound binds)";
  out << "\n";
  for (const auto& w : s.warnings) out << "warning: " << w << "\n";
}

// --- Certificates -------------------------------------------------------

inline Json json_of(const SurfaceModel& m, const CheckRecord& c) {
  Json j;
  j["name"] = c.name;
  if (c.relation == "holds") {
    j["holds"] = c.holds;
  } else {
    j["left"] = to_string(c.left);
    j["relation"] = c.relation;
    j["right"] = to_string(c.right);
    j["holds"] = c.holds;
  }
  return j;
}

inline Json json_of(const SurfaceModel& m, const ObstructionCandidate& c) {
  Json j;
  j["class"] = class_to_string(m, c.D.coords);
  Json checks = Json::array();
  for (const auto& ck : c.checks) checks.push_back(json_of(m, ck));
  j["checks"] = checks;
  return j;
}

inline Json json_of(const SurfaceModel& m, const Certificate& cert) {
  Json j;
  j["verdict"] = verdict_name(cert.verdict);
  j["reason"] = cert.reason;
  j["mode"] = mode_name(cert.mode);
  j["threshold"] = to_string(cert.threshold);
  j["l_k"] = to_string(cert.lk);
  Json hyps = Json::array();
  for (const auto& h : cert.hypotheses) hyps.push_back({{"name", h.name}, {"value", h.value}});
  j["hypotheses"] = hyps;
  if (cert.boundary_seshadri) j["boundary_seshadri"] = json_of(*cert.boundary_seshadri);
  Json cands = Json::array();
  for (const auto& c : cert.candidates) cands.push_back(json_of(m, c));
  j["candidates"] = cands;
  j["warnings"] = cert.warnings;
  j["caveat"] = cert.caveat;
  return j;
}

inline void render_text(std::ostream& out, const SurfaceModel& m, const Certificate& cert) {
  out << "verdict: " << verdict_name(cert.verdict) << "\n";
  out << "reason: " << cert.reason << "\n";
  out << "mode: " << mode_name(cert.mode) << "\n";
  out << "threshold: " << to_string(cert.threshold) << "\n";
  out << "l_k: " << to_string(cert.lk) << "\n";
  for (const auto& h : cert.hypotheses) out << "hypothesis " << h.name << ": " << h.value << "\n";
  if (cert.boundary_seshadri) render_text(out, *cert.boundary_seshadri);
  for (const auto& c : cert.candidates) {
    out << "candidate: " << class_to_string(m, c.D.coords) << "\n";
    for (const auto& ck : c.checks) {
      out << "  check \"" << ck.name << "\": ";
      if (ck.relation == "holds") {
        out << (ck.holds ? "holds" : "fails");
      } else {
        out << to_string(ck.left) << " " << ck.relation << " " << to_string(ck.right);
      }
      out << "\n";
    }
  }
  for (const auto& w : cert.warnings) out << "warning: " << w << "\n";
  out << "caveat: " << cert.caveat << "\n";
}

// --- Zariski decomposition and cone membership ---------------------------

inline Json json_of(const SurfaceModel& m, const ZariskiPair& z) {
  Json j;
  j["positive"] = class_to_string(m, z.positive.coords);
  Json neg = Json::array();
  for (const auto& [idx, mult] : z.negative)
    neg.push_back({{"curve", m.curves[idx].label}, {"multiplicity", to_string(mult)}});
  j["negative"] = neg;
  j["negative_class"] = class_to_string(m, z.negative_coords);
  j["caveat"] = kCurveListCaveat;
  return j;
}

inline void render_text(std::ostream& out, const SurfaceModel& m, const ZariskiPair& z) {
  out << "positive: " << class_to_string(m, z.positive.coords) << "\n";
  out << "negative: " << class_to_string(m, z.negative_coords) << "\n";
  for (const auto& [idx, mult] : z.negative)
    out << "  curve " << m.curves[idx].label << " with multiplicity " << to_string(mult) << "\n";
  out << "caveat: " << kCurveListCaveat << "\n";
}

inline Json json_of(const SurfaceModel& m, const PseffResult& r) {
  Json j;
  j["pseudoeffective"] = r.pseudoeffective;
  if (r.witness) {
    if (const auto* comb = std::get_if<PseffWitness::Combination>(&r.witness->how)) {
      Json terms = Json::array();
      for (std::size_t i = 0; i < comb->coefficients.size(); ++i) {
        if (comb->coefficients[i] == 0) continue;
        terms.push_back({{"curve", m.curves[i].label},
                         {"coefficient", to_string(comb->coefficients[i])}});
      }
      j["witness"] = {{"kind", "combination"}, {"terms", terms}};
    } else {
      const auto& fp = std::get<PseffWitness::FastPath>(r.witness->how);
      j["witness"] = {{"kind", "nef-pairing"}, {"nef_class", fp.nef_witness_label}};
    }
  }
  j["caveat"] = kCurveListCaveat;
  return j;
}

inline void render_text(std::ostream& out, const SurfaceModel& m, const PseffResult& r) {
  out << "pseudoeffective: " << (r.pseudoeffective ? "yes" : "no") << "\n";
  if (r.witness) {
    if (const auto* comb = std::get_if<PseffWitness::Combination>(&r.witness->how)) {
      out << "witness combination:";
      for (std::size_t i = 0; i < comb->coefficients.size(); ++i) {
        if (comb->coefficients[i] == 0) continue;
        out << " " << to_string(comb->coefficients[i]) << "*" << m.curves[i].label;
      }
      out << "\n";
    } else {
      out << "witness: positive pairing against nef class "
          << std::get<PseffWitness::FastPath>(r.witness->how).nef_witness_label << "\n";
    }
  }
  out << "caveat: " << kCurveListCaveat << "\n";
}

// --- Cluster computations -------------------------------------------------

inline Json json_of(const BlowupNode& n) {
  Json j;
  j["label"] = n.label;
  j["e1"] = to_string(n.e1);
  j["e2"] = to_string(n.e2);
  Json kids = Json::array();
  for (const auto& c : n.children) kids.push_back(json_of(c));
  j["children"] = kids;
  return j;
}

inline void render_tree(std::ostream& out, const BlowupNode& n, int depth) {
  for (int i = 0; i < depth; ++i) out << "  ";
  out << n.label << ": multiplicities (" << to_string(n.e1) << ", " << to_string(n.e2) << ")\n";
  for (const auto& c : n.children) render_tree(out, c, depth + 1);
}

inline Json json_of(const NoetherOutcome& n, bool with_tree) {
  Json j;
  j["degree"] = to_string(n.degree);
  j["multiplicity_sum"] = to_string(n.multiplicity_sum);
  j["node_count"] = to_string(n.node_count);
  if (with_tree) j["tree"] = json_of(n.tree);
  return j;
}

inline Json json_of(const LnReport& r) {
  Json j;
  j["n"] = r.n;
  j["l_n"] = to_string(r.ln);
  j["witness"] = {{"f", r.witness_f},
                  {"g", r.witness_g},
                  {"colength", to_string(r.witness_colength)},
                  {"ok", r.witness_ok}};
  j["monomial_sweep"] = {{"max", to_string(r.monomial_max)},
                         {"count", r.monomial_count},
                         {"ok", r.monomial_ok}};
  j["random_sweep"] = {{"requested", r.samples_requested},
                       {"accepted", r.samples_accepted},
                       {"tried", r.samples_tried},
                       {"seed", r.seed},
                       {"ok", r.random_ok}};
  j["counterexamples"] = r.counterexamples;
  j["ok"] = r.ok;
  return j;
}

inline void render_text(std::ostream& out, const LnReport& r) {
  out << "l_" << r.n << " = " << to_string(r.ln) << "\n";
  out << "witness (" << r.witness_f << ", " << r.witness_g
      << "): colength " << to_string(r.witness_colength) << " -> "
      << (r.witness_ok ? "ok" : "MISMATCH") << "\n";
  out << "monomial sweep: " << r.monomial_count << " pairs, max colength "
      << to_string(r.monomial_max) << " -> " << (r.monomial_ok ? "ok" : "EXCEEDED") << "\n";
  out << "random sweep: " << r.samples_accepted << "/" << r.samples_requested
      << " accepted (seed " << r.seed << ") -> " << (r.random_ok ? "ok" : "EXCEEDED") << "\n";
  for (const auto& c : r.counterexamples) out << "counterexample: " << c << "\n";
  out << "certified: " << (r.ok ? "yes" : "no") << "\n";
}

inline Json json_of(const StarReport& r) {
  Json j;
  j["k"] = r.k;
  j["l_k"] = to_string(r.lk);
  j["partitions_checked"] = r.partitions_checked;
  j["nonstrict_ok"] = r.nonstrict_ok;
  Json eq = Json::array();
  for (const auto& parts : r.equality_cases) eq.push_back(parts);
  j["equality_cases"] = eq;
  return j;
}

inline void render_text(std::ostream& out, const StarReport& r) {
  out << "k = " << r.k << ", l_k = " << to_string(r.lk) << ", partitions checked: "
      << r.partitions_checked << "\n";
  out << "nonstrict inequality: " << (r.nonstrict_ok ? "holds" : "FAILS") << "\n";
  if (r.equality_cases.empty()) {
    out << "strict for every partition with at least two parts\n";
  } else {
    for (const auto& parts : r.equality_cases) {
      out << "equality at partition (";
      for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? " " : "") << parts[i];
      out << ")\n";
    }
  }
}

// --- Threshold calculators --------------------------------------------

inline Json json_of(const Cor42Result& r) {
  Json j;
  j["n_from"] = r.n_from;
  j["assumptions"] = r.assumptions;
  return j;
}

inline Json json_of(const Cor43Result& r) {
  Json j;
  j["spanned_from"] = r.spanned_from;
  j["ample_from"] = r.ample_from;
  j["assumptions"] = r.assumptions;
  return j;
}

// --- Bi-projective cluster verification ---------------------------------

inline Json json_of(const CampedelliPointCheck& c) {
  Json j;
  j["point"] = c.point;
  j["diagonal"] = c.split.diagonal;
  j["cubic_term"] = c.split.cubic_term;
  j["product_term"] = c.split.product_term;
  j["twisted_pair"] = c.twisted_pair;
  j["ok"] = c.ok();
  return j;
}

inline Json json_of(const CampedelliReport& r) {
  Json j;
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    cases.push_back({{"a", c.a},
                     {"b", c.b},
                     {"first", json_of(c.first)},
                     {"second", json_of(c.second)},
                     {"distinct_orbits", c.distinct_orbits},
                     {"ok", c.ok()}});
  }
  j["cases"] = cases;
  j["all_ok"] = r.all_ok;
  j["conclusion"] = r.conclusion;
  return j;
}

inline void render_text(std::ostream& out, const CampedelliReport& r) {
  for (const auto& c : r.cases) {
    out << "case (a,b) = (" << c.a << "," << c.b << "):\n";
    for (const auto* pc : {&c.first, &c.second}) {
      out << "  point " << pc->point << ": intersection "
          << (pc->split.for_all_lambda() ? "ok" : "FAILS") << ", twisted pair "
          << (pc->twisted_pair ? "ok" : "FAILS") << "\n";
    }
    out << "  distinct orbits: " << (c.distinct_orbits ? "yes" : "NO") << "\n";
  }
  out << "all cases: " << (r.all_ok ? "ok" : "FAILED") << "\n";
  out << "conclusion: " << r.conclusion << "\n";
}

}  // namespace jetample
