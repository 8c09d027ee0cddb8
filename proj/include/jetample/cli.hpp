#pragma once
// Command-line front end: file ingestion, bundled-corpus management, and
// report emission over the certification and cluster engines.
//
// Exit codes: 0 for a green verdict or a computed value, 2 for a red
// verdict (obstructions found, membership refuted, certification short of
// green), 1 for errors. Output is byte-identical across runs given the
// same inputs and seed; wall time is attached only behind --timing.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "campedelli.hpp"
#include "certify.hpp"
#include "corpus.hpp"
#include "errors.hpp"
#include "germ.hpp"
#include "report.hpp"
#include "surface.hpp"
#include "surface_io.hpp"

namespace jetample::cli {

namespace detail {

inline std::optional<std::string> try_read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Loaded inputs are tracked as (source, digest) pairs for the run report.
struct Inputs {
  std::vector<std::pair<std::string, std::string>> digests;
  void add(const std::string& source, const std::string& digest) {
    digests.emplace_back(source, digest);
  }
};

// Arguments naming a model resolve to a file first, then to a bundled
// corpus entry of the same name.
inline LoadedSurface resolve_surface_arg(const std::string& arg, Inputs& inputs,
                                         std::ostream& err) {
  LoadedSurface ls;
  if (auto text = try_read(arg)) {
    ls = parse_surface(*text, arg);
  } else {
    const CorpusEntry* e = corpus_find(arg);
    require(e != nullptr, Errc::Parse,
            "'" + arg + "' is neither a readable file nor a bundled model");
    ls = parse_surface(e->content, e->name);
  }
  inputs.add(ls.source, ls.digest);
  for (const auto& w : ls.diagnostics.warnings) err << "warning: " << w << "\n";
  return ls;
}

inline LoadedBlowup resolve_blowup_arg(const std::string& arg, Inputs& inputs,
                                       std::ostream& err) {
  LoadedBlowup lb;
  if (auto text = try_read(arg)) {
    lb = parse_blowup(*text, arg);
  } else {
    const CorpusEntry* e = corpus_find(arg);
    require(e != nullptr, Errc::Parse,
            "'" + arg + "' is neither a readable file nor a bundled blow-up");
    lb = parse_blowup(e->content, e->name);
  }
  inputs.add(lb.source, lb.digest);
  for (const auto& w : lb.diagnostics.warnings) err << "warning: " << w << "\n";
  return lb;
}

struct Emission {
  std::string emit = "text";
  bool timing = false;
  std::vector<std::string> command;
  Inputs inputs;
  std::optional<std::uint64_t> seed;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

inline int finish(std::ostream& out, const Emission& em, const Json& payload,
                  const std::function<void(std::ostream&)>& text, int code) {
  std::optional<long long> wall_ms;
  if (em.timing) {
    wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - em.start)
                  .count();
  }
  if (em.emit == "json") {
    Json j;
    j["command"] = em.command;
    Json in = Json::object();
    for (const auto& [k, v] : em.inputs.digests) in[k] = "fnv1a64:" + v;
    j["inputs"] = in;
    if (em.seed) j["seed"] = *em.seed;
    if (wall_ms) j["wall_ms"] = *wall_ms;
    j["result"] = payload;
    out << j.dump(2) << "\n";
  } else {
    out << "command:";
    for (const auto& a : em.command) out << " " << a;
    out << "\n";
    for (const auto& [k, v] : em.inputs.digests) out << "input " << k << ": fnv1a64:" << v << "\n";
    if (em.seed) out << "seed: " << *em.seed << "\n";
    text(out);
    if (wall_ms) out << "wall_ms: " << *wall_ms << "\n";
  }
  return code;
}

inline ObstructionMode parse_mode(const std::string& s) {
  if (s == "cor32") return ObstructionMode::Cor32;
  if (s == "thm31") return ObstructionMode::Thm31;
  if (s == "thm31'") return ObstructionMode::Thm31Prime;
  if (s == "thm33") return ObstructionMode::Thm33;
  if (s == "thm34") return ObstructionMode::Thm34;
  fail(Errc::Parse, "unknown mode '" + s + "'");
}

inline std::vector<std::pair<std::string, long>> parse_point_list(const std::string& s) {
  std::vector<std::pair<std::string, long>> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t colon = item.find(':');
    require(colon != std::string::npos && colon > 0 && colon + 1 < item.size(), Errc::Parse,
            "expected label:k in '" + item + "'");
    out.emplace_back(item.substr(0, colon),
                     jetample::detail::parse_long(item.substr(colon + 1), 0));
  }
  require(!out.empty(), Errc::Parse, "empty point list");
  return out;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  detail::Emission em;
  em.command = args;

  CLI::App app{"exact jet-positivity certification on surface lattices", "jetample"};
  app.require_subcommand(1);
  app.add_option("--emit", em.emit, "output form")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
  app.add_flag("--timing", em.timing, "append wall time to the report");

  // certify
  auto* certify = app.add_subcommand("certify", "certify jet spannedness of the adjoint class");
  std::string c_model, c_L, c_point, c_points, c_blowup, c_mode, c_threshold = "reider";
  std::string c_zeta;
  long c_k = 0;
  long c_coeff_cap = 20;
  certify->fallthrough();
  certify->add_option("--model", c_model, "surface file or bundled model")->required();
  certify->add_option("--L", c_L, "class expression in the model basis")->required();
  certify->add_option("--k", c_k, "jet order (single-point runs)");
  certify->add_option("--point", c_point, "point label (default: first declared point)");
  certify->add_option("--points", c_points, "label:k list for simultaneous generation");
  certify->add_option("--blowup", c_blowup, "blow-up file for boundary cases");
  certify->add_option("--mode", c_mode, "cor32|thm31|thm31'|thm33|thm34");
  certify->add_option("--threshold", c_threshold, "reider|bogomolov")
      ->check(CLI::IsMember({"reider", "bogomolov"}));
  certify->add_option("--coeff-cap", c_coeff_cap, "coefficient cap for unbounded directions");
  certify->add_option("--zeta-cap", c_zeta, "extra cluster-degree filter value");

  // seshadri
  auto* seshadri_cmd = app.add_subcommand("seshadri", "largest nef deformation along a blow-up");
  std::string s_blowup, s_L;
  seshadri_cmd->fallthrough();
  seshadri_cmd->add_option("--blowup", s_blowup, "blow-up file or bundled entry")->required();
  seshadri_cmd->add_option("--L", s_L, "class expression in the downstairs basis")->required();

  // zariski
  auto* zariski_cmd = app.add_subcommand("zariski", "positive/negative decomposition");
  std::string z_model, z_D;
  zariski_cmd->fallthrough();
  zariski_cmd->add_option("--model", z_model, "surface file or bundled model")->required();
  zariski_cmd->add_option("--D", z_D, "class expression")->required();

  // pseff
  auto* pseff_cmd = app.add_subcommand("pseff", "effective-cone membership");
  std::string p_model, p_D;
  pseff_cmd->fallthrough();
  pseff_cmd->add_option("--model", p_model, "surface file or bundled model")->required();
  pseff_cmd->add_option("--D", p_D, "class expression")->required();

  // cluster
  auto* cluster = app.add_subcommand("cluster", "planar cluster computations");
  cluster->require_subcommand(1);
  cluster->fallthrough();
  auto* cl_colength = cluster->add_subcommand("colength", "staircase colength of (f, g)");
  std::string germ_f, germ_g;
  cl_colength->fallthrough();
  cl_colength->add_option("f", germ_f, "first germ")->required();
  cl_colength->add_option("g", germ_g, "second germ")->required();
  auto* cl_noether = cluster->add_subcommand("noether", "blow-up tree degree of (f, g)");
  bool cl_tree = false;
  std::string n_f, n_g;
  cl_noether->fallthrough();
  cl_noether->add_option("f", n_f, "first germ")->required();
  cl_noether->add_option("g", n_g, "second germ")->required();
  cl_noether->add_flag("--tree", cl_tree, "print the blow-up tree");
  auto* cl_contains = cluster->add_subcommand("contains", "does (f, g) contain the n-th power "
                                                          "of the maximal ideal");
  std::string ct_f, ct_g;
  long ct_n = 0;
  cl_contains->fallthrough();
  cl_contains->add_option("f", ct_f, "first germ")->required();
  cl_contains->add_option("g", ct_g, "second germ")->required();
  cl_contains->add_option("--n", ct_n, "power of the maximal ideal")->required();
  auto* cl_ln = cluster->add_subcommand("ln", "largest complete-intersection colength over "
                                              "ideals containing the (n+1)-st maximal-ideal "
                                              "power");
  long ln_n = 0;
  bool ln_certify = false;
  std::uint64_t ln_seed = 0;
  cl_ln->fallthrough();
  cl_ln->add_option("--n", ln_n, "jet order parameter")->required();
  cl_ln->add_flag("--certify", ln_certify, "run witness, monomial, and random sweeps");
  auto* ln_seed_opt = cl_ln->add_option("--seed", ln_seed, "random sweep seed");
  auto* cl_star = cluster->add_subcommand("star", "partition superadditivity of the minimal "
                                                  "colengths");
  long star_k = 0;
  cl_star->fallthrough();
  cl_star->add_option("--k", star_k, "jet order")->required();

  // thresholds
  auto* thresholds = app.add_subcommand("thresholds", "sufficient multiples of an ample class");
  long th_cor = 0, th_k = 0, th_r = 1;
  std::string th_Asq = "1";
  thresholds->fallthrough();
  thresholds->add_option("--cor", th_cor, "calculator: 42 or 43")->required();
  thresholds->add_option("--k", th_k, "jet order")->required();
  thresholds->add_option("--r", th_r, "number of points (calculator 42)");
  thresholds->add_option("--Asq", th_Asq, "self-intersection of A (calculator 42)");

  // campedelli
  auto* campedelli = app.add_subcommand("campedelli", "bi-projective cluster verification over "
                                                      "the Eisenstein field");
  campedelli->require_subcommand(1);
  campedelli->fallthrough();
  auto* ca_verify = campedelli->add_subcommand("verify", "check the four twist classes");
  ca_verify->fallthrough();
  auto* ca_orbit = campedelli->add_subcommand("orbit", "orbit of a point under the order-9 group");
  std::string orbit_point;
  ca_orbit->fallthrough();
  ca_orbit->add_option("bipoint", orbit_point, "literal like ([0,0,1],[1,-1,0])")->required();

  // corpus
  auto* corpus = app.add_subcommand("corpus", "bundled models and germ pairs");
  corpus->require_subcommand(1);
  corpus->fallthrough();
  auto* co_list = corpus->add_subcommand("list", "names of bundled entries");
  auto* co_show = corpus->add_subcommand("show", "print a bundled entry");
  std::string show_name;
  co_show->fallthrough();
  co_show->add_option("name", show_name, "entry name")->required();
  auto* co_export = corpus->add_subcommand("export", "write bundled entries to a directory");
  std::string export_dir = ".";
  co_export->fallthrough();
  co_export->add_option("--dir", export_dir, "target directory");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*certify) {
      auto ls = detail::resolve_surface_arg(c_model, em.inputs, err);
      DivisorClass L = parse_class(ls.model, c_L);
      CertifyOptions opts;
      if (certify->count("--mode")) opts.mode = detail::parse_mode(c_mode);
      opts.threshold_kind =
          c_threshold == "bogomolov" ? ThresholdKind::Bogomolov : ThresholdKind::Reider;
      opts.coeff_cap = Int(c_coeff_cap);
      if (certify->count("--zeta-cap"))
        opts.gorenstein_zeta_cap = jetample::detail::parse_rational_token(c_zeta, 0);
      std::optional<LoadedBlowup> lb;
      if (certify->count("--blowup")) {
        lb = detail::resolve_blowup_arg(c_blowup, em.inputs, err);
        require(lb->model.xgram == ls.model.gram, Errc::DimensionMismatch,
                "the blow-up is over a different downstairs lattice than the model");
        opts.blowup = &lb->model;
      }
      Certificate cert;
      require(certify->count("--k") || certify->count("--points"), Errc::Parse,
              "--k is required unless --points carries per-point orders");
      if (certify->count("--points")) {
        require(!opts.mode || *opts.mode == ObstructionMode::Thm33, Errc::Parse,
                "--points implies the simultaneous mode; drop --mode or use thm33");
        require(!certify->count("--point"), Errc::Parse, "--point and --points are exclusive");
        std::vector<std::pair<const PointDatum*, long>> pts;
        for (const auto& [label, kk] : detail::parse_point_list(c_points)) {
          const PointDatum* pd = ls.model.find_point(label);
          require(pd != nullptr, Errc::Parse,
                  "no point '" + label + "' on model '" + ls.model.name + "'");
          pts.emplace_back(pd, kk);
        }
        cert = certify_jets_multi(ls.model, L, pts, opts);
      } else {
        require(!opts.mode || *opts.mode != ObstructionMode::Thm33, Errc::Parse,
                "mode thm33 requires --points label:k[,label:k...]");
        const PointDatum* pd = nullptr;
        if (certify->count("--point")) {
          pd = ls.model.find_point(c_point);
          require(pd != nullptr, Errc::Parse,
                  "no point '" + c_point + "' on model '" + ls.model.name + "'");
        } else {
          require(!ls.model.points.empty(), Errc::EmptyModel,
                  "model '" + ls.model.name + "' declares no points; add one or pass --point");
          pd = &ls.model.points.front();
        }
        cert = certify_jets(ls.model, L, *pd, c_k, opts);
      }
      int code = cert.verdict == Verdict::Certified ? 0 : 2;
      return detail::finish(out, em, json_of(ls.model, cert),
                            [&](std::ostream& o) { render_text(o, ls.model, cert); }, code);
    }

    if (*seshadri_cmd) {
      auto lb = detail::resolve_blowup_arg(s_blowup, em.inputs, err);
      SurfaceModel shell = downstairs_shell(lb);
      DivisorClass L = parse_class(shell, s_L);
      SeshadriValue sv = seshadri(lb.model, L, &shell);
      return detail::finish(out, em, json_of(sv),
                            [&](std::ostream& o) { render_text(o, sv); }, 0);
    }

    if (*zariski_cmd) {
      auto ls = detail::resolve_surface_arg(z_model, em.inputs, err);
      DivisorClass D = parse_class(ls.model, z_D);
      ZariskiPair z = zariski_decompose(ls.model, D);
      return detail::finish(out, em, json_of(ls.model, z),
                            [&](std::ostream& o) { render_text(o, ls.model, z); }, 0);
    }

    if (*pseff_cmd) {
      auto ls = detail::resolve_surface_arg(p_model, em.inputs, err);
      DivisorClass D = parse_class(ls.model, p_D);
      PseffResult r = is_pseudoeffective(ls.model, D);
      return detail::finish(out, em, json_of(ls.model, r),
                            [&](std::ostream& o) { render_text(o, ls.model, r); },
                            r.pseudoeffective ? 0 : 2);
    }

    if (*cl_colength) {
      GermIdeal I(germ_f, germ_g);
      Int c = colength(I);
      Json j{{"f", germ_f}, {"g", germ_g}, {"colength", to_string(c)}};
      return detail::finish(out, em, j,
                            [&](std::ostream& o) { o << "colength: " << to_string(c) << "\n"; },
                            0);
    }

    if (*cl_noether) {
      GermIdeal I(n_f, n_g);
      NoetherOutcome n = noether_degree(I);
      Json j = json_of(n, cl_tree);
      j["f"] = n_f;
      j["g"] = n_g;
      return detail::finish(out, em, j,
                            [&](std::ostream& o) {
                              o << "degree: " << to_string(n.degree) << "\n";
                              o << "multiplicity sum: " << to_string(n.multiplicity_sum) << "\n";
                              o << "nodes: " << to_string(n.node_count) << "\n";
                              if (cl_tree) render_tree(o, n.tree, 0);
                            },
                            0);
    }

    if (*cl_contains) {
      GermIdeal I(ct_f, ct_g);
      bool yes = contains_power(I, ct_n);
      Json j{{"f", ct_f}, {"g", ct_g}, {"n", ct_n}, {"power", ct_n + 1}, {"contains", yes}};
      return detail::finish(out, em, j,
                            [&](std::ostream& o) {
                              o << "contains m^" << (ct_n + 1) << ": " << (yes ? "yes" : "no")
                                << "\n";
                            },
                            yes ? 0 : 2);
    }

    if (*cl_ln) {
      if (!ln_certify) {
        Int v = l_n(ln_n);
        Json j{{"n", ln_n}, {"l_n", to_string(v)}};
        return detail::finish(out, em, j,
                              [&](std::ostream& o) {
                                o << "l_" << ln_n << " = " << to_string(v) << "\n";
                              },
                              0);
      }
      SearchSpec spec;
      if (ln_seed_opt->count()) spec.seed = ln_seed;
      em.seed = spec.seed;
      LnReport rep = l_n_certify(ln_n, spec);
      return detail::finish(out, em, json_of(rep),
                            [&](std::ostream& o) { render_text(o, rep); }, rep.ok ? 0 : 2);
    }

    if (*cl_star) {
      StarReport rep = star_inequality(static_cast<int>(star_k));
      return detail::finish(out, em, json_of(rep),
                            [&](std::ostream& o) { render_text(o, rep); }, 0);
    }

    if (*thresholds) {
      require(th_cor == 42 || th_cor == 43, Errc::Parse, "--cor must be 42 or 43");
      if (th_cor == 42) {
        Cor42Result r =
            threshold_cor42(th_k, th_r, jetample::detail::parse_rational_token(th_Asq, 0));
        return detail::finish(out, em, json_of(r),
                              [&](std::ostream& o) {
                                o << "n_from: " << r.n_from << "\n";
                                for (const auto& a : r.assumptions)
                                  o << "assumption: " << a << "\n";
                              },
                              0);
      }
      Cor43Result r = threshold_cor43(th_k);
      return detail::finish(out, em, json_of(r),
                            [&](std::ostream& o) {
                              o << "spanned_from: " << r.spanned_from << "\n";
                              o << "ample_from: " << r.ample_from << "\n";
                              for (const auto& a : r.assumptions) o << "assumption: " << a << "\n";
                            },
                            0);
    }

    if (*ca_verify) {
      CampedelliReport rep = campedelli_verify();
      return detail::finish(out, em, json_of(rep),
                            [&](std::ostream& o) { render_text(o, rep); }, rep.all_ok ? 0 : 2);
    }

    if (*ca_orbit) {
      BiPoint p = parse_bipoint(orbit_point);
      std::vector<BiPoint> orb = orbit(p);
      Json j;
      j["point"] = to_string(p);
      Json items = Json::array();
      for (const auto& q : orb) items.push_back(to_string(q));
      j["orbit"] = items;
      j["size"] = orb.size();
      return detail::finish(out, em, j,
                            [&](std::ostream& o) {
                              for (const auto& q : orb) o << to_string(q) << "\n";
                              o << "size: " << orb.size() << "\n";
                            },
                            0);
    }

    if (*co_list) {
      for (const auto& e : corpus_files()) out << e.name << "\n";
      out << "germs.corpus\n";
      return 0;
    }

    if (*co_show) {
      if (show_name == "germs.corpus") {
        out << corpus_germs_text();
        return 0;
      }
      const CorpusEntry* e = corpus_find(show_name);
      require(e != nullptr, Errc::Parse, "no bundled entry named '" + show_name + "'");
      out << e->content;
      return 0;
    }

    if (*co_export) {
      std::filesystem::create_directories(export_dir);
      auto write_one = [&](const std::string& name, const std::string& content) {
        std::filesystem::path p = std::filesystem::path(export_dir) / name;
        std::ofstream f(p, std::ios::binary);
        require(static_cast<bool>(f), Errc::Parse, "cannot write '" + p.string() + "'");
        f << content;
        out << "wrote " << p.string() << "\n";
      };
      for (const auto& e : corpus_files()) write_one(e.name, e.content);
      write_one("germs.corpus", corpus_germs_text());
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  err << "error: no subcommand dispatched\n";
  return 1;
}

}  // namespace jetample::cli
