#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "jetample/cli.hpp"
#include "jetample/corpus.hpp"
#include "jetample/surface_io.hpp"

using namespace jetample;

namespace {

struct RunOut {
  int code;
  std::string out, err;
};

RunOut run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::Domain;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto dir = std::filesystem::temp_directory_path() / "jetample-cli-tests";
  std::filesystem::create_directories(dir);
  auto p = dir / name;
  std::ofstream f(p, std::ios::binary);
  f << content;
  return p;
}

}  // namespace

TEST_CASE("every bundled entry round-trips through its serializer") {
  for (const auto& e : corpus_files()) {
    INFO(e.name);
    if (e.name.ends_with(".blow")) {
      LoadedBlowup lb = parse_blowup(e.content, e.name);
      CHECK(serialize_blowup(lb) == e.content);
      CHECK(lb.digest == fnv1a64(e.content));
    } else {
      LoadedSurface ls = parse_surface(e.content, e.name);
      CHECK(serialize_surface(ls.model) == e.content);
      CHECK(ls.digest == fnv1a64(e.content));
    }
  }
}

TEST_CASE("class expressions resolve coefficients, labels, and signs") {
  SurfaceModel p2 = parse_surface(corpus_find("p2.surf")->content, "p2").model;
  SurfaceModel blp2 = parse_surface(corpus_find("blp2.surf")->content, "blp2").model;
  SurfaceModel cone = parse_surface(corpus_find("duval_a1.surf")->content, "cone").model;

  CHECK(parse_class(p2, "4").coords == Vec{Rational(4)});
  CHECK(parse_class(p2, "0").coords == Vec{Rational(0)});
  CHECK(parse_class(p2, "-3*H").coords == Vec{Rational(-3)});
  CHECK(parse_class(blp2, "3H - 2E").coords == Vec{Rational(3), Rational(-2)});
  CHECK(parse_class(blp2, "-3*H + E").coords == Vec{Rational(-3), Rational(1)});
  CHECK(parse_class(blp2, "H").coords == Vec{Rational(1), Rational(0)});
  CHECK(parse_class(blp2, "E - H + 2H").coords == Vec{Rational(1), Rational(1)});
  CHECK(parse_class(cone, "1/2*l").coords == Vec{Rational(1, 2)});
  CHECK(parse_class(cone, "3/2 l").coords == Vec{Rational(3, 2)});

  CHECK(code_of([&] { parse_class(blp2, "4"); }) == Errc::Parse);
  CHECK(code_of([&] { parse_class(p2, "4Q"); }) == Errc::Parse);
  CHECK(code_of([&] { parse_class(p2, ""); }) == Errc::Parse);
  CHECK(code_of([&] { parse_class(p2, "H H"); }) == Errc::Parse);
  CHECK(code_of([&] { parse_class(p2, "+"); }) == Errc::Parse);

  // round-trip against the renderer
  for (const std::string expr : {"3*H - 2*E", "-3*H + E", "H", "0"}) {
    CHECK(class_to_string(blp2, parse_class(blp2, expr).coords) == expr);
  }
}

TEST_CASE("surface files reject malformed input with line diagnostics") {
  auto parse = [](const std::string& text) { return parse_surface(text, "t"); };
  CHECK(code_of([&] { parse(""); }) == Errc::Parse);
  CHECK(code_of([&] { parse("surface t\nbasis H\ncanonical 0\n"); }) == Errc::Parse);
  CHECK(code_of([&] { parse("surface t\nbasis H\ngram\n1\n"); }) == Errc::Parse);
  CHECK(code_of([&] { parse("surface t\ngram\n1\n"); }) == Errc::Parse);
  CHECK(code_of([&] { parse("surface t\nbasis H\ngram\n1 0\ncanonical 0\n"); }) == Errc::Parse);
  CHECK(code_of([&] { parse("surface t\nbasis H\ngram\nx\ncanonical 0\n"); }) == Errc::Parse);
  CHECK(code_of([&] { parse("surface t\nbasis H\ngram\n1\ncanonical 0\nnonsense 1\n"); }) ==
        Errc::Parse);
  CHECK(code_of([&] { parse("surface t\nbasis H\ngram\n1\ncanonical 0\npoint p odd\n"); }) ==
        Errc::Parse);
  CHECK(code_of([&] { parse("surface t\nbasis H\ngram\n1\ncanonical 0\npoint p an x\n"); }) ==
        Errc::Parse);
  CHECK(code_of([&] { parse("surface t\nbasis H E\ngram\n1 0\n0 1\ncanonical 0\n"); }) ==
        Errc::Signature);
  CHECK(code_of([&] { parse("surface t\nbasis H-E\ngram\n1\ncanonical 0\n"); }) == Errc::Parse);
  CHECK(code_of([&] { parse("surface t\nbasis H\ngram\n1\ncanonical 0\ncartier 0\n"); }) ==
        Errc::Parse);

  // comments and blank lines are ignored; 'an 2' builds the two-vertex chain
  LoadedSurface ok = parse(
      "# model\nsurface t\n\nbasis H  # line\ngram\n1\ncanonical -3H\npoint v an 2\n");
  REQUIRE(ok.model.points.size() == 1);
  REQUIRE_FALSE(ok.model.points[0].smooth());
  CHECK(ok.model.points[0].graph->size() == 2);
  CHECK(ok.model.points[0].graph->egram(0, 1) == 1);
}

TEST_CASE("blow-up files validate the pullback against both lattices") {
  const std::string good = corpus_find("blp2.blow")->content;
  LoadedBlowup lb = parse_blowup(good, "t");
  CHECK(lb.model.base.name == "blp2");
  CHECK(lb.downstairs_labels == std::vector<std::string>{"H"});
  CHECK(lb.model.exceptional.coords == Vec{Rational(0), Rational(1)});

  auto mutate = [&](const std::string& from, const std::string& to) {
    std::string t = good;
    t.replace(t.find(from), from.size(), to);
    return t;
  };
  // wrong pullback arity: three rows against a rank-two upstairs lattice
  CHECK(code_of([&] { parse_blowup(mutate("pullback\n1\n0\n", "pullback\n1\n0\n0\n"), "t"); }) ==
        Errc::Parse);
  // pullback no longer preserves the downstairs form
  CHECK(code_of([&] { parse_blowup(mutate("pullback\n1\n0\n", "pullback\n1\n1\n"), "t"); }) ==
        Errc::Domain);
  // center with nonnegative self-intersection
  CHECK(code_of([&] { parse_blowup(mutate("exceptional E", "exceptional H"), "t"); }) ==
        Errc::Domain);
  CHECK(code_of([&] { parse_blowup("blowup t\n", "t"); }) == Errc::Parse);
}

TEST_CASE("cli: cluster commands print values and exit by verdict") {
  RunOut ln = run_cli({"cluster", "ln", "--n", "3"});
  CHECK(ln.code == 0);
  CHECK(contains(ln.out, "l_3 = 6"));

  RunOut col = run_cli({"cluster", "colength", "y^2 - x^3", "x"});
  CHECK(col.code == 0);
  CHECK(contains(col.out, "colength: 2"));

  RunOut noe = run_cli({"cluster", "noether", "y^2 - x^3", "y - x^2", "--tree"});
  CHECK(noe.code == 0);
  CHECK(contains(noe.out, "degree: 3"));
  CHECK(contains(noe.out, "origin: multiplicities (2, 1)"));

  CHECK(run_cli({"cluster", "contains", "x^2", "y^3", "--n", "3"}).code == 0);
  RunOut no = run_cli({"cluster", "contains", "x^2", "y^3", "--n", "2"});
  CHECK(no.code == 2);
  CHECK(contains(no.out, "contains m^3: no"));

  RunOut star = run_cli({"cluster", "star", "--k", "1"});
  CHECK(star.code == 0);
  CHECK(contains(star.out, "equality at partition (1 1)"));

  RunOut cert = run_cli({"cluster", "ln", "--n", "2", "--certify", "--seed", "11"});
  CHECK(cert.code == 0);
  CHECK(contains(cert.out, "seed: 11"));
  CHECK(contains(cert.out, "certified: yes"));
}

TEST_CASE("cli: certify verdicts map to exit codes") {
  RunOut green = run_cli({"certify", "--model", "p2.surf", "--L", "4", "--k", "1"});
  CHECK(green.code == 0);
  CHECK(contains(green.out, "verdict: certified"));
  CHECK(contains(green.out, "input p2.surf: fnv1a64:"));

  RunOut red = run_cli({"certify", "--model", "p2.surf", "--L", "5", "--k", "2"});
  CHECK(red.code == 2);
  CHECK(contains(red.out, "verdict: obstructions"));
  CHECK(contains(red.out, "candidate: H"));

  RunOut boundary = run_cli(
      {"certify", "--model", "p2.surf", "--L", "3", "--k", "1", "--blowup", "blp2.blow"});
  CHECK(boundary.code == 2);
  CHECK(contains(boundary.out, "verdict: boundary-seshadri"));
  CHECK(contains(boundary.out, "seshadri: 3"));

  RunOut multi = run_cli({"certify", "--model", "p2.surf", "--L", "7", "--points", "p:1,q:1"});
  CHECK(multi.code == 0);
  CHECK(contains(multi.out, "mode: thm33"));
  CHECK(contains(multi.out, "threshold: 18"));

  RunOut cone = run_cli({"certify", "--model", "duval_a1.surf", "--L", "6l", "--k", "1",
                         "--point", "v"});
  CHECK(cone.code == 0);
  CHECK(contains(cone.out, "verdict: certified"));

  // argument validation
  CHECK(run_cli({"certify", "--model", "p2.surf", "--L", "4"}).code == 1);
  CHECK(run_cli({"certify", "--model", "p2.surf", "--L", "4", "--k", "1", "--point", "zz"}).code ==
        1);
  CHECK(run_cli({"certify", "--model", "p2.surf", "--L", "4", "--k", "1", "--mode", "thm33"})
            .code == 1);
  CHECK(run_cli({"certify", "--model", "p2.surf", "--L", "4", "--points", "p:1", "--point", "p"})
            .code == 1);
  CHECK(run_cli({"certify", "--model", "p2.surf", "--L", "4", "--points", "p"}).code == 1);
  // a blow-up over the wrong downstairs lattice is refused
  CHECK(run_cli({"certify", "--model", "k3_pencil.surf", "--L", "3E + G", "--k", "0", "--blowup",
                 "blp2.blow"})
            .code == 1);
}

TEST_CASE("cli: seshadri, zariski, and pseff surface the engine results") {
  RunOut sesh = run_cli({"seshadri", "--blowup", "blp2.blow", "--L", "3"});
  CHECK(sesh.code == 0);
  CHECK(contains(sesh.out, "seshadri: 3  (witness curve H-E)"));

  RunOut k3 = run_cli({"seshadri", "--blowup", "k3_pencil.blow", "--L", "3E + G"});
  CHECK(k3.code == 0);
  CHECK(contains(k3.out, "seshadri: 1/2  (witness curve F~)"));

  RunOut zar = run_cli({"zariski", "--model", "blp2.surf", "--D", "H + E"});
  CHECK(zar.code == 0);
  CHECK(contains(zar.out, "positive: H"));
  CHECK(contains(zar.out, "curve E with multiplicity 1"));

  CHECK(run_cli({"zariski", "--model", "blp2.surf", "--D", "H - 2E"}).code == 1);

  CHECK(run_cli({"pseff", "--model", "blp2.surf", "--D", "H"}).code == 0);
  CHECK(run_cli({"pseff", "--model", "blp2.surf", "--D", "H - 2E"}).code == 2);
}

TEST_CASE("cli: thresholds and campedelli") {
  RunOut c42 = run_cli({"thresholds", "--cor", "42", "--k", "1", "--r", "2", "--Asq", "2"});
  CHECK(c42.code == 0);
  CHECK(contains(c42.out, "n_from: 4"));
  RunOut c42b = run_cli({"thresholds", "--cor", "42", "--k", "1", "--r", "2", "--Asq", "1"});
  CHECK(contains(c42b.out, "n_from: 5"));
  RunOut c43 = run_cli({"thresholds", "--cor", "43", "--k", "3"});
  CHECK(c43.code == 0);
  CHECK(contains(c43.out, "spanned_from: 5"));
  CHECK(contains(c43.out, "ample_from: 8"));
  CHECK(run_cli({"thresholds", "--cor", "40", "--k", "1"}).code == 1);

  RunOut verify = run_cli({"campedelli", "verify"});
  CHECK(verify.code == 0);
  CHECK(contains(verify.out, "all cases: ok"));
  CHECK(contains(verify.out, "1-jet spanned but not 1-jet ample"));

  RunOut orb = run_cli({"campedelli", "orbit", "([0,0,1],[1,-1,0])"});
  CHECK(orb.code == 0);
  CHECK(contains(orb.out, "size: 9"));
  CHECK(run_cli({"campedelli", "orbit", "([0,0,0],[1,1,1])"}).code == 1);
}

TEST_CASE("cli: corpus listing, show, and export round-trip") {
  RunOut list = run_cli({"corpus", "list"});
  CHECK(list.code == 0);
  for (const auto& e : corpus_files()) CHECK(contains(list.out, e.name));
  CHECK(contains(list.out, "germs.corpus"));

  RunOut show = run_cli({"corpus", "show", "p2.surf"});
  CHECK(show.out == corpus_find("p2.surf")->content);
  CHECK(run_cli({"corpus", "show", "nope.surf"}).code == 1);

  RunOut germs = run_cli({"corpus", "show", "germs.corpus"});
  CHECK(contains(germs.out, "y ; x^3 ; 3"));

  auto dir = std::filesystem::temp_directory_path() / "jetample-cli-tests" / "export";
  std::filesystem::remove_all(dir);
  RunOut ex = run_cli({"corpus", "export", "--dir", dir.string()});
  CHECK(ex.code == 0);
  LoadedSurface reloaded = load_surface((dir / "p2.surf").string());
  CHECK(reloaded.digest == fnv1a64(corpus_find("p2.surf")->content));
  CHECK(std::filesystem::exists(dir / "germs.corpus"));
}

TEST_CASE("cli: reports are deterministic and json mirrors the text fields") {
  std::vector<std::string> args = {"certify", "--model", "p2.surf", "--L",
                                   "6",       "--k",     "3",       "--emit", "json"};
  RunOut a = run_cli(args);
  RunOut b = run_cli(args);
  CHECK(a.out == b.out);
  CHECK(a.code == 2);

  Json j = Json::parse(a.out);
  CHECK(j["command"][0] == "certify");
  CHECK(j["inputs"]["p2.surf"] == "fnv1a64:" + fnv1a64(corpus_find("p2.surf")->content));
  CHECK(j["result"]["verdict"] == "obstructions");
  CHECK(j["result"]["mode"] == "cor32");
  CHECK(j["result"]["threshold"] == "25");
  CHECK(j["result"]["l_k"] == "6");
  CHECK(j["result"]["candidates"].size() == 1);
  CHECK(j["result"]["candidates"][0]["class"] == "H");
  CHECK_FALSE(j.contains("wall_ms"));
  CHECK_FALSE(j.contains("seed"));

  // the same run as text names the same verdict and candidate
  RunOut text = run_cli({"certify", "--model", "p2.surf", "--L", "6", "--k", "3"});
  CHECK(contains(text.out, "verdict: obstructions"));
  CHECK(contains(text.out, "candidate: H"));

  RunOut timed = run_cli({"certify", "--model", "p2.surf", "--L", "6", "--k", "3", "--timing"});
  CHECK(contains(timed.out, "wall_ms: "));

  RunOut seeded = run_cli({"cluster", "ln", "--n", "1", "--certify", "--seed", "5", "--emit",
                           "json"});
  Json js = Json::parse(seeded.out);
  CHECK(js["seed"] == 5);
  CHECK(js["result"]["ok"] == true);
}

TEST_CASE("cli: errors land on stderr with exit 1") {
  RunOut missing = run_cli({"certify", "--model", "nosuch.surf", "--L", "4", "--k", "1"});
  CHECK(missing.code == 1);
  CHECK(missing.out.empty());
  CHECK(contains(missing.err, "neither a readable file nor a bundled model"));

  auto bad = temp_file("bad.surf", "surface b\nbasis A B\ngram\n1 0\n0 1\ncanonical 0\n");
  RunOut sig = run_cli({"pseff", "--model", bad.string(), "--D", "A"});
  CHECK(sig.code == 1);
  CHECK(contains(sig.err, "signature"));

  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"frobnicate"}).code == 1);
}
