#pragma once
// Bundled models and germ pairs: a small corpus the binary carries so runs
// are reproducible without external files. Surface/blow-up entries are in
// the canonical text form produced by the serializers.

#include <string>
#include <vector>

namespace jetample {

struct CorpusEntry {
  std::string name;     // file-style name, e.g. "p2.surf"
  std::string content;  // parseable by parse_surface / parse_blowup
};

inline const std::vector<CorpusEntry>& corpus_files() {
  static const std::vector<CorpusEntry> files = {
      {"p2.surf",
       R"(surface p2
basis H
gram
1
canonical -3*H
curve H H
point p smooth
point q smooth
flag smooth
)"},
      {"blp2.surf",
       R"(surface blp2
basis H E
gram
1 0
0 -1
canonical -3*H + E
curve E E
curve H-E H - E
point x smooth
flag smooth
)"},
      {"k3_pencil.surf",
       R"(surface k3-pencil
basis E G
gram
0 1
1 -2
canonical 0
curve E E
curve G G
point s smooth
flag minimal-kodaira-0
flag smooth
)"},
      {"duval_a1.surf",
       R"(surface quadric-cone
basis l
gram
1/2
canonical -4*l
cartier 2
curve l l
point v graph 1
-2
point w smooth
flag duval
flag gorenstein
)"},
      {"p123.surf",
       R"(surface p123
basis l
gram
1/6
canonical -6*l
cartier 6
curve l l
point a1 graph 1
-2
point a2 graph 2
-2 1
1 -2
point w smooth
flag duval
flag gorenstein
)"},
      {"blp2.blow",
       R"(blowup blp2
downstairs-basis H
downstairs-gram
1
pullback
1
0
exceptional E
surface blp2
basis H E
gram
1 0
0 -1
canonical -3*H + E
curve E E
curve H-E H - E
point x smooth
flag smooth
)"},
      {"k3_pencil.blow",
       R"(blowup k3-pencil-node
downstairs-basis E G
downstairs-gram
0 1
1 -2
pullback
1 0
0 1
0 0
exceptional x
surface k3-blown
basis e g x
gram
0 1 0
1 -2 0
0 0 -1
canonical x
curve F~ e - 2*x
curve G~ g
curve X1 x
flag smooth
)"},
      {"duval_a1.blow",
       R"(blowup quadric-cone-resolution
downstairs-basis l
downstairs-gram
1/2
pullback
1/2
1
exceptional s
surface f2
basis s f
gram
-2 1
1 0
canonical -2*s - 4*f
curve S s
curve F f
flag smooth
)"},
  };
  return files;
}

inline const CorpusEntry* corpus_find(const std::string& name) {
  for (const auto& e : corpus_files()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

// Germ pairs with hand-checked local intersection numbers; every pair is a
// complete intersection at the origin, so the staircase colength and the
// blow-up tree degree must agree on all of them.
struct GermPair {
  std::string f, g;
  long colength;
};

inline const std::vector<GermPair>& corpus_germs() {
  static const std::vector<GermPair> germs = {
      {"y", "x^3", 3},
      {"y^2 - x^3", "x", 2},
      {"y - x^2", "y^2", 4},
      {"x^2", "y^3", 6},
      {"x", "y", 1},
      {"x", "y^2", 2},
      {"x^2", "y^2", 4},
      {"y^2 - x^3", "y", 3},
      {"y^2 - x^3", "x + y", 2},
      {"y^2 - x^3", "y - x^2", 3},
      {"y^2 - x^5", "y", 5},
      {"y^2 - x^5", "x", 2},
      {"y^2 - x^5", "y - x^2", 4},
      {"x*y", "x + y", 2},
      {"x*y", "x - y", 2},
      {"x^2 - y^3", "y^2 - x^3", 4},
      {"y^3 - x^4", "y", 4},
      {"y^3 - x^4", "x", 3},
      {"y^3 - x^4", "y - x^2", 4},
      {"y^2 + x^4", "y - x^2", 4},
      {"y^2 - x^2", "y - x^3", 2},
      {"(x + y)^2 - x^3", "x - y", 2},
      {"x^3", "y^3", 9},
      {"x^2*y + y^3 + x^5", "x^2", 6},
      {"2*x + 3*y + x^2", "5*y + y^2 + x^3", 1},
      {"x + y^2", "y + x^2", 1},
      {"x^2 + y^3", "x^3 + y^2", 4},
      {"y^4 - x^4", "x + 2*y", 4},
  };
  return germs;
}

inline std::string corpus_germs_text() {
  std::string out;
  for (const auto& g : corpus_germs()) {
    out += g.f;
    out += " ; ";
    out += g.g;
    out += " ; ";
    out += std::to_string(g.colength);
    out += "\n";
  }
  return out;
}

}  // namespace jetample
