#pragma once
// Text formats for surface and blow-up models, class expressions over a
// model's basis, and content digests for run reports.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "certify.hpp"
#include "errors.hpp"
#include "rational.hpp"
#include "resolution.hpp"
#include "surface.hpp"

namespace jetample {

// FNV-1a over the raw bytes; stable across runs, changes iff the file does.
inline std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

namespace detail {

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '~' || c == '\'';
}

inline Rational parse_rational_token(const std::string& tok, long line) {
  std::size_t slash = tok.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(tok));
    Int num(tok.substr(0, slash));
    Int den(tok.substr(slash + 1));
    require(den != 0, Errc::Parse, "line " + std::to_string(line) + ": zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    fail(Errc::Parse, "line " + std::to_string(line) + ": expected a rational, got '" + tok + "'");
  }
}

inline long parse_long(const std::string& tok, long line) {
  try {
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    require(used == tok.size(), Errc::Parse,
            "line " + std::to_string(line) + ": expected an integer, got '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    fail(Errc::Parse, "line " + std::to_string(line) + ": expected an integer, got '" + tok + "'");
  }
}

struct SourceLine {
  long number = 0;
  std::string text;  // comment-stripped, trimmed
};

inline std::vector<SourceLine> significant_lines(const std::string& text) {
  std::vector<SourceLine> out;
  std::istringstream in(text);
  std::string raw;
  long no = 0;
  while (std::getline(in, raw)) {
    ++no;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::size_t b = raw.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = raw.find_last_not_of(" \t\r");
    out.push_back({no, raw.substr(b, e - b + 1)});
  }
  return out;
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace detail

// Class expression over the model's basis labels: signed terms like
// "3H - 2E", "1/2*l", "-3*H + E". A bare number is accepted only on
// rank-one lattices (and "0" anywhere).
inline DivisorClass parse_class(const SurfaceModel& m, const std::string& text) {
  Vec coords(m.rank(), Rational(0));
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto number = [&]() -> std::string {
    std::size_t b = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i < n && text[i] == '/') {
      ++i;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    }
    return text.substr(b, i - b);
  };
  skip();
  require(i < n, Errc::Parse, "empty class expression");
  bool first = true;
  while (true) {
    skip();
    if (i >= n) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else {
      require(first, Errc::Parse, "expected '+' or '-' in class expression near '" +
                                      text.substr(i) + "'");
    }
    first = false;
    Rational coef(1);
    bool saw_number = false;
    if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coef = detail::parse_rational_token(number(), 0);
      saw_number = true;
      skip();
      if (i < n && text[i] == '*') {
        ++i;
        skip();
      }
    }
    if (i < n && detail::ident_start(text[i])) {
      std::size_t b = i;
      while (i < n && detail::ident_char(text[i])) ++i;
      std::string label = text.substr(b, i - b);
      std::size_t idx = m.basis_labels.size();
      for (std::size_t j = 0; j < m.basis_labels.size(); ++j) {
        if (m.basis_labels[j] == label) idx = j;
      }
      require(idx < m.basis_labels.size(), Errc::Parse,
              "unknown basis label '" + label + "' on model '" + m.name + "'");
      coords[idx] += sign * coef;
    } else {
      require(saw_number, Errc::Parse, "expected a term in class expression");
      if (coef == 0) continue;  // "0" is the zero class on any lattice
      require(m.rank() == 1, Errc::Parse,
              "bare coefficient '" + to_string(coef) +
                  "' needs a basis label on a rank-" + std::to_string(m.rank()) + " lattice");
      coords[0] += sign * coef;
    }
  }
  return make_class(m, coords);
}

struct LoadedSurface {
  SurfaceModel model;
  ModelDiagnostics diagnostics;  // warnings survive; errors have already thrown
  std::string digest;            // fnv1a64 of the source bytes
  std::string source;            // path or corpus entry name
};

namespace detail {

// Shared with the blow-up reader, which embeds a surface block as its tail.
inline SurfaceModel parse_surface_lines(const std::vector<SourceLine>& lines, std::size_t from) {
  SurfaceModel m;
  require(from < lines.size(), Errc::Parse, "empty surface description");
  {
    auto toks = split_ws(lines[from].text);
    require(toks.size() == 2 && toks[0] == "surface", Errc::Parse,
            "line " + std::to_string(lines[from].number) + ": expected 'surface <name>'");
    m.name = toks[1];
  }
  bool gram_seen = false, canonical_seen = false;
  std::size_t i = from + 1;
  auto need_basis = [&](long line) {
    require(!m.basis_labels.empty(), Errc::Parse,
            "line " + std::to_string(line) + ": 'basis' must come first");
  };
  auto read_matrix_rows = [&](std::size_t rows, std::size_t cols, long at) {
    Mat g(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      require(i < lines.size(), Errc::Parse,
              "line " + std::to_string(at) + ": expected " + std::to_string(rows) +
                  " matrix rows");
      auto row = split_ws(lines[i].text);
      require(row.size() == cols, Errc::Parse,
              "line " + std::to_string(lines[i].number) + ": expected " + std::to_string(cols) +
                  " entries");
      for (std::size_t c = 0; c < cols; ++c) g(r, c) = parse_rational_token(row[c], lines[i].number);
      ++i;
    }
    return g;
  };
  while (i < lines.size()) {
    const long at = lines[i].number;
    auto toks = split_ws(lines[i].text);
    const std::string& key = toks[0];
    ++i;
    if (key == "basis") {
      require(m.basis_labels.empty(), Errc::Parse,
              "line " + std::to_string(at) + ": duplicate 'basis'");
      require(toks.size() >= 2, Errc::Parse, "line " + std::to_string(at) + ": empty basis");
      for (std::size_t t = 1; t < toks.size(); ++t) {
        const std::string& lab = toks[t];
        bool ok = ident_start(lab[0]);
        for (char c : lab) ok = ok && ident_char(c);
        require(ok, Errc::Parse, "line " + std::to_string(at) + ": basis label '" + lab +
                                     "' must be identifier-shaped");
        m.basis_labels.push_back(lab);
      }
    } else if (key == "gram") {
      need_basis(at);
      require(!gram_seen, Errc::Parse, "line " + std::to_string(at) + ": duplicate 'gram'");
      m.gram = read_matrix_rows(m.basis_labels.size(), m.basis_labels.size(), at);
      gram_seen = true;
    } else if (key == "canonical") {
      need_basis(at);
      require(toks.size() >= 2, Errc::Parse, "line " + std::to_string(at) + ": empty canonical");
      canonical_seen = true;
      std::string expr = lines[i - 1].text.substr(std::string("canonical").size());
      m.canonical = parse_class(m, expr).coords;
    } else if (key == "cartier") {
      need_basis(at);
      require(toks.size() == m.basis_labels.size() + 1, Errc::Parse,
              "line " + std::to_string(at) + ": 'cartier' needs one modulus per basis element");
      for (std::size_t t = 1; t < toks.size(); ++t) {
        try {
          m.cartier_moduli.push_back(Int(toks[t]));
        } catch (const std::runtime_error&) {
          fail(Errc::Parse, "line " + std::to_string(at) + ": bad modulus '" + toks[t] + "'");
        }
        require(m.cartier_moduli.back() > 0, Errc::Parse,
                "line " + std::to_string(at) + ": moduli must be positive");
      }
    } else if (key == "curve") {
      need_basis(at);
      require(toks.size() >= 3, Errc::Parse,
              "line " + std::to_string(at) + ": expected 'curve <label> <class>'");
      std::string rest = lines[i - 1].text;
      std::size_t p = rest.find(toks[1], std::string("curve").size());
      std::string expr = rest.substr(p + toks[1].size());
      m.curves.push_back({parse_class(m, expr), toks[1]});
    } else if (key == "point") {
      require(toks.size() >= 3, Errc::Parse,
              "line " + std::to_string(at) + ": expected 'point <label> smooth|an <n>|graph <n>'");
      PointDatum pt;
      pt.label = toks[1];
      if (toks[2] == "smooth") {
        require(toks.size() == 3, Errc::Parse,
                "line " + std::to_string(at) + ": trailing tokens after 'smooth'");
      } else if (toks[2] == "an") {
        require(toks.size() == 4, Errc::Parse,
                "line " + std::to_string(at) + ": expected 'an <n>'");
        long len = parse_long(toks[3], at);
        require(len >= 1, Errc::Parse, "line " + std::to_string(at) + ": chain length >= 1");
        pt.graph = du_val_chain(static_cast<std::size_t>(len));
      } else if (toks[2] == "graph") {
        require(toks.size() == 4, Errc::Parse,
                "line " + std::to_string(at) + ": expected 'graph <n>'");
        long sz = parse_long(toks[3], at);
        require(sz >= 1, Errc::Parse, "line " + std::to_string(at) + ": graph size >= 1");
        ResolutionGraph g;
        g.egram = read_matrix_rows(static_cast<std::size_t>(sz), static_cast<std::size_t>(sz), at);
        if (i < lines.size() && split_ws(lines[i].text)[0] == "genera") {
          auto gt = split_ws(lines[i].text);
          require(gt.size() == static_cast<std::size_t>(sz) + 1, Errc::Parse,
                  "line " + std::to_string(lines[i].number) + ": one genus per vertex");
          for (std::size_t t = 1; t < gt.size(); ++t) g.genera.push_back(parse_long(gt[t], lines[i].number));
          ++i;
        }
        pt.graph = std::move(g);
      } else {
        fail(Errc::Parse, "line " + std::to_string(at) + ": unknown point kind '" + toks[2] + "'");
      }
      m.points.push_back(std::move(pt));
    } else if (key == "flag") {
      require(toks.size() == 2, Errc::Parse, "line " + std::to_string(at) + ": expected 'flag <name>'");
      m.flags.insert(toks[1]);
    } else {
      fail(Errc::Parse, "line " + std::to_string(at) + ": unknown directive '" + key + "'");
    }
  }
  require(gram_seen, Errc::Parse, "surface '" + m.name + "' has no 'gram' block");
  require(canonical_seen, Errc::Parse, "surface '" + m.name + "' has no 'canonical' class");
  // Cartier flags depend on the moduli, which may follow the curve lines.
  for (auto& c : m.curves) c.cls = make_class(m, c.cls.coords);
  return m;
}

}  // namespace detail

inline LoadedSurface parse_surface(const std::string& text, const std::string& source) {
  LoadedSurface out;
  out.model = detail::parse_surface_lines(detail::significant_lines(text), 0);
  out.digest = fnv1a64(text);
  out.source = source;
  out.diagnostics = validate_model(out.model);
  if (!out.diagnostics.ok) {
    std::string msg = source + ": ";
    for (std::size_t j = 0; j < out.diagnostics.errors.size(); ++j) {
      if (j) msg += "; ";
      msg += out.diagnostics.errors[j];
    }
    fail(Errc::Signature, msg);
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), Errc::Parse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline LoadedSurface load_surface(const std::string& path) {
  return parse_surface(read_file(path), path);
}

// A blow-up file carries the downstairs lattice (basis labels + gram), the
// pullback matrix, the center cycle, and the full upstairs surface block.
struct LoadedBlowup {
  std::string name;
  BlowupModel model;
  std::vector<std::string> downstairs_labels;
  ModelDiagnostics diagnostics;  // upstairs validation
  std::string digest;
  std::string source;
};

inline LoadedBlowup parse_blowup(const std::string& text, const std::string& source) {
  auto lines = detail::significant_lines(text);
  LoadedBlowup out;
  require(!lines.empty(), Errc::Parse, "empty blow-up description");
  std::size_t i = 0;
  {
    auto toks = detail::split_ws(lines[0].text);
    require(toks.size() == 2 && toks[0] == "blowup", Errc::Parse,
            "line " + std::to_string(lines[0].number) + ": expected 'blowup <name>'");
    out.name = toks[1];
    ++i;
  }
  std::string exceptional_expr;
  std::vector<Vec> pullback_rows;
  bool xgram_seen = false;
  while (i < lines.size()) {
    const long at = lines[i].number;
    auto toks = detail::split_ws(lines[i].text);
    const std::string& key = toks[0];
    if (key == "surface") break;  // upstairs block runs to end of file
    ++i;
    if (key == "downstairs-basis") {
      require(toks.size() >= 2 && out.downstairs_labels.empty(), Errc::Parse,
              "line " + std::to_string(at) + ": expected one 'downstairs-basis <labels...>'");
      out.downstairs_labels.assign(toks.begin() + 1, toks.end());
    } else if (key == "downstairs-gram") {
      require(!out.downstairs_labels.empty(), Errc::Parse,
              "line " + std::to_string(at) + ": 'downstairs-basis' must come first");
      std::size_t r = out.downstairs_labels.size();
      out.model.xgram = Mat(r, r);
      for (std::size_t a = 0; a < r; ++a) {
        require(i < lines.size(), Errc::Parse,
                "line " + std::to_string(at) + ": expected " + std::to_string(r) + " gram rows");
        auto row = detail::split_ws(lines[i].text);
        require(row.size() == r, Errc::Parse,
                "line " + std::to_string(lines[i].number) + ": expected " + std::to_string(r) +
                    " entries");
        for (std::size_t c = 0; c < r; ++c)
          out.model.xgram(a, c) = detail::parse_rational_token(row[c], lines[i].number);
        ++i;
      }
      xgram_seen = true;
    } else if (key == "pullback") {
      require(!out.downstairs_labels.empty(), Errc::Parse,
              "line " + std::to_string(at) + ": 'downstairs-basis' must come first");
      std::size_t cols = out.downstairs_labels.size();
      // rows are read until a non-numeric line; the count is checked against
      // the upstairs rank once the surface block is parsed
      while (i < lines.size()) {
        auto row = detail::split_ws(lines[i].text);
        if (!std::isdigit(static_cast<unsigned char>(row[0][0])) && row[0][0] != '-') break;
        require(row.size() == cols, Errc::Parse,
                "line " + std::to_string(lines[i].number) + ": expected " + std::to_string(cols) +
                    " entries");
        Vec v(cols);
        for (std::size_t c = 0; c < cols; ++c)
          v[c] = detail::parse_rational_token(row[c], lines[i].number);
        pullback_rows.push_back(std::move(v));
        ++i;
      }
      require(!pullback_rows.empty(), Errc::Parse,
              "line " + std::to_string(at) + ": empty pullback matrix");
    } else if (key == "exceptional") {
      require(toks.size() >= 2, Errc::Parse,
              "line " + std::to_string(at) + ": expected 'exceptional <class>'");
      exceptional_expr = lines[i - 1].text.substr(std::string("exceptional").size());
    } else {
      fail(Errc::Parse, "line " + std::to_string(at) + ": unknown directive '" + key + "'");
    }
  }
  require(xgram_seen, Errc::Parse, "blow-up '" + out.name + "' has no 'downstairs-gram'");
  require(!pullback_rows.empty(), Errc::Parse, "blow-up '" + out.name + "' has no 'pullback'");
  require(!exceptional_expr.empty(), Errc::Parse, "blow-up '" + out.name + "' has no 'exceptional'");
  require(i < lines.size(), Errc::Parse, "blow-up '" + out.name + "' has no upstairs 'surface' block");
  out.model.base = detail::parse_surface_lines(lines, i);
  out.diagnostics = validate_model(out.model.base);
  require(out.diagnostics.ok, Errc::Signature, source + ": upstairs surface fails validation");
  require(pullback_rows.size() == out.model.base.rank(), Errc::Parse,
          "pullback has " + std::to_string(pullback_rows.size()) + " rows; upstairs rank is " +
              std::to_string(out.model.base.rank()));
  out.model.pullback = Mat(pullback_rows.size(), out.downstairs_labels.size());
  for (std::size_t r = 0; r < pullback_rows.size(); ++r)
    for (std::size_t c = 0; c < out.downstairs_labels.size(); ++c)
      out.model.pullback(r, c) = pullback_rows[r][c];
  out.model.exceptional = parse_class(out.model.base, exceptional_expr);
  validate_blowup(out.model);
  out.digest = fnv1a64(text);
  out.source = source;
  return out;
}

inline LoadedBlowup load_blowup(const std::string& path) {
  return parse_blowup(read_file(path), path);
}

// Minimal downstairs lattice shell so classes can be parsed and paired
// without a full surface file (canonical is zero; no curves or points).
inline SurfaceModel downstairs_shell(const LoadedBlowup& lb) {
  SurfaceModel m;
  m.name = lb.name + "-downstairs";
  m.gram = lb.model.xgram;
  m.canonical = Vec(lb.downstairs_labels.size(), Rational(0));
  m.basis_labels = lb.downstairs_labels;
  return m;
}

inline std::string serialize_surface(const SurfaceModel& m) {
  std::ostringstream out;
  out << "surface " << m.name << "\n";
  out << "basis";
  for (const auto& l : m.basis_labels) out << " " << l;
  out << "\ngram\n";
  for (std::size_t r = 0; r < m.rank(); ++r) {
    for (std::size_t c = 0; c < m.rank(); ++c) out << (c ? " " : "") << to_string(m.gram(r, c));
    out << "\n";
  }
  out << "canonical " << class_to_string(m, m.canonical) << "\n";
  if (!m.cartier_moduli.empty()) {
    out << "cartier";
    for (const auto& q : m.cartier_moduli) out << " " << to_string(q);
    out << "\n";
  }
  for (const auto& c : m.curves)
    out << "curve " << c.label << " " << class_to_string(m, c.cls.coords) << "\n";
  for (const auto& p : m.points) {
    out << "point " << p.label;
    if (p.smooth()) {
      out << " smooth\n";
    } else {
      out << " graph " << p.graph->size() << "\n";
      for (std::size_t r = 0; r < p.graph->size(); ++r) {
        for (std::size_t c = 0; c < p.graph->size(); ++c)
          out << (c ? " " : "") << to_string(p.graph->egram(r, c));
        out << "\n";
      }
      if (!p.graph->genera.empty()) {
        out << "genera";
        for (long g : p.graph->genera) out << " " << g;
        out << "\n";
      }
    }
  }
  for (const auto& f : m.flags) out << "flag " << f << "\n";
  return out.str();
}

inline std::string serialize_blowup(const LoadedBlowup& lb) {
  std::ostringstream out;
  out << "blowup " << lb.name << "\n";
  out << "downstairs-basis";
  for (const auto& l : lb.downstairs_labels) out << " " << l;
  out << "\ndownstairs-gram\n";
  std::size_t r = lb.downstairs_labels.size();
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t c = 0; c < r; ++c) out << (c ? " " : "") << to_string(lb.model.xgram(a, c));
    out << "\n";
  }
  out << "pullback\n";
  for (std::size_t a = 0; a < lb.model.base.rank(); ++a) {
    for (std::size_t c = 0; c < r; ++c) out << (c ? " " : "") << to_string(lb.model.pullback(a, c));
    out << "\n";
  }
  out << "exceptional " << class_to_string(lb.model.base, lb.model.exceptional.coords) << "\n";
  out << serialize_surface(lb.model.base);
  return out.str();
}

}  // namespace jetample
