#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "nacech/io.hpp"

namespace nacech {

namespace {

namespace fs = std::filesystem;

struct Line {
  int number;
  std::vector<std::string> words;
};

// Non-empty lines with `#` comments stripped.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  for (int n = 1; std::getline(in, text); ++n) {
    if (auto c = text.find('#'); c != std::string::npos) text.resize(c);
    std::istringstream ss(text);
    Line l{n, {}};
    for (std::string w; ss >> w;) l.words.push_back(w);
    if (!l.words.empty()) out.push_back(std::move(l));
  }
  return out;
}

[[noreturn]] void parse_error(const std::string& file, int line, const std::string& what) {
  throw Error(ErrorKind::ParseError, file + ":" + std::to_string(line) + ": " + what, {line});
}

long long to_int(const std::string& file, int line, const std::string& w) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(w, &used);
  } catch (const std::exception&) {
    parse_error(file, line, "expected an integer, got '" + w + "'");
  }
  if (used != w.size()) parse_error(file, line, "expected an integer, got '" + w + "'");
  return v;
}

std::vector<Line> open_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file", {0});
  return tokenize(in);
}

void expect_arity(const std::string& file, const Line& l, std::size_t n) {
  if (l.words.size() != n)
    parse_error(file, l.number, "'" + l.words[0] + "' takes " + std::to_string(n - 1) + " fields, got " +
                                    std::to_string(l.words.size() - 1));
}

int bounded(const std::string& file, const Line& l, std::size_t pos, int limit, const char* what) {
  long long v = to_int(file, l.number, l.words[pos]);
  if (v < 0 || v >= limit)
    parse_error(file, l.number, std::string(what) + " " + l.words[pos] + " out of range [0," +
                                    std::to_string(limit) + ")");
  return static_cast<int>(v);
}

}  // namespace

FiniteGroup read_group(std::istream& in, const std::string& file) {
  const auto lines = tokenize(in);
  if (lines.empty()) parse_error(file, 0, "empty group file");
  const Line& head = lines[0];
  if (head.words[0] != "group") parse_error(file, head.number, "expected 'group <name> <order>'");
  expect_arity(file, head, 3);
  const long long n = to_int(file, head.number, head.words[2]);
  if (n < 1 || n > 4096) parse_error(file, head.number, "group order out of range");
  if (static_cast<long long>(lines.size()) != n + 1)
    parse_error(file, lines.back().number,
                "expected " + std::to_string(n) + " table rows, got " + std::to_string(lines.size() - 1));
  IndexTable mul(n, n);
  for (int r = 0; r < n; ++r) {
    const Line& l = lines[r + 1];
    if (static_cast<long long>(l.words.size()) != n)
      parse_error(file, l.number, "row has " + std::to_string(l.words.size()) + " entries, expected " +
                                      std::to_string(n));
    for (int c = 0; c < n; ++c) mul(r, c) = bounded(file, l, c, static_cast<int>(n), "entry");
  }
  return validate_group(static_cast<int>(n), mul, head.words[1]);
}

SimplicialComplex read_complex(std::istream& in, const std::string& file) {
  std::vector<std::vector<int>> faces;
  for (const auto& l : tokenize(in)) {
    std::vector<int> f;
    for (std::size_t i = 0; i < l.words.size(); ++i)
      f.push_back(bounded(file, l, i, SimplicialComplex::kMaxVertices, "vertex"));
    faces.push_back(f);
  }
  if (faces.empty()) parse_error(file, 0, "no simplices");
  return build_complex(faces, -1, fs::path(file).stem().string());
}

std::string Loader::resolve(const std::string& ref, const std::string& from) const {
  fs::path p(ref);
  if (p.is_relative() && !from.empty()) {
    fs::path rel = fs::path(from).parent_path() / p;
    if (fs::exists(rel)) return rel.string();
  }
  return p.string();
}

std::string Loader::name_of(const void* object) const {
  auto it = names_.find(object);
  return it == names_.end() ? std::string() : it->second;
}

GroupPtr Loader::group(const std::string& ref, const std::string& from) {
  if (auto it = groups_.find(ref); it != groups_.end()) return it->second;
  GroupPtr g = builtin_group(ref);
  if (!g) {
    const std::string path = resolve(ref, from);
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open group file", {0});
    g = std::make_shared<const FiniteGroup>(read_group(in, path));
  }
  names_[g.get()] = ref;
  return groups_[ref] = g;
}

ComplexPtr Loader::complex(const std::string& ref, const std::string& from) {
  if (auto it = complexes_.find(ref); it != complexes_.end()) return it->second;
  ComplexPtr k = builtin_complex(ref);
  if (!k) {
    const std::string path = resolve(ref, from);
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open complex file", {0});
    k = std::make_shared<const SimplicialComplex>(read_complex(in, path));
  }
  names_[k.get()] = ref;
  return complexes_[ref] = k;
}

CrossedModulePtr Loader::crossed_module(const std::string& ref, const std::string& from) {
  if (auto it = cms_.find(ref); it != cms_.end()) return it->second;
  CrossedModulePtr cm = builtin_crossed_module(ref);
  if (!cm) {
    const std::string path = resolve(ref, from);
    const auto lines = open_lines(path);
    if (lines.empty() || lines[0].words[0] != "cm") parse_error(path, lines.empty() ? 0 : lines[0].number, "expected 'cm <name>'");
    expect_arity(path, lines[0], 2);
    GroupPtr G, H;
    std::vector<Elem> beta;
    IndexTable alpha;
    bool have_beta = false, have_alpha = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const Line& l = lines[i];
      const std::string& key = l.words[0];
      if (key == "G" || key == "H") {
        expect_arity(path, l, 2);
        (key == "G" ? G : H) = group(l.words[1], path);
      } else if (key == "beta") {
        if (!G || !H) parse_error(path, l.number, "beta before G and H");
        if (static_cast<int>(l.words.size()) != H->order() + 1)
          parse_error(path, l.number, "beta needs " + std::to_string(H->order()) + " entries, got " +
                                          std::to_string(l.words.size() - 1));
        beta.clear();
        for (int h = 0; h < H->order(); ++h) beta.push_back(bounded(path, l, h + 1, G->order(), "beta value"));
        have_beta = true;
      } else if (key == "alpha") {
        if (!G || !H) parse_error(path, l.number, "alpha before G and H");
        expect_arity(path, l, 1);
        alpha.resize(G->order(), H->order());
        for (int g = 0; g < G->order(); ++g) {
          if (++i >= lines.size()) parse_error(path, l.number, "alpha block is short");
          const Line& row = lines[i];
          if (static_cast<int>(row.words.size()) != H->order())
            parse_error(path, row.number, "alpha row needs " + std::to_string(H->order()) + " entries");
          for (int h = 0; h < H->order(); ++h) alpha(g, h) = bounded(path, row, h, H->order(), "alpha value");
        }
        have_alpha = true;
      } else {
        parse_error(path, l.number, "unknown key '" + key + "'");
      }
    }
    if (!G || !H || !have_beta || !have_alpha)
      parse_error(path, lines.back().number, "crossed module needs G, H, beta and alpha");
    cm = std::make_shared<const CrossedModule>(validate_crossed_module(G, H, beta, alpha, lines[0].words[1]));
  }
  names_[cm.get()] = ref;
  return cms_[ref] = cm;
}

Cocycle Loader::cocycle(const std::string& path) {
  const auto lines = open_lines(path);
  if (lines.empty() || lines[0].words[0] != "cocycle")
    parse_error(path, lines.empty() ? 0 : lines[0].number, "expected 'cocycle <complex> <cm>'");
  expect_arity(path, lines[0], 3);
  ComplexPtr k = complex(lines[0].words[1], path);
  CrossedModulePtr cm = crossed_module(lines[0].words[2], path);
  Cocycle z = trivial_cocycle(k, cm);
  const int n = k->vertex_count();
  std::set<std::vector<int>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.words[0] == "g") {
      expect_arity(path, l, 4);
      int a = bounded(path, l, 1, n, "vertex"), b = bounded(path, l, 2, n, "vertex");
      int p = k->pair_index(a, b);
      if (p < 0) parse_error(path, l.number, "(" + l.words[1] + "," + l.words[2] + ") is not an edge");
      if (!seen.insert({a, b}).second) parse_error(path, l.number, "duplicate g entry");
      z.g[p] = bounded(path, l, 3, cm->G().order(), "G index");
    } else if (l.words[0] == "h") {
      expect_arity(path, l, 5);
      int a = bounded(path, l, 1, n, "vertex"), b = bounded(path, l, 2, n, "vertex"),
          c = bounded(path, l, 3, n, "vertex");
      int t = k->triple_index(a, b, c);
      if (t < 0) parse_error(path, l.number, "triple does not span a simplex");
      if (!seen.insert({a, b, c}).second) parse_error(path, l.number, "duplicate h entry");
      z.h[t] = bounded(path, l, 4, cm->H().order(), "H index");
    } else {
      parse_error(path, l.number, "unknown key '" + l.words[0] + "'");
    }
  }
  validate_cocycle(z);
  return z;
}

Coboundary Loader::coboundary(const std::string& path, const ComplexPtr& k, const CrossedModulePtr& cm) {
  const auto lines = open_lines(path);
  Coboundary c = identity_coboundary(k, cm);
  const int n = k->vertex_count();
  for (const auto& l : lines) {
    if (l.words[0] == "coboundary") continue;
    if (l.words[0] == "gamma") {
      expect_arity(path, l, 3);
      c.gamma[bounded(path, l, 1, n, "vertex")] = bounded(path, l, 2, cm->G().order(), "G index");
    } else if (l.words[0] == "eta") {
      expect_arity(path, l, 4);
      int p = k->pair_index(bounded(path, l, 1, n, "vertex"), bounded(path, l, 2, n, "vertex"));
      if (p < 0) parse_error(path, l.number, "not an edge");
      c.eta[p] = bounded(path, l, 3, cm->H().order(), "H index");
    } else {
      parse_error(path, l.number, "unknown key '" + l.words[0] + "'");
    }
  }
  validate_coboundary(c);
  return c;
}

OneCocycle Loader::one_cocycle(const std::string& path, const ComplexPtr& k, const GroupPtr& g) {
  const auto lines = open_lines(path);
  OneCocycle c = trivial_one_cocycle(k, g);
  const int n = k->vertex_count();
  for (const auto& l : lines) {
    if (l.words[0] != "g") parse_error(path, l.number, "expected 'g i j <index>'");
    expect_arity(path, l, 4);
    int p = k->pair_index(bounded(path, l, 1, n, "vertex"), bounded(path, l, 2, n, "vertex"));
    if (p < 0) parse_error(path, l.number, "not an edge");
    c.k[p] = bounded(path, l, 3, g->order(), "G index");
  }
  validate_one_cocycle(c);
  return c;
}

void write_group(std::ostream& out, const FiniteGroup& g) {
  out << "group " << (g.name().empty() ? "G" : g.name()) << ' ' << g.order() << '\n';
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mul(a, b);
    out << '\n';
  }
}

void write_complex(std::ostream& out, const SimplicialComplex& k) {
  for (const auto& s : k.maximal_simplices()) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
}

void write_cocycle(std::ostream& out, const Cocycle& z, const std::string& complex_ref,
                   const std::string& cm_ref) {
  out << "cocycle " << complex_ref << ' ' << cm_ref << '\n';
  const auto& K = *z.complex;
  for (std::size_t p = 0; p < K.pairs().size(); ++p)
    if (K.pairs()[p][0] != K.pairs()[p][1])
      out << "g " << K.pairs()[p][0] << ' ' << K.pairs()[p][1] << ' ' << z.g[p] << '\n';
  for (std::size_t t = 0; t < K.triples().size(); ++t) {
    const auto& x = K.triples()[t];
    if (x[0] != x[1] && x[1] != x[2])
      out << "h " << x[0] << ' ' << x[1] << ' ' << x[2] << ' ' << z.h[t] << '\n';
  }
}

void write_coboundary(std::ostream& out, const Coboundary& c) {
  const auto& K = *c.complex;
  for (int v = 0; v < K.vertex_count(); ++v) out << "gamma " << v << ' ' << c.gamma[v] << '\n';
  for (std::size_t p = 0; p < K.pairs().size(); ++p)
    if (K.pairs()[p][0] != K.pairs()[p][1])
      out << "eta " << K.pairs()[p][0] << ' ' << K.pairs()[p][1] << ' ' << c.eta[p] << '\n';
}

void write_one_cocycle(std::ostream& out, const OneCocycle& k) {
  const auto& K = *k.complex;
  for (std::size_t p = 0; p < K.pairs().size(); ++p)
    if (K.pairs()[p][0] != K.pairs()[p][1])
      out << "g " << K.pairs()[p][0] << ' ' << K.pairs()[p][1] << ' ' << k.k[p] << '\n';
}

}  // namespace nacech
