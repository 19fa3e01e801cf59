#include "racg/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "racg/error.hpp"

namespace racg {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void parse_fail(int line_no, const std::string& msg) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

CoxeterPresentation::CoxeterPresentation(std::vector<std::string> names, std::vector<int> m)
    : names_(std::move(names)), m_(std::move(m)) {
  const std::size_t n = names_.size();
  if (n > static_cast<std::size_t>(kMaxGenerators))
    throw Error(ErrorKind::InvalidInput, "at most 64 generators are supported");
  if (m_.size() != n * n) throw Error(ErrorKind::InvalidInput, "Coxeter matrix has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (names_[i].empty() ||
        std::any_of(names_[i].begin(), names_[i].end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
      throw Error(ErrorKind::InvalidInput, "invalid generator name '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw Error(ErrorKind::InvalidInput, "duplicate generator '" + names_[i] + "'");
    if (m_[i * n + i] != 1) throw Error(ErrorKind::InvalidInput, "diagonal entry must be 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      int v = m_[i * n + j];
      if (v != m_[j * n + i]) throw Error(ErrorKind::InvalidInput, "Coxeter matrix is not symmetric");
      if (v != kInfinity && v < 2) throw Error(ErrorKind::InvalidInput, "off-diagonal entry must be >= 2");
    }
  }
}

std::optional<int> CoxeterPresentation::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

CoxeterPresentation parse_presentation(std::string_view text) {
  std::vector<std::string> names;
  std::vector<int> m;
  std::map<std::string, int, std::less<>> index;
  bool seen_gen = false;
  bool seen_content = false;
  int line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split_tokens(line);
    if (tok.empty()) continue;

    if (tok[0] == "coxeter") {
      if (seen_content) parse_fail(line_no, "header must be the first line");
      if (tok.size() != 2 || tok[1] != "v1") parse_fail(line_no, "unsupported header, expected 'coxeter v1'");
      seen_content = true;
      continue;
    }
    seen_content = true;

    if (tok[0] == "gen") {
      if (seen_gen) parse_fail(line_no, "duplicate 'gen' line");
      seen_gen = true;
      for (std::size_t k = 1; k < tok.size(); ++k) {
        std::string name(tok[k]);
        if (index.count(name)) parse_fail(line_no, "duplicate generator '" + name + "'");
        index.emplace(name, static_cast<int>(names.size()));
        names.push_back(std::move(name));
      }
      if (names.empty()) parse_fail(line_no, "'gen' line declares no generators");
      if (names.size() > static_cast<std::size_t>(kMaxGenerators)) parse_fail(line_no, "at most 64 generators are supported");
      const std::size_t n = names.size();
      m.assign(n * n, kInfinity);
      for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
      continue;
    }

    if (tok[0] == "m") {
      if (!seen_gen) parse_fail(line_no, "'m' line before 'gen' line");
      if (tok.size() != 4) parse_fail(line_no, "expected 'm <name> <name> <int>'");
      auto a = index.find(tok[1]);
      auto b = index.find(tok[2]);
      if (a == index.end()) parse_fail(line_no, "unknown generator '" + std::string(tok[1]) + "'");
      if (b == index.end()) parse_fail(line_no, "unknown generator '" + std::string(tok[2]) + "'");
      if (a->second == b->second) parse_fail(line_no, "diagonal entry m(" + a->first + "," + a->first + ") cannot be specified");
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok[3].data(), tok[3].data() + tok[3].size(), value);
      if (ec != std::errc() || ptr != tok[3].data() + tok[3].size())
        parse_fail(line_no, "malformed exponent '" + std::string(tok[3]) + "'");
      if (value < 2) parse_fail(line_no, "exponent must be >= 2, got " + std::to_string(value));
      const std::size_t n = names.size();
      std::size_t ij = static_cast<std::size_t>(a->second) * n + b->second;
      std::size_t ji = static_cast<std::size_t>(b->second) * n + a->second;
      if (m[ij] != kInfinity) parse_fail(line_no, "pair " + a->first + " " + b->first + " specified twice");
      m[ij] = m[ji] = value;
      continue;
    }

    parse_fail(line_no, "unrecognized line starting with '" + std::string(tok[0]) + "'");
  }
  if (!seen_gen) throw Error(ErrorKind::Parse, "missing 'gen' line");
  return CoxeterPresentation(std::move(names), std::move(m));
}

std::string format_presentation(const CoxeterPresentation& p) {
  std::ostringstream out;
  out << "coxeter v1\ngen";
  for (const auto& name : p.names()) out << ' ' << name;
  out << '\n';
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      if (p.m(i, j) != kInfinity) out << "m " << p.names()[i] << ' ' << p.names()[j] << ' ' << p.m(i, j) << '\n';
  return out.str();
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "g" + std::to_string(i));
  return out;
}

CommutationGraph::CommutationGraph(int n, std::vector<std::string> names)
    : n_(n), adj_(static_cast<std::size_t>(n), 0), names_(std::move(names)) {
  if (n < 0 || n > kMaxGenerators) throw Error(ErrorKind::InvalidInput, "graph size out of range");
  if (names_.empty()) names_ = default_names(n);
  if (static_cast<int>(names_.size()) != n) throw Error(ErrorKind::InvalidInput, "name count does not match graph size");
}

CommutationGraph CommutationGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                              std::vector<std::string> names) {
  CommutationGraph g(n, std::move(names));
  for (auto [i, j] : edges) g.add_edge(i, j);
  return g;
}

void CommutationGraph::add_edge(int i, int j) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j) throw Error(ErrorKind::InvalidInput, "invalid edge");
  adj_[i] |= std::uint64_t{1} << j;
  adj_[j] |= std::uint64_t{1} << i;
}

int CommutationGraph::edge_count() const {
  int twice = 0;
  for (auto a : adj_) twice += std::popcount(a);
  return twice / 2;
}

std::vector<std::pair<int, int>> CommutationGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

std::optional<int> CommutationGraph::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

CommutationGraph CommutationGraph::permuted(const std::vector<int>& perm) const {
  std::vector<std::string> names(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) names[perm[i]] = names_[i];
  CommutationGraph out(n_, std::move(names));
  for (auto [i, j] : edges()) out.add_edge(perm[i], perm[j]);
  return out;
}

CommutationGraph validate_right_angled(const CoxeterPresentation& p) {
  CommutationGraph g(p.size(), p.names());
  for (int i = 0; i < p.size(); ++i) {
    for (int j = i + 1; j < p.size(); ++j) {
      int v = p.m(i, j);
      if (v == 2) {
        g.add_edge(i, j);
      } else if (v != kInfinity) {
        throw Error(ErrorKind::NotRightAngled,
                    "NotRightAngled(" + p.names()[i] + "," + p.names()[j] + "," + std::to_string(v) + ")");
      }
    }
  }
  return g;
}

// --- bijections -------------------------------------------------------------

bool VertexBijection::is_permutation() const {
  std::vector<bool> seen(perm.size(), false);
  for (int v : perm) {
    if (v < 0 || v >= static_cast<int>(perm.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

VertexBijection VertexBijection::inverse() const {
  VertexBijection out{std::vector<int>(perm.size())};
  for (std::size_t i = 0; i < perm.size(); ++i) out.perm[perm[i]] = static_cast<int>(i);
  return out;
}

VertexBijection VertexBijection::then(const VertexBijection& next) const {
  VertexBijection out{std::vector<int>(perm.size())};
  for (std::size_t i = 0; i < perm.size(); ++i) out.perm[i] = next.perm[perm[i]];
  return out;
}

VertexBijection VertexBijection::identity(int n) {
  VertexBijection out{std::vector<int>(static_cast<std::size_t>(n))};
  std::iota(out.perm.begin(), out.perm.end(), 0);
  return out;
}

bool is_isomorphism(const CommutationGraph& g1, const CommutationGraph& g2, const VertexBijection& f) {
  if (g1.size() != g2.size() || static_cast<int>(f.perm.size()) != g1.size() || !f.is_permutation()) return false;
  for (int i = 0; i < g1.size(); ++i)
    for (int j = i + 1; j < g1.size(); ++j)
      if (g1.adjacent(i, j) != g2.adjacent(f.perm[i], f.perm[j])) return false;
  return true;
}

// --- canonical labeling -----------------------------------------------------
//
// Colors are refined by (own color, sorted neighbor colors) until stable. Search
// individualizes each vertex of the first non-singleton cell in turn and keeps
// the lexicographically greatest adjacency string over all leaves. Twins and
// automorphisms found between equal leaves prune sibling branches.

namespace {

using Coloring = std::vector<int>;

void refine(const CommutationGraph& g, Coloring& color) {
  const int n = g.size();
  int classes = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (int u : g.neighbors(v).members()) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    int now = static_cast<int>(distinct.size());
    if (now == classes) return;
    classes = now;
  }
}

std::string leaf_string(const CommutationGraph& g, const Coloring& pos) {
  const int n = g.size();
  std::vector<int> at(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) at[pos[v]] = v;
  std::string s = "racg-graph:" + std::to_string(n) + ":";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s.push_back(g.adjacent(at[i], at[j]) ? '1' : '0');
  return s;
}

struct CanonSearch {
  const CommutationGraph& g;
  std::string best;
  Coloring best_pos;
  std::vector<std::vector<int>> found_auts;

  void run(Coloring color, std::vector<int>& prefix) {
    refine(g, color);
    const int n = g.size();
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (int c : color) ++count[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (count[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      std::string s = leaf_string(g, color);
      if (best_pos.empty() || s > best) {
        best = std::move(s);
        best_pos = color;
      } else if (s == best) {
        std::vector<int> aut(static_cast<std::size_t>(n));
        std::vector<int> at(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) at[best_pos[v]] = v;
        for (int v = 0; v < n; ++v) aut[v] = at[color[v]];
        found_auts.push_back(std::move(aut));
      }
      return;
    }

    std::vector<int> cell;
    for (int v = 0; v < n; ++v)
      if (color[v] == target) cell.push_back(v);

    std::vector<int> explored;
    for (int v : cell) {
      bool skip = false;
      for (int e : explored) {
        GenSubset ne = g.neighbors(e), nv = g.neighbors(v);
        ne.erase(v);
        nv.erase(e);
        if (ne == nv) {
          skip = true;
          break;
        }
        for (const auto& aut : found_auts) {
          bool fixes_prefix = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return aut[p] == p; });
          if (fixes_prefix && aut[e] == v) {
            skip = true;
            break;
          }
        }
        if (skip) break;
      }
      if (skip) continue;
      explored.push_back(v);

      Coloring next(static_cast<std::size_t>(n));
      for (int u = 0; u < n; ++u) next[u] = 2 * color[u] + ((color[u] == target && u != v) ? 1 : 0);
      prefix.push_back(v);
      run(std::move(next), prefix);
      prefix.pop_back();
    }
  }
};

// Returns (canonical string, canonical position of each vertex).
std::pair<std::string, Coloring> canonical_labeling(const CommutationGraph& g) {
  if (g.size() == 0) return {"racg-graph:0:", {}};
  CanonSearch search{g, {}, {}, {}};
  std::vector<int> prefix;
  search.run(Coloring(static_cast<std::size_t>(g.size()), 0), prefix);
  return {search.best, search.best_pos};
}

}  // namespace

std::string canonical_form(const CommutationGraph& g) { return canonical_labeling(g).first; }

std::optional<VertexBijection> find_isomorphism(const CommutationGraph& g1, const CommutationGraph& g2) {
  if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  auto [s1, pos1] = canonical_labeling(g1);
  auto [s2, pos2] = canonical_labeling(g2);
  if (s1 != s2) return std::nullopt;
  const int n = g1.size();
  std::vector<int> at2(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) at2[pos2[v]] = v;
  VertexBijection f{std::vector<int>(static_cast<std::size_t>(n))};
  for (int v = 0; v < n; ++v) f.perm[v] = at2[pos1[v]];
  if (!is_isomorphism(g1, g2, f)) throw Error(ErrorKind::InvalidInput, "internal: canonical labeling mismatch");
  return f;
}

std::vector<VertexBijection> automorphisms(const CommutationGraph& g, AutomorphismLimits limits) {
  const int n = g.size();
  if (n > limits.max_vertices)
    throw Error(ErrorKind::TooLarge, "automorphism search limited to " + std::to_string(limits.max_vertices) + " vertices");
  std::vector<VertexBijection> out;
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  std::uint64_t used = 0;

  auto extend = [&](auto& self, int v) -> void {
    if (v == n) {
      if (out.size() >= limits.max_group_order)
        throw Error(ErrorKind::TooLarge, "automorphism group exceeds " + std::to_string(limits.max_group_order) + " elements");
      out.push_back(VertexBijection{perm});
      return;
    }
    for (int t = 0; t < n; ++t) {
      if ((used >> t) & 1u) continue;
      if (g.neighbors(t).size() != g.neighbors(v).size()) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(perm[u], t);
      if (!ok) continue;
      perm[v] = t;
      used |= std::uint64_t{1} << t;
      self(self, v + 1);
      used &= ~(std::uint64_t{1} << t);
    }
    perm[v] = -1;
  };
  extend(extend, 0);
  return out;
}

}  // namespace racg
