#include "racg/davis.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "racg/error.hpp"

namespace racg {

namespace {

GenSubset right_descents(const CommutationGraph& g, const NormalWord& w) {
  GenSubset d;
  for (int s = 0; s < g.size(); ++s)
    if (multiply(g, w, generator(g, s)).size() < w.size()) d.insert(s);
  return d;
}

}  // namespace

Coset make_coset(const CommutationGraph& g, const NormalWord& w, GenSubset a) { return Coset{min_coset_rep(g, w, a), a}; }

bool coset_contains(const CommutationGraph& g, const Coset& outer, const Coset& inner) {
  return inner.a.subset_of(outer.a) && min_coset_rep(g, inner.rep, outer.a) == outer.rep;
}

std::size_t BallComplex::count(int dim) const {
  if (dim == 0) return vertices.size();
  if (dim < 0 || static_cast<std::size_t>(dim) >= simplices.size()) return 0;
  return simplices[dim].size();
}

long long BallComplex::euler_characteristic() const {
  long long chi = static_cast<long long>(vertices.size());
  for (std::size_t d = 1; d < simplices.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(simplices[d].size());
  return chi;
}

int BallComplex::index_of(const Coset& c) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), c);
  if (it == vertices.end() || *it != c) return -1;
  return static_cast<int>(it - vertices.begin());
}

std::vector<std::vector<NormalWord>> word_layers(const CommutationGraph& g, int radius, std::size_t cap) {
  std::vector<std::vector<NormalWord>> layers{{NormalWord{}}};
  std::size_t total = 1;
  for (int len = 1; len <= radius; ++len) {
    std::set<NormalWord> next;
    for (const auto& w : layers.back()) {
      for (int s = 0; s < g.size(); ++s) {
        NormalWord ws = multiply(g, w, generator(g, s));
        if (static_cast<int>(ws.size()) == len) next.insert(std::move(ws));
      }
    }
    if (next.empty()) break;
    total += next.size();
    if (total > cap) throw Error(ErrorKind::TooLarge, "ball exceeds " + std::to_string(cap) + " elements");
    layers.emplace_back(next.begin(), next.end());
  }
  return layers;
}

std::vector<Coset> ball_vertices(const CommutationGraph& g, int radius, std::size_t cap) {
  std::vector<GenSubset> subsets{GenSubset{}};
  for (GenSubset a : all_cliques(g)) subsets.push_back(a);

  std::vector<Coset> out;
  for (const auto& layer : word_layers(g, radius, cap)) {
    for (const auto& w : layer) {
      GenSubset descents = right_descents(g, w);
      for (GenSubset a : subsets) {
        if (!(a & descents).empty()) continue;
        if (out.size() >= cap) throw Error(ErrorKind::TooLarge, "ball exceeds " + std::to_string(cap) + " vertices");
        out.push_back(Coset{w, a});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BallComplex build_ball(const CommutationGraph& g, int radius, BallLimits limits) {
  if (radius < 0) throw Error(ErrorKind::InvalidInput, "radius must be non-negative");
  BallComplex ball;
  ball.radius = radius;
  ball.vertices = ball_vertices(g, radius, limits.max_vertices);

  std::vector<GenSubset> cliques = all_cliques(g);
  const std::size_t nv = ball.vertices.size();

  // up[v]: every vertex strictly containing v. A larger coset's shortest
  // element is never longer, so all of them are inside the ball.
  std::vector<std::vector<int>> up(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    const Coset& c = ball.vertices[v];
    for (GenSubset b : cliques) {
      if (b == c.a || !c.a.subset_of(b)) continue;
      int idx = ball.index_of(make_coset(g, c.rep, b));
      if (idx < 0) throw Error(ErrorKind::InvalidInput, "internal: enclosing coset missing from ball");
      up[v].push_back(idx);
    }
    std::sort(up[v].begin(), up[v].end());
  }

  std::size_t total = 0;
  std::vector<int> chain;
  auto extend = [&](auto& self, int v) -> void {
    chain.push_back(v);
    if (chain.size() >= 2) {
      std::size_t dim = chain.size() - 1;
      if (ball.simplices.size() <= dim) ball.simplices.resize(dim + 1);
      if (++total > limits.max_simplices)
        throw Error(ErrorKind::TooLarge, "ball exceeds " + std::to_string(limits.max_simplices) + " simplices");
      ball.simplices[dim].push_back(chain);
    }
    for (int u : up[v]) self(self, u);
    chain.pop_back();
  };
  for (std::size_t v = 0; v < nv; ++v) extend(extend, static_cast<int>(v));
  if (ball.simplices.size() < 2) ball.simplices.resize(2);
  for (auto& layer : ball.simplices) std::sort(layer.begin(), layer.end());
  return ball;
}

Coset act(const CommutationGraph& g, const NormalWord& w, const Coset& c) {
  return Coset{min_coset_rep(g, multiply(g, w, c.rep), c.a), c.a};
}

bool vertex_stabilizer_contains(const CommutationGraph& g, const Coset& c, const NormalWord& u) {
  return act(g, u, c) == c;
}

std::optional<std::vector<NormalWord>> subgroup_closure(const CommutationGraph& g, const std::vector<NormalWord>& gens,
                                                       std::size_t cap) {
  std::set<NormalWord> seen{NormalWord{}};
  std::vector<NormalWord> frontier{NormalWord{}};
  if (seen.size() > cap) return std::nullopt;
  while (!frontier.empty()) {
    std::vector<NormalWord> next;
    for (const auto& x : frontier) {
      for (const auto& s : gens) {
        NormalWord y = multiply(g, x, s);
        if (seen.insert(y).second) {
          if (seen.size() > cap) return std::nullopt;
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return std::vector<NormalWord>(seen.begin(), seen.end());
}

int default_search_radius(const std::vector<NormalWord>& gens) {
  std::size_t total = 0;
  for (const auto& w : gens) total += w.size();
  return static_cast<int>(total);
}

ParabolicWitness enclosing_parabolic(const CommutationGraph& g, const std::vector<NormalWord>& elements,
                                     int search_radius) {
  bool trivial = std::all_of(elements.begin(), elements.end(), [](const NormalWord& u) { return u.empty(); });
  if (trivial) {
    NerveStar star = maximal_cliques(g);
    return ParabolicWitness{NormalWord{}, star.size() == 0 ? GenSubset{} : star[0]};
  }

  for (const auto& layer : word_layers(g, search_radius)) {
    std::optional<ParabolicWitness> best;
    for (const auto& w : layer) {
      NormalWord w_inv = inverse(g, w);
      GenSubset support;
      for (const auto& u : elements) support = support | conjugate(g, u, w_inv).support();
      if (!is_clique(g, support)) continue;
      if (!(support & right_descents(g, w)).empty()) continue;
      if (!best || support.size() < best->a.size() || (support.size() == best->a.size() && support < best->a))
        best = ParabolicWitness{w, support};
    }
    if (best) return *best;
  }
  throw Error(ErrorKind::NotFound, "NotFound(" + std::to_string(search_radius) + "): no fixed vertex within radius");
}

}  // namespace racg
