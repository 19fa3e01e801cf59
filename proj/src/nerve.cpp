#include "racg/nerve.hpp"

#include <algorithm>
#include <bit>

#include "racg/error.hpp"

namespace racg {

int NerveStar::index_of(GenSubset a) const {
  auto it = std::lower_bound(cliques.begin(), cliques.end(), a);
  if (it == cliques.end() || *it != a) return -1;
  return static_cast<int>(it - cliques.begin());
}

bool is_simplex(const CommutationGraph& g, GenSubset a) { return !a.empty() && is_clique(g, a); }

namespace {

// Bron–Kerbosch with Tomita pivoting: r is the growing clique, p the
// candidates, x the already-covered vertices.
void expand(const CommutationGraph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x, std::vector<GenSubset>& out) {
  if (p == 0) {
    if (x == 0) out.emplace_back(r);
    return;
  }
  int pivot = -1;
  int best = -1;
  for (std::uint64_t cand = p | x; cand != 0; cand &= cand - 1) {
    int u = std::countr_zero(cand);
    int cover = std::popcount(p & g.neighbors(u).bits());
    if (cover > best) {
      best = cover;
      pivot = u;
    }
  }
  for (std::uint64_t todo = p & ~g.neighbors(pivot).bits(); todo != 0; todo &= todo - 1) {
    int v = std::countr_zero(todo);
    std::uint64_t bit = std::uint64_t{1} << v;
    std::uint64_t nv = g.neighbors(v).bits();
    expand(g, r | bit, p & nv, x & nv, out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

NerveStar maximal_cliques(const CommutationGraph& g) {
  NerveStar star;
  if (g.size() == 0) return star;
  expand(g, 0, GenSubset::full(g.size()).bits(), 0, star.cliques);
  std::sort(star.cliques.begin(), star.cliques.end());
  return star;
}

std::vector<GenSubset> all_cliques(const CommutationGraph& g, std::size_t cap) {
  std::vector<GenSubset> out;
  // Extend each clique only by vertices above its largest member.
  auto grow = [&](auto& self, std::uint64_t clique, std::uint64_t candidates) -> void {
    for (std::uint64_t c = candidates; c != 0; c &= c - 1) {
      int v = std::countr_zero(c);
      std::uint64_t next = clique | (std::uint64_t{1} << v);
      if (out.size() >= cap) throw Error(ErrorKind::TooLarge, "clique count exceeds cap " + std::to_string(cap));
      out.emplace_back(next);
      std::uint64_t above = v >= 63 ? 0 : ~((std::uint64_t{2} << v) - 1);
      self(self, next, candidates & g.neighbors(v).bits() & above);
    }
  };
  grow(grow, 0, GenSubset::full(g.size()).bits());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NormalWord> spherical_elements(const CommutationGraph& g, std::size_t cap) {
  if (cap == 0) throw Error(ErrorKind::TooLarge, "spherical set exceeds cap 0");
  std::vector<NormalWord> out{NormalWord{}};
  for (GenSubset a : all_cliques(g, cap - 1)) out.push_back(product_of(g, a));
  return out;
}

std::size_t venn_region_size(const std::vector<GenSubset>& as, const std::vector<GenSubset>& bs) {
  if (as.empty())
    throw Error(ErrorKind::EmptyIntersectionFamily, "intersection over an empty family is not defined");
  GenSubset region = as.front();
  for (const auto& a : as) region = region & a;
  for (const auto& b : bs) region = region - b;
  return static_cast<std::size_t>(region.size());
}

std::uint64_t standard_subgroup_order(const CommutationGraph& g, GenSubset a) {
  if (!is_clique(g, a)) throw Error(ErrorKind::NotAClique, "standard subgroup of a non-clique is infinite");
  return std::uint64_t{1} << a.size();
}

}  // namespace racg
