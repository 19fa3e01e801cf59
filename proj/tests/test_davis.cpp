#include <map>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "racg/davis.hpp"
#include "racg/error.hpp"
#include "racg/rigidity.hpp"

using namespace racg;
using fixture::nw;
using fixture::set;
using fixture::str;

namespace {

// Ball cell counts from explicit cosets: group elements are Tits matrices,
// word length is breadth-first distance, cosets are sets of matrices, and
// simplices are chains under set inclusion.
std::vector<std::size_t> brute_ball_counts(const CommutationGraph& g, int radius) {
  using M = oracle::TitsRep::Matrix;
  oracle::TitsRep rep(g);
  const int n = g.size();
  // Every element of a coset with a short representative is within radius + n.
  std::map<M, int> length{{rep.identity(), 0}};
  std::vector<M> frontier{rep.identity()};
  for (int len = 1; len <= radius + n; ++len) {
    std::vector<M> next;
    for (const auto& m : frontier)
      for (int s = 0; s < n; ++s) {
        M x = rep.mul(m, rep.reflection(s));
        if (length.emplace(x, len).second) next.push_back(x);
      }
    frontier = std::move(next);
  }
  std::vector<std::uint64_t> subsets{0};
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m)
    if (oracle::is_clique_brute(g, m)) subsets.push_back(m);

  std::set<std::set<M>> cosets;
  for (const auto& [w, len] : length) {
    if (len > radius) continue;
    for (auto t : subsets) {
      std::set<M> coset;
      for (std::uint64_t sub = t;; sub = (sub - 1) & t) {
        M x = w;
        for (int s = 0; s < n; ++s)
          if ((sub >> s) & 1) x = rep.mul(x, rep.reflection(s));
        coset.insert(x);
        if (sub == 0) break;
      }
      int shortest = 1 << 30;
      for (const auto& x : coset) shortest = std::min(shortest, length.at(x));
      if (shortest <= radius) cosets.insert(coset);
    }
  }
  std::vector<std::set<M>> v(cosets.begin(), cosets.end());
  std::vector<std::size_t> counts{v.size()};
  auto strictly_inside = [](const std::set<M>& a, const std::set<M>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  auto extend = [&](auto& self, std::size_t last, std::size_t size) -> void {
    if (size >= 2) {
      if (counts.size() < size) counts.resize(size, 0);
      ++counts[size - 1];
    }
    for (std::size_t k = 0; k < v.size(); ++k)
      if (strictly_inside(v[last], v[k])) self(self, k, size + 1);
  };
  for (std::size_t k = 0; k < v.size(); ++k) extend(extend, k, 1);
  return counts;
}

}  // namespace

TEST_CASE("build_ball for K2 at radius 2") {
  auto ball = build_ball(fixture::k2(), 2);
  CHECK(ball.count(0) == 9);
  CHECK(ball.count(1) == 16);
  CHECK(ball.count(2) == 8);
  CHECK(ball.count(3) == 0);
  CHECK(ball.euler_characteristic() == 1);
}

TEST_CASE("build_ball for one generator at radius 1") {
  auto g = fixture::edgeless(1);
  auto ball = build_ball(g, 1);
  REQUIRE(ball.count(0) == 3);
  CHECK(ball.count(1) == 2);
  CHECK(ball.index_of(Coset{NormalWord{}, GenSubset{}}) >= 0);
  CHECK(ball.index_of(Coset{nw(g, "a"), GenSubset{}}) >= 0);
  CHECK(ball.index_of(Coset{NormalWord{}, set(g, "a")}) >= 0);
}

TEST_CASE("radius 0 has one vertex per clique plus the identity") {
  auto g = fixture::p3();
  auto ball = build_ball(g, 0);
  CHECK(ball.count(0) == 1 + all_cliques(g).size());
  for (const auto& c : ball.vertices) CHECK(c.rep.empty());
}

TEST_CASE("ball cell counts match explicit coset enumeration") {
  Rng rng(71);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + static_cast<int>(rng.below(4));
    int radius = static_cast<int>(rng.below(4));
    auto g = random_graph(n, rng);
    auto ball = build_ball(g, radius);
    auto expected = brute_ball_counts(g, radius);
    for (std::size_t d = 0; d < expected.size(); ++d) CHECK(ball.count(static_cast<int>(d)) == expected[d]);
    CHECK(ball.count(static_cast<int>(expected.size())) == 0);
    // chains are closed under taking faces
    for (std::size_t d = 2; d < ball.simplices.size(); ++d)
      for (const auto& s : ball.simplices[d])
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          auto face = s;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
          CHECK(std::binary_search(ball.simplices[d - 1].begin(), ball.simplices[d - 1].end(), face));
        }
  }
}

TEST_CASE("act examples on K2") {
  auto g = fixture::k2();
  auto a = nw(g, "a");
  CHECK(act(g, a, Coset{NormalWord{}, GenSubset{}}) == Coset{a, GenSubset{}});
  Coset whole{NormalWord{}, GenSubset::full(2)};
  CHECK(act(g, a, whole) == whole);
  Coset wa{NormalWord{}, set(g, "a")};
  CHECK(act(g, a, wa) == wa);
}

TEST_CASE("vertex_stabilizer_contains examples on P3") {
  auto g = fixture::p3();
  Coset a_wc{nw(g, "a"), set(g, "c")};
  CHECK(vertex_stabilizer_contains(g, a_wc, nw(g, "a c a")));
  CHECK_FALSE(vertex_stabilizer_contains(g, a_wc, nw(g, "b")));
  CHECK(vertex_stabilizer_contains(g, Coset{NormalWord{}, GenSubset{}}, NormalWord{}));
}

TEST_CASE("action and stabilizer laws") {
  Rng rng(73);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 1 + static_cast<int>(rng.below(4));
    auto g = random_graph(n, rng);
    auto ball = build_ball(g, 3);
    std::vector<NormalWord> elements;
    for (const auto& layer : word_layers(g, 3))
      for (const auto& w : layer) elements.push_back(w);
    for (const auto& c : ball.vertices) {
      CHECK(min_coset_rep(g, c.rep, c.a) == c.rep);
      for (const auto& u : elements) {
        NormalWord inside = normalize(g, [&] {
          Word w = inverse(g, c.rep).letters();
          w.insert(w.end(), u.begin(), u.end());
          w.insert(w.end(), c.rep.begin(), c.rep.end());
          return w;
        }());
        REQUIRE(vertex_stabilizer_contains(g, c, u) == supported_in(inside, c.a));
      }
    }
    for (int k = 0; k < 50; ++k) {
      const auto& c = ball.vertices[rng.below(ball.vertices.size())];
      const auto& u = elements[rng.below(elements.size())];
      const auto& v = elements[rng.below(elements.size())];
      CHECK(act(g, u, act(g, v, c)) == act(g, multiply(g, u, v), c));
    }
  }
}

TEST_CASE("subgroup_closure examples") {
  auto k2 = fixture::k2();
  auto full = subgroup_closure(k2, {nw(k2, "a"), nw(k2, "b")}, 100);
  REQUIRE(full);
  CHECK(full->size() == 4);

  auto p3 = fixture::p3();
  CHECK_FALSE(subgroup_closure(p3, {nw(p3, "a"), nw(p3, "c")}, 100));

  auto trivial = subgroup_closure(p3, {}, 1);
  REQUIRE(trivial);
  CHECK(trivial->size() == 1);
}

TEST_CASE("enclosing_parabolic examples") {
  auto p3 = fixture::p3();
  auto w = enclosing_parabolic(p3, {NormalWord{}, nw(p3, "a c a")}, 3);
  CHECK(str(p3, w.w) == "a");
  CHECK(w.a == set(p3, "c"));

  auto trivial = enclosing_parabolic(p3, {NormalWord{}}, 0);
  CHECK(trivial.w.empty());
  CHECK(trivial.a == set(p3, "a b"));

  auto k2 = fixture::k2();
  auto whole = enclosing_parabolic(k2, {NormalWord{}, nw(k2, "a"), nw(k2, "b"), nw(k2, "a b")}, 4);
  CHECK(whole.w.empty());
  CHECK(whole.a == GenSubset::full(2));

  try {
    enclosing_parabolic(p3, {NormalWord{}, nw(p3, "a c a")}, 0);
    FAIL("expected NotFound");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFound);
  }
}

TEST_CASE("finite subgroups sit inside finite parabolics") {
  Rng rng(79);
  int checked = 0;
  while (checked < 150) {
    int n = 1 + static_cast<int>(rng.below(4));
    auto g = random_graph(n, rng);
    auto spherical = spherical_elements(g);
    std::vector<NormalWord> gens;
    int count = 1 + static_cast<int>(rng.below(2));
    for (int k = 0; k < count; ++k) {
      Word conj(rng.below(4));
      for (auto& x : conj) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      gens.push_back(conjugate(g, spherical[rng.below(spherical.size())], normalize(g, conj)));
    }
    auto group = subgroup_closure(g, gens, 512);
    if (!group) continue;
    ++checked;
    auto witness = enclosing_parabolic(g, *group, default_search_radius(gens));
    REQUIRE(is_clique(g, witness.a));
    Coset vertex{witness.w, witness.a};
    for (const auto& u : *group) REQUIRE(vertex_stabilizer_contains(g, vertex, u));
    if (group->size() == (std::size_t{1} << witness.a.size())) {
      // then the conjugate is all of W_A
      std::set<NormalWord> conj;
      for (const auto& u : *group) conj.insert(conjugate(g, u, inverse(g, witness.w)));
      CHECK(conj.size() == group->size());
    }
    std::size_t omega = 0;
    for (auto c : maximal_cliques(g).cliques) omega = std::max<std::size_t>(omega, c.size());
    if (group->size() == (std::size_t{1} << omega)) CHECK(maximal_cliques(g).index_of(witness.a) >= 0);
  }
}
