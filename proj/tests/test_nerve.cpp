#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "racg/error.hpp"
#include "racg/nerve.hpp"
#include "racg/rigidity.hpp"

using namespace racg;
using fixture::set;

TEST_CASE("is_simplex examples") {
  auto g = fixture::p3();
  CHECK(is_simplex(g, set(g, "a b")));
  CHECK_FALSE(is_simplex(g, set(g, "a c")));
  CHECK_FALSE(is_simplex(g, GenSubset{}));
}

TEST_CASE("nerve is a flag complex") {
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t graphs = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < graphs; ++code) {
      auto g = oracle::graph_from_code(n, code);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        GenSubset a(m);
        bool pairs_ok = m != 0;
        for (int i : a.members())
          for (int j : a.members())
            if (i < j && !is_simplex(g, GenSubset::singleton(i) | GenSubset::singleton(j))) pairs_ok = false;
        REQUIRE(is_simplex(g, a) == pairs_ok);
        REQUIRE(is_simplex(g, a) == (m != 0 && oracle::is_clique_brute(g, m)));
      }
    }
  }
}

TEST_CASE("maximal_cliques examples") {
  auto p3 = fixture::p3();
  auto star = maximal_cliques(p3);
  REQUIRE(star.size() == 2);
  CHECK(star[0] == set(p3, "a b"));
  CHECK(star[1] == set(p3, "b c"));
  CHECK(star.index_of(set(p3, "b c")) == 1);
  CHECK(star.index_of(set(p3, "b")) == -1);

  auto k3 = maximal_cliques(fixture::k3());
  REQUIRE(k3.size() == 1);
  CHECK(k3[0] == GenSubset::full(3));

  auto e2 = maximal_cliques(fixture::edgeless(2));
  REQUIRE(e2.size() == 2);
  CHECK(e2[0] == GenSubset::singleton(0));
  CHECK(e2[1] == GenSubset::singleton(1));
}

TEST_CASE("maximal_cliques matches subset enumeration on all graphs up to 5 vertices") {
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t graphs = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < graphs; ++code) {
      auto g = oracle::graph_from_code(n, code);
      std::set<std::uint64_t> expected;
      for (auto m : oracle::maximal_cliques_brute(g)) expected.insert(m);
      std::set<std::uint64_t> got;
      auto star = maximal_cliques(g);
      for (auto a : star.cliques) got.insert(a.bits());
      REQUIRE(got == expected);
      REQUIRE(std::is_sorted(star.cliques.begin(), star.cliques.end()));
    }
  }
}

TEST_CASE("spherical_elements examples") {
  auto p3 = fixture::p3();
  std::set<std::string> got;
  for (const auto& v : spherical_elements(p3)) got.insert(fixture::str(p3, v));
  CHECK(got == std::set<std::string>{"", "a", "b", "c", "a b", "b c"});

  CHECK(spherical_elements(fixture::k2()).size() == 4);
  CHECK(spherical_elements(fixture::edgeless(1)).size() == 2);

  try {
    spherical_elements(p3, 5);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
  CHECK(spherical_elements(p3, 6).size() == 6);
}

TEST_CASE("spherical set has one distinct element per clique plus the identity") {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng.below(7));
    auto g = random_graph(n, rng);
    std::size_t cliques = 0;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) cliques += oracle::is_clique_brute(g, m);
    auto v = spherical_elements(g);
    CHECK(v.size() == 1 + cliques);
    CHECK(std::set<NormalWord>(v.begin(), v.end()).size() == v.size());
  }
}

TEST_CASE("venn_region_size examples") {
  auto g = fixture::p3();
  auto ab = set(g, "a b"), bc = set(g, "b c");
  CHECK(venn_region_size({ab}, {bc}) == 1);
  CHECK(venn_region_size({ab, bc}, {}) == 1);
  CHECK(venn_region_size({ab, bc}, {bc}) == 0);
  try {
    venn_region_size({}, {ab});
    FAIL("expected EmptyIntersectionFamily");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyIntersectionFamily);
  }
}

TEST_CASE("standard_subgroup_order") {
  auto g = fixture::p3();
  CHECK(standard_subgroup_order(g, GenSubset{}) == 1);
  CHECK(standard_subgroup_order(g, set(g, "a b")) == 4);
  CHECK(standard_subgroup_order(g, set(g, "b")) == 2);
  CHECK_THROWS_AS(standard_subgroup_order(g, set(g, "a c")), Error);
}

TEST_CASE("standard subgroups intersect along the intersection of their cliques") {
  auto elements = [](const CommutationGraph& g, GenSubset a) {
    std::set<NormalWord> out;
    for (std::uint64_t m = a.bits();; m = (m - 1) & a.bits()) {
      out.insert(product_of(g, GenSubset(m)));
      if (m == 0) break;
    }
    return out;
  };
  Rng rng(43);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 2 + static_cast<int>(rng.below(5));
    auto g = random_graph(n, rng);
    auto cliques = all_cliques(g);
    std::erase_if(cliques, [](GenSubset c) { return c.size() > 4; });
    GenSubset a = cliques[rng.below(cliques.size())];
    GenSubset b = cliques[rng.below(cliques.size())];
    auto wa = elements(g, a), wb = elements(g, b);
    std::set<NormalWord> both;
    for (const auto& x : wa)
      if (wb.count(x)) both.insert(x);
    for (const auto& x : wb) CHECK(supported_in(x, b));
    CHECK(both == elements(g, a & b));
    CHECK(both.size() == standard_subgroup_order(g, a & b));
  }
}
