#include <numeric>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "racg/error.hpp"
#include "racg/presentation.hpp"
#include "racg/rigidity.hpp"

using namespace racg;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidInput;
}

std::string message_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parse_presentation reads generators and exponents") {
  auto p = parse_presentation("gen a b\nm a b 2");
  CHECK(p.size() == 2);
  CHECK(p.m(0, 1) == 2);
  CHECK(p.m(1, 0) == 2);
  CHECK(p.m(0, 0) == 1);

  auto hex = parse_presentation("gen a b\nm a b 6");
  CHECK(hex.m(0, 1) == 6);

  auto full = parse_presentation("coxeter v1\n# comment\ngen a b c   # trailing\n\nm c a 3\n");
  CHECK(full.names() == std::vector<std::string>{"a", "b", "c"});
  CHECK(full.m(0, 2) == 3);
  CHECK(full.m(0, 1) == kInfinity);
}

TEST_CASE("parse_presentation errors carry line numbers") {
  CHECK(kind_of([] { parse_presentation("gen a b\nm a a 2"); }) == ErrorKind::Parse);
  CHECK(message_of([] { parse_presentation("gen a b\nm a a 2"); }).starts_with("line 2:"));
  CHECK(message_of([] { parse_presentation("gen a b a"); }).find("duplicate") != std::string::npos);
  CHECK(message_of([] { parse_presentation("gen a b\nm a b 1"); }).starts_with("line 2:"));
  CHECK(message_of([] { parse_presentation("gen a b\nm a z 2"); }).find("unknown generator 'z'") != std::string::npos);
  CHECK(message_of([] { parse_presentation("gen a b\n\nm a b"); }).starts_with("line 3:"));
  CHECK(message_of([] { parse_presentation("gen a b\nm a b x2"); }).find("malformed") != std::string::npos);
  CHECK(message_of([] { parse_presentation("gen a b\nm a b 2\nm b a 2"); }).find("twice") != std::string::npos);
  CHECK(message_of([] { parse_presentation("gen a\ncoxeter v1"); }).starts_with("line 2:"));
  CHECK(message_of([] { parse_presentation("coxeter v2\ngen a"); }).starts_with("line 1:"));
  CHECK(message_of([] { parse_presentation("gen a\nrel a a"); }).starts_with("line 2:"));
  CHECK(kind_of([] { parse_presentation("# nothing"); }) == ErrorKind::Parse);
}

TEST_CASE("format_presentation round trips") {
  auto p = parse_presentation("gen x y z w\nm x y 2\nm z w 5\nm x w 2");
  auto q = parse_presentation(format_presentation(p));
  CHECK(q.names() == p.names());
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) CHECK(q.m(i, j) == p.m(i, j));
}

TEST_CASE("validate_right_angled") {
  auto g = validate_right_angled(parse_presentation("gen a b c\nm a b 2\nm b c 2"));
  CHECK(g == fixture::p3());
  CHECK(g.edge_count() == 2);
  CHECK(!g.adjacent(0, 2));

  auto hex = parse_presentation("gen a b\nm a b 6");
  CHECK(kind_of([&] { validate_right_angled(hex); }) == ErrorKind::NotRightAngled);
  CHECK(message_of([&] { validate_right_angled(hex); }) == "NotRightAngled(a,b,6)");

  auto single = validate_right_angled(parse_presentation("gen a"));
  CHECK(single.size() == 1);
  CHECK(single.edge_count() == 0);
}

TEST_CASE("canonical_form examples") {
  auto p3 = fixture::p3();
  auto relabeled = p3.permuted({2, 1, 0});
  CHECK(canonical_form(p3) == canonical_form(relabeled));

  auto single_edge = CommutationGraph::from_edges(3, {{0, 1}});
  CHECK(canonical_form(p3) != canonical_form(single_edge));

  CHECK(canonical_form(CommutationGraph(0)) == "racg-graph:0:");
}

TEST_CASE("canonical_form separates exactly the isomorphism classes") {
  // Counts of unlabeled graphs on n vertices: 1, 2, 4, 11, 34, 156.
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> classes;
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < total; ++code) classes.insert(canonical_form(oracle::graph_from_code(n, code)));
    CHECK_MESSAGE(classes.size() == expected[n], "n = " << n);
  }
}

TEST_CASE("canonical_form is invariant under relabeling") {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng.below(9));
    auto g = random_graph(n, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    CHECK(canonical_form(g) == canonical_form(g.permuted(perm)));
  }
}

TEST_CASE("find_isomorphism examples") {
  auto p3 = fixture::p3();
  auto f = find_isomorphism(p3, p3.permuted({2, 1, 0}));
  REQUIRE(f);
  CHECK(is_isomorphism(p3, p3.permuted({2, 1, 0}), *f));

  CHECK_FALSE(find_isomorphism(p3, fixture::k3()));

  auto self = find_isomorphism(p3, p3);
  REQUIRE(self);
  CHECK(is_isomorphism(p3, p3, *self));
  CHECK(is_isomorphism(p3, p3, VertexBijection::identity(3)));
}

TEST_CASE("find_isomorphism agrees with brute force") {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t c1 = 0; c1 < total; ++c1)
      for (std::uint64_t c2 = 0; c2 < total; ++c2) {
        auto g1 = oracle::graph_from_code(n, c1), g2 = oracle::graph_from_code(n, c2);
        auto f = find_isomorphism(g1, g2);
        REQUIRE(f.has_value() == oracle::isomorphic_brute(g1, g2));
        if (f) REQUIRE(is_isomorphism(g1, g2, *f));
      }
  }
  Rng rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 5 + static_cast<int>(rng.below(2));
    auto g1 = random_graph(n, rng), g2 = random_graph(n, rng);
    auto f = find_isomorphism(g1, g2);
    REQUIRE(f.has_value() == oracle::isomorphic_brute(g1, g2));
    if (f) REQUIRE(is_isomorphism(g1, g2, *f));
  }
}

TEST_CASE("automorphisms examples") {
  auto p3 = automorphisms(fixture::p3());
  REQUIRE(p3.size() == 2);
  CHECK(p3[0].perm == std::vector<int>{0, 1, 2});
  CHECK(p3[1].perm == std::vector<int>{2, 1, 0});
  CHECK(automorphisms(fixture::k3()).size() == 6);
  CHECK(automorphisms(fixture::edgeless(2)).size() == 2);

  CHECK(kind_of([] { automorphisms(CommutationGraph(11)); }) == ErrorKind::TooLarge);
  CHECK(kind_of([] { automorphisms(CommutationGraph(9), {10, 1000}); }) == ErrorKind::TooLarge);
}

TEST_CASE("automorphisms form a group and match brute force") {
  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng.below(6));
    auto g = random_graph(n, rng);
    auto auts = automorphisms(g);
    CHECK(auts.size() == oracle::automorphisms_brute(g).size());
    std::set<std::vector<int>> elems;
    for (const auto& a : auts) elems.insert(a.perm);
    CHECK(elems.count(VertexBijection::identity(n).perm));
    for (const auto& a : auts) {
      CHECK(elems.count(a.inverse().perm));
      for (const auto& b : auts) CHECK(elems.count(a.then(b).perm));
    }
  }
}
