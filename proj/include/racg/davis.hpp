#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "racg/nerve.hpp"
#include "racg/presentation.hpp"
#include "racg/word.hpp"

namespace racg {

/// The coset rep·W_A, named by its shortest element.
struct Coset {
  NormalWord rep;
  GenSubset a;

  friend bool operator==(const Coset&, const Coset&) = default;
  friend std::strong_ordering operator<=>(const Coset& x, const Coset& y) {
    if (auto c = x.rep <=> y.rep; c != 0) return c;
    return x.a <=> y.a;
  }
};

Coset make_coset(const CommutationGraph& g, const NormalWord& w, GenSubset a);

// x ⊆ y as sets of group elements.
bool coset_contains(const CommutationGraph& g, const Coset& outer, const Coset& inner);

/// The part of the Davis–Vinberg complex spanned by cosets whose shortest
/// element has length <= radius. simplices[d] lists the d-simplices (chains of
/// d+1 cosets, smallest coset first) for d >= 1.
struct BallComplex {
  int radius = 0;
  std::vector<Coset> vertices;
  std::vector<std::vector<std::vector<int>>> simplices;

  std::size_t count(int dim) const;
  long long euler_characteristic() const;
  int index_of(const Coset& c) const;
};

struct BallLimits {
  std::size_t max_vertices = 1'000'000;
  std::size_t max_simplices = 10'000'000;
};

// Normal words of length exactly `length`, sorted; build by successive layers.
std::vector<std::vector<NormalWord>> word_layers(const CommutationGraph& g, int radius, std::size_t cap = 1'000'000);

std::vector<Coset> ball_vertices(const CommutationGraph& g, int radius, std::size_t cap = 1'000'000);
BallComplex build_ball(const CommutationGraph& g, int radius, BallLimits limits = {});

Coset act(const CommutationGraph& g, const NormalWord& w, const Coset& c);
bool vertex_stabilizer_contains(const CommutationGraph& g, const Coset& c, const NormalWord& u);

// Full multiplicative closure of gens, or nullopt once it exceeds cap elements.
std::optional<std::vector<NormalWord>> subgroup_closure(const CommutationGraph& g, const std::vector<NormalWord>& gens,
                                                       std::size_t cap);

struct ParabolicWitness {
  NormalWord w;
  GenSubset a;
  friend bool operator==(const ParabolicWitness&, const ParabolicWitness&) = default;
};

int default_search_radius(const std::vector<NormalWord>& gens);

/// Finds a vertex w·W_A of the ball fixed by every element, i.e.
/// w⁻¹·G·w ⊆ W_A. Prefers the shortest w, then the smallest A. The trivial
/// group returns (ε, first maximal clique). Throws NotFound when no vertex
/// within search_radius is fixed.
ParabolicWitness enclosing_parabolic(const CommutationGraph& g, const std::vector<NormalWord>& elements,
                                     int search_radius);

}  // namespace racg
