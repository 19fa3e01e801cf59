#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "racg/abelianization.hpp"
#include "racg/davis.hpp"
#include "racg/nerve.hpp"
#include "racg/presentation.hpp"
#include "racg/word.hpp"

namespace racg {

/// Candidate second Coxeter generating set S', written as words in S.
struct GeneratingSet {
  std::vector<NormalWord> images;

  std::size_t size() const { return images.size(); }
  static GeneratingSet identity(const CommutationGraph& g);
  friend bool operator==(const GeneratingSet&, const GeneratingSet&) = default;
};

/// The Coxeter system (W, S') read off from a generating set: its commutation
/// graph on S' indices and that graph's maximal cliques.
struct InducedSystem {
  GeneratingSet gset;
  CommutationGraph graph;
  NerveStar nstar;
};

/// Bijection between the maximal cliques of S and those of S', matched by
/// equal images in the abelianization.
struct StarCorrespondence {
  std::vector<int> forward;   // N*(W,S) index -> N*(W,S') index
  std::vector<int> backward;  // N*(W,S') index -> N*(W,S) index
};

struct Equivalence {
  std::vector<int> phi;  // S index -> S' index
};

inline constexpr int kDefaultGenRadius = 4;

/// Validates S' and builds the induced system. Generation of W by S' is
/// certified by conjugation-reducing S' (each move t_j <- t_i t_j t_i keeps the
/// generated subgroup) and then searching S'-products of length <= gen_radius.
InducedSystem induce_system(const CommutationGraph& g, const GeneratingSet& gset, int gen_radius = kDefaultGenRadius);

// q(W_A) for A a set of S indices, or of S' indices when images are given.
Gf2Subspace clique_span(const CommutationGraph& g, GenSubset a);
Gf2Subspace clique_span(const CommutationGraph& g, const GeneratingSet& gset, GenSubset a);

StarCorrespondence star_correspondence(const CommutationGraph& g, const InducedSystem& sys);

// Maps a set of S-maximal-clique indices to S' cliques through the correspondence.
std::vector<GenSubset> star_images(const InducedSystem& sys, const StarCorrespondence& corr,
                                   const std::vector<int>& star_indices);

Equivalence extract_equivalence(const CommutationGraph& g, const StarCorrespondence& corr, const InducedSystem& sys);

bool verify_equivalence(const CommutationGraph& g, const InducedSystem& sys, const Equivalence& eq);

/// Cross-check of the abelianization route: for each matched pair (A, A*),
/// W_{A*} is finite of order 2^|A| and is conjugate into W_A. Meant for small n.
bool confirm_conjugacy(const CommutationGraph& g, const InducedSystem& sys, const StarCorrespondence& corr);

std::optional<VertexBijection> decide_isomorphic(const CoxeterPresentation& p1, const CoxeterPresentation& p2);

enum class AutomorphismKind { GraphAutomorphism, Inner, PartialConjugation };
std::string_view to_string(AutomorphismKind kind);

// Images of S under the automorphism; throws RelationCheckFailed if a defining
// relation of (W,S) does not map to the identity.
void check_relations(const CommutationGraph& g, const GeneratingSet& images);

GeneratingSet random_elementary_automorphism(const CommutationGraph& g, AutomorphismKind kind, std::uint64_t seed);

// Composition of `length` seeded elementary automorphisms.
GeneratingSet random_automorphism(const CommutationGraph& g, int length, std::uint64_t seed);

// Applies the endomorphism s -> outer.images[s] to every image of inner.
GeneratingSet compose(const CommutationGraph& g, const GeneratingSet& outer, const GeneratingSet& inner);

struct PartialConjugation {
  int pivot;
  GenSubset component;
};
std::vector<PartialConjugation> partial_conjugations(const CommutationGraph& g);
GeneratingSet apply_partial_conjugation(const CommutationGraph& g, const PartialConjugation& pc);

/// Seeded generator with a platform-independent bounded draw (the standard
/// distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

CommutationGraph random_graph(int n, Rng& rng);

}  // namespace racg
