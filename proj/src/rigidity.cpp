#include "racg/rigidity.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "racg/error.hpp"

namespace racg {

GeneratingSet GeneratingSet::identity(const CommutationGraph& g) {
  GeneratingSet out;
  for (int s = 0; s < g.size(); ++s) out.images.push_back(generator(g, s));
  return out;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

CommutationGraph random_graph(int n, Rng& rng) {
  CommutationGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.below(2) == 1) g.add_edge(i, j);
  return g;
}

// --- induced system ---------------------------------------------------------

namespace {

// Shortens the set by conjugating one member by another while any such move
// reduces total length. Returns the reduced set.
std::vector<NormalWord> conjugation_reduce(const CommutationGraph& g, std::vector<NormalWord> t) {
  while (true) {
    std::ptrdiff_t best_gain = 0;
    std::size_t bj = 0;
    NormalWord best_word;
    for (std::size_t j = 0; j < t.size(); ++j) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i == j) continue;
        NormalWord c = conjugate(g, t[j], t[i]);
        std::ptrdiff_t gain = static_cast<std::ptrdiff_t>(t[j].size()) - static_cast<std::ptrdiff_t>(c.size());
        if (gain > best_gain) {
          best_gain = gain;
          bj = j;
          best_word = std::move(c);
        }
      }
    }
    if (best_gain == 0) return t;
    t[bj] = std::move(best_word);
  }
}

bool generates(const CommutationGraph& g, const std::vector<NormalWord>& images, int gen_radius, int& missing) {
  std::vector<NormalWord> reduced = conjugation_reduce(g, images);
  std::set<NormalWord> found(reduced.begin(), reduced.end());
  std::vector<NormalWord> frontier(found.begin(), found.end());
  auto all_found = [&] {
    for (int s = 0; s < g.size(); ++s)
      if (!found.count(generator(g, s))) {
        missing = s;
        return false;
      }
    return true;
  };
  for (int len = 2; len <= gen_radius && !all_found(); ++len) {
    std::vector<NormalWord> next;
    for (const auto& x : frontier)
      for (const auto& t : reduced) {
        NormalWord y = multiply(g, x, t);
        if (found.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return all_found();
}

}  // namespace

InducedSystem induce_system(const CommutationGraph& g, const GeneratingSet& gset, int gen_radius) {
  const int n = g.size();
  if (static_cast<int>(gset.size()) != n)
    throw Error(ErrorKind::WrongCardinality, "WrongCardinality: " + std::to_string(gset.size()) + " images for " +
                                                 std::to_string(n) + " generators");
  for (int i = 0; i < n; ++i)
    if (element_order(g, gset.images[i]) != ElementOrder::Two)
      throw Error(ErrorKind::NotInvolution, "NotInvolution(" + std::to_string(i) + ")");
  std::set<NormalWord> distinct(gset.images.begin(), gset.images.end());
  if (static_cast<int>(distinct.size()) != n)
    throw Error(ErrorKind::WrongCardinality, "WrongCardinality: images are not pairwise distinct");

  std::vector<std::string> names;
  for (const auto& name : g.names()) names.push_back(name + "'");
  CommutationGraph h(n, std::move(names));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (element_order(g, multiply(g, gset.images[i], gset.images[j])) == ElementOrder::Two) h.add_edge(i, j);

  int missing = -1;
  if (!generates(g, gset.images, gen_radius, missing))
    throw Error(ErrorKind::GenerationUnverified, "GenerationUnverified(" + g.name(missing) + ", " +
                                                     std::to_string(gen_radius) + ")");

  NerveStar star = maximal_cliques(h);
  return InducedSystem{gset, std::move(h), std::move(star)};
}

// --- star correspondence ----------------------------------------------------

Gf2Subspace clique_span(const CommutationGraph& g, GenSubset a) {
  Gf2Subspace s(g.size());
  for (int i : a.members()) s.add(std::uint64_t{1} << i);
  return s;
}

Gf2Subspace clique_span(const CommutationGraph& g, const GeneratingSet& gset, GenSubset a) {
  Gf2Subspace s(g.size());
  for (int i : a.members()) s.add(parity(g, gset.images[i]).bits);
  return s;
}

namespace {

std::string subset_text(const CommutationGraph& g, GenSubset a) {
  std::string out = "{";
  for (int i : a.members()) {
    if (out.size() > 1) out += ",";
    out += g.name(i);
  }
  return out + "}";
}

// For each left span, the unique index of an equal right span.
std::vector<int> match_spans(const std::vector<Gf2Subspace>& left, const std::vector<Gf2Subspace>& right,
                             const CommutationGraph& g, const NerveStar& left_star) {
  std::vector<int> out;
  for (std::size_t k = 0; k < left.size(); ++k) {
    int match = -1;
    for (std::size_t l = 0; l < right.size(); ++l) {
      if (!subspace_equal(left[k], right[l])) continue;
      if (match >= 0) throw Error(ErrorKind::Ambiguous, "Ambiguous(" + subset_text(g, left_star[k]) + ")");
      match = static_cast<int>(l);
    }
    if (match < 0) throw Error(ErrorKind::NoMatch, "NoMatch(" + subset_text(g, left_star[k]) + ")");
    out.push_back(match);
  }
  return out;
}

}  // namespace

StarCorrespondence star_correspondence(const CommutationGraph& g, const InducedSystem& sys) {
  NerveStar base = maximal_cliques(g);
  std::vector<Gf2Subspace> base_spans, induced_spans;
  for (GenSubset a : base.cliques) base_spans.push_back(clique_span(g, a));
  for (GenSubset a : sys.nstar.cliques) induced_spans.push_back(clique_span(g, sys.gset, a));

  StarCorrespondence corr;
  corr.forward = match_spans(base_spans, induced_spans, g, base);
  corr.backward = match_spans(induced_spans, base_spans, sys.graph, sys.nstar);
  if (corr.forward.size() != corr.backward.size())
    throw Error(ErrorKind::NotBijective, "NotBijective: maximal clique counts differ");
  for (std::size_t k = 0; k < corr.forward.size(); ++k)
    if (corr.backward[corr.forward[k]] != static_cast<int>(k))
      throw Error(ErrorKind::NotBijective, "NotBijective: A** != A for " + subset_text(g, base[k]));
  return corr;
}

std::vector<GenSubset> star_images(const InducedSystem& sys, const StarCorrespondence& corr,
                                   const std::vector<int>& star_indices) {
  std::vector<GenSubset> out;
  for (int k : star_indices) out.push_back(sys.nstar[corr.forward[k]]);
  return out;
}

// --- equivalence ------------------------------------------------------------

Equivalence extract_equivalence(const CommutationGraph& g, const StarCorrespondence& corr, const InducedSystem& sys) {
  const int n = g.size();
  NerveStar base = maximal_cliques(g);
  if (base.size() != corr.forward.size() || sys.nstar.size() != corr.backward.size())
    throw Error(ErrorKind::InvalidInput, "correspondence does not match the systems");

  // Signature of a generator: the S'-indexed maximal cliques containing it.
  std::map<std::vector<int>, std::vector<int>> base_classes, induced_classes;
  for (int s = 0; s < n; ++s) {
    std::vector<int> sig;
    for (std::size_t k = 0; k < base.size(); ++k)
      if (base[k].contains(s)) sig.push_back(corr.forward[k]);
    std::sort(sig.begin(), sig.end());
    base_classes[sig].push_back(s);
  }
  for (int t = 0; t < sys.graph.size(); ++t) {
    std::vector<int> sig;
    for (std::size_t l = 0; l < sys.nstar.size(); ++l)
      if (sys.nstar[l].contains(t)) sig.push_back(static_cast<int>(l));
    induced_classes[sig].push_back(t);
  }

  Equivalence eq{std::vector<int>(static_cast<std::size_t>(n), -1)};
  for (const auto& [sig, members] : base_classes) {
    auto it = induced_classes.find(sig);
    if (it == induced_classes.end() || it->second.size() != members.size())
      throw Error(ErrorKind::SignatureMismatch, "SignatureMismatch: class of " + g.name(members.front()) +
                                                    " has no partner of equal size");
    for (std::size_t k = 0; k < members.size(); ++k) eq.phi[members[k]] = it->second[k];
  }
  if (induced_classes.size() != base_classes.size())
    throw Error(ErrorKind::SignatureMismatch, "SignatureMismatch: unmatched generators of S'");
  return eq;
}

bool verify_equivalence(const CommutationGraph& g, const InducedSystem& sys, const Equivalence& eq) {
  VertexBijection f{eq.phi};
  return is_isomorphism(g, sys.graph, f);
}

bool confirm_conjugacy(const CommutationGraph& g, const InducedSystem& sys, const StarCorrespondence& corr) {
  NerveStar base = maximal_cliques(g);
  for (std::size_t k = 0; k < base.size(); ++k) {
    GenSubset a = base[k];
    GenSubset a_star = sys.nstar[corr.forward[k]];
    if (a.size() != a_star.size()) return false;
    std::vector<NormalWord> gens;
    for (int t : a_star.members()) gens.push_back(sys.gset.images[t]);
    const std::size_t order = std::size_t{1} << a.size();
    auto group = subgroup_closure(g, gens, order);
    if (!group || group->size() != order) return false;
    ParabolicWitness witness = enclosing_parabolic(g, *group, default_search_radius(gens));
    if (witness.a != a) return false;
  }
  return true;
}

std::optional<VertexBijection> decide_isomorphic(const CoxeterPresentation& p1, const CoxeterPresentation& p2) {
  CommutationGraph g1 = validate_right_angled(p1);
  CommutationGraph g2 = validate_right_angled(p2);
  return find_isomorphism(g1, g2);
}

// --- automorphisms ----------------------------------------------------------

std::string_view to_string(AutomorphismKind kind) {
  switch (kind) {
    case AutomorphismKind::GraphAutomorphism: return "graph_aut";
    case AutomorphismKind::Inner: return "inner";
    case AutomorphismKind::PartialConjugation: return "partial_conjugation";
  }
  return "?";
}

void check_relations(const CommutationGraph& g, const GeneratingSet& images) {
  if (static_cast<int>(images.size()) != g.size())
    throw Error(ErrorKind::RelationCheckFailed, "RelationCheckFailed: image count");
  for (int s = 0; s < g.size(); ++s)
    if (!multiply(g, images.images[s], images.images[s]).empty())
      throw Error(ErrorKind::RelationCheckFailed, "RelationCheckFailed: " + g.name(s) + "^2");
  for (auto [s, t] : g.edges()) {
    NormalWord st = multiply(g, images.images[s], images.images[t]);
    if (!multiply(g, st, st).empty())
      throw Error(ErrorKind::RelationCheckFailed, "RelationCheckFailed: (" + g.name(s) + g.name(t) + ")^2");
  }
}

GeneratingSet compose(const CommutationGraph& g, const GeneratingSet& outer, const GeneratingSet& inner) {
  GeneratingSet out;
  for (const auto& w : inner.images) {
    NormalWord acc;
    for (int x : w) acc = multiply(g, acc, outer.images[x]);
    out.images.push_back(std::move(acc));
  }
  return out;
}

std::vector<PartialConjugation> partial_conjugations(const CommutationGraph& g) {
  std::vector<PartialConjugation> out;
  const GenSubset all = GenSubset::full(g.size());
  for (int x = 0; x < g.size(); ++x) {
    GenSubset star = g.neighbors(x);
    star.insert(x);
    GenSubset rest = all - star;
    while (!rest.empty()) {
      int seed = rest.members().front();
      GenSubset comp = GenSubset::singleton(seed);
      GenSubset frontier = comp;
      while (!frontier.empty()) {
        GenSubset next;
        for (int v : frontier.members()) next = next | (g.neighbors(v) & rest);
        frontier = next - comp;
        comp = comp | next;
      }
      out.push_back(PartialConjugation{x, comp});
      rest = rest - comp;
    }
  }
  return out;
}

GeneratingSet apply_partial_conjugation(const CommutationGraph& g, const PartialConjugation& pc) {
  GeneratingSet out = GeneratingSet::identity(g);
  NormalWord x = generator(g, pc.pivot);
  for (int t : pc.component.members()) out.images[t] = conjugate(g, out.images[t], x);
  return out;
}

GeneratingSet random_elementary_automorphism(const CommutationGraph& g, AutomorphismKind kind, std::uint64_t seed) {
  Rng rng(seed);
  GeneratingSet out;
  switch (kind) {
    case AutomorphismKind::GraphAutomorphism: {
      std::vector<VertexBijection> auts = automorphisms(g);
      std::erase(auts, VertexBijection::identity(g.size()));
      if (auts.empty()) throw Error(ErrorKind::NoneApplicable, "NoneApplicable(graph_aut)");
      const auto& perm = auts[rng.below(auts.size())].perm;
      for (int s = 0; s < g.size(); ++s) out.images.push_back(generator(g, perm[s]));
      break;
    }
    case AutomorphismKind::Inner: {
      if (g.size() == 0) throw Error(ErrorKind::NoneApplicable, "NoneApplicable(inner)");
      Word w;
      const int len = 1 + static_cast<int>(rng.below(2));
      for (int i = 0; i < len; ++i) w.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(g.size()))));
      NormalWord conj = normalize(g, w);
      for (int s = 0; s < g.size(); ++s) out.images.push_back(conjugate(g, generator(g, s), conj));
      break;
    }
    case AutomorphismKind::PartialConjugation: {
      std::vector<PartialConjugation> choices = partial_conjugations(g);
      if (choices.empty()) throw Error(ErrorKind::NoneApplicable, "NoneApplicable(partial_conjugation)");
      out = apply_partial_conjugation(g, choices[rng.below(choices.size())]);
      break;
    }
  }
  check_relations(g, out);
  return out;
}

GeneratingSet random_automorphism(const CommutationGraph& g, int length, std::uint64_t seed) {
  if (length < 0) throw Error(ErrorKind::InvalidInput, "automorphism length must be non-negative");
  constexpr AutomorphismKind kinds[] = {AutomorphismKind::GraphAutomorphism, AutomorphismKind::Inner,
                                        AutomorphismKind::PartialConjugation};
  Rng rng(seed);
  GeneratingSet current = GeneratingSet::identity(g);
  for (int step = 0; step < length; ++step) {
    const std::size_t first = rng.below(3);
    const std::uint64_t sub_seed = rng.next();
    for (std::size_t k = 0; k < 3; ++k) {
      try {
        GeneratingSet elementary = random_elementary_automorphism(g, kinds[(first + k) % 3], sub_seed);
        current = compose(g, current, elementary);
        break;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoneApplicable && e.kind() != ErrorKind::TooLarge) throw;
      }
    }
  }
  check_relations(g, current);
  return current;
}

}  // namespace racg
