#include "racg/abelianization.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "racg/error.hpp"
#include "racg/nerve.hpp"

namespace racg {

std::string ParityVector::to_string() const {
  std::string s;
  for (int i = 0; i < n; ++i) s.push_back(((bits >> i) & 1u) ? '1' : '0');
  return s;
}

std::uint64_t Gf2Subspace::reduce(std::uint64_t v) const {
  for (std::uint64_t row : basis_)
    if (v & (row & -row)) v ^= row;
  return v;
}

bool Gf2Subspace::contains(std::uint64_t v) const { return reduce(v) == 0; }

bool Gf2Subspace::add(std::uint64_t v) {
  v = reduce(v);
  if (v == 0) return false;
  std::uint64_t pivot = v & -v;
  for (auto& row : basis_)
    if (row & pivot) row ^= v;
  auto at = std::lower_bound(basis_.begin(), basis_.end(), v,
                             [](std::uint64_t a, std::uint64_t b) { return (a & -a) < (b & -b); });
  basis_.insert(at, v);
  return true;
}

ParityVector parity(const CommutationGraph& g, const Word& w) {
  ParityVector p{g.size(), 0};
  for (int x : w) {
    if (x < 0 || x >= g.size()) throw Error(ErrorKind::LetterOutOfRange, "letter out of range");
    p.bits ^= std::uint64_t{1} << x;
  }
  return p;
}

ParityVector parity(const CommutationGraph& g, const NormalWord& w) { return parity(g, w.letters()); }

Gf2Subspace span_of_words(const CommutationGraph& g, const std::vector<Word>& ws) {
  Gf2Subspace s(g.size());
  for (const auto& w : ws) s.add(parity(g, w).bits);
  return s;
}

Gf2Subspace span_of_words(const CommutationGraph& g, const std::vector<NormalWord>& ws) {
  Gf2Subspace s(g.size());
  for (const auto& w : ws) s.add(parity(g, w).bits);
  return s;
}

bool subspace_equal(const Gf2Subspace& a, const Gf2Subspace& b) {
  if (a.ambient() != b.ambient())
    throw Error(ErrorKind::DimensionMismatch, "subspaces live in spaces of dimension " + std::to_string(a.ambient()) +
                                                  " and " + std::to_string(b.ambient()));
  return a.basis() == b.basis();
}

bool verify_injective_on_V(const CommutationGraph& g, std::size_t cap) {
  std::unordered_set<std::uint64_t> seen;
  for (const auto& v : spherical_elements(g, cap))
    if (!seen.insert(parity(g, v).bits).second) return false;
  return true;
}

}  // namespace racg
