#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "racg/presentation.hpp"
#include "racg/word.hpp"

namespace racg {

/// Image of a word in (Z/2)^n: bit t is the parity of occurrences of t.
struct ParityVector {
  int n = 0;
  std::uint64_t bits = 0;

  friend bool operator==(const ParityVector&, const ParityVector&) = default;
  friend ParityVector operator^(ParityVector a, ParityVector b) { return {a.n, a.bits ^ b.bits}; }
  std::string to_string() const;  // '0'/'1' per generator, in generator order
};

/// A GF(2) subspace kept in reduced row-echelon form, so equal subspaces have
/// identical bases. Rows are sorted by pivot (lowest set bit), ascending.
class Gf2Subspace {
 public:
  explicit Gf2Subspace(int n) : n_(n) {}

  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::uint64_t>& basis() const { return basis_; }

  // Returns false if v was already in the span.
  bool add(std::uint64_t v);
  bool contains(std::uint64_t v) const;

  friend bool operator==(const Gf2Subspace&, const Gf2Subspace&) = default;

 private:
  std::uint64_t reduce(std::uint64_t v) const;

  int n_;
  std::vector<std::uint64_t> basis_;
};

ParityVector parity(const CommutationGraph& g, const Word& w);
ParityVector parity(const CommutationGraph& g, const NormalWord& w);

Gf2Subspace span_of_words(const CommutationGraph& g, const std::vector<Word>& ws);
Gf2Subspace span_of_words(const CommutationGraph& g, const std::vector<NormalWord>& ws);

// Throws DimensionMismatch when ambient spaces differ.
bool subspace_equal(const Gf2Subspace& a, const Gf2Subspace& b);

bool verify_injective_on_V(const CommutationGraph& g, std::size_t cap = std::size_t{1} << 20);

}  // namespace racg
