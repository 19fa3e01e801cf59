#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "racg/presentation.hpp"
#include "racg/subset.hpp"

namespace racg {

// A raw word: generator indices, not necessarily reduced.
using Word = std::vector<int>;

/// Canonical reduced word for a group element: the lexicographically least
/// reduced spelling under the generator order. Two NormalWords denote the same
/// element iff their letters are identical.
class NormalWord {
 public:
  NormalWord() = default;

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  // Set of letters occurring in the word.
  GenSubset support() const;

  friend bool operator==(const NormalWord&, const NormalWord&) = default;
  // Shortlex: shorter first, then lexicographic.
  friend std::strong_ordering operator<=>(const NormalWord& a, const NormalWord& b);

 private:
  friend NormalWord normalize(const CommutationGraph& g, const Word& w);
  friend NormalWord multiply(const CommutationGraph& g, const NormalWord& u, const NormalWord& v);
  friend NormalWord min_coset_rep(const CommutationGraph& g, const NormalWord& w, GenSubset a);
  friend NormalWord generator(const CommutationGraph& g, int s);
  friend NormalWord product_of(const CommutationGraph& g, GenSubset clique);

  std::vector<int> letters_;
};

NormalWord normalize(const CommutationGraph& g, const Word& w);
NormalWord generator(const CommutationGraph& g, int s);
// Product of the members of a clique, in generator order.
NormalWord product_of(const CommutationGraph& g, GenSubset clique);

NormalWord multiply(const CommutationGraph& g, const NormalWord& u, const NormalWord& v);
NormalWord inverse(const CommutationGraph& g, const NormalWord& u);
NormalWord conjugate(const CommutationGraph& g, const NormalWord& u, const NormalWord& w);

enum class ElementOrder { One = 1, Two = 2, Infinite = 0 };
std::string_view to_string(ElementOrder order);

ElementOrder element_order(const CommutationGraph& g, const NormalWord& u);

// Unique shortest element of the coset w·W_A. A must be a clique or empty.
NormalWord min_coset_rep(const CommutationGraph& g, const NormalWord& w, GenSubset a);

bool supported_in(const NormalWord& u, GenSubset a);

bool is_clique(const CommutationGraph& g, GenSubset a);

// Whitespace-separated generator names; empty text is the identity.
Word parse_word(const CommutationGraph& g, std::string_view text);
std::string format_word(const CommutationGraph& g, const std::vector<int>& letters);
inline std::string format_word(const CommutationGraph& g, const NormalWord& w) { return format_word(g, w.letters()); }

}  // namespace racg
