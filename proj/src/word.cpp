#include "racg/word.hpp"

#include <algorithm>
#include <cctype>

#include "racg/error.hpp"

namespace racg {

namespace {

// Appends x to a normal word in place. Scanning leftwards over letters that
// commute with x: meeting x itself cancels it; otherwise x is inserted at the
// leftmost reachable slot whose current letter is greater than x.
void append_letter(const CommutationGraph& g, std::vector<int>& letters, int x) {
  std::size_t k = letters.size();
  while (k > 0) {
    int y = letters[k - 1];
    if (y == x) {
      letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(k - 1));
      return;
    }
    if (!g.commute(x, y)) break;
    --k;
  }
  std::size_t slot = k;
  while (slot < letters.size() && letters[slot] < x) ++slot;
  letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(slot), x);
}

void check_letter(const CommutationGraph& g, int x) {
  if (x < 0 || x >= g.size())
    throw Error(ErrorKind::LetterOutOfRange,
                "letter index " + std::to_string(x) + " out of range for " + std::to_string(g.size()) + " generators");
}

}  // namespace

GenSubset NormalWord::support() const {
  GenSubset s;
  for (int x : letters_) s.insert(x);
  return s;
}

std::strong_ordering operator<=>(const NormalWord& a, const NormalWord& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.letters_ <=> b.letters_;
}

NormalWord normalize(const CommutationGraph& g, const Word& w) {
  NormalWord out;
  for (int x : w) {
    check_letter(g, x);
    append_letter(g, out.letters_, x);
  }
  return out;
}

NormalWord generator(const CommutationGraph& g, int s) {
  check_letter(g, s);
  NormalWord out;
  out.letters_.push_back(s);
  return out;
}

NormalWord product_of(const CommutationGraph& g, GenSubset clique) {
  if (!is_clique(g, clique)) throw Error(ErrorKind::NotAClique, "generator set is not a clique");
  NormalWord out;
  out.letters_ = clique.members();
  return out;
}

NormalWord multiply(const CommutationGraph& g, const NormalWord& u, const NormalWord& v) {
  NormalWord out = u;
  for (int x : v) append_letter(g, out.letters_, x);
  return out;
}

NormalWord inverse(const CommutationGraph& g, const NormalWord& u) {
  Word reversed(u.letters().rbegin(), u.letters().rend());
  return normalize(g, reversed);
}

NormalWord conjugate(const CommutationGraph& g, const NormalWord& u, const NormalWord& w) {
  return multiply(g, multiply(g, w, u), inverse(g, w));
}

std::string_view to_string(ElementOrder order) {
  switch (order) {
    case ElementOrder::One: return "1";
    case ElementOrder::Two: return "2";
    case ElementOrder::Infinite: return "inf";
  }
  return "?";
}

ElementOrder element_order(const CommutationGraph& g, const NormalWord& u) {
  if (u.empty()) return ElementOrder::One;
  return multiply(g, u, u).empty() ? ElementOrder::Two : ElementOrder::Infinite;
}

bool is_clique(const CommutationGraph& g, GenSubset a) {
  for (int i : a.members()) {
    if (i >= g.size()) return false;
    GenSubset others = a;
    others.erase(i);
    if (!others.subset_of(g.neighbors(i))) return false;
  }
  return true;
}

NormalWord min_coset_rep(const CommutationGraph& g, const NormalWord& w, GenSubset a) {
  if (!is_clique(g, a)) throw Error(ErrorKind::NotAClique, "coset subset is not a clique");
  NormalWord out = w;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (int s : a.members()) {
      std::vector<int> next = out.letters_;
      append_letter(g, next, s);
      if (next.size() < out.size()) {
        out.letters_ = std::move(next);
        shrunk = true;
      }
    }
  }
  return out;
}

bool supported_in(const NormalWord& u, GenSubset a) { return u.support().subset_of(a); }

Word parse_word(const CommutationGraph& g, std::string_view text) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) {
      auto name = text.substr(i, j - i);
      auto idx = g.index_of(name);
      if (!idx) throw Error(ErrorKind::InvalidInput, "unknown generator '" + std::string(name) + "' in word");
      out.push_back(*idx);
    }
    i = j;
  }
  return out;
}

std::string format_word(const CommutationGraph& g, const std::vector<int>& letters) {
  std::string out;
  for (int x : letters) {
    if (!out.empty()) out.push_back(' ');
    out += g.name(x);
  }
  return out;
}

}  // namespace racg
