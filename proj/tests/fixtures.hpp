#pragma once

#include <string>

#include "racg/presentation.hpp"
#include "racg/word.hpp"

namespace fixture {

// a - b - c, with a and c not commuting.
inline racg::CommutationGraph p3() { return racg::CommutationGraph::from_edges(3, {{0, 1}, {1, 2}}); }
inline racg::CommutationGraph k2() { return racg::CommutationGraph::from_edges(2, {{0, 1}}); }
inline racg::CommutationGraph k3() { return racg::CommutationGraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}); }
inline racg::CommutationGraph edgeless(int n) { return racg::CommutationGraph(n); }

inline racg::NormalWord nw(const racg::CommutationGraph& g, const std::string& text) {
  return racg::normalize(g, racg::parse_word(g, text));
}

inline std::string str(const racg::CommutationGraph& g, const racg::NormalWord& w) { return racg::format_word(g, w); }

inline racg::GenSubset set(const racg::CommutationGraph& g, const std::string& text) {
  racg::GenSubset s;
  for (int x : racg::parse_word(g, text)) s.insert(x);
  return s;
}

}  // namespace fixture
