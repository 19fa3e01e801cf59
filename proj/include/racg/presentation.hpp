#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "racg/subset.hpp"

namespace racg {

// Off-diagonal Coxeter exponent; kInfinity encodes m = ∞.
inline constexpr int kInfinity = 0;

/// Generator names plus the symmetric Coxeter matrix m. Diagonal entries are 1,
/// off-diagonal entries are >= 2 or kInfinity.
class CoxeterPresentation {
 public:
  CoxeterPresentation(std::vector<std::string> names, std::vector<int> m);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  int m(int i, int j) const { return m_[static_cast<std::size_t>(i) * names_.size() + j]; }
  std::optional<int> index_of(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> m_;
};

CoxeterPresentation parse_presentation(std::string_view text);
std::string format_presentation(const CoxeterPresentation& p);

/// Simple graph on generator indices; edge {i,j} iff m(i,j) = 2.
class CommutationGraph {
 public:
  CommutationGraph() = default;
  explicit CommutationGraph(int n, std::vector<std::string> names = {});

  static CommutationGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                     std::vector<std::string> names = {});

  int size() const { return n_; }
  GenSubset neighbors(int i) const { return GenSubset(adj_[i]); }
  bool adjacent(int i, int j) const { return (adj_[i] >> j) & 1u; }
  // Letters that commute: equal letters do not count.
  bool commute(int i, int j) const { return adjacent(i, j); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  std::optional<int> index_of(std::string_view name) const;

  void add_edge(int i, int j);
  CommutationGraph permuted(const std::vector<int>& perm) const;

  friend bool operator==(const CommutationGraph& a, const CommutationGraph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<std::string> names_;
};

/// Default generator names: a..z, then g26, g27, ...
std::vector<std::string> default_names(int n);

CommutationGraph validate_right_angled(const CoxeterPresentation& p);

struct VertexBijection {
  std::vector<int> perm;

  bool is_permutation() const;
  VertexBijection inverse() const;
  VertexBijection then(const VertexBijection& next) const;
  static VertexBijection identity(int n);
  friend bool operator==(const VertexBijection&, const VertexBijection&) = default;
};

// perm is an isomorphism g1 -> g2.
bool is_isomorphism(const CommutationGraph& g1, const CommutationGraph& g2, const VertexBijection& f);

std::string canonical_form(const CommutationGraph& g);
std::optional<VertexBijection> find_isomorphism(const CommutationGraph& g1, const CommutationGraph& g2);

struct AutomorphismLimits {
  int max_vertices = 10;
  std::size_t max_group_order = 1'000'000;
};

std::vector<VertexBijection> automorphisms(const CommutationGraph& g, AutomorphismLimits limits = {});

}  // namespace racg
