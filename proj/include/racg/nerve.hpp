#pragma once

#include <cstdint>
#include <vector>

#include "racg/presentation.hpp"
#include "racg/subset.hpp"
#include "racg/word.hpp"

namespace racg {

/// Maximal cliques of a commutation graph, sorted in canonical subset order.
struct NerveStar {
  std::vector<GenSubset> cliques;

  std::size_t size() const { return cliques.size(); }
  const GenSubset& operator[](std::size_t i) const { return cliques[i]; }
  // Index of the clique, or -1.
  int index_of(GenSubset a) const;
};

bool is_simplex(const CommutationGraph& g, GenSubset a);

NerveStar maximal_cliques(const CommutationGraph& g);

// Every nonempty clique, in canonical subset order.
std::vector<GenSubset> all_cliques(const CommutationGraph& g, std::size_t cap = std::size_t{1} << 20);

/// Elements of the union of finite standard subgroups: the identity plus one
/// product per clique. Throws TooLarge when 1 + #cliques exceeds cap.
std::vector<NormalWord> spherical_elements(const CommutationGraph& g, std::size_t cap = std::size_t{1} << 20);

std::size_t venn_region_size(const std::vector<GenSubset>& as, const std::vector<GenSubset>& bs);

std::uint64_t standard_subgroup_order(const CommutationGraph& g, GenSubset a);

}  // namespace racg
