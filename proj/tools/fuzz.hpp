#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "racg/rigidity.hpp"

namespace racg::cli {

struct FuzzTrial {
  int index = 0;
  std::uint64_t seed = 0;
  int n = 0;
  int edges = 0;
  int length = 0;
  bool ok = false;
  bool verified = false;
  int selections = 0;          // random clique selections checked
  int selection_failures = 0;  // cardinality/corollary mismatches
  std::string error;
};

struct FuzzOptions {
  int max_n = 6;
  int iters = 100;
  std::uint64_t seed = 0;
  int auto_length = 6;
  int selections_per_trial = 20;
  int gen_radius = kDefaultGenRadius;
  unsigned threads = 0;  // 0: hardware concurrency
};

std::uint64_t trial_seed(std::uint64_t seed, int index);

// One round trip: random graph, random automorphism, full pipeline, and
// random intersection/difference checks across the star correspondence.
FuzzTrial run_trial(const FuzzOptions& options, int index);

// Trials run in parallel; results are ordered by trial index.
std::vector<FuzzTrial> run_fuzz(const FuzzOptions& options);

}  // namespace racg::cli
