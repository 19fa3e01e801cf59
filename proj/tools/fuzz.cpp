#include "fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "racg/error.hpp"

namespace racg::cli {

std::uint64_t trial_seed(std::uint64_t seed, int index) {
  Rng rng(seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(index + 1)));
  return rng.next();
}

namespace {

GenSubset intersect(const std::vector<GenSubset>& sets) {
  GenSubset acc = sets.front();
  for (const auto& s : sets) acc = acc & s;
  return acc;
}

}  // namespace

FuzzTrial run_trial(const FuzzOptions& options, int index) {
  FuzzTrial t;
  t.index = index;
  t.seed = trial_seed(options.seed, index);
  Rng rng(t.seed);
  t.n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(options.max_n)));
  CommutationGraph g = random_graph(t.n, rng);
  t.edges = g.edge_count();
  t.length = static_cast<int>(rng.below(static_cast<std::uint64_t>(options.auto_length) + 1));
  try {
    GeneratingSet sprime = random_automorphism(g, t.length, rng.next());
    InducedSystem sys = induce_system(g, sprime, options.gen_radius);
    StarCorrespondence corr = star_correspondence(g, sys);
    Equivalence eq = extract_equivalence(g, corr, sys);
    t.verified = verify_equivalence(g, sys, eq);

    NerveStar base = maximal_cliques(g);
    for (int k = 0; k < options.selections_per_trial; ++k) {
      const int r = 1 + static_cast<int>(rng.below(3));
      const int s = static_cast<int>(rng.below(4));
      std::vector<int> a_idx, b_idx;
      for (int i = 0; i < r; ++i) a_idx.push_back(static_cast<int>(rng.below(base.size())));
      for (int j = 0; j < s; ++j) b_idx.push_back(static_cast<int>(rng.below(base.size())));
      std::vector<GenSubset> as, bs;
      for (int i : a_idx) as.push_back(base[i]);
      for (int j : b_idx) bs.push_back(base[j]);
      std::vector<GenSubset> as_star = star_images(sys, corr, a_idx);
      std::vector<GenSubset> bs_star = star_images(sys, corr, b_idx);
      ++t.selections;
      bool same_core = intersect(as).size() == intersect(as_star).size();
      bool same_region = venn_region_size(as, bs) == venn_region_size(as_star, bs_star);
      if (!same_core || !same_region) ++t.selection_failures;
    }
    t.ok = t.verified && t.selection_failures == 0;
    if (!t.verified) t.error = "equivalence check failed";
    else if (t.selection_failures) t.error = "clique region counts differ";
  } catch (const Error& e) {
    t.ok = false;
    t.error = e.what();
  }
  return t;
}

std::vector<FuzzTrial> run_fuzz(const FuzzOptions& options) {
  std::vector<FuzzTrial> results(static_cast<std::size_t>(std::max(options.iters, 0)));
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(results.size(), 1)));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < options.iters; i = next++) results[i] = run_trial(options, i);
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace racg::cli
