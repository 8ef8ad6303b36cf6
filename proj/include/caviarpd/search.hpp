#pragma once

#include <cstdint>

#include "caviarpd/loss.hpp"
#include "caviarpd/partition.hpp"
#include "caviarpd/psm.hpp"

namespace caviarpd {

struct SearchConfig {
  int n_runs = 16;
  int max_sweeps = 10;
  int max_clusters = 0;  // 0 = no cap
  std::uint64_t seed = 0;
  LossKind loss = LossKind::binder;
};

struct SearchResult {
  Partition partition;
  double loss;  // objective recomputed on the returned partition
};

// Greedy expected-loss minimization over partitions. Each run allocates the
// items sequentially in a random order (placing each in the cluster that
// minimizes the partial objective), then performs reassignment sweeps in
// fresh random orders until a sweep makes no move or max_sweeps is reached.
// The best run wins; ties prefer fewer clusters, then lexicographically
// smaller canonical labels. Deterministic given cfg.seed.
SearchResult minimize_expected_loss(const PairwiseSimilarityMatrix& psm, const SearchConfig& cfg);

}  // namespace caviarpd
