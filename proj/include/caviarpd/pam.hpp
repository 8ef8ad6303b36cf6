#pragma once

#include <optional>
#include <vector>

#include "caviarpd/distance.hpp"
#include "caviarpd/hclust.hpp"
#include "caviarpd/partition.hpp"

namespace caviarpd {

struct PamResult {
  Partition partition;
  std::vector<int> medoids;  // ascending item indices
  double cost = 0.0;         // sum of distances to assigned medoids
};

// Partitioning around medoids: BUILD greedily selects k medoids minimizing
// incremental cost, then SWAP applies the single best (medoid, non-medoid)
// exchange while the total cost strictly decreases (at most max_iter
// exchanges). Items are assigned to the nearest medoid, ties to the smaller
// medoid index.
PamResult pam(const DistanceMatrix& d, int k, int max_iter = 100);

struct SelectKResult {
  int k = 0;
  Partition partition;
  double silhouette = 0.0;
};

// Runs PAM (linkage = nullopt) or hierarchical+cut for each k in
// [k_min, k_max] and returns the k with the highest average silhouette
// (ties -> smaller k).
SelectKResult select_k_by_silhouette(const DistanceMatrix& d, int k_min, int k_max,
                                     std::optional<Linkage> linkage);

}  // namespace caviarpd
