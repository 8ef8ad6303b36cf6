#pragma once

#include <string>
#include <vector>

#include "caviarpd/distance.hpp"
#include "caviarpd/partition.hpp"

namespace caviarpd {

enum class Linkage { single, complete, average, ward };

// One agglomeration step. Leaves are items 0..n-1; the node created by merge
// m is numbered n+m. `left` is the node that occupied the earlier slot in
// the active-cluster list.
struct Merge {
  int left = 0;
  int right = 0;
  double height = 0.0;
};

struct Dendrogram {
  int n_items = 0;
  std::vector<Merge> merges;  // n_items - 1 steps
};

// Agglomerative clustering with Lance-Williams updates. Ward operates on
// squared distances (coefficients (n_i+n_k)/(n_i+n_j+n_k), -n_k/(...)) and
// reports heights as square roots of the merge criterion. Ties in the
// minimum inter-cluster distance go to the smallest (left, right) node pair.
Dendrogram hierarchical(const DistanceMatrix& d, Linkage linkage);

// Partition obtained by undoing the last k-1 merges.
Partition cut_dendrogram(const Dendrogram& dend, int k);

// One `left,right,height` line per merge, heights at 9 significant digits.
void write_dendrogram(const Dendrogram& dend, const std::string& path);

Linkage linkage_from_string(const std::string& name);
std::string to_string(Linkage linkage);

}  // namespace caviarpd
