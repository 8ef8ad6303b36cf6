#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "caviarpd/partition.hpp"

namespace caviarpd {

// Monte Carlo estimate of pairwise co-clustering probabilities: the
// element-wise average of association matrices over `sample_count` draws.
// Symmetric, unit diagonal, every entry an integer multiple of
// 1/sample_count.
struct PairwiseSimilarityMatrix {
  std::size_t n = 0;
  std::uint64_t sample_count = 0;
  std::vector<double> p;  // n * n, row-major

  double operator()(std::size_t i, std::size_t j) const { return p[i * n + j]; }
};

// Averages association matrices. Counts are accumulated as integers and
// divided once by the sample count, so entries are exact multiples of 1/B.
PairwiseSimilarityMatrix pairwise_similarity(const std::vector<Partition>& samples);

// Item order that makes the clusters of `estimate` contiguous: clusters by
// (size descending, first item index), items by index within a cluster.
std::vector<int> display_order(const PairwiseSimilarityMatrix& psm, const Partition& estimate);

// Writes a binary P5 graymap of the reordered matrix, one cell_size x
// cell_size block per entry, pixel value floor(255 * psm + 0.5), plus a
// companion CSV (`i,j,psm` over reordered positions i <= j) at the same path
// with the extension swapped to .csv.
void render_heatmap(const PairwiseSimilarityMatrix& psm, const std::vector<int>& order,
                    int cell_size, const std::string& path);

}  // namespace caviarpd
