#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace caviarpd {

enum class ColumnKind { numeric, binary };

// n observations x m attributes, row-major. Each column is flagged numeric
// or binary; binary columns may only hold 0 or 1.
struct DataMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;          // rows * cols
  std::vector<ColumnKind> kinds;       // per column
  std::vector<std::string> names;      // per column, may be empty

  double operator()(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
  double& operator()(std::size_t i, std::size_t j) { return values[i * cols + j]; }
};

// Symmetric nonnegative pairwise distances with a zero diagonal.
struct DistanceMatrix {
  std::size_t n = 0;
  std::vector<double> d;  // n * n, row-major

  static DistanceMatrix zeros(std::size_t n);
  double operator()(std::size_t i, std::size_t j) const { return d[i * n + j]; }
  double& operator()(std::size_t i, std::size_t j) { return d[i * n + j]; }
};

// Centers and scales every column to sample mean 0 and sample (n-1) standard
// deviation 1. Constant columns are centered, left at 0, and reported in
// `warnings` when given.
DataMatrix standardize(const DataMatrix& data, std::vector<std::string>* warnings = nullptr);

DistanceMatrix euclidean_distances(const DataMatrix& data);

// 1 - |intersection| / |union| of the 1-coordinates of each pair of rows.
// Two all-zero rows are at distance 0.
DistanceMatrix jaccard_distances(const DataMatrix& data);

}  // namespace caviarpd
