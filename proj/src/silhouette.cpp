#include "caviarpd/silhouette.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "caviarpd/error.hpp"

namespace caviarpd {

double average_silhouette(const Partition& p, const DistanceMatrix& d) {
  const int n = p.size();
  if (static_cast<int>(d.n) != n) throw std::invalid_argument("partition/distance size mismatch");
  const int k = p.num_clusters();
  if (k < 2 || k > n - 1) throw std::invalid_argument("silhouette undefined");

  const std::vector<int> sizes = cluster_sizes(p);
  double total = 0.0;
  std::vector<double> mean_to(k);
  for (int i = 0; i < n; ++i) {
    const int ci = p[i];
    if (sizes[ci] == 1) continue;  // s(i) = 0 for singletons
    std::fill(mean_to.begin(), mean_to.end(), 0.0);
    for (int j = 0; j < n; ++j) {
      if (j != i) mean_to[p[j]] += d(i, j);
    }
    const double a = mean_to[ci] / (sizes[ci] - 1);
    double b = std::numeric_limits<double>::infinity();
    for (int c = 0; c < k; ++c) {
      if (c != ci) b = std::min(b, mean_to[c] / sizes[c]);
    }
    const double denom = std::max(a, b);
    if (denom > 0.0) total += (b - a) / denom;
  }
  return total / n;
}

}  // namespace caviarpd
