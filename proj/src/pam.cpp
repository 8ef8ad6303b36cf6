#include "caviarpd/pam.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "caviarpd/silhouette.hpp"

namespace caviarpd {

namespace {

double assignment_cost(const DistanceMatrix& d, const std::vector<int>& medoids) {
  double cost = 0.0;
  for (int i = 0; i < static_cast<int>(d.n); ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const int m : medoids) nearest = std::min(nearest, d(i, m));
    cost += nearest;
  }
  return cost;
}

}  // namespace

PamResult pam(const DistanceMatrix& d, int k, int max_iter) {
  const int n = d.n;
  if (k < 1 || k > n) throw std::invalid_argument("medoid count out of range");

  // BUILD: 1-median first, then the greedy best addition each round.
  std::vector<int> medoids;
  std::vector<bool> is_medoid(n, false);
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  while (static_cast<int>(medoids.size()) < k) {
    int best = -1;
    double best_cost = std::numeric_limits<double>::infinity();
    for (int c = 0; c < n; ++c) {
      if (is_medoid[c]) continue;
      double cost = 0.0;
      for (int i = 0; i < n; ++i) cost += std::min(nearest[i], d(i, c));
      if (cost < best_cost) {
        best_cost = cost;
        best = c;
      }
    }
    medoids.push_back(best);
    is_medoid[best] = true;
    for (int i = 0; i < n; ++i) nearest[i] = std::min(nearest[i], d(i, best));
  }

  // SWAP: apply the best single exchange while it strictly improves.
  double cost = assignment_cost(d, medoids);
  for (int iter = 0; iter < max_iter; ++iter) {
    int best_m = -1, best_h = -1;
    double best_cost = cost;
    for (std::size_t mi = 0; mi < medoids.size(); ++mi) {
      const int old = medoids[mi];
      for (int h = 0; h < n; ++h) {
        if (is_medoid[h]) continue;
        medoids[mi] = h;
        const double c = assignment_cost(d, medoids);
        if (c < best_cost) {
          best_cost = c;
          best_m = static_cast<int>(mi);
          best_h = h;
        }
      }
      medoids[mi] = old;
    }
    if (best_m < 0) break;
    is_medoid[medoids[best_m]] = false;
    is_medoid[best_h] = true;
    medoids[best_m] = best_h;
    cost = best_cost;
  }
  std::sort(medoids.begin(), medoids.end());

  // Nearest-medoid assignment; the ascending scan with a strict comparison
  // sends ties to the smaller medoid index.
  std::vector<int> labels(n);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    int arg = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t mi = 0; mi < medoids.size(); ++mi) {
      const double dist = d(i, medoids[mi]);
      if (dist < best) {
        best = dist;
        arg = static_cast<int>(mi);
      }
    }
    labels[i] = arg;
    total += best;
  }

  PamResult out;
  out.partition = canonicalize(labels);
  out.medoids = std::move(medoids);
  out.cost = total;
  return out;
}

SelectKResult select_k_by_silhouette(const DistanceMatrix& d, int k_min, int k_max,
                                     std::optional<Linkage> linkage) {
  if (k_min > k_max) throw std::invalid_argument("empty cluster-count range");
  if (k_min < 2 || k_max > static_cast<int>(d.n) - 1)
    throw std::invalid_argument("cluster-count range must lie within [2, n-1]");

  Dendrogram dend;
  if (linkage) dend = hierarchical(d, *linkage);

  SelectKResult out;
  out.silhouette = -std::numeric_limits<double>::infinity();
  for (int k = k_min; k <= k_max; ++k) {
    Partition p = linkage ? cut_dendrogram(dend, k) : pam(d, k).partition;
    const int actual = p.num_clusters();  // pam can fall short of k on duplicates
    if (actual < 2 || actual > static_cast<int>(d.n) - 1) continue;
    const double s = average_silhouette(p, d);
    if (s > out.silhouette) {
      out.silhouette = s;
      out.k = k;
      out.partition = std::move(p);
    }
  }
  if (out.k == 0) throw std::invalid_argument("silhouette undefined");
  return out;
}

}  // namespace caviarpd
