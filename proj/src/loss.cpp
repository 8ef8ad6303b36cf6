#include "caviarpd/loss.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace caviarpd {

namespace {

// Cluster-by-cluster contingency counts between two partitions.
std::vector<std::vector<double>> contingency(const Partition& a, const Partition& b) {
  std::vector<std::vector<double>> table(static_cast<std::size_t>(a.num_clusters()),
                                         std::vector<double>(static_cast<std::size_t>(b.num_clusters()), 0.0));
  for (int i = 0; i < a.size(); ++i) {
    table[static_cast<std::size_t>(a[i])][static_cast<std::size_t>(b[i])] += 1.0;
  }
  return table;
}

double pairs(double count) { return count * (count - 1.0) / 2.0; }

}  // namespace

double binder_between(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("binder_between: size mismatch");
  if (a.size() < 2) throw std::invalid_argument("binder_between requires n >= 2");
  const auto table = contingency(a, b);
  double together_a = 0.0, together_b = 0.0, together_both = 0.0;
  for (int ca : cluster_sizes(a)) together_a += pairs(ca);
  for (int cb : cluster_sizes(b)) together_b += pairs(cb);
  for (const auto& row : table) {
    for (double cell : row) together_both += pairs(cell);
  }
  const double disagreements = together_a + together_b - 2.0 * together_both;
  const double n = static_cast<double>(a.size());
  return disagreements / (n * (n - 1.0) / 2.0);
}

double vi_between(const Partition& a, const Partition& b, bool bits) {
  if (a.size() != b.size()) throw std::invalid_argument("vi_between: size mismatch");
  const double n = static_cast<double>(a.size());
  const auto table = contingency(a, b);
  const std::vector<int> sizes_a = cluster_sizes(a);
  const std::vector<int> sizes_b = cluster_sizes(b);
  // VI = H(a|b) + H(b|a). Summing count ratios nij/n_a, nij/n_b (each <= 1)
  // keeps every term nonnegative and makes VI exactly 0 for equal groupings.
  double vi = 0.0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table[i].size(); ++j) {
      const double nij = table[i][j];
      if (nij == 0.0) continue;
      vi -= (nij / n) * (std::log(nij / static_cast<double>(sizes_a[i])) +
                         std::log(nij / static_cast<double>(sizes_b[j])));
    }
  }
  return bits ? vi / std::log(2.0) : vi;
}

double expected_binder(const Partition& p, const PairwiseSimilarityMatrix& psm) {
  if (static_cast<std::size_t>(p.size()) != psm.n) {
    throw std::invalid_argument("expected_binder: size mismatch");
  }
  double total = 0.0;
  const std::size_t n = psm.n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double gamma = p[static_cast<int>(i)] == p[static_cast<int>(j)] ? 1.0 : 0.0;
      const double diff = gamma - psm(i, j);
      total += diff * diff;
    }
  }
  return total;
}

double expected_vi_lb(const Partition& p, const PairwiseSimilarityMatrix& psm) {
  if (static_cast<std::size_t>(p.size()) != psm.n) {
    throw std::invalid_argument("expected_vi_lb: size mismatch");
  }
  const std::size_t n = psm.n;
  const std::vector<int> sizes = cluster_sizes(p);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double sum_psm = 0.0, sum_joint = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double value = psm(i, j);
      sum_psm += value;
      if (p[static_cast<int>(i)] == p[static_cast<int>(j)]) sum_joint += value;
    }
    const double own_size = sizes[static_cast<std::size_t>(p[static_cast<int>(i)])];
    total += std::log(own_size) + std::log(sum_psm) - 2.0 * std::log(sum_joint);
  }
  return total / static_cast<double>(n);
}

}  // namespace caviarpd
