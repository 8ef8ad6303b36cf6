#include "caviarpd/psm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "caviarpd/error.hpp"

namespace caviarpd {

PairwiseSimilarityMatrix pairwise_similarity(const std::vector<Partition>& samples) {
  if (samples.empty()) throw std::invalid_argument("pairwise_similarity: no samples");
  const std::size_t n = static_cast<std::size_t>(samples.front().size());
  for (const Partition& p : samples) {
    if (static_cast<std::size_t>(p.size()) != n) {
      throw std::invalid_argument("pairwise_similarity: inconsistent partition sizes");
    }
  }

  std::vector<std::uint32_t> counts(n * n, 0);
  std::vector<std::vector<int>> members;
  for (const Partition& p : samples) {
    members.assign(static_cast<std::size_t>(p.num_clusters()), {});
    for (int i = 0; i < p.size(); ++i) members[static_cast<std::size_t>(p[i])].push_back(i);
    for (const auto& cluster : members) {
      for (std::size_t a = 0; a < cluster.size(); ++a) {
        const std::size_t i = static_cast<std::size_t>(cluster[a]);
        for (std::size_t b = a + 1; b < cluster.size(); ++b) {
          const std::size_t j = static_cast<std::size_t>(cluster[b]);
          ++counts[i * n + j];
        }
      }
    }
  }

  PairwiseSimilarityMatrix psm;
  psm.n = n;
  psm.sample_count = samples.size();
  psm.p.assign(n * n, 0.0);
  const double b = static_cast<double>(samples.size());
  for (std::size_t i = 0; i < n; ++i) {
    psm.p[i * n + i] = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double value = static_cast<double>(counts[i * n + j]) / b;
      psm.p[i * n + j] = value;
      psm.p[j * n + i] = value;
    }
  }
  return psm;
}

std::vector<int> display_order(const PairwiseSimilarityMatrix& psm, const Partition& estimate) {
  if (static_cast<std::size_t>(estimate.size()) != psm.n) {
    throw std::invalid_argument("display_order: size mismatch");
  }
  const std::vector<int> sizes = cluster_sizes(estimate);
  std::vector<int> first_item(sizes.size(), estimate.size());
  for (int i = estimate.size() - 1; i >= 0; --i) first_item[static_cast<std::size_t>(estimate[i])] = i;

  std::vector<int> order(static_cast<std::size_t>(estimate.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const std::size_t ca = static_cast<std::size_t>(estimate[a]);
    const std::size_t cb = static_cast<std::size_t>(estimate[b]);
    if (sizes[ca] != sizes[cb]) return sizes[ca] > sizes[cb];
    if (first_item[ca] != first_item[cb]) return first_item[ca] < first_item[cb];
    return a < b;
  });
  return order;
}

void render_heatmap(const PairwiseSimilarityMatrix& psm, const std::vector<int>& order,
                    int cell_size, const std::string& path) {
  if (cell_size < 1) throw std::invalid_argument("cell_size must be >= 1");
  if (order.size() != psm.n) throw std::invalid_argument("render_heatmap: order size mismatch");
  const std::size_t n = psm.n;
  const std::size_t side = n * static_cast<std::size_t>(cell_size);

  std::ofstream img(path, std::ios::binary);
  if (!img) throw DataError("cannot write " + path);
  img << "P5\n" << side << ' ' << side << "\n255\n";
  std::vector<unsigned char> row(side);
  for (std::size_t pi = 0; pi < n; ++pi) {
    const std::size_t i = static_cast<std::size_t>(order[pi]);
    for (std::size_t pj = 0; pj < n; ++pj) {
      const std::size_t j = static_cast<std::size_t>(order[pj]);
      const double shade = std::floor(255.0 * psm(i, j) + 0.5);
      const unsigned char byte = static_cast<unsigned char>(std::clamp(shade, 0.0, 255.0));
      for (int c = 0; c < cell_size; ++c) row[pj * static_cast<std::size_t>(cell_size) + static_cast<std::size_t>(c)] = byte;
    }
    for (int c = 0; c < cell_size; ++c) {
      img.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(side));
    }
  }
  if (!img) throw DataError("failed writing " + path);
  img.close();

  std::string csv_path = path;
  const std::size_t slash = csv_path.find_last_of('/');
  const std::size_t dot = csv_path.find_last_of('.');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
    csv_path.resize(dot);
  }
  csv_path += ".csv";
  std::ofstream csv(csv_path);
  if (!csv) throw DataError("cannot write " + csv_path);
  csv << "i,j,psm\n";
  char buf[32];
  for (std::size_t pi = 0; pi < n; ++pi) {
    for (std::size_t pj = pi; pj < n; ++pj) {
      std::snprintf(buf, sizeof buf, "%.17g", psm(static_cast<std::size_t>(order[pi]),
                                                  static_cast<std::size_t>(order[pj])));
      csv << pi << ',' << pj << ',' << buf << '\n';
    }
  }
  if (!csv) throw DataError("failed writing " + csv_path);
}

}  // namespace caviarpd
