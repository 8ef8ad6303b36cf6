#include "caviarpd/hclust.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "caviarpd/error.hpp"

namespace caviarpd {

Dendrogram hierarchical(const DistanceMatrix& d, Linkage linkage) {
  const int n = d.n;
  if (n < 2) throw std::invalid_argument("hierarchical clustering needs at least 2 items");

  // Working inter-cluster distances, squared for ward.
  std::vector<double> w(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double dij = d(i, j);
      w[i * n + j] = linkage == Linkage::ward ? dij * dij : dij;
    }

  std::vector<int> node(n);       // node id held by each slot
  std::vector<double> size(n, 1.0);
  std::vector<bool> active(n, true);
  std::iota(node.begin(), node.end(), 0);

  Dendrogram out;
  out.n_items = n;
  out.merges.reserve(n - 1);
  for (int step = 0; step < n - 1; ++step) {
    int bi = -1, bj = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (int j = i + 1; j < n; ++j) {
        if (!active[j]) continue;
        const double dist = w[i * n + j];
        const bool tie = dist == best && bi >= 0 &&
                         (node[i] < node[bi] || (node[i] == node[bi] && node[j] < node[bj]));
        if (dist < best || tie) {
          best = dist;
          bi = i;
          bj = j;
        }
      }
    }

    const double ni = size[bi], nj = size[bj];
    Merge m;
    m.left = node[bi];
    m.right = node[bj];
    m.height = linkage == Linkage::ward ? std::sqrt(best) : best;
    out.merges.push_back(m);

    for (int k = 0; k < n; ++k) {
      if (!active[k] || k == bi || k == bj) continue;
      const double dik = w[bi * n + k], djk = w[bj * n + k];
      double upd = 0.0;
      switch (linkage) {
        case Linkage::single: upd = std::min(dik, djk); break;
        case Linkage::complete: upd = std::max(dik, djk); break;
        case Linkage::average: upd = (ni * dik + nj * djk) / (ni + nj); break;
        case Linkage::ward: {
          const double nk = size[k], total = ni + nj + nk;
          upd = ((ni + nk) * dik + (nj + nk) * djk - nk * best) / total;
          break;
        }
      }
      w[bi * n + k] = w[k * n + bi] = upd;
    }
    node[bi] = n + step;
    size[bi] += size[bj];
    active[bj] = false;
  }
  return out;
}

Partition cut_dendrogram(const Dendrogram& dend, int k) {
  const int n = dend.n_items;
  if (k < 1 || k > n) throw std::invalid_argument("cut count out of range");

  // Union-find over nodes 0..2n-2, applying the first n-k merges.
  std::vector<int> parent(2 * n - 1);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int m = 0; m < n - k; ++m) {
    const int id = n + m;
    parent[find(dend.merges[m].left)] = id;
    parent[find(dend.merges[m].right)] = id;
  }

  std::vector<int> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = find(i);
  return canonicalize(roots);
}

void write_dendrogram(const Dendrogram& dend, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw DataError("cannot write dendrogram file: " + path);
  for (const Merge& m : dend.merges)
    std::fprintf(f, "%d,%d,%.9g\n", m.left, m.right, m.height);
  std::fclose(f);
}

Linkage linkage_from_string(const std::string& name) {
  if (name == "single") return Linkage::single;
  if (name == "complete") return Linkage::complete;
  if (name == "average") return Linkage::average;
  if (name == "ward") return Linkage::ward;
  throw std::invalid_argument("unknown linkage: " + name);
}

std::string to_string(Linkage linkage) {
  switch (linkage) {
    case Linkage::single: return "single";
    case Linkage::complete: return "complete";
    case Linkage::average: return "average";
    case Linkage::ward: return "ward";
  }
  return "";
}

}  // namespace caviarpd
