#include "caviarpd/search.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "caviarpd/rng.hpp"

namespace caviarpd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Mutable clustering of a subset of items with the bookkeeping both
// objectives need for O(n) placement scans: cluster member lists and, for
// the VI bound, q[i] = sum of psm(i,j) over allocated j in i's cluster
// (including i itself).
class SearchState {
 public:
  explicit SearchState(const PairwiseSimilarityMatrix& psm, LossKind loss)
      : psm_(psm), loss_(loss), labels_(psm.n, -1), q_(psm.n, 0.0) {}

  int num_clusters() const { return static_cast<int>(clusters_.size()); }
  const std::vector<int>& labels() const { return labels_; }

  // Placement delta of the objective for unallocated item x joining cluster
  // c; the delta for opening a new cluster is 0 by construction (both
  // objectives are normalized so a fresh singleton contributes only terms
  // shared by every candidate).
  double join_delta(int x, int c) const {
    const auto& members = clusters_[static_cast<std::size_t>(c)];
    const double* row = psm_.p.data() + static_cast<std::size_t>(x) * psm_.n;
    if (loss_ == LossKind::binder) {
      // sum_{j in c} (1 - 2 psm_xj)
      double attraction = 0.0;
      for (int j : members) attraction += row[static_cast<std::size_t>(j)];
      return static_cast<double>(members.size()) - 2.0 * attraction;
    }
    const double size = static_cast<double>(members.size());
    const double grown = std::log(size + 1.0);
    double delta = 0.0;
    double attraction = 0.0;
    for (int j : members) {
      const double pxj = row[static_cast<std::size_t>(j)];
      attraction += pxj;
      delta += grown - std::log(size) - 2.0 * (std::log(q_[static_cast<std::size_t>(j)] + pxj) -
                                               std::log(q_[static_cast<std::size_t>(j)]));
    }
    delta += grown - 2.0 * std::log(attraction + 1.0);
    return delta;
  }

  // Inserts item x into cluster c, or a new cluster when c == num_clusters().
  void insert(int x, int c) {
    if (c == num_clusters()) {
      clusters_.emplace_back();
    }
    auto& members = clusters_[static_cast<std::size_t>(c)];
    const double* row = psm_.p.data() + static_cast<std::size_t>(x) * psm_.n;
    double attraction = 0.0;
    for (int j : members) {
      const double pxj = row[static_cast<std::size_t>(j)];
      q_[static_cast<std::size_t>(j)] += pxj;
      attraction += pxj;
    }
    q_[static_cast<std::size_t>(x)] = attraction + 1.0;
    members.push_back(x);
    labels_[static_cast<std::size_t>(x)] = c;
  }

  // Removes item x from its cluster; empty clusters are deleted immediately
  // (the last cluster is renumbered into the freed slot).
  void remove(int x) {
    const int c = labels_[static_cast<std::size_t>(x)];
    auto& members = clusters_[static_cast<std::size_t>(c)];
    const double* row = psm_.p.data() + static_cast<std::size_t>(x) * psm_.n;
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (members[k] == x) {
        members[k] = members.back();
        members.pop_back();
        break;
      }
    }
    for (int j : members) q_[static_cast<std::size_t>(j)] -= row[static_cast<std::size_t>(j)];
    labels_[static_cast<std::size_t>(x)] = -1;
    q_[static_cast<std::size_t>(x)] = 0.0;
    if (members.empty()) {
      const int last = num_clusters() - 1;
      if (c != last) {
        clusters_[static_cast<std::size_t>(c)] = std::move(clusters_.back());
        for (int j : clusters_[static_cast<std::size_t>(c)]) labels_[static_cast<std::size_t>(j)] = c;
      }
      clusters_.pop_back();
    }
  }

  // Best placement for an unallocated x: smallest delta over existing
  // clusters, then a new cluster (unless capped); ties prefer the lowest
  // cluster index and an existing cluster over a new one.
  int best_placement(int x, int max_clusters) const {
    int best = -1;
    double best_delta = kInf;
    for (int c = 0; c < num_clusters(); ++c) {
      const double delta = join_delta(x, c);
      if (delta < best_delta) {
        best_delta = delta;
        best = c;
      }
    }
    const bool allow_new = max_clusters <= 0 || num_clusters() < max_clusters;
    if (allow_new && best_delta > 0.0) best = num_clusters();
    return best;
  }

 private:
  const PairwiseSimilarityMatrix& psm_;
  LossKind loss_;
  std::vector<std::vector<int>> clusters_;
  std::vector<int> labels_;
  std::vector<double> q_;
};

double objective(const Partition& p, const PairwiseSimilarityMatrix& psm, LossKind loss) {
  return loss == LossKind::binder ? expected_binder(p, psm) : expected_vi_lb(p, psm);
}

Partition run_once(const PairwiseSimilarityMatrix& psm, const SearchConfig& cfg, Rng& rng) {
  const int n = static_cast<int>(psm.n);
  SearchState state(psm, cfg.loss);

  // Phase 1: sequential allocation in a random order.
  std::vector<int> order = rng.permutation(n);
  for (int x : order) state.insert(x, state.best_placement(x, cfg.max_clusters));

  // Phase 2: reassignment sweeps; stop when a sweep moves nothing.
  for (int sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
    bool moved = false;
    order = rng.permutation(n);
    for (int x : order) {
      const int before = state.labels()[static_cast<std::size_t>(x)];
      state.remove(x);
      // Re-inserting into the prior cluster is always a candidate, so the
      // objective cannot increase.
      state.insert(x, state.best_placement(x, cfg.max_clusters));
      if (state.labels()[static_cast<std::size_t>(x)] != before) moved = true;
    }
    if (!moved) break;
  }
  return canonicalize(state.labels());
}

}  // namespace

SearchResult minimize_expected_loss(const PairwiseSimilarityMatrix& psm, const SearchConfig& cfg) {
  if (psm.n == 0) throw std::invalid_argument("minimize_expected_loss: empty matrix");
  if (cfg.n_runs < 1) throw std::invalid_argument("n_runs must be >= 1");
  if (cfg.max_sweeps < 0) throw std::invalid_argument("max_sweeps must be >= 0");

  Partition best = Partition::from_canonical(std::vector<int>(psm.n, 0));
  double best_loss = kInf;
  bool have_best = false;
  for (int run = 0; run < cfg.n_runs; ++run) {
    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(run)));
    Partition candidate = run_once(psm, cfg, rng);
    const double loss = objective(candidate, psm, cfg.loss);
    bool take = !have_best || loss < best_loss;
    if (have_best && loss == best_loss) {
      if (candidate.num_clusters() != best.num_clusters()) {
        take = candidate.num_clusters() < best.num_clusters();
      } else {
        take = candidate.labels() < best.labels();
      }
    }
    if (take) {
      best = std::move(candidate);
      best_loss = loss;
      have_best = true;
    }
  }
  return SearchResult{std::move(best), best_loss};
}

}  // namespace caviarpd
