#pragma once

#include <cstdint>
#include <vector>

#include "caviarpd/distance.hpp"
#include "caviarpd/epa.hpp"
#include "caviarpd/partition.hpp"
#include "caviarpd/psm.hpp"
#include "caviarpd/search.hpp"

namespace caviarpd {

struct MassSearchConfig {
  int k_min = 2;
  int k_max = 5;
  int grid_size = 9;
  std::uint64_t samples_per_eval = 500;  // B
  double bisection_tolerance = 0.05;     // relative tolerance on alpha
  int max_bisection_steps = 30;
  std::uint64_t seed = 0;
  int threads = 1;

  void validate() const;
};

// Outcome of the bisection for one boundary cluster count.
struct MassBracketResult {
  double mass = 1.0;
  int k = 0;             // cluster count achieved at `mass`
  bool attained = false; // k == target_k; otherwise `mass` is the closest endpoint
  bool monotone = true;  // false when an evaluation left the current bracket's K range
};

// One evaluated grid point of the silhouette search.
struct GridPoint {
  double mass = 0.0;
  int k = 0;
  double silhouette = 0.0;     // NaN when K is outside [2, n-1]
  double expected_loss = 0.0;  // search objective of the estimate
  Partition estimate;
};

struct CaviarResult {
  double mass = 1.0;
  PairwiseSimilarityMatrix psm;
  Partition estimate;
  double silhouette = 0.0;  // NaN when undefined for the estimate
  std::vector<GridPoint> diagnostics;
  MassBracketResult bracket_low, bracket_high;
  bool in_range = true;  // estimate's K within [k_min, k_max]
};

// Bisection (with geometric bracket expansion from alpha = 1 over
// [1e-6, 1e6]) for an alpha whose Binder estimate from B draws has
// `target_k` clusters. Accepts the first alpha attaining the target; after
// max_bisection_steps returns the bracket endpoint whose K is closest,
// with attained = false. `seed_stream` offsets the per-evaluation seeds so
// independent searches never share draws.
MassBracketResult mass_for_cluster_count(int target_k, const DistanceMatrix& d,
                                         const EpaParams& params, const SearchConfig& search,
                                         const MassSearchConfig& cfg,
                                         std::uint64_t seed_stream = 1000);

// Boundary masses for k_min and k_max, then a geometric grid of grid_size
// masses between them. Each grid point samples B partitions, estimates via
// `search`, and scores the estimate's average silhouette; points whose K
// falls outside [2, n-1] are skipped. Returns the point maximizing the
// silhouette (ties -> smaller alpha) with the full diagnostics table.
CaviarResult select_mass(const DistanceMatrix& d, const EpaParams& params,
                         const MassSearchConfig& msc, const SearchConfig& search);

// A single sampling pass of `draws` at params.mass: Psi, estimate,
// silhouette. The manual-mass pipeline.
CaviarResult estimate_at_mass(const DistanceMatrix& d, const EpaParams& params,
                              std::uint64_t draws, const SearchConfig& search, std::uint64_t seed,
                              int threads);

// select_mass followed by a final 4*B-draw pass at the chosen alpha, which
// produces the reported Psi and estimate.
CaviarResult caviarpd_estimate(const DistanceMatrix& d, const EpaParams& params,
                               const MassSearchConfig& msc, const SearchConfig& search);

}  // namespace caviarpd
