#pragma once

#include <cstdint>
#include <vector>

#include "caviarpd/distance.hpp"
#include "caviarpd/partition.hpp"
#include "caviarpd/rng.hpp"

namespace caviarpd {

enum class SimilarityKind { exponential, reciprocal };

// Pairwise similarities lambda(i,j) > 0 derived from a distance matrix.
// Symmetric; the diagonal is unused and set to 0.
struct SimilarityMatrix {
  std::size_t n = 0;
  std::vector<double> lambda;  // n * n, row-major

  double operator()(std::size_t i, std::size_t j) const { return lambda[i * n + j]; }
};

// Parameters of the Ewens-Pitman Attraction distribution. The discount is
// carried for completeness but pinned to 0; any other value is rejected.
struct EpaParams {
  double mass = 1.0;
  double discount = 0.0;
  double temperature = 10.0;
  SimilarityKind similarity = SimilarityKind::exponential;

  void validate_for_sampling() const;  // mass >= 0
  void validate_for_pmf() const;       // mass > 0
};

// lambda(i,j) = d_ij^-tau (reciprocal) or exp(-tau * d_ij) (exponential),
// clamped into the positive finite range so attraction ratios stay well
// defined even when exp(-tau*d) underflows.
SimilarityMatrix similarity_from_distance(const DistanceMatrix& d, SimilarityKind kind,
                                          double temperature);

// Allocation probabilities for the next item given a partial allocation.
struct StepProbabilities {
  std::vector<double> existing;  // indexed by subset label of the partial allocation
  double new_subset = 0.0;
};

// One step of the sequential allocation. `partial_labels` holds the subset
// label of every already-allocated item and -1 elsewhere; labels must be
// dense 0..K-1. The step index t is (number allocated) + 1. An existing
// subset S receives
//   (t-1)/(mass+t-1) * sum_{s in S} lambda(next,s) / sum_{s allocated} lambda(next,s)
// and a new subset receives mass/(mass+t-1); at t = 1 the new-subset
// probability is 1.
StepProbabilities epa_step_probabilities(const std::vector<int>& partial_labels, int next_item,
                                         const EpaParams& params, const SimilarityMatrix& sim);

// Log probability of allocating the items in `perm` order into the subsets
// dictated by `p`: the sum of the log step probabilities above.
double epa_log_pmf(const Partition& p, const EpaParams& params, const SimilarityMatrix& sim,
                   const std::vector<int>& perm);

// Draws a uniformly random item order, then allocates sequentially.
Partition epa_sample_one(const EpaParams& params, const SimilarityMatrix& sim, Rng& rng);

// `count` independent draws; draw b uses an Rng seeded with
// derive_seed(master_seed, b), so the output sequence is identical for every
// parallelism degree.
std::vector<Partition> epa_sample_many(std::size_t count, const EpaParams& params,
                                       const SimilarityMatrix& sim, std::uint64_t master_seed,
                                       int parallelism = 1);

// Distance-dependent CRP: each item links to item j != i with probability
// proportional to lambda(i,j) or to itself with probability proportional to
// mass; the partition is the connected components of the link graph.
// Experimental: no mass-selection support.
Partition ddcrp_sample_one(double mass, const SimilarityMatrix& sim, Rng& rng);

std::vector<Partition> ddcrp_sample_many(std::size_t count, double mass,
                                         const SimilarityMatrix& sim, std::uint64_t master_seed,
                                         int parallelism = 1);

}  // namespace caviarpd
