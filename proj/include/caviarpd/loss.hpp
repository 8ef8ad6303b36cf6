#pragma once

#include "caviarpd/partition.hpp"
#include "caviarpd/psm.hpp"

namespace caviarpd {

enum class LossKind { binder, vi };

// Pair-counting disagreement between two partitions, with equal weights on
// the two error types, normalized by the number of item pairs. In [0, 1];
// 0 iff the groupings coincide. Requires n >= 2.
double binder_between(const Partition& a, const Partition& b);

// Variation of information H(a) + H(b) - 2 I(a,b). Natural log by default;
// set `bits` for base 2. A metric on groupings.
double vi_between(const Partition& a, const Partition& b, bool bits = false);

// Monte Carlo expected Binder loss (up to constants):
// sum_{i<j} (gamma_ij(p) - psm_ij)^2.
double expected_binder(const Partition& p, const PairwiseSimilarityMatrix& psm);

// Jensen lower bound on the expected variation of information:
// (1/n) sum_i [ log sum_j gamma_ij(p) + log sum_j psm_ij
//               - 2 log sum_j gamma_ij(p) psm_ij ].
// The diagonal of psm is 1, so every log is finite.
double expected_vi_lb(const Partition& p, const PairwiseSimilarityMatrix& psm);

}  // namespace caviarpd
