#pragma once

#include "caviarpd/distance.hpp"
#include "caviarpd/partition.hpp"

namespace caviarpd {

// Mean silhouette width (b(i) - a(i)) / max(a(i), b(i)) over all items,
// where a(i) is the mean distance to the other members of i's cluster and
// b(i) the smallest mean distance to another cluster. Items in singleton
// clusters score 0. Defined only for 2 <= K <= n-1.
double average_silhouette(const Partition& p, const DistanceMatrix& d);

}  // namespace caviarpd
