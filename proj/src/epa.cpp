#include "caviarpd/epa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace caviarpd {

namespace {

constexpr double kLambdaFloor = std::numeric_limits<double>::min();
constexpr double kLambdaCeil = std::numeric_limits<double>::max();

void check_common(const EpaParams& params) {
  if (params.discount != 0.0) throw std::invalid_argument("discount must be 0");
  if (!(params.temperature >= 0.0)) throw std::invalid_argument("temperature must be >= 0");
}

}  // namespace

void EpaParams::validate_for_sampling() const {
  check_common(*this);
  if (!(mass >= 0.0)) throw std::invalid_argument("mass must be >= 0 for sampling");
}

void EpaParams::validate_for_pmf() const {
  check_common(*this);
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be > 0 for pmf evaluation");
}

SimilarityMatrix similarity_from_distance(const DistanceMatrix& d, SimilarityKind kind,
                                          double temperature) {
  if (!(temperature >= 0.0)) throw std::invalid_argument("temperature must be >= 0");
  SimilarityMatrix sim;
  sim.n = d.n;
  sim.lambda.assign(d.n * d.n, 0.0);
  for (std::size_t i = 0; i < d.n; ++i) {
    for (std::size_t j = 0; j < d.n; ++j) {
      if (i == j) continue;
      const double dist = d(i, j);
      double value;
      if (kind == SimilarityKind::reciprocal) {
        if (dist == 0.0) {
          throw std::invalid_argument("zero distance incompatible with reciprocal similarity");
        }
        value = std::pow(dist, -temperature);
      } else {
        value = std::exp(-temperature * dist);
      }
      sim.lambda[i * d.n + j] = std::clamp(value, kLambdaFloor, kLambdaCeil);
    }
  }
  return sim;
}

StepProbabilities epa_step_probabilities(const std::vector<int>& partial_labels, int next_item,
                                         const EpaParams& params, const SimilarityMatrix& sim) {
  params.validate_for_sampling();
  const std::size_t n = sim.n;
  if (partial_labels.size() != n) throw std::invalid_argument("partial allocation size mismatch");
  if (next_item < 0 || static_cast<std::size_t>(next_item) >= n) {
    throw std::invalid_argument("next_item out of range");
  }
  if (partial_labels[static_cast<std::size_t>(next_item)] >= 0) {
    throw std::invalid_argument("next_item already allocated");
  }

  int num_subsets = 0;
  std::size_t allocated = 0;
  for (int label : partial_labels) {
    if (label >= 0) {
      ++allocated;
      num_subsets = std::max(num_subsets, label + 1);
    }
  }
  const double t = static_cast<double>(allocated) + 1.0;

  StepProbabilities out;
  out.existing.assign(static_cast<std::size_t>(num_subsets), 0.0);
  if (allocated == 0) {
    out.new_subset = 1.0;
    return out;
  }

  // Attractions to each existing subset; the denominator spans all allocated
  // items and is compensated because lambda values can differ by hundreds of
  // orders of magnitude under large temperatures.
  const double* lambda_row = sim.lambda.data() + static_cast<std::size_t>(next_item) * n;
  KahanSum denom;
  for (std::size_t s = 0; s < n; ++s) {
    const int label = partial_labels[s];
    if (label < 0) continue;
    const double lam = lambda_row[s];
    out.existing[static_cast<std::size_t>(label)] += lam;
    denom.add(lam);
  }

  const double alpha = params.mass;
  const double existing_scale = (t - 1.0) / (alpha + t - 1.0) / denom.value();
  for (double& p : out.existing) p *= existing_scale;
  out.new_subset = alpha / (alpha + t - 1.0);
  return out;
}

double epa_log_pmf(const Partition& p, const EpaParams& params, const SimilarityMatrix& sim,
                   const std::vector<int>& perm) {
  params.validate_for_pmf();
  const std::size_t n = sim.n;
  if (static_cast<std::size_t>(p.size()) != n || perm.size() != n) {
    throw std::invalid_argument("epa_log_pmf: dimension mismatch");
  }
  {
    std::vector<char> seen(n, 0);
    for (int item : perm) {
      if (item < 0 || static_cast<std::size_t>(item) >= n || seen[static_cast<std::size_t>(item)]) {
        throw std::invalid_argument("epa_log_pmf: perm is not a permutation");
      }
      seen[static_cast<std::size_t>(item)] = 1;
    }
  }

  const double alpha = params.mass;
  double log_p = 0.0;
  std::vector<char> allocated(n, 0);
  for (std::size_t t = 1; t <= n; ++t) {
    const int item = perm[t - 1];
    if (t == 1) {
      allocated[static_cast<std::size_t>(item)] = 1;
      continue;  // log(1)
    }
    const double* lambda_row = sim.lambda.data() + static_cast<std::size_t>(item) * n;
    KahanSum denom;
    double same_subset = 0.0;
    bool subset_exists = false;
    for (std::size_t s = 0; s < n; ++s) {
      if (!allocated[s]) continue;
      const double lam = lambda_row[s];
      denom.add(lam);
      if (p[static_cast<int>(s)] == p[item]) {
        same_subset += lam;
        subset_exists = true;
      }
    }
    const double td = static_cast<double>(t);
    if (subset_exists) {
      log_p += std::log((td - 1.0) / (alpha + td - 1.0)) + std::log(same_subset) -
               std::log(denom.value());
    } else {
      log_p += std::log(alpha / (alpha + td - 1.0));
    }
    allocated[static_cast<std::size_t>(item)] = 1;
  }
  return log_p;
}

namespace {

// Sequential allocation along a fixed item order. Labels are assigned in
// first-occurrence order of the permutation, so canonicalization afterwards
// only has to reorder by item index.
std::vector<int> allocate_sequentially(const std::vector<int>& order, const EpaParams& params,
                                       const SimilarityMatrix& sim, Rng& rng) {
  const std::size_t n = sim.n;
  const double alpha = params.mass;
  std::vector<int> labels(n, -1);
  std::vector<double> subset_attraction;
  subset_attraction.reserve(16);

  for (std::size_t t = 1; t <= n; ++t) {
    const int item = order[t - 1];
    if (t == 1) {
      labels[static_cast<std::size_t>(item)] = 0;
      subset_attraction.assign(1, 0.0);
      continue;
    }
    const double* lambda_row = sim.lambda.data() + static_cast<std::size_t>(item) * n;
    std::fill(subset_attraction.begin(), subset_attraction.end(), 0.0);
    KahanSum denom;
    for (std::size_t s = 0; s < t - 1; ++s) {
      const std::size_t prev = static_cast<std::size_t>(order[s]);
      const double lam = lambda_row[prev];
      subset_attraction[static_cast<std::size_t>(labels[prev])] += lam;
      denom.add(lam);
    }
    const double td = static_cast<double>(t);
    // Unnormalized weights: existing subset k gets
    // (t-1)/(alpha+t-1) * attraction_k, a new subset gets
    // alpha/(alpha+t-1) * denom; the common factor denom cancels.
    const double join_scale = (td - 1.0) / (alpha + td - 1.0);
    const double new_weight = alpha / (alpha + td - 1.0) * denom.value();
    double total = new_weight;
    for (double a : subset_attraction) total += join_scale * a;
    const double u = rng.next_unit() * total;
    double cum = 0.0;
    int chosen = static_cast<int>(subset_attraction.size());  // default: new subset
    for (std::size_t k = 0; k < subset_attraction.size(); ++k) {
      cum += join_scale * subset_attraction[k];
      if (u < cum) {
        chosen = static_cast<int>(k);
        break;
      }
    }
    if (chosen == static_cast<int>(subset_attraction.size())) {
      subset_attraction.push_back(0.0);
    }
    labels[static_cast<std::size_t>(item)] = chosen;
  }
  return labels;
}

}  // namespace

Partition epa_sample_one(const EpaParams& params, const SimilarityMatrix& sim, Rng& rng) {
  params.validate_for_sampling();
  if (sim.n == 0) throw std::invalid_argument("empty similarity matrix");
  std::vector<int> order = rng.permutation(static_cast<int>(sim.n));
  return canonicalize(allocate_sequentially(order, params, sim, rng));
}

namespace {

template <typename DrawFn>
std::vector<Partition> sample_many_impl(std::size_t count, std::uint64_t master_seed,
                                        int parallelism, DrawFn draw) {
  if (count == 0) throw std::invalid_argument("sample count must be >= 1");
  std::vector<Partition> out;
  out.reserve(count);
  for (std::size_t b = 0; b < count; ++b) out.push_back(Partition::from_canonical({0}));

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers =
      std::min<std::size_t>(count, parallelism <= 1 ? 1 : std::min<unsigned>(
                                                              static_cast<unsigned>(parallelism), hw));
  if (workers <= 1) {
    for (std::size_t b = 0; b < count; ++b) {
      Rng rng(derive_seed(master_seed, b));
      out[b] = draw(rng);
    }
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t b = w; b < count; b += workers) {
        Rng rng(derive_seed(master_seed, b));
        out[b] = draw(rng);
      }
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace

std::vector<Partition> epa_sample_many(std::size_t count, const EpaParams& params,
                                       const SimilarityMatrix& sim, std::uint64_t master_seed,
                                       int parallelism) {
  params.validate_for_sampling();
  return sample_many_impl(count, master_seed, parallelism,
                          [&](Rng& rng) { return epa_sample_one(params, sim, rng); });
}

namespace {

// Union-find with path halving.
int uf_find(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

Partition ddcrp_sample_one(double mass, const SimilarityMatrix& sim, Rng& rng) {
  if (!(mass > 0.0)) throw std::invalid_argument("ddcrp mass must be > 0");
  if (sim.n == 0) throw std::invalid_argument("empty similarity matrix");
  const std::size_t n = sim.n;
  std::vector<int> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);

  for (std::size_t i = 0; i < n; ++i) {
    const double* lambda_row = sim.lambda.data() + i * n;
    KahanSum total;
    total.add(mass);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) total.add(lambda_row[j]);
    }
    const double u = rng.next_unit() * total.value();
    // Self link occupies the first [0, mass) slice.
    int link = static_cast<int>(i);
    double cum = mass;
    if (u >= mass) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        cum += lambda_row[j];
        if (u < cum) {
          link = static_cast<int>(j);
          break;
        }
      }
    }
    const int a = uf_find(parent, static_cast<int>(i));
    const int b = uf_find(parent, link);
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }

  std::vector<int> roots(n);
  for (std::size_t i = 0; i < n; ++i) roots[i] = uf_find(parent, static_cast<int>(i));
  return canonicalize(roots);
}

std::vector<Partition> ddcrp_sample_many(std::size_t count, double mass,
                                         const SimilarityMatrix& sim, std::uint64_t master_seed,
                                         int parallelism) {
  return sample_many_impl(count, master_seed, parallelism,
                          [&](Rng& rng) { return ddcrp_sample_one(mass, sim, rng); });
}

}  // namespace caviarpd
