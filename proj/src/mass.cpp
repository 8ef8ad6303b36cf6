#include "caviarpd/mass.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "caviarpd/error.hpp"
#include "caviarpd/rng.hpp"
#include "caviarpd/silhouette.hpp"

namespace caviarpd {

namespace {

constexpr double kAlphaMin = 1e-6;
constexpr double kAlphaMax = 1e6;
constexpr double kExpandFactor = 10.0;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Draws, estimates, and reports the cluster count at one alpha. Seeds for
// the sampler and the search are derived from `eval_seed` so every
// evaluation is independent and reproducible.
struct Evaluation {
  PairwiseSimilarityMatrix psm;
  SearchResult result;
};

Evaluation evaluate_alpha(double alpha, const EpaParams& params, const SimilarityMatrix& sim,
                          std::uint64_t draws, const SearchConfig& search, std::uint64_t eval_seed,
                          int threads) {
  EpaParams p = params;
  p.mass = alpha;
  const std::vector<Partition> samples =
      epa_sample_many(draws, p, sim, derive_seed(eval_seed, 0), threads);
  Evaluation ev;
  ev.psm = pairwise_similarity(samples);
  SearchConfig sc = search;
  sc.seed = derive_seed(eval_seed, 1);
  ev.result = minimize_expected_loss(ev.psm, sc);
  return ev;
}

double silhouette_or_nan(const Partition& p, const DistanceMatrix& d) {
  const int k = p.num_clusters();
  if (k < 2 || k > p.size() - 1) return kNaN;
  return average_silhouette(p, d);
}

}  // namespace

void MassSearchConfig::validate() const {
  if (k_min < 2) throw std::invalid_argument("k_min must be at least 2");
  if (k_max < k_min) throw std::invalid_argument("cluster range must satisfy k_min <= k_max");
  if (grid_size < 2) throw std::invalid_argument("grid_size must be at least 2");
  if (samples_per_eval < 1) throw std::invalid_argument("samples_per_eval must be positive");
  if (!(bisection_tolerance > 0.0)) throw std::invalid_argument("bisection tolerance must be positive");
  if (max_bisection_steps < 1) throw std::invalid_argument("max_bisection_steps must be positive");
  if (threads < 1) throw std::invalid_argument("threads must be positive");
}

MassBracketResult mass_for_cluster_count(int target_k, const DistanceMatrix& d,
                                         const EpaParams& params, const SearchConfig& search,
                                         const MassSearchConfig& cfg, std::uint64_t seed_stream) {
  if (target_k < 1) throw std::invalid_argument("target_k must be positive");
  const SimilarityMatrix sim = similarity_from_distance(d, params.similarity, params.temperature);
  SearchConfig sc = search;
  sc.loss = LossKind::binder;  // cluster counts are read off the Binder estimate

  std::uint64_t evals = 0;
  const auto eval_k = [&](double alpha) {
    const std::uint64_t seed = derive_seed(cfg.seed, seed_stream + evals++);
    return evaluate_alpha(alpha, params, sim, cfg.samples_per_eval, sc, seed, cfg.threads)
        .result.partition.num_clusters();
  };

  MassBracketResult out;
  double lo = 1.0, hi = 1.0;
  int k_lo, k_hi;
  k_lo = k_hi = eval_k(1.0);
  if (k_lo == target_k) return {1.0, k_lo, true, true};

  // Geometric expansion until the bracket straddles the target.
  if (k_lo < target_k) {
    while (k_hi < target_k) {
      if (hi >= kAlphaMax) throw NumericError("target cluster count unreachable");
      lo = hi;
      k_lo = k_hi;
      hi = std::min(hi * kExpandFactor, kAlphaMax);
      k_hi = eval_k(hi);
      if (k_hi < k_lo) out.monotone = false;
      if (k_hi == target_k) return {hi, k_hi, true, out.monotone};
    }
  } else {
    while (k_lo > target_k) {
      if (lo <= kAlphaMin) throw NumericError("target cluster count unreachable");
      hi = lo;
      k_hi = k_lo;
      lo = std::max(lo / kExpandFactor, kAlphaMin);
      k_lo = eval_k(lo);
      if (k_lo > k_hi) out.monotone = false;
      if (k_lo == target_k) return {lo, k_lo, true, out.monotone};
    }
  }

  // Bisect in log space; accept the first alpha attaining the target.
  for (int step = 0; step < cfg.max_bisection_steps && hi / lo > 1.0 + cfg.bisection_tolerance;
       ++step) {
    const double mid = std::sqrt(lo * hi);
    const int k_mid = eval_k(mid);
    if (k_mid == target_k) return {mid, k_mid, true, out.monotone};
    if (k_mid < k_lo || k_mid > k_hi) out.monotone = false;
    if (k_mid < target_k) {
      lo = mid;
      k_lo = k_mid;
    } else {
      hi = mid;
      k_hi = k_mid;
    }
  }

  // Target never hit: report the closest endpoint (ties -> smaller alpha).
  out.attained = false;
  if (std::abs(k_lo - target_k) <= std::abs(k_hi - target_k)) {
    out.mass = lo;
    out.k = k_lo;
  } else {
    out.mass = hi;
    out.k = k_hi;
  }
  return out;
}

CaviarResult select_mass(const DistanceMatrix& d, const EpaParams& params,
                         const MassSearchConfig& msc, const SearchConfig& search) {
  msc.validate();
  const SimilarityMatrix sim = similarity_from_distance(d, params.similarity, params.temperature);

  CaviarResult out;
  out.bracket_low = mass_for_cluster_count(msc.k_min, d, params, search, msc, 1000);
  out.bracket_high = mass_for_cluster_count(msc.k_max, d, params, search, msc, 2000);
  double a = out.bracket_low.mass;
  double b = out.bracket_high.mass;
  if (a > b) std::swap(a, b);

  out.diagnostics.reserve(msc.grid_size);
  int best = -1;
  PairwiseSimilarityMatrix best_psm;
  for (int g = 0; g < msc.grid_size; ++g) {
    const double frac = static_cast<double>(g) / (msc.grid_size - 1);
    const double alpha = a == b ? a : a * std::pow(b / a, frac);
    const std::uint64_t eval_seed = derive_seed(msc.seed, 3000 + static_cast<std::uint64_t>(g));
    Evaluation ev =
        evaluate_alpha(alpha, params, sim, msc.samples_per_eval, search, eval_seed, msc.threads);
    GridPoint pt;
    pt.mass = alpha;
    pt.k = ev.result.partition.num_clusters();
    pt.expected_loss = ev.result.loss;
    pt.silhouette = silhouette_or_nan(ev.result.partition, d);
    pt.estimate = std::move(ev.result.partition);
    const bool better =
        !std::isnan(pt.silhouette) && (best < 0 || pt.silhouette > out.diagnostics[best].silhouette);
    out.diagnostics.push_back(std::move(pt));
    if (better) {
      best = g;
      best_psm = std::move(ev.psm);
    }
  }

  if (best < 0) {
    std::ostringstream msg;
    msg << "mass selection failed: every grid point's silhouette is undefined;";
    for (const GridPoint& pt : out.diagnostics)
      msg << " (alpha=" << pt.mass << ", k=" << pt.k << ")";
    throw NumericError(msg.str());
  }

  const GridPoint& chosen = out.diagnostics[best];
  out.mass = chosen.mass;
  out.psm = std::move(best_psm);
  out.estimate = chosen.estimate;
  out.silhouette = chosen.silhouette;
  out.in_range = chosen.k >= msc.k_min && chosen.k <= msc.k_max;
  return out;
}

CaviarResult estimate_at_mass(const DistanceMatrix& d, const EpaParams& params,
                              std::uint64_t draws, const SearchConfig& search, std::uint64_t seed,
                              int threads) {
  if (draws < 1) throw std::invalid_argument("draw count must be positive");
  const SimilarityMatrix sim = similarity_from_distance(d, params.similarity, params.temperature);
  const std::uint64_t eval_seed = derive_seed(seed, 4000);
  Evaluation ev = evaluate_alpha(params.mass, params, sim, draws, search, eval_seed, threads);

  CaviarResult out;
  out.mass = params.mass;
  out.silhouette = silhouette_or_nan(ev.result.partition, d);
  GridPoint pt;
  pt.mass = params.mass;
  pt.k = ev.result.partition.num_clusters();
  pt.expected_loss = ev.result.loss;
  pt.silhouette = out.silhouette;
  pt.estimate = ev.result.partition;
  out.diagnostics.push_back(std::move(pt));
  out.psm = std::move(ev.psm);
  out.estimate = std::move(ev.result.partition);
  return out;
}

CaviarResult caviarpd_estimate(const DistanceMatrix& d, const EpaParams& params,
                               const MassSearchConfig& msc, const SearchConfig& search) {
  CaviarResult selected = select_mass(d, params, msc, search);

  EpaParams p = params;
  p.mass = selected.mass;
  CaviarResult final_pass =
      estimate_at_mass(d, p, 4 * msc.samples_per_eval, search, msc.seed, msc.threads);

  selected.psm = std::move(final_pass.psm);
  selected.estimate = std::move(final_pass.estimate);
  selected.silhouette = final_pass.silhouette;
  const int k = selected.estimate.num_clusters();
  selected.in_range = k >= msc.k_min && k <= msc.k_max;
  return selected;
}

}  // namespace caviarpd
