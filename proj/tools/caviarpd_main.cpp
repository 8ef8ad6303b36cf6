#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "caviarpd/dataset.hpp"
#include "caviarpd/distance.hpp"
#include "caviarpd/epa.hpp"
#include "caviarpd/error.hpp"
#include "caviarpd/hclust.hpp"
#include "caviarpd/io.hpp"
#include "caviarpd/loss.hpp"
#include "caviarpd/mass.hpp"
#include "caviarpd/pam.hpp"
#include "caviarpd/partition.hpp"
#include "caviarpd/psm.hpp"
#include "caviarpd/rng.hpp"
#include "caviarpd/search.hpp"
#include "caviarpd/silhouette.hpp"

namespace {

using namespace caviarpd;
namespace fs = std::filesystem;

struct CommonOpts {
  std::string input;
  std::string label;
  std::string distance = "euclidean";
  std::string standardize = "on";
  std::string out_dir = ".";
  bool drop_missing = false;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct ClusterOpts {
  std::string range = "2:5";
  std::optional<double> mass;
  double temperature = 10.0;
  std::string similarity = "exponential";
  std::uint64_t samples = 500;
  std::string loss = "binder";
  std::string distribution = "epa";
  int cell_size = 4;
};

struct BaselineOpts {
  std::string method;
  std::string linkage = "average";
  int k = 0;  // 0 = select by silhouette over krange
  std::string krange = "2:5";
};

void add_common(CLI::App* cmd, CommonOpts* c) {
  cmd->add_option("--input", c->input, "input CSV with header row")->required();
  cmd->add_option("--label", c->label, "truth label column (excluded from features)");
  cmd->add_option("--distance", c->distance, "distance kind")
      ->check(CLI::IsMember({"euclidean", "jaccard"}));
  cmd->add_option("--standardize", c->standardize, "standardize numeric columns")
      ->check(CLI::IsMember({"on", "off"}));
  cmd->add_flag("--drop-missing", c->drop_missing, "drop rows with missing cells");
  cmd->add_option("--seed", c->seed, "master RNG seed");
  cmd->add_option("--out-dir", c->out_dir, "artifact output directory");
  cmd->add_option("--threads", c->threads, "worker thread count")->check(CLI::PositiveNumber);
}

void add_cluster(CLI::App* cmd, ClusterOpts* k) {
  cmd->add_option("--range", k->range, "cluster-count range kmin:kmax for mass selection");
  cmd->add_option("--mass", k->mass, "manual mass (skips selection)");
  cmd->add_option("--temperature", k->temperature, "similarity temperature")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--similarity", k->similarity, "similarity function")
      ->check(CLI::IsMember({"exponential", "reciprocal"}));
  cmd->add_option("--samples", k->samples, "Monte Carlo draws B")->check(CLI::PositiveNumber);
  cmd->add_option("--loss", k->loss, "loss for the point estimate")
      ->check(CLI::IsMember({"binder", "vi"}));
  cmd->add_option("--distribution", k->distribution, "sampling distribution")
      ->check(CLI::IsMember({"epa", "ddcrp"}));
  cmd->add_option("--cell-size", k->cell_size, "heat map pixels per matrix cell")
      ->check(CLI::PositiveNumber);
}

std::pair<int, int> parse_range(const std::string& text) {
  const std::size_t colon = text.find(':');
  std::size_t used1 = 0, used2 = 0;
  int lo = 0, hi = 0;
  try {
    lo = std::stoi(text.substr(0, colon), &used1);
    hi = colon == std::string::npos ? lo : std::stoi(text.substr(colon + 1), &used2);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + text + "' (expected kmin:kmax)");
  }
  if (used1 != (colon == std::string::npos ? text.size() : colon) ||
      (colon != std::string::npos && used2 != text.size() - colon - 1)) {
    throw std::invalid_argument("bad range '" + text + "' (expected kmin:kmax)");
  }
  return {lo, hi};
}

struct Prepared {
  Dataset dataset;
  DistanceMatrix distances;
};

Prepared prepare(const CommonOpts& c) {
  IngestOptions opt;
  opt.label_column = c.label;
  opt.drop_missing = c.drop_missing;
  opt.one_hot = c.distance == "jaccard";
  Prepared out;
  out.dataset = ingest(c.input, opt);
  if (c.distance == "jaccard") {
    out.distances = jaccard_distances(out.dataset.data);
  } else {
    const DataMatrix features = c.standardize == "on"
                                    ? standardize(out.dataset.data, &out.dataset.warnings)
                                    : out.dataset.data;
    out.distances = euclidean_distances(features);
  }
  for (const std::string& w : out.dataset.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
  return out;
}

void write_partition_file(const Partition& p, const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write file: " + path.string());
  write_partition_csv(p, out);
}

ReportRow make_row(const std::string& method, const Partition& estimate,
                   const std::optional<Partition>& truth, double runtime_s, std::uint64_t seed) {
  ReportRow row;
  row.method = method;
  row.k = estimate.num_clusters();
  if (truth) {
    row.binder = binder_between(estimate, *truth);
    row.vi_nats = vi_between(estimate, *truth, false);
    row.vi_bits = vi_between(estimate, *truth, true);
  }
  row.runtime_s = runtime_s;
  row.seed = seed;
  return row;
}

// The ddCRP pipeline mirror of estimate_at_mass: fixed mass, B draws.
CaviarResult ddcrp_estimate(const DistanceMatrix& d, double mass, const EpaParams& params,
                            std::uint64_t draws, const SearchConfig& search, std::uint64_t seed,
                            int threads) {
  const SimilarityMatrix sim = similarity_from_distance(d, params.similarity, params.temperature);
  const std::uint64_t eval_seed = derive_seed(seed, 5000);
  const std::vector<Partition> samples =
      ddcrp_sample_many(draws, mass, sim, derive_seed(eval_seed, 0), threads);

  CaviarResult out;
  out.mass = mass;
  out.psm = pairwise_similarity(samples);
  SearchConfig sc = search;
  sc.seed = derive_seed(eval_seed, 1);
  SearchResult res = minimize_expected_loss(out.psm, sc);
  GridPoint pt;
  pt.mass = mass;
  pt.k = res.partition.num_clusters();
  pt.expected_loss = res.loss;
  pt.silhouette = std::numeric_limits<double>::quiet_NaN();
  if (pt.k >= 2 && pt.k <= static_cast<int>(d.n) - 1)
    pt.silhouette = average_silhouette(res.partition, d);
  pt.estimate = res.partition;
  out.silhouette = pt.silhouette;
  out.diagnostics.push_back(std::move(pt));
  out.estimate = std::move(res.partition);
  return out;
}

// Shared by `cluster` and `compare`: runs the pipeline and writes artifacts
// with the given file-name prefix ("" for the single-run command).
ReportRow run_caviarpd(const Prepared& prep, const CommonOpts& c, const ClusterOpts& k,
                       const std::string& prefix, std::vector<GridPoint>* diagnostics_out) {
  EpaParams params;
  params.temperature = k.temperature;
  params.similarity =
      k.similarity == "reciprocal" ? SimilarityKind::reciprocal : SimilarityKind::exponential;

  SearchConfig search;
  search.loss = k.loss == "vi" ? LossKind::vi : LossKind::binder;

  const auto t0 = std::chrono::steady_clock::now();
  CaviarResult result;
  std::string method = "caviarpd";
  if (k.distribution == "ddcrp") {
    std::fprintf(stderr,
                 "warning: the ddCRP distribution is EXPERIMENTAL: no mass-selection support, "
                 "results are not comparable to the EPA pipeline\n");
    if (!k.mass) throw std::invalid_argument("--distribution ddcrp requires --mass");
    result = ddcrp_estimate(prep.distances, *k.mass, params, k.samples, search, c.seed, c.threads);
    method = "ddcrp";
  } else if (k.mass) {
    params.mass = *k.mass;
    result = estimate_at_mass(prep.distances, params, k.samples, search, c.seed, c.threads);
  } else {
    const auto [k_min, k_max] = parse_range(k.range);
    MassSearchConfig msc;
    msc.k_min = k_min;
    msc.k_max = k_max;
    msc.samples_per_eval = k.samples;
    msc.seed = c.seed;
    msc.threads = c.threads;
    result = caviarpd_estimate(prep.distances, params, msc, search);
    if (!result.in_range) {
      std::fprintf(stderr, "warning: estimate has %d clusters, outside the requested range %s\n",
                   result.estimate.num_clusters(), k.range.c_str());
    }
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;

  const fs::path dir(c.out_dir);
  write_partition_file(result.estimate, dir / (prefix + "partition.csv"));
  write_psm_csv(result.psm, (dir / (prefix + "psm.csv")).string());
  render_heatmap(result.psm, display_order(result.psm, result.estimate), k.cell_size,
                 (dir / (prefix + "heatmap.pgm")).string());
  write_diagnostics_csv(result.diagnostics, (dir / (prefix + "diagnostics.csv")).string());
  if (diagnostics_out) *diagnostics_out = result.diagnostics;

  std::printf("%s: mass %.6g, K = %d, silhouette %.4f\n", method.c_str(), result.mass,
              result.estimate.num_clusters(), result.silhouette);
  return make_row(method, result.estimate, prep.dataset.truth, elapsed.count(), c.seed);
}

ReportRow run_one_baseline(const Prepared& prep, const CommonOpts& c, const std::string& method,
                           const std::string& linkage, int k, const std::string& krange,
                           const std::string& prefix, bool write_dendro) {
  const auto t0 = std::chrono::steady_clock::now();
  Partition estimate = canonicalize(std::vector<int>(1, 0));
  std::string name;
  const fs::path dir(c.out_dir);

  if (method == "pam") {
    name = "pam";
    if (k > 0) {
      estimate = pam(prep.distances, k).partition;
    } else {
      const auto [lo, hi] = parse_range(krange);
      estimate = select_k_by_silhouette(prep.distances, lo, hi, std::nullopt).partition;
    }
  } else if (method == "hclust") {
    const Linkage link = linkage_from_string(linkage);
    name = "hclust-" + linkage;
    const Dendrogram dend = hierarchical(prep.distances, link);
    if (write_dendro) write_dendrogram(dend, (dir / (prefix + "dendrogram.csv")).string());
    if (k > 0) {
      estimate = cut_dendrogram(dend, k);
    } else {
      const auto [lo, hi] = parse_range(krange);
      estimate = select_k_by_silhouette(prep.distances, lo, hi, link).partition;
    }
  } else {
    throw std::invalid_argument("unknown baseline method: " + method);
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;

  write_partition_file(estimate, dir / (prefix + "partition.csv"));
  std::printf("%s: K = %d\n", name.c_str(), estimate.num_clusters());
  return make_row(name, estimate, prep.dataset.truth, elapsed.count(), c.seed);
}

void finish(const std::vector<ReportRow>& rows, const CommonOpts& c, bool write_text_table) {
  const fs::path dir(c.out_dir);
  write_report_csv(rows, (dir / "report.csv").string());
  const std::string table = format_report_table(rows);
  if (write_text_table) {
    std::ofstream txt(dir / "report.txt");
    if (!txt) throw DataError("cannot write file: " + (dir / "report.txt").string());
    txt << table;
  }
  std::fputs(table.c_str(), stdout);
}

std::string sanitize(std::string name) {
  for (char& ch : name)
    if (ch == '-' || ch == ' ') ch = '_';
  return name;
}

int dispatch(const std::string& sub, const CommonOpts& c, const ClusterOpts& k,
             const BaselineOpts& b, const std::vector<std::string>& methods) {
  fs::create_directories(c.out_dir);
  Prepared prep = prepare(c);

  if (sub == "cluster") {
    const ReportRow row = run_caviarpd(prep, c, k, "", nullptr);
    finish({row}, c, false);
    return 0;
  }
  if (sub == "baseline") {
    const ReportRow row = run_one_baseline(prep, c, b.method, b.linkage, b.k, b.krange, "", true);
    finish({row}, c, false);
    return 0;
  }

  // compare
  if (!prep.dataset.truth) throw DataError("compare requires a label column");
  std::vector<ReportRow> rows;
  for (const std::string& m : methods) {
    const std::string prefix = sanitize(m) + "_";
    if (m == "caviarpd") {
      rows.push_back(run_caviarpd(prep, c, k, prefix, nullptr));
    } else if (m == "pam") {
      rows.push_back(run_one_baseline(prep, c, "pam", "", 0, k.range, prefix, false));
    } else if (m.rfind("hclust-", 0) == 0) {
      rows.push_back(
          run_one_baseline(prep, c, "hclust", m.substr(7), 0, k.range, prefix, false));
    } else {
      throw std::invalid_argument("unknown method in --methods: " + m);
    }
  }
  finish(rows, c, true);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"caviarpd: distance-based stochastic clustering via sampled partitions"};
  app.require_subcommand(1);

  CommonOpts common;
  ClusterOpts cluster;
  BaselineOpts baseline;
  std::vector<std::string> methods = {"caviarpd", "pam", "hclust-average", "hclust-complete",
                                      "hclust-ward"};

  CLI::App* cmd_cluster = app.add_subcommand("cluster", "EPA sampling + expected-loss estimate");
  add_common(cmd_cluster, &common);
  add_cluster(cmd_cluster, &cluster);

  CLI::App* cmd_baseline = app.add_subcommand("baseline", "hierarchical or PAM baseline");
  add_common(cmd_baseline, &common);
  cmd_baseline->add_option("--method", baseline.method, "pam or hclust")
      ->required()
      ->check(CLI::IsMember({"pam", "hclust"}));
  cmd_baseline->add_option("--linkage", baseline.linkage, "hclust linkage")
      ->check(CLI::IsMember({"single", "complete", "average", "ward"}));
  cmd_baseline->add_option("--k", baseline.k, "exact cluster count")->check(CLI::PositiveNumber);
  cmd_baseline->add_option("--krange", baseline.krange, "silhouette-selection range kmin:kmax");

  CLI::App* cmd_compare = app.add_subcommand("compare", "run several methods, one report row each");
  add_common(cmd_compare, &common);
  add_cluster(cmd_compare, &cluster);
  cmd_compare->add_option("--methods", methods, "comma-separated method list")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), common, cluster, baseline, methods);
  } catch (const DataError& e) {
    std::fprintf(stderr, "data error: %s\n", e.what());
    return 3;
  } catch (const NumericError& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return 4;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  }
}
