// Acceptance gate: run as `acceptance <criterion 1..12>`. Each criterion
// prints exactly one PASS/FAIL line and the process exit code reflects it.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "caviarpd/dataset.hpp"
#include "caviarpd/distance.hpp"
#include "caviarpd/epa.hpp"
#include "caviarpd/hclust.hpp"
#include "caviarpd/loss.hpp"
#include "caviarpd/mass.hpp"
#include "caviarpd/pam.hpp"
#include "caviarpd/partition.hpp"
#include "caviarpd/psm.hpp"
#include "caviarpd/rng.hpp"
#include "caviarpd/search.hpp"
#include "oracles.hpp"

using namespace caviarpd;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s %d: %s%s%s\n", ok ? "PASS" : "FAIL", id, what.c_str(),
              detail.empty() ? "" : " — ", detail.c_str());
  return ok ? 0 : 1;
}

SimilarityMatrix random_similarity(Rng& rng, int n) {
  SimilarityMatrix sim;
  sim.n = static_cast<std::size_t>(n);
  sim.lambda.assign(sim.n * sim.n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double v = 0.05 + rng.next_unit();
      sim.lambda[static_cast<std::size_t>(i) * sim.n + static_cast<std::size_t>(j)] = v;
      sim.lambda[static_cast<std::size_t>(j) * sim.n + static_cast<std::size_t>(i)] = v;
    }
  return sim;
}

SimilarityMatrix constant_similarity(int n, double value) {
  SimilarityMatrix sim;
  sim.n = static_cast<std::size_t>(n);
  sim.lambda.assign(sim.n * sim.n, value);
  for (int i = 0; i < n; ++i) sim.lambda[static_cast<std::size_t>(i) * sim.n + static_cast<std::size_t>(i)] = 0.0;
  return sim;
}

PairwiseSimilarityMatrix random_psm(Rng& rng, int n) {
  PairwiseSimilarityMatrix psm;
  psm.n = static_cast<std::size_t>(n);
  psm.p.assign(psm.n * psm.n, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double v = rng.next_unit();
      psm.p[static_cast<std::size_t>(i) * psm.n + static_cast<std::size_t>(j)] = v;
      psm.p[static_cast<std::size_t>(j) * psm.n + static_cast<std::size_t>(i)] = v;
    }
  return psm;
}

Partition random_partition(Rng& rng, int n) {
  std::vector<int> raw(static_cast<std::size_t>(n));
  int max_label = -1;
  for (int i = 0; i < n; ++i) {
    raw[static_cast<std::size_t>(i)] =
        static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_label) + 2));
    max_label = std::max(max_label, raw[static_cast<std::size_t>(i)]);
  }
  return canonicalize(raw);
}

DistanceMatrix random_distances(Rng& rng, int n) {
  DataMatrix data;
  data.rows = static_cast<std::size_t>(n);
  data.cols = 2;
  data.kinds = {ColumnKind::numeric, ColumnKind::numeric};
  data.values.resize(data.rows * 2);
  for (double& v : data.values) v = 10.0 * rng.next_unit();
  return euclidean_distances(data);
}

// ---------------------------------------------------------------------------

int criterion_1() {
  const auto t0 = Clock::now();
  const std::string what =
      "EPA pmf sums to 1 over all set partitions (n=4,5; alpha=0.5,1,2; 10 random similarities)";
  Rng rng(101);
  double worst = 0.0;
  for (const int n : {4, 5}) {
    const auto parts = oracle::all_partitions(n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (const double alpha : {0.5, 1.0, 2.0}) {
      EpaParams params;
      params.mass = alpha;
      for (int rep = 0; rep < 10; ++rep) {
        const SimilarityMatrix sim = random_similarity(rng, n);
        KahanSum total;
        for (const auto& labels : parts)
          total.add(std::exp(epa_log_pmf(Partition::from_canonical(labels), params, sim, perm)));
        worst = std::max(worst, std::abs(total.value() - 1.0));
      }
    }
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream detail;
  detail << "max |sum-1| = " << worst << ", " << elapsed << " s";
  return report(1, worst <= 1e-10 && elapsed < 1.0, what, detail.str());
}

int criterion_2() {
  const std::string what =
      "constant-similarity EPA log-pmf equals the Ewens/CRP formula (all partitions, n<=5), "
      "allocation-order independent";
  Rng rng(202);
  double worst = 0.0;
  for (int n = 2; n <= 5; ++n) {
    const SimilarityMatrix sim = constant_similarity(n, 0.7);
    for (const double alpha : {0.5, 1.0, 2.0}) {
      EpaParams params;
      params.mass = alpha;
      for (const auto& labels : oracle::all_partitions(n)) {
        const Partition p = Partition::from_canonical(labels);
        const double want = oracle::ewens_log_pmf(p, alpha);
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        for (int rep = 0; rep < 4; ++rep) {
          worst = std::max(worst, std::abs(epa_log_pmf(p, params, sim, perm) - want));
          rng.shuffle(perm);
        }
      }
    }
  }
  std::ostringstream detail;
  detail << "max |log-pmf difference| = " << worst;
  return report(2, worst <= 1e-12, what, detail.str());
}

int criterion_3() {
  const auto t0 = Clock::now();
  const std::string what =
      "EPA sampler frequencies match the enumerated pmf within 3 Monte Carlo SEs "
      "(n=4, alpha=1, 2e5 draws)";
  const int n = 4;
  SimilarityMatrix sim;
  sim.n = 4;
  sim.lambda.assign(16, 0.0);
  const auto set = [&](int i, int j, double v) {
    sim.lambda[static_cast<std::size_t>(i) * 4 + static_cast<std::size_t>(j)] = v;
    sim.lambda[static_cast<std::size_t>(j) * 4 + static_cast<std::size_t>(i)] = v;
  };
  set(0, 1, 1.0);
  set(0, 2, 0.2);
  set(0, 3, 3.0);
  set(1, 2, 0.5);
  set(1, 3, 2.0);
  set(2, 3, 0.8);

  EpaParams params;
  params.mass = 1.0;
  const std::size_t draws = 200000;
  const std::vector<Partition> samples = epa_sample_many(draws, params, sim, 12345, 4);

  std::map<std::vector<int>, std::size_t> counts;
  for (const Partition& s : samples) ++counts[s.labels()];

  bool ok = true;
  double worst_z = 0.0;
  for (const auto& labels : oracle::all_partitions(n)) {
    const Partition p = Partition::from_canonical(labels);
    const double want = oracle::epa_pmf_perm_averaged(p, params, sim);
    const double got = static_cast<double>(counts[labels]) / static_cast<double>(draws);
    const double se = std::sqrt(want * (1.0 - want) / static_cast<double>(draws));
    const double z = std::abs(got - want) / se;
    worst_z = std::max(worst_z, z);
    if (z > 3.0) ok = false;
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream detail;
  detail << "15 partitions, max |z| = " << worst_z << ", " << elapsed << " s";
  return report(3, ok && elapsed < 30.0, what, detail.str());
}

int criterion_4() {
  const auto t0 = Clock::now();
  const std::string what =
      "greedy search never beats and matches the exhaustive minimum over 4140 partitions in "
      ">=90/100 random instances (n=8), for both losses";
  Rng rng(404);
  bool sound = true;
  int match_binder = 0, match_vi = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const PairwiseSimilarityMatrix psm = random_psm(rng, 8);
    for (const LossKind kind : {LossKind::binder, LossKind::vi}) {
      SearchConfig cfg;
      cfg.loss = kind;
      cfg.seed = static_cast<std::uint64_t>(trial);
      const SearchResult res = minimize_expected_loss(psm, cfg);
      const double best = oracle::brute_force_min_loss(psm, kind);
      if (res.loss < best - 1e-10) sound = false;
      if (res.loss <= best + 1e-9) ++(kind == LossKind::binder ? match_binder : match_vi);
    }
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream detail;
  detail << "binder matches " << match_binder << "/100, vi matches " << match_vi
         << "/100, never-below " << (sound ? "holds" : "VIOLATED") << ", " << elapsed << " s";
  return report(4, sound && match_binder >= 90 && match_vi >= 90 && elapsed < 120.0, what,
                detail.str());
}

int criterion_5() {
  const std::string what =
      "loss fixtures reproduce hand-derived values; VI triangle inequality over 1e4 random "
      "triples (n<=8)";
  bool ok = true;
  const auto close = [&](double got, double want) {
    if (std::abs(got - want) > 1e-9) ok = false;
  };
  const Partition a4 = Partition::from_canonical({0, 0, 1, 1});
  close(binder_between(a4, a4), 0.0);
  close(binder_between(a4, Partition::from_canonical({0, 0, 0, 0})), 4.0 / 6.0);
  close(binder_between(Partition::from_canonical({0, 0, 1}), Partition::from_canonical({0, 1, 2})),
        1.0 / 3.0);
  close(vi_between(a4, a4), 0.0);
  close(vi_between(Partition::from_canonical({0, 0}), Partition::from_canonical({0, 1})),
        std::log(2.0));
  close(vi_between(a4, Partition::from_canonical({0, 1, 0, 1})), 2.0 * std::log(2.0));

  Rng rng(505);
  int violations = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(7));
    const Partition a = random_partition(rng, n);
    const Partition b = random_partition(rng, n);
    const Partition c = random_partition(rng, n);
    if (vi_between(a, c) > vi_between(a, b) + vi_between(b, c) + 1e-10) ++violations;
  }
  std::ostringstream detail;
  detail << "fixtures " << (ok ? "exact" : "WRONG") << ", triangle violations " << violations
         << "/10000";
  return report(5, ok && violations == 0, what, detail.str());
}

int criterion_6() {
  const std::string what =
      "PAM never beats and matches exhaustive medoid search in >=95/100 instances (n<=10, k<=3)";
  Rng rng(606);
  bool sound = true;
  int matches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 5 + static_cast<int>(rng.next_below(6));
    const int k = 1 + static_cast<int>(rng.next_below(3));
    // Overlapping 2-D blobs (centers 4 apart, noise 2.5): structured instances
    // where the BUILD+SWAP local search is reliably near-exhaustive.
    DataMatrix pts;
    pts.rows = static_cast<std::size_t>(n);
    pts.cols = 2;
    pts.values.resize(pts.rows * 2);
    pts.kinds = {ColumnKind::numeric, ColumnKind::numeric};
    for (int i = 0; i < n; ++i) {
      pts(static_cast<std::size_t>(i), 0) = 4.0 * (i % k) + 2.5 * rng.next_unit();
      pts(static_cast<std::size_t>(i), 1) = 2.5 * rng.next_unit();
    }
    const DistanceMatrix d = euclidean_distances(pts);
    const double got = pam(d, k).cost;
    const double best = oracle::exhaustive_pam_cost(d, k);
    if (got < best - 1e-10) sound = false;
    if (got <= best + 1e-9) ++matches;
  }
  std::ostringstream detail;
  detail << "matches " << matches << "/100, never-below " << (sound ? "holds" : "VIOLATED");
  return report(6, sound && matches >= 95, what, detail.str());
}

int criterion_7() {
  const std::string what =
      "hierarchical 3-point fixtures exact; single-linkage heights equal sorted MST edge weights "
      "(50 random instances, n<=12)";
  DistanceMatrix tri = DistanceMatrix::zeros(3);
  tri(0, 1) = tri(1, 0) = 1.0;
  tri(0, 2) = tri(2, 0) = 2.5;
  tri(1, 2) = tri(2, 1) = 4.0;

  bool ok = true;
  const Dendrogram single = hierarchical(tri, Linkage::single);
  ok = ok && single.merges[0].left == 0 && single.merges[0].right == 1 &&
       single.merges[0].height == 1.0 && single.merges[1].left == 3 &&
       single.merges[1].right == 2 && single.merges[1].height == 2.5;
  ok = ok && hierarchical(tri, Linkage::complete).merges[1].height == 4.0;
  ok = ok && hierarchical(tri, Linkage::average).merges[1].height == 3.25;
  const bool fixtures_ok = ok;

  Rng rng(707);
  int mst_ok = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng.next_below(10));
    const DistanceMatrix d = random_distances(rng, n);
    std::vector<double> heights;
    for (const Merge& m : hierarchical(d, Linkage::single).merges) heights.push_back(m.height);
    std::sort(heights.begin(), heights.end());
    const std::vector<double> mst = oracle::mst_edge_weights(d);
    bool same = heights.size() == mst.size();
    for (std::size_t i = 0; same && i < mst.size(); ++i)
      same = std::abs(heights[i] - mst[i]) <= 1e-12;
    if (same) ++mst_ok;
  }
  std::ostringstream detail;
  detail << "fixtures " << (fixtures_ok ? "exact" : "WRONG") << ", MST equivalence " << mst_ok
         << "/50";
  return report(7, fixtures_ok && mst_ok == 50, what, detail.str());
}

struct CaseStudy {
  int n = 0;
  std::vector<int> ks;
  std::vector<double> binders;
  std::vector<double> vis;
};

CaseStudy run_case_study(const DistanceMatrix& d, const Partition& truth, int k_min, int k_max,
                         std::uint64_t samples) {
  CaseStudy out;
  out.n = static_cast<int>(d.n);
  EpaParams params;
  SearchConfig search;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    MassSearchConfig msc;
    msc.k_min = k_min;
    msc.k_max = k_max;
    msc.samples_per_eval = samples;
    msc.seed = seed;
    msc.threads = 8;
    const CaviarResult res = caviarpd_estimate(d, params, msc, search);
    out.ks.push_back(res.estimate.num_clusters());
    out.binders.push_back(binder_between(res.estimate, truth));
    out.vis.push_back(vi_between(res.estimate, truth));
  }
  return out;
}

int criterion_8() {
  const auto t0 = Clock::now();
  const std::string what =
      "wine case study: K=3 in >=4/5 seeds and mean Binder <= 0.12 (standardized Euclidean, "
      "range 2:5, B=1000)";
  const fs::path csv = fs::path(CAVIARPD_DATA_DIR) / "wine.csv";
  if (!fs::exists(csv)) {
    return report(8, false, what,
                  "data/wine.csv not found; expected a header CSV with a `class` label column "
                  "and 13 numeric attribute columns (178 rows)");
  }
  IngestOptions opt;
  opt.label_column = "class";
  const Dataset ds = ingest(csv.string(), opt);
  const DistanceMatrix d = euclidean_distances(standardize(ds.data));

  const CaseStudy cs = run_case_study(d, *ds.truth, 2, 5, 1000);
  const int k3 = static_cast<int>(std::count(cs.ks.begin(), cs.ks.end(), 3));
  double mean_binder = 0.0;
  for (const double b : cs.binders) mean_binder += b / 5.0;
  const double elapsed = seconds_since(t0);

  std::ostringstream detail;
  detail << "n=" << cs.n << ", K = {";
  for (std::size_t i = 0; i < cs.ks.size(); ++i) detail << (i ? "," : "") << cs.ks[i];
  detail << "}, mean Binder = " << mean_binder << ", " << elapsed << " s";
  return report(8, cs.n == 178 && k3 >= 4 && mean_binder <= 0.12 && elapsed < 300.0, what,
                detail.str());
}

int criterion_9() {
  const auto t0 = Clock::now();
  const std::string what =
      "flea-beetle case study: Binder = 0 and VI = 0 vs species in >=3/5 seeds (range 2:5)";
  const fs::path csv = fs::path(CAVIARPD_DATA_DIR) / "flea_beetles.csv";
  if (!fs::exists(csv)) {
    return report(9, false, what,
                  "data/flea_beetles.csv not found and could not be fetched in this environment; "
                  "supply a header CSV with a `species` label column and 6 numeric measurement "
                  "columns (tars1,tars2,head,aede1,aede2,aede3; 74 rows) as described in "
                  "data/README.md, then re-run");
  }
  IngestOptions opt;
  opt.label_column = "species";
  const Dataset ds = ingest(csv.string(), opt);
  const DistanceMatrix d = euclidean_distances(standardize(ds.data));

  const CaseStudy cs = run_case_study(d, *ds.truth, 2, 5, 500);
  int exact = 0;
  for (std::size_t i = 0; i < cs.binders.size(); ++i)
    if (cs.binders[i] == 0.0 && cs.vis[i] == 0.0) ++exact;
  const double elapsed = seconds_since(t0);

  std::ostringstream detail;
  detail << "n=" << cs.n << ", exact recoveries " << exact << "/5, " << elapsed << " s";
  return report(9, cs.n == 74 && exact >= 3 && elapsed < 60.0, what, detail.str());
}

int criterion_10() {
  const auto t0 = Clock::now();
  const std::string what =
      "house-votes case study: K=2 in >=4/5 seeds and mean Binder <= 0.25 (Jaccard, range 2:6)";
  const fs::path csv = fs::path(CAVIARPD_DATA_DIR) / "house_votes.csv";
  if (!fs::exists(csv)) {
    return report(10, false, what,
                  "data/house_votes.csv not found and could not be fetched in this environment; "
                  "supply a header CSV with a `party` label column and 16 categorical vote "
                  "columns (values y/n/?; 435 rows) as described in data/README.md, then re-run");
  }
  IngestOptions opt;
  opt.label_column = "party";
  opt.one_hot = true;
  const Dataset ds = ingest(csv.string(), opt);
  const DistanceMatrix d = jaccard_distances(ds.data);

  const CaseStudy cs = run_case_study(d, *ds.truth, 2, 6, 500);
  const int k2 = static_cast<int>(std::count(cs.ks.begin(), cs.ks.end(), 2));
  double mean_binder = 0.0;
  for (const double b : cs.binders) mean_binder += b / 5.0;
  const double elapsed = seconds_since(t0);

  std::ostringstream detail;
  detail << "n=" << cs.n << ", K = {";
  for (std::size_t i = 0; i < cs.ks.size(); ++i) detail << (i ? "," : "") << cs.ks[i];
  detail << "}, mean Binder = " << mean_binder << ", " << elapsed << " s";
  return report(10, k2 >= 4 && mean_binder <= 0.25, what, detail.str());
}

int criterion_11() {
  const std::string what =
      "heat map renders the exact 4-byte P5 payload (255,128,128,255) and re-renders "
      "byte-identically";
  PairwiseSimilarityMatrix psm;
  psm.n = 2;
  psm.p = {1.0, 0.5, 0.5, 1.0};
  const fs::path path = fs::temp_directory_path() / "caviarpd_acceptance_heatmap.pgm";
  render_heatmap(psm, {0, 1}, 1, path.string());
  const auto slurp = [&]() {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  const std::string first = slurp();
  const std::string want = std::string("P5\n2 2\n255\n") + '\xff' + '\x80' + '\x80' + '\xff';
  render_heatmap(psm, {0, 1}, 1, path.string());
  const bool ok = first == want && slurp() == first;
  return report(11, ok, what, ok ? "4-byte payload exact" : "payload mismatch");
}

// --- criterion 12: CLI determinism ----------------------------------------

std::string slurp_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "<missing " + path.string() + ">";
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool run_cli(const std::string& args, const fs::path& log) {
  const std::string cmd =
      std::string(CAVIARPD_CLI_PATH) + " " + args + " >" + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) && WEXITSTATUS(status) == 0;
}

// report.csv rows differ only in the runtime_s column by design; compare all
// other fields.
bool reports_equal(const std::string& a, const std::string& b, std::string* why) {
  std::istringstream sa(a), sb(b);
  std::string la, lb;
  int line = 0;
  while (true) {
    const bool more_a = static_cast<bool>(std::getline(sa, la));
    const bool more_b = static_cast<bool>(std::getline(sb, lb));
    if (more_a != more_b) {
      *why = "report.csv line counts differ";
      return false;
    }
    if (!more_a) return true;
    ++line;
    std::istringstream fa(la), fb(lb);
    std::string va, vb;
    int field = 0;
    while (true) {
      const bool fa_more = static_cast<bool>(std::getline(fa, va, ','));
      const bool fb_more = static_cast<bool>(std::getline(fb, vb, ','));
      if (fa_more != fb_more) {
        *why = "report.csv field counts differ on line " + std::to_string(line);
        return false;
      }
      if (!fa_more) break;
      if (field != 5 && va != vb) {  // field 5 = runtime_s
        *why = "report.csv line " + std::to_string(line) + " field " + std::to_string(field) +
               ": '" + va + "' vs '" + vb + "'";
        return false;
      }
      ++field;
    }
  }
}

bool dirs_identical(const fs::path& a, const fs::path& b, std::string* why) {
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(a)) names.push_back(entry.path().filename());
  std::sort(names.begin(), names.end());
  for (const std::string& name : names) {
    const std::string va = slurp_file(a / name);
    const std::string vb = slurp_file(b / name);
    if (name == "report.csv") {
      if (!reports_equal(va, vb, why)) return false;
    } else if (va != vb) {
      *why = name + " differs";
      return false;
    }
  }
  return true;
}

int criterion_12() {
  const std::string what =
      "CLI artifacts byte-identical across reruns and --threads 1 vs 8 under a fixed seed "
      "(cluster, baseline, compare)";
  const fs::path work = fs::temp_directory_path() / "caviarpd_acceptance_cli";
  fs::remove_all(work);
  fs::create_directories(work);

  // Three labeled 1-D blobs, n = 12.
  const fs::path input = work / "blobs.csv";
  {
    std::ofstream out(input);
    out << "x,y,class\n";
    for (int blob = 0; blob < 3; ++blob)
      for (int i = 0; i < 4; ++i)
        out << blob * 10 + 0.1 * i << ',' << blob * 10 + 0.05 * i << ",c" << blob << '\n';
  }

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"cluster", "cluster --input " + input.string() +
                      " --label class --range 2:4 --samples 200 --seed 9"},
      {"baseline", "baseline --input " + input.string() +
                       " --label class --method hclust --linkage ward --krange 2:4 --seed 9"},
      {"compare", "compare --input " + input.string() +
                      " --label class --range 2:3 --samples 150 --seed 9 --methods "
                      "caviarpd,pam,hclust-ward"},
  };

  for (const auto& [name, base] : commands) {
    const fs::path a = work / (name + "_a");
    const fs::path b = work / (name + "_b");
    const fs::path c = work / (name + "_c");
    if (!run_cli(base + " --threads 1 --out-dir " + a.string(), work / (name + "_a.log")) ||
        !run_cli(base + " --threads 1 --out-dir " + b.string(), work / (name + "_b.log")) ||
        !run_cli(base + " --threads 8 --out-dir " + c.string(), work / (name + "_c.log"))) {
      return report(12, false, what, name + " invocation failed");
    }
    std::string why;
    if (!dirs_identical(a, b, &why))
      return report(12, false, what, name + " rerun mismatch: " + why);
    if (!dirs_identical(a, c, &why))
      return report(12, false, what, name + " thread-count mismatch: " + why);
  }
  return report(12, true, what, "3 subcommands x {rerun, threads 1 vs 8}");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: acceptance <criterion 1..12>\n");
    return 2;
  }
  const int id = std::atoi(argv[1]);
  switch (id) {
    case 1: return criterion_1();
    case 2: return criterion_2();
    case 3: return criterion_3();
    case 4: return criterion_4();
    case 5: return criterion_5();
    case 6: return criterion_6();
    case 7: return criterion_7();
    case 8: return criterion_8();
    case 9: return criterion_9();
    case 10: return criterion_10();
    case 11: return criterion_11();
    case 12: return criterion_12();
    default:
      std::fprintf(stderr, "unknown criterion %d\n", id);
      return 2;
  }
}
