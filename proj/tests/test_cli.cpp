#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "caviarpd/io.hpp"
#include "caviarpd/partition.hpp"
#include "doctest.h"

// CAVIARPD_CLI_PATH is injected by the build as the absolute path of the
// `caviarpd` executable.

using namespace caviarpd;
namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::temp_directory_path() / "caviarpd_cli_tests";

int run(const std::string& args, const std::string& log_name = "log") {
  const fs::path log = kWork / (log_name + ".txt");
  const std::string cmd =
      std::string(CAVIARPD_CLI_PATH) + " " + args + " >" + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path write_blobs_csv() {
  fs::create_directories(kWork);
  const fs::path path = kWork / "blobs.csv";
  std::ofstream out(path);
  out << "x,y,class\n";
  const double xs[] = {0.0, 0.1, 0.2, 10.0, 10.1, 10.2};
  for (int i = 0; i < 6; ++i)
    out << xs[i] << ',' << xs[i] + 0.05 << ',' << (i < 3 ? "a" : "b") << '\n';
  return path;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = kWork / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

Partition read_partition(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in);
  return read_partition_csv(in);
}

}  // namespace

TEST_CASE("cluster: success writes all artifacts and exits 0") {
  fs::create_directories(kWork);
  const fs::path input = write_blobs_csv();
  const fs::path out = fresh_dir("cluster_ok");

  const int code = run("cluster --input " + input.string() + " --label class --range 2:4" +
                           " --samples 200 --seed 7 --out-dir " + out.string(),
                       "cluster_ok");
  CHECK(code == 0);

  const Partition estimate = read_partition(out / "partition.csv");
  CHECK(estimate.size() == 6);
  CHECK(estimate.labels() == std::vector<int>{0, 0, 0, 1, 1, 1});

  const PairwiseSimilarityMatrix psm = read_psm_csv((out / "psm.csv").string());
  CHECK(psm.n == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(psm(i, i) == 1.0);

  CHECK(read_file(out / "heatmap.pgm").rfind("P5\n", 0) == 0);
  CHECK(read_file(out / "diagnostics.csv").rfind("alpha,k,avg_silhouette,expected_loss\n", 0) == 0);
  CHECK(read_file(out / "report.csv").rfind("method,k,binder,vi_nats,vi_bits,runtime_s,seed\n", 0) ==
        0);
  // Perfect recovery of the labeled blobs: binder column is exactly 0.
  CHECK(read_file(out / "report.csv").find("caviarpd,2,0,0,0,") != std::string::npos);
  CHECK(read_file(kWork / "cluster_ok.txt").find("caviarpd: mass") != std::string::npos);
}

TEST_CASE("cluster: fixed seed gives byte-identical artifacts across runs and threads") {
  const fs::path input = write_blobs_csv();
  const fs::path a = fresh_dir("det_a");
  const fs::path b = fresh_dir("det_b");
  const fs::path c = fresh_dir("det_c");

  const std::string base = "cluster --input " + input.string() +
                           " --label class --range 2:3 --samples 150 --seed 11 ";
  CHECK(run(base + "--threads 1 --out-dir " + a.string(), "det_a") == 0);
  CHECK(run(base + "--threads 1 --out-dir " + b.string(), "det_b") == 0);
  CHECK(run(base + "--threads 4 --out-dir " + c.string(), "det_c") == 0);

  for (const char* name : {"partition.csv", "psm.csv", "heatmap.pgm", "diagnostics.csv"}) {
    const std::string first = read_file(a / name);
    CHECK(first == read_file(b / name));
    CHECK(first == read_file(c / name));
  }
}

TEST_CASE("cluster: manual mass and ddcrp modes") {
  const fs::path input = write_blobs_csv();
  const fs::path manual = fresh_dir("manual");
  CHECK(run("cluster --input " + input.string() + " --label class --mass 1.0 --samples 100" +
                " --seed 3 --out-dir " + manual.string(),
            "manual") == 0);
  // Manual mode: diagnostics holds exactly the one evaluated mass.
  const std::string diag = read_file(manual / "diagnostics.csv");
  CHECK(diag.rfind("alpha,k,avg_silhouette,expected_loss\n1,", 0) == 0);
  CHECK(std::count(diag.begin(), diag.end(), '\n') == 2);

  const fs::path dd = fresh_dir("ddcrp");
  CHECK(run("cluster --input " + input.string() + " --label class --distribution ddcrp" +
                " --mass 1.0 --samples 100 --seed 3 --out-dir " + dd.string(),
            "ddcrp") == 0);
  CHECK(read_file(kWork / "ddcrp.txt").find("EXPERIMENTAL") != std::string::npos);
  CHECK(fs::exists(dd / "partition.csv"));

  // ddcrp without --mass is a usage error.
  CHECK(run("cluster --input " + input.string() + " --label class --distribution ddcrp" +
                " --out-dir " + fresh_dir("ddcrp_bad").string(),
            "ddcrp_bad") == 2);
}

TEST_CASE("baseline: hclust writes a dendrogram, pam selects k") {
  const fs::path input = write_blobs_csv();
  const fs::path hc = fresh_dir("baseline_hclust");
  CHECK(run("baseline --input " + input.string() + " --label class --method hclust" +
                " --linkage ward --k 2 --out-dir " + hc.string(),
            "baseline_hclust") == 0);
  CHECK(read_partition(hc / "partition.csv").labels() == std::vector<int>{0, 0, 0, 1, 1, 1});
  const std::string dendro = read_file(hc / "dendrogram.csv");
  CHECK(std::count(dendro.begin(), dendro.end(), '\n') == 5);  // n-1 merges, no header

  const fs::path pm = fresh_dir("baseline_pam");
  CHECK(run("baseline --input " + input.string() + " --label class --method pam" +
                " --krange 2:5 --out-dir " + pm.string(),
            "baseline_pam") == 0);
  CHECK(read_partition(pm / "partition.csv").num_clusters() == 2);
}

TEST_CASE("compare: one row per method plus text table") {
  const fs::path input = write_blobs_csv();
  const fs::path out = fresh_dir("compare");
  CHECK(run("compare --input " + input.string() + " --label class --range 2:3" +
                " --samples 150 --seed 5 --out-dir " + out.string(),
            "compare") == 0);

  const std::string report = read_file(out / "report.csv");
  CHECK(std::count(report.begin(), report.end(), '\n') == 6);  // header + 5 methods
  for (const char* m : {"caviarpd", "pam", "hclust-average", "hclust-complete", "hclust-ward"})
    CHECK(report.find(std::string("\n") + m + ",") != std::string::npos);

  const std::string table = read_file(out / "report.txt");
  CHECK(table.rfind("method", 0) == 0);
  CHECK(table.find("binder") != std::string::npos);

  for (const char* p : {"caviarpd_", "pam_", "hclust_average_", "hclust_complete_", "hclust_ward_"})
    CHECK(fs::exists(out / (std::string(p) + "partition.csv")));

  // Restricting --methods shrinks the table.
  const fs::path solo = fresh_dir("compare_solo");
  CHECK(run("compare --input " + input.string() + " --label class --methods pam --out-dir " +
                solo.string(),
            "compare_solo") == 0);
  const std::string solo_report = read_file(solo / "report.csv");
  CHECK(std::count(solo_report.begin(), solo_report.end(), '\n') == 2);
}

TEST_CASE("exit codes: usage (2), data (3), numerical (4)") {
  // Label-free numeric input: ingest succeeds, so later stages surface errors.
  std::ofstream numeric(kWork / "numeric.csv");
  numeric << "x,y\n0,0\n0.1,0\n0.2,0.1\n5,5\n5.1,5\n5.2,5.1\n";
  numeric.close();
  const fs::path out = fresh_dir("codes");
  const std::string in_out =
      " --input " + (kWork / "numeric.csv").string() + " --out-dir " + out.string();

  // Usage errors.
  CHECK(run("", "no_subcommand") == 2);
  CHECK(run("cluster" + in_out + " --no-such-flag", "unknown_flag") == 2);
  CHECK(run("cluster" + in_out + " --range five", "bad_range") == 2);
  CHECK(run("cluster" + in_out + " --range 2:", "bad_range2") == 2);
  CHECK(run("cluster" + in_out + " --distance hamming", "bad_distance") == 2);
  CHECK(run("baseline" + in_out, "baseline_no_method") == 2);

  // Reciprocal similarity rejects duplicate rows (zero distances).
  std::ofstream dup(kWork / "dup.csv");
  dup << "x\n1\n1\n2\n3\n";
  dup.close();
  CHECK(run("cluster --input " + (kWork / "dup.csv").string() + " --similarity reciprocal" +
                " --mass 1 --out-dir " + out.string(),
            "dup_reciprocal") == 2);

  // Data errors.
  CHECK(run("cluster --input /nonexistent.csv --out-dir " + out.string(), "no_file") == 3);
  CHECK(run("cluster" + in_out + " --label species", "no_label") == 3);
  CHECK(run("compare" + in_out, "compare_no_label") == 3);
  std::ofstream ragged(kWork / "ragged.csv");
  ragged << "a,b\n1,2\n3\n";
  ragged.close();
  CHECK(run("cluster --input " + (kWork / "ragged.csv").string() + " --out-dir " + out.string(),
            "ragged") == 3);

  // Numerical failure: with n = 2 every grid estimate's silhouette is
  // undefined, so mass selection cannot pick a point.
  std::ofstream tiny(kWork / "tiny.csv");
  tiny << "x\n0\n10\n";
  tiny.close();
  CHECK(run("cluster --input " + (kWork / "tiny.csv").string() + " --range 2:2 --samples 50" +
                " --out-dir " + out.string(),
            "tiny") == 4);
}
