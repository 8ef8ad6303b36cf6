#include "caviarpd/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "caviarpd/error.hpp"

namespace caviarpd {

namespace {

std::string full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::FILE* open_for_write(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw DataError("cannot write file: " + path);
  return f;
}

}  // namespace

void write_psm_csv(const PairwiseSimilarityMatrix& psm, const std::string& path) {
  std::FILE* f = open_for_write(path);
  std::fprintf(f, "i,j,psm\n");
  for (std::size_t i = 0; i < psm.n; ++i)
    for (std::size_t j = i; j < psm.n; ++j)
      std::fprintf(f, "%zu,%zu,%s\n", i, j, full(psm(i, j)).c_str());
  std::fclose(f);
}

PairwiseSimilarityMatrix read_psm_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path);
  std::string line;
  if (!std::getline(in, line) || line != "i,j,psm")
    throw DataError("malformed psm file: " + path);

  std::vector<std::size_t> is, js;
  std::vector<double> vs;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t i, j;
    double v;
    if (std::sscanf(line.c_str(), "%zu,%zu,%lf", &i, &j, &v) != 3)
      throw DataError("malformed psm row: " + line);
    is.push_back(i);
    js.push_back(j);
    vs.push_back(v);
    n = std::max(n, std::max(i, j) + 1);
  }
  PairwiseSimilarityMatrix psm;
  psm.n = n;
  psm.p.assign(n * n, 0.0);
  for (std::size_t r = 0; r < vs.size(); ++r) {
    psm.p[is[r] * n + js[r]] = vs[r];
    psm.p[js[r] * n + is[r]] = vs[r];
  }
  return psm;
}

void write_diagnostics_csv(const std::vector<GridPoint>& grid, const std::string& path) {
  std::FILE* f = open_for_write(path);
  std::fprintf(f, "alpha,k,avg_silhouette,expected_loss\n");
  for (const GridPoint& pt : grid) {
    std::fprintf(f, "%s,%d,%s,%s\n", full(pt.mass).c_str(), pt.k, full(pt.silhouette).c_str(),
                 full(pt.expected_loss).c_str());
  }
  std::fclose(f);
}

void write_report_csv(const std::vector<ReportRow>& rows, const std::string& path) {
  std::FILE* f = open_for_write(path);
  std::fprintf(f, "method,k,binder,vi_nats,vi_bits,runtime_s,seed\n");
  for (const ReportRow& r : rows) {
    const auto opt = [](const std::optional<double>& v) { return v ? full(*v) : std::string(); };
    std::fprintf(f, "%s,%d,%s,%s,%s,%s,%llu\n", r.method.c_str(), r.k, opt(r.binder).c_str(),
                 opt(r.vi_nats).c_str(), opt(r.vi_bits).c_str(), full(r.runtime_s).c_str(),
                 static_cast<unsigned long long>(r.seed));
  }
  std::fclose(f);
}

std::string format_report_table(const std::vector<ReportRow>& rows) {
  const auto two = [](const std::optional<double>& v) {
    if (!v) return std::string("-");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", *v);
    return std::string(buf);
  };

  std::vector<std::vector<std::string>> cells;
  cells.push_back({"method", "K", "binder", "vi_nats", "vi_bits"});
  for (const ReportRow& r : rows) {
    cells.push_back(
        {r.method, std::to_string(r.k), two(r.binder), two(r.vi_nats), two(r.vi_bits)});
  }

  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) out << std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace caviarpd
