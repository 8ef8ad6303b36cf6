#include "caviarpd/dataset.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include "caviarpd/error.hpp"

namespace caviarpd {

namespace {

bool is_missing(const std::string& s) { return s.empty() || s == "?" || s == "NA"; }

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(trim(field));
      field.clear();
    } else {
      field += c;
    }
  }
  out.push_back(trim(field));
  return out;
}

bool parse_number(const std::string& s, double* out) {
  const char* begin = s.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') return false;
  *out = v;
  return true;
}

}  // namespace

Dataset ingest(const std::string& path, const IngestOptions& options) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open input file: " + path);

  std::string line;
  if (!std::getline(in, line)) throw DataError("empty input file: " + path);
  const std::vector<std::string> header = split_csv_line(line);
  const std::size_t m = header.size();

  std::size_t label_idx = m;
  if (!options.label_column.empty()) {
    for (std::size_t j = 0; j < m; ++j) {
      if (header[j] == options.label_column) label_idx = j;
    }
    if (label_idx == m) throw DataError("label column not found: " + options.label_column);
  }

  std::vector<std::vector<std::string>> rows;
  Dataset out;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != m) {
      throw DataError("cannot parse line " + std::to_string(line_no) + ": expected " +
                      std::to_string(m) + " fields, got " + std::to_string(cells.size()));
    }
    if (options.drop_missing && std::any_of(cells.begin(), cells.end(), is_missing)) {
      ++out.dropped_rows;
      continue;
    }
    rows.push_back(std::move(cells));
  }
  if (out.dropped_rows > 0) {
    out.warnings.push_back("dropped " + std::to_string(out.dropped_rows) +
                           " rows with missing values");
  }
  const std::size_t n = rows.size();
  if (n == 0) throw DataError("no data rows in input file: " + path);

  // A column is numeric when every non-missing cell parses as a number.
  std::vector<bool> numeric(m, false);
  for (std::size_t j = 0; j < m; ++j) {
    if (j == label_idx) continue;
    bool all = true, any = false;
    double v;
    for (const auto& row : rows) {
      if (is_missing(row[j])) continue;
      any = true;
      if (!parse_number(row[j], &v)) {
        all = false;
        break;
      }
    }
    numeric[j] = all && any;
  }

  DataMatrix& data = out.data;
  data.rows = n;
  std::vector<std::size_t> col_start(m, 0);
  std::vector<std::map<std::string, std::size_t>> level_of(m);
  for (std::size_t j = 0; j < m; ++j) {
    if (j == label_idx) continue;
    col_start[j] = data.kinds.size();
    if (numeric[j]) {
      data.kinds.push_back(ColumnKind::numeric);
      data.names.push_back(header[j]);
    } else {
      if (!options.one_hot) {
        throw DataError("column '" + header[j] +
                        "' is not numeric; use Jaccard mode to one-hot encode it");
      }
      std::set<std::string> levels;
      for (const auto& row : rows) levels.insert(row[j]);
      for (const std::string& level : levels) {  // std::set iterates in sorted order
        level_of[j][level] = data.kinds.size();
        data.kinds.push_back(ColumnKind::binary);
        data.names.push_back(header[j] + "=" + level);
      }
    }
  }
  data.cols = data.kinds.size();
  data.values.assign(n * data.cols, 0.0);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (j == label_idx) continue;
      if (numeric[j]) {
        if (is_missing(rows[i][j])) {
          throw DataError("missing value in numeric column '" + header[j] + "', data row " +
                          std::to_string(i + 1) + " (enable row dropping)");
        }
        parse_number(rows[i][j], &data(i, col_start[j]));
      } else {
        data(i, level_of[j].at(rows[i][j])) = 1.0;
      }
    }
  }

  if (label_idx < m) {
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = rows[i][label_idx];
    out.truth = canonicalize(labels);
    out.truth_levels.assign(out.truth->num_clusters(), "");
    for (std::size_t i = 0; i < n; ++i) out.truth_levels[(*out.truth)[static_cast<int>(i)]] = labels[i];
  }
  return out;
}

}  // namespace caviarpd
