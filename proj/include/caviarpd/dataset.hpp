#pragma once

#include <optional>
#include <string>
#include <vector>

#include "caviarpd/distance.hpp"
#include "caviarpd/partition.hpp"

namespace caviarpd {

struct IngestOptions {
  std::string label_column;   // empty = no truth column
  bool drop_missing = false;  // otherwise: categorical missing is a level, numeric missing errors
  bool one_hot = false;       // expand categorical columns to 0/1 indicators (Jaccard mode)
};

struct Dataset {
  DataMatrix data;
  std::optional<Partition> truth;
  std::vector<std::string> truth_levels;  // label value per truth cluster
  int dropped_rows = 0;
  std::vector<std::string> warnings;
};

// Parses a header CSV into features + optional truth labels. Cells equal to
// "", "?", or "NA" count as missing. Columns whose non-missing cells all
// parse as numbers are numeric; the rest are categorical and require
// one_hot (levels become 0/1 indicator columns in sorted order, missing
// included as its own level when rows are kept).
Dataset ingest(const std::string& path, const IngestOptions& options);

}  // namespace caviarpd
