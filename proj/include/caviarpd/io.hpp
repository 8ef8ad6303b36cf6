#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "caviarpd/mass.hpp"
#include "caviarpd/psm.hpp"

namespace caviarpd {

// One method's result row; losses are present only when truth labels were.
struct ReportRow {
  std::string method;
  int k = 0;
  std::optional<double> binder;
  std::optional<double> vi_nats;
  std::optional<double> vi_bits;
  double runtime_s = 0.0;
  std::uint64_t seed = 0;
};

// Full-precision `i,j,psm` rows over i <= j; exact round-trip.
void write_psm_csv(const PairwiseSimilarityMatrix& psm, const std::string& path);
PairwiseSimilarityMatrix read_psm_csv(const std::string& path);

// `alpha,k,avg_silhouette,expected_loss`; undefined silhouettes print as nan.
void write_diagnostics_csv(const std::vector<GridPoint>& grid, const std::string& path);

// `method,k,binder,vi_nats,vi_bits,runtime_s,seed`; absent losses are empty.
void write_report_csv(const std::vector<ReportRow>& rows, const std::string& path);

// Aligned text table with two-decimal losses for terminal display.
std::string format_report_table(const std::vector<ReportRow>& rows);

}  // namespace caviarpd
