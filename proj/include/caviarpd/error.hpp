#pragma once

#include <stdexcept>
#include <string>

namespace caviarpd {

// Problems with user-provided data (files, columns, value domains).
struct DataError : std::runtime_error {
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical or search failures (unreachable targets, degenerate grids).
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace caviarpd
