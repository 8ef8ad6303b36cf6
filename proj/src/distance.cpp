#include "caviarpd/distance.hpp"

#include <cmath>
#include <stdexcept>

#include "caviarpd/error.hpp"

namespace caviarpd {

DistanceMatrix DistanceMatrix::zeros(std::size_t n) {
  DistanceMatrix m;
  m.n = n;
  m.d.assign(n * n, 0.0);
  return m;
}

namespace {

void require_numeric(const DataMatrix& data, const char* op) {
  for (std::size_t j = 0; j < data.cols; ++j) {
    if (data.kinds[j] != ColumnKind::numeric) {
      throw std::invalid_argument(std::string(op) + ": all columns must be numeric");
    }
  }
}

}  // namespace

DataMatrix standardize(const DataMatrix& data, std::vector<std::string>* warnings) {
  require_numeric(data, "standardize");
  if (data.rows < 2) throw std::invalid_argument("cannot standardize fewer than 2 rows");
  DataMatrix out = data;
  const double n = static_cast<double>(data.rows);
  for (std::size_t j = 0; j < data.cols; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < data.rows; ++i) mean += data(i, j);
    mean /= n;
    double ss = 0.0;
    for (std::size_t i = 0; i < data.rows; ++i) {
      const double c = data(i, j) - mean;
      ss += c * c;
    }
    const double sd = std::sqrt(ss / (n - 1.0));
    if (sd == 0.0) {
      for (std::size_t i = 0; i < data.rows; ++i) out(i, j) = 0.0;
      if (warnings) {
        const std::string name = j < data.names.size() && !data.names[j].empty()
                                     ? data.names[j]
                                     : "column " + std::to_string(j);
        warnings->push_back("constant column '" + name + "' centered to 0");
      }
    } else {
      for (std::size_t i = 0; i < data.rows; ++i) out(i, j) = (data(i, j) - mean) / sd;
    }
  }
  return out;
}

DistanceMatrix euclidean_distances(const DataMatrix& data) {
  require_numeric(data, "euclidean_distances");
  for (double v : data.values) {
    if (!std::isfinite(v)) throw std::invalid_argument("euclidean_distances: non-finite value");
  }
  DistanceMatrix out = DistanceMatrix::zeros(data.rows);
  for (std::size_t i = 0; i < data.rows; ++i) {
    for (std::size_t j = i + 1; j < data.rows; ++j) {
      double ss = 0.0;
      for (std::size_t k = 0; k < data.cols; ++k) {
        const double diff = data(i, k) - data(j, k);
        ss += diff * diff;
      }
      out(i, j) = out(j, i) = std::sqrt(ss);
    }
  }
  return out;
}

DistanceMatrix jaccard_distances(const DataMatrix& data) {
  for (double v : data.values) {
    if (v != 0.0 && v != 1.0) throw std::invalid_argument("jaccard_distances: non-binary value");
  }
  DistanceMatrix out = DistanceMatrix::zeros(data.rows);
  for (std::size_t i = 0; i < data.rows; ++i) {
    for (std::size_t j = i + 1; j < data.rows; ++j) {
      std::size_t both = 0, either = 0;
      for (std::size_t k = 0; k < data.cols; ++k) {
        const bool a = data(i, k) != 0.0;
        const bool b = data(j, k) != 0.0;
        both += a && b;
        either += a || b;
      }
      out(i, j) = out(j, i) = either == 0 ? 0.0 : 1.0 - static_cast<double>(both) / static_cast<double>(either);
    }
  }
  return out;
}

}  // namespace caviarpd
