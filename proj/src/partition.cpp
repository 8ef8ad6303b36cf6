#include "caviarpd/partition.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "caviarpd/error.hpp"

namespace caviarpd {

Partition Partition::from_canonical(std::vector<int> labels) {
  if (labels.empty()) throw std::invalid_argument("empty partition");
  int next = 0;
  for (int label : labels) {
    if (label < 0 || label > next) throw std::invalid_argument("labels not in canonical form");
    if (label == next) ++next;
  }
  return Partition(std::move(labels), next);
}

AssociationMatrix association_matrix(const Partition& p) {
  const int n = p.size();
  AssociationMatrix gamma;
  gamma.n = n;
  gamma.entries.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (p[i] == p[j]) {
        gamma.entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(j)] = 1;
      }
    }
  }
  return gamma;
}

std::vector<int> cluster_sizes(const Partition& p) {
  std::vector<int> counts(static_cast<std::size_t>(p.num_clusters()), 0);
  for (int label : p.labels()) ++counts[static_cast<std::size_t>(label)];
  return counts;
}

void write_partition_csv(const Partition& p, std::ostream& out) {
  out << "item_index,cluster_label\n";
  for (int i = 0; i < p.size(); ++i) out << i << ',' << p[i] << '\n';
}

Partition read_partition_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("partition csv: empty file");
  std::vector<int> labels;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string index_field, label_field;
    if (!std::getline(ls, index_field, ',') || !std::getline(ls, label_field)) {
      throw DataError("partition csv: malformed row " + std::to_string(row));
    }
    std::size_t pos = 0;
    int index = std::stoi(index_field, &pos);
    if (index != static_cast<int>(labels.size())) {
      throw DataError("partition csv: unexpected item index at row " + std::to_string(row));
    }
    labels.push_back(std::stoi(label_field, &pos));
  }
  return Partition::from_canonical(std::move(labels));
}

}  // namespace caviarpd
