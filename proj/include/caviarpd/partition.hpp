#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace caviarpd {

// A partition of items 0..n-1 stored as a cluster-label vector in canonical
// form: labels appear in first-occurrence order starting at 0, so the label
// of item 0 is always 0 and each new label is 1 + max of the labels seen so
// far. Immutable after construction.
class Partition {
 public:
  Partition() = default;  // empty placeholder; real instances come from the factories below

  // Validates canonical form; throws std::invalid_argument otherwise.
  static Partition from_canonical(std::vector<int> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  int num_clusters() const { return num_clusters_; }
  const std::vector<int>& labels() const { return labels_; }
  int operator[](int i) const { return labels_[static_cast<std::size_t>(i)]; }

  bool operator==(const Partition& other) const { return labels_ == other.labels_; }
  bool operator!=(const Partition& other) const { return labels_ != other.labels_; }

 private:
  Partition(std::vector<int> labels, int k) : labels_(std::move(labels)), num_clusters_(k) {}
  std::vector<int> labels_;
  int num_clusters_ = 0;

  template <typename Label>
  friend Partition canonicalize(const std::vector<Label>& raw);
};

// Relabels an arbitrary label sequence into canonical form, preserving the
// grouping. Idempotent on canonical input.
template <typename Label>
Partition canonicalize(const std::vector<Label>& raw) {
  if (raw.empty()) throw std::invalid_argument("empty partition");
  std::unordered_map<Label, int> seen;
  seen.reserve(raw.size());
  std::vector<int> labels;
  labels.reserve(raw.size());
  int next = 0;
  for (const Label& value : raw) {
    auto [it, inserted] = seen.try_emplace(value, next);
    if (inserted) ++next;
    labels.push_back(it->second);
  }
  return Partition(std::move(labels), next);
}

// n x n binary co-membership matrix: entries(i,j) = 1 iff items i and j share
// a cluster. Symmetric, all-ones diagonal, transitive.
struct AssociationMatrix {
  int n = 0;
  std::vector<std::uint8_t> entries;  // row-major n*n

  std::uint8_t operator()(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(j)];
  }
};

AssociationMatrix association_matrix(const Partition& p);

// counts[k] = number of items with label k; counts.size() = number of clusters.
std::vector<int> cluster_sizes(const Partition& p);

// CSV export/import: header `item_index,cluster_label`, one row per item,
// items indexed from 0.
void write_partition_csv(const Partition& p, std::ostream& out);
Partition read_partition_csv(std::istream& in);

}  // namespace caviarpd
