#include "steinberg/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "steinberg/errors.hpp"

namespace steinberg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw DomainError("partition parts must be positive, got " + std::to_string(parts_[i]));
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be nonincreasing");
    }
  }
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::row(int i) const {
  return (i >= 0 && i < num_rows()) ? parts_[static_cast<std::size_t>(i)] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  cols.reserve(static_cast<std::size_t>(num_cols()));
  for (int c = 0; c < num_cols(); ++c) {
    int len = 0;
    while (len < num_rows() && parts_[static_cast<std::size_t>(len)] > c) ++len;
    cols.push_back(len);
  }
  return Partition(std::move(cols));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.num_rows() > num_rows()) return false;
  for (int i = 0; i < inner.num_rows(); ++i) {
    if (inner.row(i) > row(i)) return false;
  }
  return true;
}

int Partition::boxes_in_first_columns(int k) const {
  int total = 0;
  for (int p : parts_) total += std::min(p, k);
  return total;
}

bool dominance_partition(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) {
    throw DomainError("dominance_partition requires partitions of equal size");
  }
  const int cols = std::max(a.num_cols(), b.num_cols());
  for (int k = 1; k <= cols; ++k) {
    if (a.boxes_in_first_columns(k) < b.boxes_in_first_columns(k)) return false;
  }
  return true;
}

namespace {

void collect_partitions(int remaining, int cap, std::vector<int>& acc,
                        std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = std::min(remaining, cap); p >= 1; --p) {
    acc.push_back(p);
    collect_partitions(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("partitions_of requires n >= 0");
  std::vector<Partition> out;
  std::vector<int> acc;
  collect_partitions(n, n == 0 ? 1 : n, acc, out);
  return out;
}

}  // namespace steinberg
