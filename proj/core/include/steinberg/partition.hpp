#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace steinberg {

// Nonincreasing sequence of positive integers, possibly empty, drawn as a
// Young diagram with parts[i] left-justified boxes in row i.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  [[nodiscard]] int size() const;
  [[nodiscard]] int num_rows() const { return static_cast<int>(parts_.size()); }
  [[nodiscard]] int num_cols() const { return parts_.empty() ? 0 : parts_.front(); }
  [[nodiscard]] int row(int i) const;  // 0-based; 0 beyond the last row

  [[nodiscard]] Partition conjugate() const;
  [[nodiscard]] bool contains(const Partition& inner) const;

  // Number of boxes in the first k columns.
  [[nodiscard]] int boxes_in_first_columns(int k) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

// Dominance order: a <= b iff a's cumulative column counts weakly exceed b's.
[[nodiscard]] bool dominance_partition(const Partition& a, const Partition& b);

// All partitions of n, lexicographically descending.
[[nodiscard]] std::vector<Partition> partitions_of(int n);

}  // namespace steinberg
