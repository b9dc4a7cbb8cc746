#pragma once

#include <utility>
#include <vector>

namespace steinberg {

// A bijection between two finite sets of integers, stored as (source, target)
// pairs sorted by source.
class Bijection {
 public:
  Bijection() = default;
  explicit Bijection(std::vector<std::pair<int, int>> pairs);

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  int size() const { return static_cast<int>(pairs_.size()); }

  std::vector<int> sources() const;
  std::vector<int> targets() const;

  bool has_source(int source) const;
  int target_of(int source) const;

  Bijection inverse() const;
  bool is_permutation() const;

  bool operator==(const Bijection&) const = default;

 private:
  std::vector<std::pair<int, int>> pairs_;
};

}  // namespace steinberg
