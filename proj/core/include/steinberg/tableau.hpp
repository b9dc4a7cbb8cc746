#pragma once

#include <compare>
#include <vector>

#include "steinberg/partition.hpp"

namespace steinberg {

// Filling of a Young diagram by pairwise-distinct integers (negatives allowed)
// that strictly increase along rows and down columns.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  [[nodiscard]] const std::vector<std::vector<int>>& rows() const { return rows_; }
  [[nodiscard]] bool empty() const { return rows_.empty(); }
  [[nodiscard]] int num_rows() const { return static_cast<int>(rows_.size()); }
  [[nodiscard]] int size() const;
  [[nodiscard]] Partition shape() const;
  [[nodiscard]] int at(int r, int c) const;
  [[nodiscard]] bool has_entry(int value) const;
  [[nodiscard]] std::vector<int> entries() const;  // sorted ascending
  [[nodiscard]] Tableau transposed() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend std::strong_ordering operator<=>(const Tableau& a, const Tableau& b) {
    return a.rows_ <=> b.rows_;
  }

 private:
  std::vector<std::vector<int>> rows_;
};

// A single column with the given entries, top to bottom; entries must ascend.
[[nodiscard]] Tableau column_tableau(const std::vector<int>& entries);

// A Tableau whose entry set is exactly {1, ..., size}.
class StandardTableau {
 public:
  explicit StandardTableau(Tableau t);

  [[nodiscard]] const Tableau& tableau() const { return t_; }
  operator const Tableau&() const { return t_; }

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

 private:
  Tableau t_;
};

// Filling of outer minus inner, strictly increasing along rows and columns of
// the skew region. Row i of `rows` holds the outer.row(i) - inner.row(i)
// entries at columns inner.row(i) .. outer.row(i)-1.
class SkewTableau {
 public:
  SkewTableau() = default;
  SkewTableau(Partition outer, Partition inner, std::vector<std::vector<int>> rows);

  [[nodiscard]] const Partition& outer() const { return outer_; }
  [[nodiscard]] const Partition& inner() const { return inner_; }
  [[nodiscard]] const std::vector<std::vector<int>>& rows() const { return rows_; }
  [[nodiscard]] int size() const;
  [[nodiscard]] int at(int r, int c) const;  // c is an absolute column index
  [[nodiscard]] bool in_region(int r, int c) const;
  [[nodiscard]] int boxes_in_first_columns(int k) const;

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;

 private:
  Partition outer_;
  Partition inner_;
  std::vector<std::vector<int>> rows_;
};

[[nodiscard]] SkewTableau as_skew(const Tableau& t);

// All standard tableaux of the given shape; guarded by `bound` on the size.
[[nodiscard]] std::vector<StandardTableau> enumerate_standard_tableaux(
    const Partition& shape, int bound = 10);

}  // namespace steinberg
