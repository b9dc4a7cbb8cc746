#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "steinberg/partition.hpp"

namespace steinberg {

// One row of boxes with alternating signs, determined by its length and the
// sign of the leftmost box.
struct SignedRow {
  int length = 0;
  char start = '+';

  char sign_at(int i) const;
  int plus_count() const;
  int minus_count() const;
  std::string to_string() const;

  bool operator==(const SignedRow&) const = default;
  auto operator<=>(const SignedRow&) const = default;
};

// A Young diagram whose boxes carry alternating signs along each row, kept in
// a standardized row order: lengths nonincreasing, and among rows of equal
// length those starting with '+' come first.  The total number of '+' boxes
// must equal the total number of '-' boxes.
class SignedYoungDiagram {
 public:
  SignedYoungDiagram() = default;
  explicit SignedYoungDiagram(std::vector<SignedRow> rows);

  static SignedYoungDiagram from_strings(const std::vector<std::string>& rows);

  const std::vector<SignedRow>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  int n() const;
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_cols() const;
  Partition shape() const;
  std::vector<std::string> to_strings() const;

  bool operator==(const SignedYoungDiagram&) const = default;
  auto operator<=>(const SignedYoungDiagram&) const = default;

 private:
  std::vector<SignedRow> rows_;
};

// counts[k-1] = (number of '+' boxes, number of '-' boxes) within the first k
// columns; k runs from 1 to num_cols().
std::vector<std::pair<int, int>> column_counts(const SignedYoungDiagram& d);

// Reconstructs the unique signed diagram with the given cumulative column
// counts; throws InconsistentCountsError if no diagram realizes them.
SignedYoungDiagram signed_from_column_counts(
    const std::vector<std::pair<int, int>>& counts);

// Each part of lambda contributes two rows of that length, one per start sign.
SignedYoungDiagram duplicate_signed(const Partition& lambda);

// Returns the diagram with every row's start sign flipped.
SignedYoungDiagram swapped_signs(const SignedYoungDiagram& d);

// For each row, counts the '+' and '-' boxes among all but the last box;
// returns the two partitions formed by the nonzero counts.
std::pair<Partition, Partition> sign_prefix_partitions(const SignedYoungDiagram& d);

// Whether lambda is the Jordan type of the square of a nilpotent matrix, i.e.
// consecutive pairs differ by at most one and an unpaired final part equals 1.
bool square_zero_condition(const Partition& lambda);

// Jordan type of x^2 when x is nilpotent of Jordan type mu.
Partition square_jordan_type(const Partition& mu);

// Partial order on signed diagrams of equal signature: a precedes b when the
// cumulative column counts of a dominate those of b for both signs.
bool dominance_signed(const SignedYoungDiagram& a, const SignedYoungDiagram& b);

}  // namespace steinberg
