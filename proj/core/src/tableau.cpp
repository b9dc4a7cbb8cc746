#include "steinberg/tableau.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "steinberg/errors.hpp"

namespace steinberg {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::set<int> seen;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) throw DomainError("tableau rows must be nonempty");
    if (r > 0 && row.size() > rows_[r - 1].size()) {
      throw DomainError("tableau row lengths must be nonincreasing");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!seen.insert(row[c]).second) {
        throw DomainError("tableau entries must be distinct, got duplicate " +
                          std::to_string(row[c]));
      }
      if (c > 0 && row[c] <= row[c - 1]) {
        throw DomainError("tableau rows must strictly increase");
      }
      if (r > 0 && row[c] <= rows_[r - 1][c]) {
        throw DomainError("tableau columns must strictly increase");
      }
    }
  }
}

int Tableau::size() const {
  int total = 0;
  for (const auto& row : rows_) total += static_cast<int>(row.size());
  return total;
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

int Tableau::at(int r, int c) const {
  return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
}

bool Tableau::has_entry(int value) const {
  for (const auto& row : rows_) {
    if (std::binary_search(row.begin(), row.end(), value)) return true;
  }
  return false;
}

std::vector<int> Tableau::entries() const {
  std::vector<int> out;
  for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
  std::sort(out.begin(), out.end());
  return out;
}

Tableau Tableau::transposed() const {
  std::vector<std::vector<int>> cols;
  if (!rows_.empty()) {
    cols.resize(rows_.front().size());
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
    }
  }
  return Tableau(std::move(cols));
}

Tableau column_tableau(const std::vector<int>& entries) {
  std::vector<std::vector<int>> rows;
  rows.reserve(entries.size());
  for (int e : entries) rows.push_back({e});
  return Tableau(std::move(rows));
}

StandardTableau::StandardTableau(Tableau t) : t_(std::move(t)) {
  const auto ents = t_.entries();
  for (std::size_t i = 0; i < ents.size(); ++i) {
    if (ents[i] != static_cast<int>(i) + 1) {
      throw DomainError("standard tableau entries must be exactly 1..n");
    }
  }
}

SkewTableau::SkewTableau(Partition outer, Partition inner,
                         std::vector<std::vector<int>> rows)
    : outer_(std::move(outer)), inner_(std::move(inner)), rows_(std::move(rows)) {
  if (!outer_.contains(inner_)) throw DomainError("skew inner shape must fit inside outer");
  if (static_cast<int>(rows_.size()) != outer_.num_rows()) {
    throw DomainError("skew filling must have one row per outer row");
  }
  std::set<int> seen;
  for (int r = 0; r < outer_.num_rows(); ++r) {
    const auto& row = rows_[static_cast<std::size_t>(r)];
    if (static_cast<int>(row.size()) != outer_.row(r) - inner_.row(r)) {
      throw DomainError("skew row " + std::to_string(r) + " has the wrong number of entries");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!seen.insert(row[i]).second) throw DomainError("skew entries must be distinct");
      if (i > 0 && row[i] <= row[i - 1]) throw DomainError("skew rows must strictly increase");
    }
  }
  for (int r = 1; r < outer_.num_rows(); ++r) {
    for (int c = inner_.row(r); c < outer_.row(r); ++c) {
      if (in_region(r - 1, c) && at(r, c) <= at(r - 1, c)) {
        throw DomainError("skew columns must strictly increase");
      }
    }
  }
}

int SkewTableau::size() const {
  return outer_.size() - inner_.size();
}

int SkewTableau::at(int r, int c) const {
  return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - inner_.row(r))];
}

bool SkewTableau::in_region(int r, int c) const {
  return r >= 0 && r < outer_.num_rows() && c >= inner_.row(r) && c < outer_.row(r);
}

int SkewTableau::boxes_in_first_columns(int k) const {
  int total = 0;
  for (int r = 0; r < outer_.num_rows(); ++r) {
    total += std::max(0, std::min(outer_.row(r), k) - inner_.row(r));
  }
  return total;
}

SkewTableau as_skew(const Tableau& t) {
  return SkewTableau(t.shape(), Partition(), t.rows());
}

namespace {

void grow_standard(const Partition& shape, int next, int total,
                   std::vector<std::vector<int>>& acc,
                   std::vector<StandardTableau>& out) {
  if (next > total) {
    out.emplace_back(Tableau(acc));
    return;
  }
  for (int r = 0; r < shape.num_rows(); ++r) {
    const auto filled = static_cast<int>(acc[static_cast<std::size_t>(r)].size());
    if (filled >= shape.row(r)) continue;
    if (r > 0 && static_cast<int>(acc[static_cast<std::size_t>(r - 1)].size()) <= filled) continue;
    acc[static_cast<std::size_t>(r)].push_back(next);
    grow_standard(shape, next + 1, total, acc, out);
    acc[static_cast<std::size_t>(r)].pop_back();
  }
}

}  // namespace

std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& shape, int bound) {
  if (shape.size() > bound) {
    throw ResourceError("standard tableau enumeration limited to size " + std::to_string(bound));
  }
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> acc(static_cast<std::size_t>(shape.num_rows()));
  grow_standard(shape, 1, shape.size(), acc, out);
  return out;
}

}  // namespace steinberg
