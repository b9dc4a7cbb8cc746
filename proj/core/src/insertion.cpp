#include "steinberg/insertion.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "steinberg/errors.hpp"

namespace steinberg {

InsertionResult row_insert_traced(const Tableau& t, int a) {
  if (t.has_entry(a)) {
    throw DomainError("cannot insert " + std::to_string(a) + ": already an entry");
  }
  auto rows = t.rows();
  int x = a;
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({x});
      return {Tableau(std::move(rows)), static_cast<int>(r), 0};
    }
    auto& row = rows[r];
    const auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      const int col = static_cast<int>(row.size()) - 1;
      return {Tableau(std::move(rows)), static_cast<int>(r), col};
    }
    std::swap(x, *it);
  }
}

Tableau row_insert(const Tableau& t, int a) { return row_insert_traced(t, a).tableau; }

Tableau column_insert(int a, const Tableau& t) {
  return row_insert(t.transposed(), a).transposed();
}

std::pair<Tableau, Tableau> rs_pair(const Bijection& w) {
  Tableau p;
  std::vector<std::vector<int>> q_rows;
  for (const auto& [source, target] : w.pairs()) {
    InsertionResult step = row_insert_traced(p, target);
    p = std::move(step.tableau);
    if (step.row == static_cast<int>(q_rows.size())) q_rows.emplace_back();
    q_rows[static_cast<std::size_t>(step.row)].push_back(source);
  }
  return {std::move(p), Tableau(std::move(q_rows))};
}

std::pair<Tableau, int> reverse_row_insert(const Tableau& t, int row, int col) {
  const Partition shape = t.shape();
  if (row < 0 || row >= shape.num_rows() || col != shape.row(row) - 1 ||
      shape.row(row + 1) > col) {
    throw DomainError("reverse insertion must start at a removable corner");
  }
  auto rows = t.rows();
  int x = rows[static_cast<std::size_t>(row)].back();
  rows[static_cast<std::size_t>(row)].pop_back();
  if (rows[static_cast<std::size_t>(row)].empty()) rows.pop_back();
  for (int r = row - 1; r >= 0; --r) {
    auto& above = rows[static_cast<std::size_t>(r)];
    const auto it = std::lower_bound(above.begin(), above.end(), x);
    if (it == above.begin()) {
      throw DomainError("reverse insertion found no smaller entry to restore");
    }
    std::swap(x, *std::prev(it));
  }
  return {Tableau(std::move(rows)), x};
}

Bijection rs_inverse(const Tableau& p, const Tableau& q) {
  if (p.shape() != q.shape()) {
    throw DomainError("inverting insertion requires tableaux of equal shape");
  }
  Tableau work = p;
  auto q_rows = q.rows();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(p.size()));
  for (int remaining = p.size(); remaining > 0; --remaining) {
    int best_row = -1;
    for (std::size_t r = 0; r < q_rows.size(); ++r) {
      if (best_row < 0 || q_rows[r].back() > q_rows[static_cast<std::size_t>(best_row)].back()) {
        best_row = static_cast<int>(r);
      }
    }
    auto& q_row = q_rows[static_cast<std::size_t>(best_row)];
    const int source = q_row.back();
    const int col = static_cast<int>(q_row.size()) - 1;
    q_row.pop_back();
    if (q_row.empty()) q_rows.pop_back();
    auto [shrunk, target] = reverse_row_insert(work, best_row, col);
    work = std::move(shrunk);
    pairs.emplace_back(source, target);
  }
  return Bijection(std::move(pairs));
}

namespace {

Tableau run_slides(const SkewTableau& s, const InsideCornerChooser& choose) {
  const int nr = s.outer().num_rows();
  std::vector<int> outer(static_cast<std::size_t>(nr));
  std::vector<int> inner(static_cast<std::size_t>(nr));
  std::vector<std::vector<int>> cells(static_cast<std::size_t>(nr));
  int remaining = 0;
  for (int r = 0; r < nr; ++r) {
    outer[static_cast<std::size_t>(r)] = s.outer().row(r);
    inner[static_cast<std::size_t>(r)] = s.inner().row(r);
    remaining += s.inner().row(r);
    cells[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(s.outer().row(r)));
    for (int c = s.inner().row(r); c < s.outer().row(r); ++c) {
      cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = s.at(r, c);
    }
  }
  const auto cell = [&cells](int r, int c) -> int& {
    return cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  };
  while (remaining > 0) {
    std::vector<int> corner_rows;
    for (int r = 0; r < nr; ++r) {
      const int len = inner[static_cast<std::size_t>(r)];
      if (len > 0 && (r + 1 >= nr || inner[static_cast<std::size_t>(r + 1)] < len)) {
        corner_rows.push_back(r);
      }
    }
    const std::size_t pick = choose(corner_rows.size());
    if (pick >= corner_rows.size()) {
      throw InternalError("inside corner choice out of range");
    }
    int hr = corner_rows[pick];
    int hc = inner[static_cast<std::size_t>(hr)] - 1;
    const int start_row = hr;
    for (;;) {
      const bool right = hc + 1 < outer[static_cast<std::size_t>(hr)];
      const bool below = hr + 1 < nr && hc < outer[static_cast<std::size_t>(hr + 1)] &&
                         hc >= inner[static_cast<std::size_t>(hr + 1)];
      if (!right && !below) break;
      const bool move_below =
          below && (!right || cell(hr + 1, hc) < cell(hr, hc + 1));
      if (move_below) {
        cell(hr, hc) = cell(hr + 1, hc);
        ++hr;
      } else {
        cell(hr, hc) = cell(hr, hc + 1);
        ++hc;
      }
    }
    --outer[static_cast<std::size_t>(hr)];
    --inner[static_cast<std::size_t>(start_row)];
    --remaining;
  }
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < nr; ++r) {
    const int len = outer[static_cast<std::size_t>(r)];
    if (len == 0) break;
    const auto& src = cells[static_cast<std::size_t>(r)];
    rows.emplace_back(src.begin(), src.begin() + len);
  }
  return Tableau(std::move(rows));
}

}  // namespace

Tableau rectify(const SkewTableau& s, const InsideCornerChooser& choose) {
  return run_slides(s, choose);
}

Tableau rectify(const SkewTableau& s) {
  return run_slides(s, [](std::size_t count) { return count - 1; });
}

Tableau star(const Tableau& t, const Tableau& s) {
  for (int e : s.entries()) {
    if (t.has_entry(e)) {
      throw DomainError("star operands must have disjoint entries");
    }
  }
  const int width = t.empty() ? 0 : t.shape().row(0);
  const int k = s.num_rows();
  std::vector<int> outer_parts;
  outer_parts.reserve(static_cast<std::size_t>(k + t.num_rows()));
  for (int i = 0; i < k; ++i) outer_parts.push_back(width + s.shape().row(i));
  for (const auto& row : t.rows()) outer_parts.push_back(static_cast<int>(row.size()));
  Partition inner = width > 0 && k > 0
                        ? Partition(std::vector<int>(static_cast<std::size_t>(k), width))
                        : Partition();
  std::vector<std::vector<int>> rows = s.rows();
  for (const auto& row : t.rows()) rows.push_back(row);
  return rectify(SkewTableau(Partition(std::move(outer_parts)), std::move(inner),
                             std::move(rows)));
}

Partition steinberg_classical(const Bijection& w) {
  if (!w.is_permutation()) {
    throw DomainError("classical Steinberg map needs a full permutation of 1..n");
  }
  return rs_pair(w).first.shape();
}

}  // namespace steinberg
