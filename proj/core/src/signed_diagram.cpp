#include "steinberg/signed_diagram.hpp"

#include <algorithm>
#include <functional>

#include "steinberg/errors.hpp"

namespace steinberg {

namespace {

int plus_in_prefix(char start, int t) {
  return start == '+' ? (t + 1) / 2 : t / 2;
}

std::pair<int, int> counts_at(const SignedYoungDiagram& d, int k) {
  int plus = 0;
  int minus = 0;
  for (const auto& row : d.rows()) {
    const int t = std::min(row.length, k);
    const int p = plus_in_prefix(row.start, t);
    plus += p;
    minus += t - p;
  }
  return {plus, minus};
}

}  // namespace

char SignedRow::sign_at(int i) const {
  const bool even = i % 2 == 0;
  return even == (start == '+') ? '+' : '-';
}

int SignedRow::plus_count() const { return plus_in_prefix(start, length); }

int SignedRow::minus_count() const { return length - plus_count(); }

std::string SignedRow::to_string() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) out.push_back(sign_at(i));
  return out;
}

SignedYoungDiagram::SignedYoungDiagram(std::vector<SignedRow> rows)
    : rows_(std::move(rows)) {
  int plus = 0;
  int minus = 0;
  for (const auto& row : rows_) {
    if (row.length <= 0) throw DomainError("signed rows must have positive length");
    if (row.start != '+' && row.start != '-') {
      throw DomainError("signed rows must start with '+' or '-'");
    }
    plus += row.plus_count();
    minus += row.minus_count();
  }
  if (plus != minus) {
    throw DomainError("signed diagram must have as many '+' boxes as '-' boxes");
  }
  std::sort(rows_.begin(), rows_.end(), [](const SignedRow& a, const SignedRow& b) {
    if (a.length != b.length) return a.length > b.length;
    return a.start == '+' && b.start == '-';
  });
}

SignedYoungDiagram SignedYoungDiagram::from_strings(const std::vector<std::string>& rows) {
  std::vector<SignedRow> parsed;
  parsed.reserve(rows.size());
  for (const auto& s : rows) {
    if (s.empty()) throw DomainError("signed rows must be nonempty");
    SignedRow row{static_cast<int>(s.size()), s.front()};
    if (row.to_string() != s) {
      throw DomainError("signed row '" + s + "' must alternate between '+' and '-'");
    }
    parsed.push_back(row);
  }
  return SignedYoungDiagram(std::move(parsed));
}

int SignedYoungDiagram::n() const {
  int plus = 0;
  for (const auto& row : rows_) plus += row.plus_count();
  return plus;
}

int SignedYoungDiagram::num_cols() const {
  return rows_.empty() ? 0 : rows_.front().length;
}

Partition SignedYoungDiagram::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(row.length);
  return Partition(std::move(parts));
}

std::vector<std::string> SignedYoungDiagram::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row.to_string());
  return out;
}

std::vector<std::pair<int, int>> column_counts(const SignedYoungDiagram& d) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(d.num_cols()));
  for (int k = 1; k <= d.num_cols(); ++k) out.push_back(counts_at(d, k));
  return out;
}

SignedYoungDiagram signed_from_column_counts(
    const std::vector<std::pair<int, int>>& counts) {
  const int cols = static_cast<int>(counts.size());
  std::vector<int> plus_profile(static_cast<std::size_t>(cols) + 1, 0);
  std::vector<int> minus_profile(static_cast<std::size_t>(cols) + 1, 0);
  std::pair<int, int> prev{0, 0};
  for (int k = 1; k <= cols; ++k) {
    const auto& cur = counts[static_cast<std::size_t>(k - 1)];
    const int dplus = cur.first - prev.first;
    const int dminus = cur.second - prev.second;
    if (dplus < 0 || dminus < 0) {
      throw InconsistentCountsError("column counts must be nondecreasing");
    }
    const bool odd = k % 2 == 1;
    plus_profile[static_cast<std::size_t>(k)] = odd ? dplus : dminus;
    minus_profile[static_cast<std::size_t>(k)] = odd ? dminus : dplus;
    prev = cur;
  }
  for (int k = 2; k <= cols; ++k) {
    if (plus_profile[static_cast<std::size_t>(k)] > plus_profile[static_cast<std::size_t>(k - 1)] ||
        minus_profile[static_cast<std::size_t>(k)] > minus_profile[static_cast<std::size_t>(k - 1)]) {
      throw InconsistentCountsError("column counts do not describe a signed diagram");
    }
  }
  std::vector<SignedRow> rows;
  for (int k = 1; k <= cols; ++k) {
    const int plus_exact =
        plus_profile[static_cast<std::size_t>(k)] -
        (k < cols ? plus_profile[static_cast<std::size_t>(k + 1)] : 0);
    const int minus_exact =
        minus_profile[static_cast<std::size_t>(k)] -
        (k < cols ? minus_profile[static_cast<std::size_t>(k + 1)] : 0);
    for (int i = 0; i < plus_exact; ++i) rows.push_back({k, '+'});
    for (int i = 0; i < minus_exact; ++i) rows.push_back({k, '-'});
  }
  try {
    SignedYoungDiagram out(std::move(rows));
    if (column_counts(out) != counts) {
      throw InconsistentCountsError("column counts do not describe a signed diagram");
    }
    return out;
  } catch (const InconsistentCountsError&) {
    throw;
  } catch (const DomainError& e) {
    throw InconsistentCountsError(e.what());
  }
}

SignedYoungDiagram duplicate_signed(const Partition& lambda) {
  if (lambda.empty()) throw DomainError("duplication requires a nonempty partition");
  std::vector<SignedRow> rows;
  rows.reserve(2 * lambda.parts().size());
  for (int part : lambda.parts()) {
    rows.push_back({part, '+'});
    rows.push_back({part, '-'});
  }
  return SignedYoungDiagram(std::move(rows));
}

SignedYoungDiagram swapped_signs(const SignedYoungDiagram& d) {
  std::vector<SignedRow> rows = d.rows();
  for (auto& row : rows) row.start = row.start == '+' ? '-' : '+';
  return SignedYoungDiagram(std::move(rows));
}

std::pair<Partition, Partition> sign_prefix_partitions(const SignedYoungDiagram& d) {
  std::vector<int> plus;
  std::vector<int> minus;
  for (const auto& row : d.rows()) {
    const int t = row.length - 1;
    const int p = plus_in_prefix(row.start, t);
    if (p > 0) plus.push_back(p);
    if (t - p > 0) minus.push_back(t - p);
  }
  std::sort(plus.begin(), plus.end(), std::greater<>());
  std::sort(minus.begin(), minus.end(), std::greater<>());
  return {Partition(std::move(plus)), Partition(std::move(minus))};
}

bool square_zero_condition(const Partition& lambda) {
  const auto& parts = lambda.parts();
  const int m = static_cast<int>(parts.size());
  for (int i = 0; i + 1 < m; i += 2) {
    const int diff = parts[static_cast<std::size_t>(i)] - parts[static_cast<std::size_t>(i + 1)];
    if (diff != 0 && diff != 1) return false;
  }
  if (m % 2 == 1 && parts.back() != 1) return false;
  return true;
}

Partition square_jordan_type(const Partition& mu) {
  std::vector<int> parts;
  parts.reserve(2 * mu.parts().size());
  for (int part : mu.parts()) {
    if ((part + 1) / 2 > 0) parts.push_back((part + 1) / 2);
    if (part / 2 > 0) parts.push_back(part / 2);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

bool dominance_signed(const SignedYoungDiagram& a, const SignedYoungDiagram& b) {
  if (a.n() != b.n()) {
    throw DomainError("signed dominance requires diagrams of equal signature");
  }
  const int cols = std::max(a.num_cols(), b.num_cols());
  for (int k = 1; k <= cols; ++k) {
    const auto ca = counts_at(a, k);
    const auto cb = counts_at(b, k);
    if (ca.first < cb.first || ca.second < cb.second) return false;
  }
  return true;
}

}  // namespace steinberg
