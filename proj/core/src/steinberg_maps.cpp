#include "steinberg/steinberg_maps.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>

#include "steinberg/errors.hpp"
#include "steinberg/insertion.hpp"

namespace steinberg {

namespace {

bool is_column_strip(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return false;
  for (int r = 0; r < outer.num_rows(); ++r) {
    if (outer.row(r) - inner.row(r) > 1) return false;
  }
  return true;
}

void require_range(const Tableau& t, int n, const char* label) {
  const auto ents = t.entries();
  if (!ents.empty() && (ents.front() < 1 || ents.back() > n)) {
    throw DomainError(std::string(label) + " entries must lie in 1..n");
  }
}

void require_ascending_range(const std::vector<int>& values, int n, const char* label) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 1 || values[i] > n) {
      throw DomainError(std::string(label) + " values must lie in 1..n");
    }
    if (i > 0 && values[i] <= values[i - 1]) {
      throw DomainError(std::string(label) + " values must be strictly ascending");
    }
  }
}

}  // namespace

Triple::Triple(Tableau t1, Tableau t2, Partition nu)
    : t1_(std::move(t1)), t2_(std::move(t2)), nu_(std::move(nu)) {
  const int n = t1_.size();
  if (t2_.size() != n) throw DomainError("triple tableaux must have the same size");
  for (const Tableau* t : {&t1_, &t2_}) {
    const auto ents = t->entries();
    for (int i = 0; i < n; ++i) {
      if (ents[static_cast<std::size_t>(i)] != i + 1) {
        throw DomainError("triple tableaux must be standard on 1..n");
      }
    }
  }
  if (!is_column_strip(t1_.shape(), nu_) || !is_column_strip(t2_.shape(), nu_)) {
    throw DomainError("triple shapes must exceed nu by column strips");
  }
}

namespace {

struct TripleParts {
  Decomposition d;
  Tableau rs1;
  Tableau rs2;
  Tableau t1;
  Tableau t2;
};

TripleParts compute_triple_parts(const PartialPermutation& tau) {
  TripleParts p;
  p.d = decompose(tau);
  std::tie(p.rs1, p.rs2) = rs_pair(p.d.sigma);
  p.t1 = star(p.rs1, column_tableau(p.d.L));
  p.t2 = star(column_tableau(p.d.M), p.rs2);
  return p;
}

}  // namespace

std::pair<Partition, Partition> phi(const PartialPermutation& tau) {
  const TripleParts p = compute_triple_parts(tau);
  return {p.t1.shape(), p.t2.shape()};
}

Triple triple(const PartialPermutation& tau) {
  TripleParts p = compute_triple_parts(tau);
  return Triple(std::move(p.t1), std::move(p.t2), p.rs1.shape());
}

PartialPermutation triple_inverse(const Triple& t) {
  const Partition lambda = t.t1().shape();
  const Partition mu = t.t2().shape();
  const Partition& nu = t.nu();
  const Partition mu_conj = mu.conjugate();
  const Partition nu_conj = nu.conjugate();

  Tableau s1 = t.t1();
  std::vector<int> ells;
  for (int r = lambda.num_rows() - 1; r >= 0; --r) {
    if (lambda.row(r) == nu.row(r)) continue;
    auto [shrunk, value] = reverse_row_insert(s1, r, lambda.row(r) - 1);
    s1 = std::move(shrunk);
    if (!ells.empty() && value <= ells.back()) {
      throw NotInImageError("popped column values must increase");
    }
    ells.push_back(value);
  }

  Tableau s2t = t.t2().transposed();
  std::vector<std::pair<int, int>> strip;
  for (int r = 0; r < mu_conj.num_rows(); ++r) {
    for (int c = nu_conj.row(r); c < mu_conj.row(r); ++c) strip.emplace_back(r, c);
  }
  std::sort(strip.begin(), strip.end(),
            [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<int> ms;
  for (const auto& [r, c] : strip) {
    auto [shrunk, value] = reverse_row_insert(s2t, r, c);
    s2t = std::move(shrunk);
    if (!ms.empty() && value >= ms.back()) {
      throw NotInImageError("popped kernel values must decrease");
    }
    ms.push_back(value);
  }
  const Tableau s2 = s2t.transposed();

  if (s1.shape() != nu || s2.shape() != nu) {
    throw NotInImageError("residual tableaux do not have shape nu");
  }
  const Bijection sigma = rs_inverse(s1, s2);
  std::vector<int> word(static_cast<std::size_t>(t.n()), 0);
  for (const auto& [j, i] : sigma.pairs()) word[static_cast<std::size_t>(j - 1)] = i;
  return PartialPermutation(t.n(), std::move(word));
}

std::pair<Partition, Partition> xi_k_generic(const PartialPermutation& tau) {
  return phi(tau);
}

namespace {

struct TriangleInputs {
  int s = 0;
};

TriangleInputs validate_triangle_inputs(const Tableau& t1, const Tableau& t2,
                                        const std::vector<int>& ells,
                                        const std::vector<int>& ms, int n) {
  if (t1.shape() != t2.shape()) {
    throw DomainError("triangle tableaux must have the same shape");
  }
  if (ells.size() != ms.size()) {
    throw DomainError("triangle needs as many column values as kernel values");
  }
  require_range(t1, n, "first tableau");
  require_range(t2, n, "second tableau");
  require_ascending_range(ells, n, "column");
  require_ascending_range(ms, n, "kernel");
  for (int e : ells) {
    if (t1.has_entry(e)) throw DomainError("column values must avoid the first tableau");
  }
  for (int m : ms) {
    if (t2.has_entry(m)) throw DomainError("kernel values must avoid the second tableau");
  }
  return {static_cast<int>(ells.size())};
}

struct GrowResult {
  Tableau t1_hat;
  Tableau t2_hat;
  Tableau t2_bar;
};

GrowResult grow_tableaux(const Tableau& t1, const Tableau& t2, const std::vector<int>& ells,
                         const std::vector<int>& ms, int n) {
  const int s = static_cast<int>(ells.size());
  GrowResult g;
  g.t1_hat = t1;
  std::vector<std::pair<int, int>> strip;
  for (int idx = s - 1; idx >= 0; --idx) {
    InsertionResult res = row_insert_traced(g.t1_hat, ells[static_cast<std::size_t>(idx)]);
    g.t1_hat = std::move(res.tableau);
    if (!strip.empty() && res.row <= strip.back().first) {
      throw InternalError("descending insertions must create boxes in descending rows");
    }
    strip.emplace_back(res.row, res.col);
  }
  auto rows = t2.rows();
  for (int t = 1; t <= s; ++t) {
    const auto [r, c] = strip[static_cast<std::size_t>(t - 1)];
    if (r == static_cast<int>(rows.size())) rows.emplace_back();
    if (c != static_cast<int>(rows[static_cast<std::size_t>(r)].size())) {
      throw InternalError("strip box is not addable to the padded tableau");
    }
    rows[static_cast<std::size_t>(r)].push_back(n + t);
  }
  g.t2_hat = Tableau(std::move(rows));
  g.t2_bar = g.t2_hat;
  for (int m : ms) g.t2_bar = column_insert(m, g.t2_bar);
  return g;
}

class ReverseSlider {
 public:
  ReverseSlider(const Tableau& start, const Partition& target)
      : target_(target),
        num_rows_(target.num_rows()),
        outer_(static_cast<std::size_t>(target.num_rows()), 0),
        inner_(static_cast<std::size_t>(target.num_rows()), 0),
        cells_(static_cast<std::size_t>(target.num_rows())) {
    for (int r = 0; r < num_rows_; ++r) {
      cells_[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(target.row(r)), 0);
    }
    const auto& rows = start.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      outer_[r] = static_cast<int>(rows[r].size());
      std::copy(rows[r].begin(), rows[r].end(), cells_[r].begin());
    }
  }

  bool lift(int slides_needed) { return search(0, slides_needed); }

  SkewTableau result() const {
    std::vector<int> inner_parts;
    for (int r = 0; r < num_rows_ && inner_[static_cast<std::size_t>(r)] > 0; ++r) {
      inner_parts.push_back(1);
    }
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(num_rows_));
    for (int r = 0; r < num_rows_; ++r) {
      const auto& src = cells_[static_cast<std::size_t>(r)];
      rows[static_cast<std::size_t>(r)].assign(
          src.begin() + inner_[static_cast<std::size_t>(r)],
          src.begin() + outer_[static_cast<std::size_t>(r)]);
    }
    return SkewTableau(target_, Partition(std::move(inner_parts)), std::move(rows));
  }

 private:
  bool search(int done, int total) {
    if (done == total) return true;
    for (int r = 0; r < num_rows_; ++r) {
      const int len = outer_[static_cast<std::size_t>(r)];
      if (len >= target_.row(r)) continue;
      if (r > 0 && outer_[static_cast<std::size_t>(r - 1)] <= len) continue;
      const auto saved_outer = outer_;
      const auto saved_cells = cells_;
      const auto end = slide_from(r);
      if (end.first == done && end.second == 0) {
        inner_[static_cast<std::size_t>(done)] = 1;
        if (search(done + 1, total)) return true;
        inner_[static_cast<std::size_t>(done)] = 0;
      }
      outer_ = saved_outer;
      cells_ = saved_cells;
    }
    return false;
  }

  std::pair<int, int> slide_from(int add_row) {
    int hr = add_row;
    int hc = outer_[static_cast<std::size_t>(add_row)];
    ++outer_[static_cast<std::size_t>(add_row)];
    for (;;) {
      const bool left = hc - 1 >= inner_[static_cast<std::size_t>(hr)];
      const bool above = hr > 0 && hc >= inner_[static_cast<std::size_t>(hr - 1)] &&
                         hc < outer_[static_cast<std::size_t>(hr - 1)];
      if (!left && !above) break;
      const bool take_above =
          above && (!left || cell(hr - 1, hc) > cell(hr, hc - 1));
      if (take_above) {
        cell(hr, hc) = cell(hr - 1, hc);
        --hr;
      } else {
        cell(hr, hc) = cell(hr, hc - 1);
        --hc;
      }
    }
    return {hr, hc};
  }

  int& cell(int r, int c) {
    return cells_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }

  Partition target_;
  int num_rows_;
  std::vector<int> outer_;
  std::vector<int> inner_;
  std::vector<std::vector<int>> cells_;
};

}  // namespace

SkewTableau triangle(const Tableau& t1, const Tableau& t2, const std::vector<int>& ells,
                     const std::vector<int>& ms, int n) {
  const auto inputs = validate_triangle_inputs(t1, t2, ells, ms, n);
  if (inputs.s == 0) return as_skew(t1);
  const GrowResult g = grow_tableaux(t1, t2, ells, ms, n);
  const Partition target = g.t2_bar.shape();
  if (!target.contains(g.t1_hat.shape()) ||
      target.size() - g.t1_hat.size() != inputs.s) {
    throw InternalError("inserted shapes are inconsistent");
  }
  ReverseSlider slider(g.t1_hat, target);
  if (!slider.lift(inputs.s)) {
    throw InternalError("no skew filling of the target shape rectifies correctly");
  }
  SkewTableau out = slider.result();
  if (rectify(out) != g.t1_hat) {
    throw InternalError("lifted skew tableau fails to rectify back");
  }
  return out;
}

SkewTableau triangle_via_erasure(const Tableau& t1, const Tableau& t2,
                                 const std::vector<int>& ells, const std::vector<int>& ms,
                                 int n) {
  const auto inputs = validate_triangle_inputs(t1, t2, ells, ms, n);
  const int s = inputs.s;
  const Bijection w = rs_inverse(t1, t2);
  std::vector<std::pair<int, int>> pairs = w.pairs();
  for (int t = 1; t <= s; ++t) {
    pairs.emplace_back(ms[static_cast<std::size_t>(t - 1)], -t);
    pairs.emplace_back(n + t, ells[static_cast<std::size_t>(s - t)]);
  }
  const Tableau p = rs_pair(Bijection(std::move(pairs))).first;
  auto rows = p.rows();
  if (static_cast<int>(rows.size()) < s) {
    throw InternalError("erased entries exceed the first column");
  }
  std::vector<std::vector<int>> kept(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(r) < s) {
      if (rows[r].front() != static_cast<int>(r) - s) {
        throw InternalError("erased entries must fill the top of the first column");
      }
      kept[r].assign(rows[r].begin() + 1, rows[r].end());
    } else {
      kept[r] = rows[r];
    }
  }
  const Partition inner =
      s > 0 ? Partition(std::vector<int>(static_cast<std::size_t>(s), 1)) : Partition();
  return SkewTableau(p.shape(), inner, std::move(kept));
}

SignedYoungDiagram xi_s_generic(const PartialPermutation& tau) {
  const TripleParts p = compute_triple_parts(tau);
  const int n = tau.n();
  const int s = static_cast<int>(p.d.M.size());
  const SkewTableau tri = triangle(p.rs1, p.rs2, p.d.L, p.d.M, n);
  const Partition lambda = p.t1.shape();
  const Partition mu = p.t2.shape();
  const Partition nu = p.rs1.shape();
  std::vector<std::pair<int, int>> counts;
  for (int k = 1; k <= 2 * n + 1; ++k) {
    const bool odd = k % 2 == 1;
    const int cp = odd ? tri.boxes_in_first_columns(k) : lambda.boxes_in_first_columns(k);
    const int cm = odd ? s + nu.boxes_in_first_columns(k) : mu.boxes_in_first_columns(k);
    counts.emplace_back(cp, cm);
    if (cp == n && cm == n) {
      try {
        return signed_from_column_counts(counts);
      } catch (const InconsistentCountsError& e) {
        throw InternalError(std::string("assembled column counts are inconsistent: ") +
                            e.what());
      }
    }
  }
  throw InternalError("column counts failed to saturate");
}

namespace {

void collect_nus(const Partition& lambda, const Partition& mu, int row, int prev,
                 std::vector<int>& parts, std::vector<Partition>& out) {
  const int total_rows = std::max(lambda.num_rows(), mu.num_rows());
  if (row == total_rows) {
    std::vector<int> trimmed = parts;
    while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
    out.emplace_back(std::move(trimmed));
    return;
  }
  const int lo = std::max({lambda.row(row) - 1, mu.row(row) - 1, 0});
  const int hi = std::min({lambda.row(row), mu.row(row), prev});
  for (int v = hi; v >= lo; --v) {
    parts.push_back(v);
    collect_nus(lambda, mu, row + 1, v, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<Triple> fiber_enumeration(const Partition& lambda, const Partition& mu, int n) {
  if (lambda.size() != n || mu.size() != n) {
    throw DomainError("fiber shapes must both have size n");
  }
  std::vector<Partition> nus;
  std::vector<int> parts;
  collect_nus(lambda, mu, 0, n, parts, nus);
  const auto st1 = enumerate_standard_tableaux(lambda);
  const auto st2 = enumerate_standard_tableaux(mu);
  std::vector<Triple> out;
  out.reserve(nus.size() * st1.size() * st2.size());
  for (const auto& nu : nus) {
    for (const auto& a : st1) {
      for (const auto& b : st2) {
        out.emplace_back(a.tableau(), b.tableau(), nu);
      }
    }
  }
  return out;
}

}  // namespace steinberg
