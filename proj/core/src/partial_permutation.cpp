#include "steinberg/partial_permutation.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "steinberg/errors.hpp"

namespace steinberg {

PartialPermutation::PartialPermutation(int n, std::vector<int> word)
    : n_(n), word_(std::move(word)) {
  if (n < 0) throw DomainError("size must be nonnegative");
  if (static_cast<int>(word_.size()) != n) {
    throw DomainError("word must have exactly n entries");
  }
  std::set<int> seen;
  for (int value : word_) {
    if (value < 0 || value > n) {
      throw DomainError("word entries must lie in 0.." + std::to_string(n));
    }
    if (value != 0 && !seen.insert(value).second) {
      throw DomainError("nonzero word entries must be distinct");
    }
  }
}

PartialPermutation PartialPermutation::identity(int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) word[static_cast<std::size_t>(j - 1)] = j;
  return PartialPermutation(n, std::move(word));
}

PartialPermutation PartialPermutation::zero(int n) {
  return PartialPermutation(n, std::vector<int>(static_cast<std::size_t>(n), 0));
}

int PartialPermutation::image_of(int j) const {
  if (j < 1 || j > n_) throw DomainError("argument out of range");
  return word_[static_cast<std::size_t>(j - 1)];
}

int PartialPermutation::rank() const {
  int r = 0;
  for (int value : word_) r += value != 0 ? 1 : 0;
  return r;
}

PrimeFieldMatrix PartialPermutation::to_matrix(std::uint64_t prime) const {
  PrimeFieldMatrix m(n_, n_, prime);
  for (int j = 1; j <= n_; ++j) {
    const int i = word_[static_cast<std::size_t>(j - 1)];
    if (i != 0) m.set(i - 1, j - 1, 1);
  }
  return m;
}

Decomposition decompose(const PartialPermutation& tau) {
  Decomposition d;
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> hit(static_cast<std::size_t>(tau.n()) + 1, false);
  for (int j = 1; j <= tau.n(); ++j) {
    const int i = tau.image_of(j);
    if (i == 0) {
      d.M.push_back(j);
    } else {
      d.J.push_back(j);
      pairs.emplace_back(j, i);
      hit[static_cast<std::size_t>(i)] = true;
    }
  }
  for (int i = 1; i <= tau.n(); ++i) {
    if (hit[static_cast<std::size_t>(i)]) {
      d.I.push_back(i);
    } else {
      d.L.push_back(i);
    }
  }
  d.sigma = Bijection(std::move(pairs));
  return d;
}

PartialPermutation transpose(const PartialPermutation& tau) {
  std::vector<int> word(static_cast<std::size_t>(tau.n()), 0);
  for (int j = 1; j <= tau.n(); ++j) {
    const int i = tau.image_of(j);
    if (i != 0) word[static_cast<std::size_t>(i - 1)] = j;
  }
  return PartialPermutation(tau.n(), std::move(word));
}

namespace {

void fill_words(int n, int position, std::vector<int>& word, std::vector<bool>& used,
                std::vector<std::vector<PartialPermutation>>& by_rank, int rank) {
  if (position > n) {
    by_rank[static_cast<std::size_t>(rank)].emplace_back(n, word);
    return;
  }
  word[static_cast<std::size_t>(position - 1)] = 0;
  fill_words(n, position + 1, word, used, by_rank, rank);
  for (int target = 1; target <= n; ++target) {
    if (used[static_cast<std::size_t>(target)]) continue;
    used[static_cast<std::size_t>(target)] = true;
    word[static_cast<std::size_t>(position - 1)] = target;
    fill_words(n, position + 1, word, used, by_rank, rank + 1);
    word[static_cast<std::size_t>(position - 1)] = 0;
    used[static_cast<std::size_t>(target)] = false;
  }
}

}  // namespace

std::vector<PartialPermutation> enumerate_partial_permutations(int n, int bound) {
  if (n < 0) throw DomainError("size must be nonnegative");
  if (n > bound) {
    throw ResourceError("partial permutation enumeration limited to n <= " +
                        std::to_string(bound));
  }
  std::vector<std::vector<PartialPermutation>> by_rank(static_cast<std::size_t>(n) + 1);
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  fill_words(n, 1, word, used, by_rank, 0);
  std::vector<PartialPermutation> out;
  for (int r = n; r >= 0; --r) {
    auto& bucket = by_rank[static_cast<std::size_t>(r)];
    out.insert(out.end(), std::make_move_iterator(bucket.begin()),
               std::make_move_iterator(bucket.end()));
  }
  return out;
}

std::vector<std::vector<int>> rank_profile(const PrimeFieldMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("rank profile needs a square matrix");
  const int n = a.rows();
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      d[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          a.block(i - 1, 0, n - i + 1, j).rank();
    }
  }
  return d;
}

std::vector<int> canonicalize_rows_in_place(PrimeFieldMatrix& m, int row_begin, int row_end) {
  const int cols = m.cols();
  std::vector<int> word(static_cast<std::size_t>(cols), 0);
  std::vector<int> pivot_row_of(static_cast<std::size_t>(cols), -1);
  for (int j = 0; j < cols; ++j) {
    for (int k = 0; k < j; ++k) {
      const int pr = pivot_row_of[static_cast<std::size_t>(k)];
      if (pr < 0) continue;
      const std::uint64_t factor = m.at(pr, j);
      if (factor == 0) continue;
      for (int r = 0; r < m.rows(); ++r) {
        const std::uint64_t sub = factor * m.at(r, k) % m.prime();
        m.set(r, j, m.at(r, j) + m.prime() - sub);
      }
    }
    int pivot = -1;
    for (int r = row_end - 1; r >= row_begin; --r) {
      if (m.at(r, j) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    const std::uint64_t inv = m.inverse(m.at(pivot, j));
    for (int r = 0; r < m.rows(); ++r) m.set(r, j, m.at(r, j) * inv % m.prime());
    for (int u = row_begin; u < pivot; ++u) {
      const std::uint64_t factor = m.at(u, j);
      if (factor == 0) continue;
      for (int c = 0; c < cols; ++c) {
        const std::uint64_t sub = factor * m.at(pivot, c) % m.prime();
        m.set(u, c, m.at(u, c) + m.prime() - sub);
      }
    }
    pivot_row_of[static_cast<std::size_t>(j)] = pivot;
    word[static_cast<std::size_t>(j)] = pivot - row_begin + 1;
  }
  return word;
}

PartialPermutation canonicalize_matrix(const PrimeFieldMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("canonicalization needs a square matrix");
  PrimeFieldMatrix work = a;
  std::vector<int> word = canonicalize_rows_in_place(work, 0, a.rows());
  PartialPermutation tau(a.rows(), std::move(word));
  if (rank_profile(a) != rank_profile(tau.to_matrix(a.prime()))) {
    throw InternalError("canonical form changed the rank profile");
  }
  return tau;
}

std::pair<Bijection, Bijection> build_w1_w2(const PartialPermutation& tau) {
  const Decomposition d = decompose(tau);
  const int r = static_cast<int>(d.I.size());
  const int s = static_cast<int>(d.M.size());
  std::vector<std::pair<int, int>> w1;
  std::vector<std::pair<int, int>> w2;
  const Bijection sigma_inv = d.sigma.inverse();
  for (int k = 1; k <= r; ++k) {
    w1.emplace_back(k, d.sigma.target_of(d.J[static_cast<std::size_t>(k - 1)]));
    w2.emplace_back(s + k, sigma_inv.target_of(d.I[static_cast<std::size_t>(k - 1)]));
  }
  for (int t = 1; t <= s; ++t) {
    w1.emplace_back(r + t, d.L[static_cast<std::size_t>(s - t)]);
    w2.emplace_back(t, d.M[static_cast<std::size_t>(s - t)]);
  }
  return {Bijection(std::move(w1)), Bijection(std::move(w2))};
}

}  // namespace steinberg
