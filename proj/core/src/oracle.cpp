#include "steinberg/oracle.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "steinberg/errors.hpp"

namespace steinberg {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic coefficient source keyed by seed, object encoding and trial.
class CoefficientStream {
 public:
  CoefficientStream(std::uint64_t seed, const std::vector<int>& encoding, int trial)
      : state_(seed) {
    absorb(static_cast<std::uint64_t>(encoding.size()));
    for (int v : encoding) absorb(static_cast<std::uint64_t>(v) + 1);
    absorb(static_cast<std::uint64_t>(trial));
  }

  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  void absorb(std::uint64_t v) { state_ = mix64(state_ + 0x9e3779b97f4a7c15ULL + v); }

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  std::uint64_t state_;
};

struct EchelonForm {
  PrimeFieldMatrix mat;
  std::vector<int> pivot_cols;
};

EchelonForm reduced_echelon(const PrimeFieldMatrix& a) {
  EchelonForm e{a, {}};
  PrimeFieldMatrix& m = e.mat;
  const std::uint64_t p = m.prime();
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = 0; c < m.cols(); ++c) {
        const std::uint64_t tmp = m.at(row, c);
        m.set(row, c, m.at(pivot, c));
        m.set(pivot, c, tmp);
      }
    }
    const std::uint64_t inv = m.inverse(m.at(row, col));
    for (int c = 0; c < m.cols(); ++c) m.set(row, c, m.at(row, c) * inv % p);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const std::uint64_t factor = m.at(r, col);
      for (int c = 0; c < m.cols(); ++c) {
        const std::uint64_t sub = factor * m.at(row, c) % p;
        m.set(r, c, m.at(r, c) + p - sub);
      }
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

PrimeFieldMatrix sample_from_basis(const FiberBasis& fiber, CoefficientStream& stream,
                                   std::uint64_t prime) {
  PrimeFieldMatrix out(fiber.ambientShape.first, fiber.ambientShape.second, prime);
  for (const auto& b : fiber.basisMatrices) {
    out = out.add(b.scaled(stream.next_below(prime)));
  }
  return out;
}

// Folds max over trials of rank(x^k) for k = 1..acc.size() into acc.
void accumulate_power_ranks(const PrimeFieldMatrix& x, std::vector<int>& acc) {
  if (acc.empty()) return;
  PrimeFieldMatrix power = x;
  for (std::size_t k = 0; k < acc.size(); ++k) {
    acc[k] = std::max(acc[k], power.rank());
    if (k + 1 < acc.size()) power = power.multiply(x);
  }
}

// Rebuilds a Jordan type from merged ranks of successive powers; empty when
// the merged sequence is not realizable by a single nilpotent matrix.
std::optional<Partition> jordan_from_rank_sequence(int n, const std::vector<int>& ranks) {
  std::vector<int> diffs;
  int prev = n;
  for (int r : ranks) {
    if (r > prev) return std::nullopt;
    diffs.push_back(prev - r);
    prev = r;
    if (r == 0) break;
  }
  if (prev != 0) return std::nullopt;
  for (std::size_t i = 1; i < diffs.size(); ++i) {
    if (diffs[i] > diffs[i - 1]) return std::nullopt;
  }
  while (!diffs.empty() && diffs.back() == 0) diffs.pop_back();
  return Partition(std::move(diffs)).conjugate();
}

std::vector<int> encode(int n, const std::vector<int>& word) {
  std::vector<int> out{n};
  out.insert(out.end(), word.begin(), word.end());
  return out;
}

}  // namespace

FiberBasis nullspace(const PrimeFieldMatrix& a) {
  const EchelonForm e = reduced_echelon(a);
  std::vector<int> pivot_row_of(static_cast<std::size_t>(a.cols()), -1);
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
    pivot_row_of[static_cast<std::size_t>(e.pivot_cols[k])] = static_cast<int>(k);
  }
  FiberBasis out;
  out.ambientShape = {a.cols(), 1};
  for (int col = 0; col < a.cols(); ++col) {
    if (pivot_row_of[static_cast<std::size_t>(col)] >= 0) continue;
    PrimeFieldMatrix v(a.cols(), 1, a.prime());
    v.set(col, 0, 1);
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
      const std::uint64_t entry = e.mat.at(static_cast<int>(k), col);
      if (entry != 0) v.set(e.pivot_cols[k], 0, a.prime() - entry);
    }
    for (int r = 0; r < a.cols(); ++r) {
      if (v.at(r, 0) != 0) {
        v = v.scaled(v.inverse(v.at(r, 0)));
        break;
      }
    }
    out.basisMatrices.push_back(std::move(v));
  }
  return out;
}

FiberBasis conormal_fiber_matrix_pair(const PartialPermutation& tau, std::uint64_t prime) {
  const int n = tau.n();
  std::vector<std::vector<bool>> forbidden(static_cast<std::size_t>(n),
                                           std::vector<bool>(static_cast<std::size_t>(n)));
  for (int j = 1; j <= n; ++j) {
    const int a = tau.image_of(j);
    if (a == 0) continue;
    for (int b = 1; b <= a; ++b) {
      forbidden[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(b - 1)] = true;
    }
    for (int row = j; row <= n; ++row) {
      forbidden[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(a - 1)] = true;
    }
  }
  FiberBasis out;
  out.ambientShape = {n, n};
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (forbidden[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) continue;
      PrimeFieldMatrix unit(n, n, prime);
      unit.set(u, v, 1);
      out.basisMatrices.push_back(std::move(unit));
    }
  }
  return out;
}

std::pair<std::set<std::pair<int, int>>, std::set<std::pair<int, int>>>
conormal_structural_sets(const PartialPermutation& tau) {
  const Decomposition d = decompose(tau);
  const int r = static_cast<int>(d.J.size());
  std::vector<int> images;
  images.reserve(d.J.size());
  for (int j : d.J) images.push_back(d.sigma.target_of(j));
  std::set<std::pair<int, int>> d1;
  std::set<std::pair<int, int>> d2;
  for (int i : images) {
    for (int l : d.L) {
      if (i < l) d1.insert({i, l});
    }
  }
  for (int m : d.M) {
    for (int j : d.J) {
      if (m < j) d2.insert({m, j});
    }
  }
  for (int k = 0; k < r; ++k) {
    for (int t = k + 1; t < r; ++t) {
      if (images[static_cast<std::size_t>(k)] < images[static_cast<std::size_t>(t)]) {
        d1.insert({images[static_cast<std::size_t>(k)], images[static_cast<std::size_t>(t)]});
        d2.insert({d.J[static_cast<std::size_t>(k)], d.J[static_cast<std::size_t>(t)]});
      }
    }
  }
  return {std::move(d1), std::move(d2)};
}

FiberBasis conormal_fiber_double_flag(const OrbitRep& omega, std::uint64_t prime) {
  const int n = omega.n();
  const int m = 2 * n;
  const PrimeFieldMatrix w = omega.stacked(prime);
  const FiberBasis left_null = nullspace(w.transposed());
  const int vars = m * m;
  const int rows = m * n + left_null.dimension() * m + n * (n + 1);
  PrimeFieldMatrix sys(rows, vars, prime);
  int eq = 0;
  const auto var = [m](int u, int v) { return u * m + v; };
  for (int u = 0; u < m; ++u) {
    for (int c = 0; c < n; ++c) {
      for (int v = 0; v < m; ++v) sys.set(eq, var(u, v), w.at(v, c));
      ++eq;
    }
  }
  for (const auto& z : left_null.basisMatrices) {
    for (int v = 0; v < m; ++v) {
      for (int u = 0; u < m; ++u) sys.set(eq, var(u, v), z.at(u, 0));
      ++eq;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      sys.set(eq, var(i, j), 1);
      ++eq;
      sys.set(eq, var(n + i, n + j), 1);
      ++eq;
    }
  }
  const FiberBasis flat = nullspace(sys);
  FiberBasis out;
  out.ambientShape = {m, m};
  for (const auto& v : flat.basisMatrices) {
    PrimeFieldMatrix x(m, m, prime);
    for (int u = 0; u < m; ++u) {
      for (int c = 0; c < m; ++c) x.set(u, c, v.at(var(u, c), 0));
    }
    out.basisMatrices.push_back(std::move(x));
  }
  return out;
}

Partition jordan_type(const PrimeFieldMatrix& x) {
  if (x.rows() != x.cols()) throw DomainError("jordan type needs a square matrix");
  const int n = x.rows();
  std::vector<int> diffs;
  int prev = n;
  PrimeFieldMatrix power = x;
  for (int k = 1; k <= n && prev > 0; ++k) {
    const int r = power.rank();
    if (r == prev) throw DomainError("matrix is not nilpotent");
    diffs.push_back(prev - r);
    prev = r;
    if (prev > 0) power = power.multiply(x);
  }
  if (prev != 0) throw DomainError("matrix is not nilpotent");
  return Partition(std::move(diffs)).conjugate();
}

SignedYoungDiagram signed_type(const PrimeFieldMatrix& y2, const PrimeFieldMatrix& y3) {
  const int n = y2.rows();
  if (y2.cols() != n || y3.rows() != n || y3.cols() != n) {
    throw DomainError("signed type needs two square matrices of the same size");
  }
  if (y2.prime() != y3.prime()) {
    throw DomainError("signed type needs matrices over the same field");
  }
  const int m = 2 * n;
  PrimeFieldMatrix x(m, m, y2.prime());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      x.set(i, n + j, y2.at(i, j));
      x.set(n + i, j, y3.at(i, j));
    }
  }
  std::vector<std::pair<int, int>> counts;
  PrimeFieldMatrix power = x;
  for (int k = 1; k <= m; ++k) {
    const int cp = n - power.column_block(0, n).rank();
    const int cm = n - power.column_block(n, m).rank();
    counts.emplace_back(cp, cm);
    if (cp == n && cm == n) {
      try {
        return signed_from_column_counts(counts);
      } catch (const InconsistentCountsError& e) {
        throw InternalError(std::string("kernel counts are inconsistent: ") + e.what());
      }
    }
    power = power.multiply(x);
  }
  throw DomainError("matrix pair is not nilpotent");
}

XiOracleResult xi_oracle(const OrbitRep& omega, const OracleConfig& config) {
  if (config.trials < 1) throw DomainError("oracle needs at least one trial");
  const int n = omega.n();
  const int m = 2 * n;
  const FiberBasis fiber = conormal_fiber_double_flag(omega, config.prime);
  std::vector<int> encoding = encode(n, omega.tau1().word());
  for (int v : omega.tau2().word()) encoding.push_back(v);
  std::vector<int> ranks1(static_cast<std::size_t>(n), 0);
  std::vector<int> ranks4(static_cast<std::size_t>(n), 0);
  std::vector<int> ranks_plus(static_cast<std::size_t>(m), 0);
  std::vector<int> ranks_minus(static_cast<std::size_t>(m), 0);
  for (int trial = 0; trial < config.trials; ++trial) {
    CoefficientStream stream(config.seed, encoding, trial);
    const PrimeFieldMatrix x = sample_from_basis(fiber, stream, config.prime);
    accumulate_power_ranks(x.block(0, 0, n, n), ranks1);
    accumulate_power_ranks(x.block(n, n, n, n), ranks4);
    PrimeFieldMatrix y(m, m, config.prime);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        y.set(i, n + j, x.at(i, n + j));
        y.set(n + i, j, x.at(n + i, j));
      }
    }
    PrimeFieldMatrix power = y;
    for (int k = 0; k < m; ++k) {
      ranks_plus[static_cast<std::size_t>(k)] = std::max(
          ranks_plus[static_cast<std::size_t>(k)], power.column_block(0, n).rank());
      ranks_minus[static_cast<std::size_t>(k)] = std::max(
          ranks_minus[static_cast<std::size_t>(k)], power.column_block(n, m).rank());
      if (k + 1 < m) power = power.multiply(y);
    }
  }
  const auto lambda = jordan_from_rank_sequence(n, ranks1);
  const auto mu = jordan_from_rank_sequence(n, ranks4);
  if (!lambda || !mu) throw GenericityError("genericity undecided");
  std::vector<std::pair<int, int>> counts;
  for (int k = 0; k < m; ++k) {
    const int cp = n - ranks_plus[static_cast<std::size_t>(k)];
    const int cm = n - ranks_minus[static_cast<std::size_t>(k)];
    counts.emplace_back(cp, cm);
    if (cp == n && cm == n) break;
  }
  if (counts.empty() || counts.back() != std::pair<int, int>{n, n}) {
    if (n > 0) throw InternalError("sampled matrices failed to be nilpotent");
  }
  try {
    return {{*lambda, *mu}, signed_from_column_counts(counts)};
  } catch (const InconsistentCountsError&) {
    throw GenericityError("genericity undecided");
  }
}

std::pair<Partition, Partition> phi_oracle(const PartialPermutation& tau,
                                           const OracleConfig& config) {
  if (config.trials < 1) throw DomainError("oracle needs at least one trial");
  const int n = tau.n();
  const FiberBasis fiber = conormal_fiber_matrix_pair(tau, config.prime);
  const PrimeFieldMatrix t = tau.to_matrix(config.prime);
  const std::vector<int> encoding = encode(n, tau.word());
  std::vector<int> ranks1(static_cast<std::size_t>(n), 0);
  std::vector<int> ranks2(static_cast<std::size_t>(n), 0);
  for (int trial = 0; trial < config.trials; ++trial) {
    CoefficientStream stream(config.seed, encoding, trial);
    const PrimeFieldMatrix y = sample_from_basis(fiber, stream, config.prime);
    accumulate_power_ranks(t.multiply(y), ranks1);
    accumulate_power_ranks(y.multiply(t), ranks2);
  }
  const auto lambda = jordan_from_rank_sequence(n, ranks1);
  const auto mu = jordan_from_rank_sequence(n, ranks2);
  if (!lambda || !mu) throw GenericityError("genericity undecided");
  return {*lambda, *mu};
}

}  // namespace steinberg
