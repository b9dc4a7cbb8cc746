#include "steinberg/orbit_catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>
#include <utility>

#include "steinberg/errors.hpp"
#include "steinberg/oracle.hpp"
#include "steinberg/steinberg_maps.hpp"

namespace steinberg {

OrbitRep::OrbitRep(PartialPermutation tau1, PartialPermutation tau2)
    : tau1_(std::move(tau1)), tau2_(std::move(tau2)) {
  if (tau1_.n() != tau2_.n()) {
    throw DomainError("orbit pair must share the same n");
  }
  const int n = tau1_.n();
  for (int j = 1; j <= n; ++j) {
    if (tau1_.image_of(j) == 0 && tau2_.image_of(j) == 0) {
      throw DomainError("orbit pair must have disjoint kernels");
    }
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  const auto key = [this](int j) {
    const int top = tau1_.image_of(j);
    const int bottom = tau2_.image_of(j);
    const int type = bottom == 0 ? 0 : (top == 0 ? 2 : 1);
    return std::tuple<int, int, int>{type, top, bottom};
  };
  std::sort(order.begin(), order.end(),
            [&key](int a, int b) { return key(a) < key(b); });
  std::vector<int> word1(static_cast<std::size_t>(n));
  std::vector<int> word2(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    word1[static_cast<std::size_t>(j)] = tau1_.image_of(order[static_cast<std::size_t>(j)]);
    word2[static_cast<std::size_t>(j)] = tau2_.image_of(order[static_cast<std::size_t>(j)]);
  }
  tau1_ = PartialPermutation(n, std::move(word1));
  tau2_ = PartialPermutation(n, std::move(word2));
}

PrimeFieldMatrix OrbitRep::stacked(std::uint64_t prime) const {
  const int size = n();
  PrimeFieldMatrix out(2 * size, size, prime);
  for (int j = 1; j <= size; ++j) {
    const int top = tau1_.image_of(j);
    const int bottom = tau2_.image_of(j);
    if (top != 0) out.set(top - 1, j - 1, 1);
    if (bottom != 0) out.set(size + bottom - 1, j - 1, 1);
  }
  return out;
}

std::vector<OrbitRep> enumerate_orbit_reps(int n, int bound) {
  if (n < 0) throw DomainError("n must be nonnegative");
  if (n > bound) throw ResourceError("orbit enumeration bound exceeded");
  const auto taus = enumerate_partial_permutations(n, bound);
  std::set<OrbitRep> classes;
  for (const auto& t1 : taus) {
    for (const auto& t2 : taus) {
      bool disjoint = true;
      for (int j = 1; j <= n && disjoint; ++j) {
        disjoint = t1.image_of(j) != 0 || t2.image_of(j) != 0;
      }
      if (disjoint) classes.insert(OrbitRep(t1, t2));
    }
  }
  return {classes.begin(), classes.end()};
}

namespace {

void require_grassmann_shape(const PrimeFieldMatrix& a) {
  if (a.cols() < 0 || a.rows() != 2 * a.cols()) {
    throw DomainError("matrix must have shape 2n x n");
  }
  if (a.rank() != a.cols()) {
    throw DomainError("matrix must have full column rank");
  }
}

}  // namespace

OrbitRep canonicalize_grassmann_point(const PrimeFieldMatrix& a) {
  require_grassmann_shape(a);
  const int n = a.cols();
  PrimeFieldMatrix work = a;
  const std::vector<int> word1 = canonicalize_rows_in_place(work, 0, n);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&word1](int x, int y) {
    const int px = word1[static_cast<std::size_t>(x)];
    const int py = word1[static_cast<std::size_t>(y)];
    if ((px == 0) != (py == 0)) return px == 0;
    return px < py;
  });
  PrimeFieldMatrix permuted(2 * n, n, a.prime());
  std::vector<int> word1p(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const int src = order[static_cast<std::size_t>(j)];
    word1p[static_cast<std::size_t>(j)] = word1[static_cast<std::size_t>(src)];
    for (int r = 0; r < 2 * n; ++r) permuted.set(r, j, work.at(r, src));
  }
  work = std::move(permuted);

  const std::vector<int> word2 = canonicalize_rows_in_place(work, n, 2 * n);

  std::vector<int> col_of_row(static_cast<std::size_t>(n), -1);
  for (int j = 0; j < n; ++j) {
    if (word1p[static_cast<std::size_t>(j)] != 0) {
      col_of_row[static_cast<std::size_t>(word1p[static_cast<std::size_t>(j)] - 1)] = j;
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    for (int k = i + 1; k < n; ++k) {
      const int col = col_of_row[static_cast<std::size_t>(k)];
      if (col >= 0) work.set(i, col, 0);
    }
    const int own = col_of_row[static_cast<std::size_t>(i)];
    if (own >= 0) {
      const std::uint64_t d = work.at(i, own);
      if (d == 0) throw InternalError("top block lost its pivot");
      if (d != 1) {
        const std::uint64_t inv = work.inverse(d);
        for (int j = 0; j < n; ++j) {
          work.set(i, j, work.at(i, j) * inv % work.prime());
        }
      }
    }
    for (int j = 0; j < n; ++j) {
      const std::uint64_t expected = j == own ? 1 : 0;
      if (work.at(i, j) != expected) {
        throw InternalError("top block failed to return to canonical form");
      }
    }
  }

  OrbitRep omega(PartialPermutation(n, word1p), PartialPermutation(n, word2));
  if (grassmann_invariants(a) != grassmann_invariants(omega.stacked(a.prime()))) {
    throw InternalError("canonical form changed the subspace invariants");
  }
  return omega;
}

std::vector<std::vector<int>> grassmann_invariants(const PrimeFieldMatrix& a) {
  require_grassmann_shape(a);
  const int n = a.cols();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n) + 1,
                                    std::vector<int>(static_cast<std::size_t>(n) + 1));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      PrimeFieldMatrix m(2 * n, i + j + n, a.prime());
      for (int k = 0; k < i; ++k) m.set(k, k, 1);
      for (int k = 0; k < j; ++k) m.set(n + k, i + k, 1);
      for (int r = 0; r < 2 * n; ++r) {
        for (int c = 0; c < n; ++c) m.set(r, i + j + c, a.at(r, c));
      }
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i + j + n - m.rank();
    }
  }
  return out;
}

std::vector<SignedYoungDiagram> maximal_component_diagrams(int n) {
  if (n < 1) throw DomainError("component diagrams need n >= 1");
  if (n == 1) {
    return {SignedYoungDiagram({SignedRow{2, '+'}}), SignedYoungDiagram({SignedRow{2, '-'}})};
  }
  if (n % 2 == 0) {
    return {SignedYoungDiagram({SignedRow{n, '+'}, SignedRow{n, '+'}}),
            SignedYoungDiagram({SignedRow{n, '+'}, SignedRow{n, '-'}}),
            SignedYoungDiagram({SignedRow{n, '-'}, SignedRow{n, '-'}})};
  }
  return {SignedYoungDiagram({SignedRow{n + 1, '+'}, SignedRow{n - 1, '+'}}),
          SignedYoungDiagram({SignedRow{n, '+'}, SignedRow{n, '-'}}),
          SignedYoungDiagram({SignedRow{n + 1, '-'}, SignedRow{n - 1, '-'}})};
}

ImageReport image_analysis(int n, const OracleConfig& config) {
  if (n < 1) throw DomainError("image analysis needs n >= 1");
  ImageReport report;
  report.n = n;
  for (const OrbitRep& omega : enumerate_orbit_reps(n)) {
    ImageClassEntry entry{omega, std::nullopt, std::nullopt, "", false};
    if (omega.tau2().rank() == n) {
      std::vector<int> word(static_cast<std::size_t>(n), 0);
      for (int k = 1; k <= n; ++k) {
        word[static_cast<std::size_t>(omega.tau2().image_of(k) - 1)] =
            omega.tau1().image_of(k);
      }
      const PartialPermutation tau(n, std::move(word));
      entry.method = "combinatorial";
      entry.xi_k = xi_k_generic(tau);
      entry.xi_s = xi_s_generic(tau);
    } else {
      entry.method = "oracle";
      try {
        const XiOracleResult res = xi_oracle(omega, config);
        entry.xi_k = res.xi_k;
        entry.xi_s = res.xi_s;
      } catch (const GenericityError&) {
        OracleConfig retry = config;
        retry.trials *= 2;
        try {
          const XiOracleResult res = xi_oracle(omega, retry);
          entry.xi_k = res.xi_k;
          entry.xi_s = res.xi_s;
        } catch (const GenericityError&) {
          entry.flagged = true;
          ++report.flagged_count;
        }
      }
    }
    report.classes.push_back(std::move(entry));
  }

  std::set<SignedYoungDiagram> images;
  for (const auto& entry : report.classes) {
    if (entry.xi_s) images.insert(*entry.xi_s);
  }
  for (const auto& image : images) {
    const bool is_maximal =
        std::none_of(images.begin(), images.end(), [&image](const SignedYoungDiagram& other) {
          return other != image && dominance_signed(image, other);
        });
    if (is_maximal) report.maximal.push_back(image);
  }

  report.checks.sign_prefix_square_zero = true;
  report.checks.column_bound = true;
  report.checks.swap_closure = true;
  const int bound = n % 2 == 0 ? n : n + 1;
  for (const auto& image : images) {
    const auto [plus, minus] = sign_prefix_partitions(image);
    if (!square_zero_condition(plus) || !square_zero_condition(minus)) {
      report.checks.sign_prefix_square_zero = false;
    }
    if (image.num_cols() > bound) report.checks.column_bound = false;
    if (images.count(swapped_signs(image)) == 0) report.checks.swap_closure = false;
  }
  const std::pair<Partition, Partition> regular{Partition({n}), Partition({n})};
  report.checks.regular_attained =
      std::any_of(report.classes.begin(), report.classes.end(),
                  [&regular](const ImageClassEntry& e) { return e.xi_k == regular; });
  const auto expected = maximal_component_diagrams(n);
  report.checks.maximal_matches_expected =
      std::set<SignedYoungDiagram>(expected.begin(), expected.end()) ==
      std::set<SignedYoungDiagram>(report.maximal.begin(), report.maximal.end());
  return report;
}

int orbit_dimension(const SignedYoungDiagram& diagram, const OracleConfig& config) {
  const int n = diagram.n();
  std::vector<std::vector<bool>> y2(static_cast<std::size_t>(n),
                                    std::vector<bool>(static_cast<std::size_t>(n)));
  std::vector<std::vector<bool>> y3 = y2;
  int plus = 0;
  int minus = 0;
  for (const SignedRow& row : diagram.rows()) {
    for (int c = 0; c < row.length; ++c) {
      if (row.sign_at(c) == '+') {
        if (c > 0) y3[static_cast<std::size_t>(minus - 1)][static_cast<std::size_t>(plus)] = true;
        ++plus;
      } else {
        if (c > 0) y2[static_cast<std::size_t>(plus - 1)][static_cast<std::size_t>(minus)] = true;
        ++minus;
      }
    }
  }
  const std::uint64_t p = config.prime;
  PrimeFieldMatrix sys(2 * n * n, 2 * n * n, p);
  const auto var_a = [n](int i, int k) { return i * n + k; };
  const auto var_b = [n](int i, int k) { return n * n + i * n + k; };
  int eq = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (y2[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) {
          sys.set(eq, var_a(i, k), 1);
        }
        if (y2[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) {
          sys.set(eq, var_b(k, j), p - 1);
        }
      }
      ++eq;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (y3[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) {
          sys.set(eq, var_b(i, k), 1);
        }
        if (y3[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) {
          sys.set(eq, var_a(k, j), p - 1);
        }
      }
      ++eq;
    }
  }
  return sys.rank();
}

}  // namespace steinberg
