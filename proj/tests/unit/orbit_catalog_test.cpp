#include <doctest.h>

#include <set>
#include <utility>
#include <vector>

#include "steinberg/errors.hpp"
#include "steinberg/orbit_catalog.hpp"

namespace steinberg {
namespace {

constexpr std::uint64_t kPrime = 2147483647;

std::size_t disjoint_kernel_pairs(int n) {
  const auto all = enumerate_partial_permutations(n);
  std::size_t count = 0;
  for (const PartialPermutation& a : all) {
    for (const PartialPermutation& b : all) {
      bool disjoint = true;
      for (int j = 1; j <= n; ++j) {
        if (a.image_of(j) == 0 && b.image_of(j) == 0) disjoint = false;
      }
      if (disjoint) ++count;
    }
  }
  return count;
}

TEST_CASE("orbit representative validation") {
  OrbitRep rep(PartialPermutation(2, {0, 1}), PartialPermutation(2, {1, 0}));
  CHECK(rep.n() == 2);
  CHECK(rep.tau1() == PartialPermutation(2, {1, 0}));
  CHECK(rep.tau2() == PartialPermutation(2, {0, 1}));
  CHECK_THROWS_AS(OrbitRep(PartialPermutation::zero(1), PartialPermutation::zero(1)),
                  DomainError);
  CHECK_THROWS_AS(OrbitRep(PartialPermutation::identity(2), PartialPermutation::identity(3)),
                  DomainError);
  CHECK(OrbitRep(PartialPermutation::identity(1), PartialPermutation::zero(1)).stacked(7) ==
        PrimeFieldMatrix::from_rows({{1}, {0}}, 7));
  CHECK(OrbitRep(PartialPermutation::identity(2), PartialPermutation::identity(2)).stacked(7) ==
        PrimeFieldMatrix::from_rows({{1, 0}, {0, 1}, {1, 0}, {0, 1}}, 7));
}

TEST_CASE("orbit class counts match the quotient of disjoint-kernel pairs") {
  CHECK(enumerate_orbit_reps(1).size() == 3);
  CHECK(enumerate_orbit_reps(2).size() == 16);
  CHECK(enumerate_orbit_reps(3).size() == 116);
  int factorial = 1;
  for (int n = 1; n <= 3; ++n) {
    factorial *= n;
    CHECK(enumerate_orbit_reps(n).size() == disjoint_kernel_pairs(n) / factorial);
  }
  CHECK_THROWS_AS(enumerate_orbit_reps(6), ResourceError);
}

TEST_CASE("listed representatives are sorted, distinct, and canonical") {
  const auto reps = enumerate_orbit_reps(2);
  std::set<OrbitRep> seen;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    if (k > 0) CHECK(reps[k - 1] < reps[k]);
    seen.insert(reps[k]);
    CHECK(canonicalize_grassmann_point(reps[k].stacked(kPrime)) == reps[k]);
  }
  CHECK(seen.size() == reps.size());
}

TEST_CASE("canonical point of explicit spanning matrices") {
  CHECK(canonicalize_grassmann_point(PrimeFieldMatrix::from_rows({{1}, {1}}, kPrime)) ==
        OrbitRep(PartialPermutation::identity(1), PartialPermutation::identity(1)));
  CHECK(canonicalize_grassmann_point(PrimeFieldMatrix::from_rows({{5}, {5}}, kPrime)) ==
        OrbitRep(PartialPermutation::identity(1), PartialPermutation::identity(1)));
  CHECK(canonicalize_grassmann_point(PrimeFieldMatrix::from_rows({{3}, {0}}, kPrime)) ==
        OrbitRep(PartialPermutation::identity(1), PartialPermutation::zero(1)));
  CHECK_THROWS_AS(canonicalize_grassmann_point(PrimeFieldMatrix(4, 2, kPrime)), DomainError);
  CHECK_THROWS_AS(canonicalize_grassmann_point(PrimeFieldMatrix(3, 2, kPrime)), DomainError);
}

TEST_CASE("span intersection dimensions with the coordinate flags") {
  const OrbitRep top(PartialPermutation::identity(2), PartialPermutation::zero(2));
  CHECK(grassmann_invariants(top.stacked(kPrime)) ==
        std::vector<std::vector<int>>{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}});
  const OrbitRep bottom(PartialPermutation::zero(2), PartialPermutation::identity(2));
  CHECK(grassmann_invariants(bottom.stacked(kPrime)) ==
        std::vector<std::vector<int>>{{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
  const OrbitRep diagonal(PartialPermutation::identity(1), PartialPermutation::identity(1));
  CHECK(grassmann_invariants(diagonal.stacked(kPrime)) ==
        std::vector<std::vector<int>>{{0, 0}, {0, 1}});
}

TEST_CASE("invariants separate the orbit classes") {
  std::set<std::vector<std::vector<int>>> profiles;
  const auto reps = enumerate_orbit_reps(2);
  for (const OrbitRep& rep : reps) {
    profiles.insert(grassmann_invariants(rep.stacked(kPrime)));
  }
  CHECK(profiles.size() == reps.size());
}

TEST_CASE("expected dominant component diagrams") {
  CHECK(maximal_component_diagrams(1) ==
        std::vector<SignedYoungDiagram>{SignedYoungDiagram::from_strings({"+-"}),
                                        SignedYoungDiagram::from_strings({"-+"})});
  CHECK(maximal_component_diagrams(2) ==
        std::vector<SignedYoungDiagram>{SignedYoungDiagram::from_strings({"+-", "+-"}),
                                        SignedYoungDiagram::from_strings({"+-", "-+"}),
                                        SignedYoungDiagram::from_strings({"-+", "-+"})});
  CHECK(maximal_component_diagrams(3) ==
        std::vector<SignedYoungDiagram>{SignedYoungDiagram::from_strings({"+-+-", "+-"}),
                                        SignedYoungDiagram::from_strings({"+-+", "-+-"}),
                                        SignedYoungDiagram::from_strings({"-+-+", "-+"})});
  for (int n = 2; n <= 4; ++n) {
    const auto expected = maximal_component_diagrams(n);
    CHECK(expected.size() == 3);
    std::set<std::vector<std::string>> as_strings;
    for (const SignedYoungDiagram& d : expected) {
      CHECK(d.n() == n);
      as_strings.insert(d.to_strings());
    }
    for (const SignedYoungDiagram& d : expected) {
      CHECK(as_strings.count(swapped_signs(d).to_strings()) == 1);
    }
  }
}

TEST_CASE("nilpotent orbit dimensions of the dominant diagrams") {
  CHECK(orbit_dimension(SignedYoungDiagram::from_strings({"+-"})) == 1);
  CHECK(orbit_dimension(SignedYoungDiagram::from_strings({"-+"})) == 1);
  std::vector<int> dims2;
  for (const SignedYoungDiagram& d : maximal_component_diagrams(2)) {
    dims2.push_back(orbit_dimension(d));
  }
  CHECK(dims2 == std::vector<int>{4, 4, 4});
  std::vector<int> dims3;
  for (const SignedYoungDiagram& d : maximal_component_diagrams(3)) {
    dims3.push_back(orbit_dimension(d));
  }
  CHECK(dims3 == std::vector<int>{13, 12, 13});
}

TEST_CASE("image analysis over all rank-two classes") {
  const ImageReport report = image_analysis(2);
  CHECK(report.n == 2);
  CHECK(report.classes.size() == 16);
  CHECK(report.flagged_count == 0);
  CHECK(report.maximal == maximal_component_diagrams(2));
  CHECK(report.checks.sign_prefix_square_zero);
  CHECK(report.checks.column_bound);
  CHECK(report.checks.swap_closure);
  CHECK(report.checks.regular_attained);
  CHECK(report.checks.maximal_matches_expected);
  int combinatorial = 0;
  for (const ImageClassEntry& entry : report.classes) {
    CHECK(entry.xi_k.has_value());
    CHECK(entry.xi_s.has_value());
    if (entry.method == "combinatorial") ++combinatorial;
    else CHECK(entry.method == "oracle");
  }
  CHECK(combinatorial == 7);
}

}  // namespace
}  // namespace steinberg
