#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "steinberg/oracle_config.hpp"
#include "steinberg/partial_permutation.hpp"
#include "steinberg/partition.hpp"
#include "steinberg/prime_field.hpp"
#include "steinberg/signed_diagram.hpp"

namespace steinberg {

// An orbit of the double flag variety, encoded as a pair of partial
// permutations with disjoint kernels; the columns of the stacked 2n x n
// matrix are kept in a fixed canonical order so each orbit has exactly one
// representative.
class OrbitRep {
 public:
  OrbitRep(PartialPermutation tau1, PartialPermutation tau2);

  const PartialPermutation& tau1() const { return tau1_; }
  const PartialPermutation& tau2() const { return tau2_; }
  int n() const { return tau1_.n(); }

  // The 2n x n matrix whose top block is tau1 and bottom block is tau2.
  PrimeFieldMatrix stacked(std::uint64_t prime = PrimeFieldMatrix::kDefaultPrime) const;

  bool operator==(const OrbitRep&) const = default;
  auto operator<=>(const OrbitRep&) const = default;

 private:
  PartialPermutation tau1_;
  PartialPermutation tau2_;
};

// All orbit representatives for rank n, one per class, sorted.
std::vector<OrbitRep> enumerate_orbit_reps(int n, int bound = 5);

// Canonical representative of the orbit through the span of the columns of
// a, a 2n x n matrix of rank n.
OrbitRep canonicalize_grassmann_point(const PrimeFieldMatrix& a);

// Entry (i, j) is the dimension of the intersection of the column span with
// the span of the first i plus-coordinates and first j minus-coordinates.
std::vector<std::vector<int>> grassmann_invariants(const PrimeFieldMatrix& a);

// The signed Young diagrams of the components of the exotic nilpotent image.
std::vector<SignedYoungDiagram> maximal_component_diagrams(int n);

struct ImageClassEntry {
  OrbitRep omega;
  std::optional<std::pair<Partition, Partition>> xi_k;
  std::optional<SignedYoungDiagram> xi_s;
  std::string method;
  bool flagged = false;
};

struct ImageChecks {
  bool sign_prefix_square_zero = false;
  bool column_bound = false;
  bool swap_closure = false;
  bool regular_attained = false;
  bool maximal_matches_expected = false;
};

struct ImageReport {
  int n = 0;
  std::vector<ImageClassEntry> classes;
  std::vector<SignedYoungDiagram> maximal;
  ImageChecks checks;
  int flagged_count = 0;
};

// Evaluates both moment-map images on every orbit class, collects the
// dominance-maximal signed diagrams, and runs the structural checks.
ImageReport image_analysis(int n, const OracleConfig& config = {});

// Dimension of the nilpotent orbit attached to the diagram, via the rank of
// the linearized stabilizer system at the standard representative.
int orbit_dimension(const SignedYoungDiagram& diagram, const OracleConfig& config = {});

}  // namespace steinberg
