#pragma once

#include <utility>
#include <vector>

#include "steinberg/partial_permutation.hpp"
#include "steinberg/partition.hpp"
#include "steinberg/signed_diagram.hpp"
#include "steinberg/tableau.hpp"

namespace steinberg {

// A pair of tableaux on {1..n} with a common sub-shape nu such that both
// shape differences are column strips.
class Triple {
 public:
  Triple(Tableau t1, Tableau t2, Partition nu);

  const Tableau& t1() const { return t1_; }
  const Tableau& t2() const { return t2_; }
  const Partition& nu() const { return nu_; }
  int n() const { return t1_.size(); }

  bool operator==(const Triple&) const = default;

 private:
  Tableau t1_;
  Tableau t2_;
  Partition nu_;
};

// Shapes of the two tableaux attached to tau: the insertion tableau of sigma
// grown by the missed targets, and the recording tableau grown by the kernel.
std::pair<Partition, Partition> phi(const PartialPermutation& tau);

Triple triple(const PartialPermutation& tau);

// Recovers the unique partial permutation mapping to t; throws
// NotInImageError when the popped value sequences violate the monotonicity
// that characterizes the image.
PartialPermutation triple_inverse(const Triple& t);

// The nilpotent-pair invariant of the orbit of (tau; identity); equals phi.
std::pair<Partition, Partition> xi_k_generic(const PartialPermutation& tau);

// The skew tableau produced by inserting the ells into t1, padding t2 on the
// freed boxes, column-inserting the ms, and lifting t1-hat to the resulting
// shape minus a column of s boxes.
SkewTableau triangle(const Tableau& t1, const Tableau& t2, const std::vector<int>& ells,
                     const std::vector<int>& ms, int n);

// Independent construction of the same skew tableau: run insertion on the
// word extended by the ms (sent to negative values) and the values above n
// (sent to the ells), then erase the negative boxes.
SkewTableau triangle_via_erasure(const Tableau& t1, const Tableau& t2,
                                 const std::vector<int>& ells, const std::vector<int>& ms,
                                 int n);

// The signed-diagram invariant of the orbit of (tau; identity), assembled
// from column counts: even columns from the phi shapes, odd columns from the
// triangle tableau and the sigma shape.
SignedYoungDiagram xi_s_generic(const PartialPermutation& tau);

// All triples with the given shapes; their number is the fiber cardinality
// of phi over (lambda, mu).
std::vector<Triple> fiber_enumeration(const Partition& lambda, const Partition& mu, int n);

}  // namespace steinberg
