#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "steinberg/oracle_config.hpp"
#include "steinberg/orbit_catalog.hpp"
#include "steinberg/partial_permutation.hpp"
#include "steinberg/partition.hpp"
#include "steinberg/prime_field.hpp"
#include "steinberg/signed_diagram.hpp"

namespace steinberg {

// A basis of a linear space of matrices of a common shape.
struct FiberBasis {
  std::vector<PrimeFieldMatrix> basisMatrices;
  std::pair<int, int> ambientShape{0, 0};

  int dimension() const { return static_cast<int>(basisMatrices.size()); }
};

// Basis of the right null space of a; the basis elements are column vectors.
FiberBasis nullspace(const PrimeFieldMatrix& a);

// Basis of {y : tau*y and y*tau are strictly upper triangular}.
FiberBasis conormal_fiber_matrix_pair(const PartialPermutation& tau,
                                      std::uint64_t prime = PrimeFieldMatrix::kDefaultPrime);

// The index-pair supports predicted for generic tau*y and y*tau.
std::pair<std::set<std::pair<int, int>>, std::set<std::pair<int, int>>>
conormal_structural_sets(const PartialPermutation& tau);

// Basis of the 2n x 2n matrices x with x*omega = 0, column span of x inside
// the column span of omega, and strictly upper triangular diagonal blocks.
FiberBasis conormal_fiber_double_flag(const OrbitRep& omega,
                                      std::uint64_t prime = PrimeFieldMatrix::kDefaultPrime);

// Jordan type of a nilpotent matrix.
Partition jordan_type(const PrimeFieldMatrix& x);

// Signed diagram of the nilpotent pair (y2, y3) acting on the split space.
SignedYoungDiagram signed_type(const PrimeFieldMatrix& y2, const PrimeFieldMatrix& y3);

struct XiOracleResult {
  std::pair<Partition, Partition> xi_k;
  SignedYoungDiagram xi_s;
};

// Generic values of both moment-map images on the conormal fiber at omega,
// estimated by per-rank maxima over seeded random samples.
XiOracleResult xi_oracle(const OrbitRep& omega, const OracleConfig& config = {});

// Generic Jordan types of (tau*y, y*tau) for y in the conormal fiber at tau.
std::pair<Partition, Partition> phi_oracle(const PartialPermutation& tau,
                                           const OracleConfig& config = {});

}  // namespace steinberg
