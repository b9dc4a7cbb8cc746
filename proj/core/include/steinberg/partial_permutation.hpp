#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "steinberg/bijection.hpp"
#include "steinberg/prime_field.hpp"

namespace steinberg {

// An injective map from a subset of {1..n} to {1..n}, encoded as a word where
// word[j-1] = image of j and 0 marks the kernel.
class PartialPermutation {
 public:
  PartialPermutation() = default;
  PartialPermutation(int n, std::vector<int> word);

  static PartialPermutation identity(int n);
  static PartialPermutation zero(int n);

  int n() const { return n_; }
  const std::vector<int>& word() const { return word_; }
  int image_of(int j) const;
  int rank() const;
  PrimeFieldMatrix to_matrix(std::uint64_t prime = PrimeFieldMatrix::kDefaultPrime) const;

  bool operator==(const PartialPermutation&) const = default;
  auto operator<=>(const PartialPermutation&) const = default;

 private:
  int n_ = 0;
  std::vector<int> word_;
};

// The data of the two-line form: sigma is the bijection J -> I obtained off
// the kernel, M is the kernel and L the complement of the image, all ascending.
struct Decomposition {
  Bijection sigma;
  std::vector<int> J;
  std::vector<int> I;
  std::vector<int> M;
  std::vector<int> L;
};

Decomposition decompose(const PartialPermutation& tau);

PartialPermutation transpose(const PartialPermutation& tau);

// All partial permutations on {1..n}, rank descending and lexicographic by
// word within each rank.
std::vector<PartialPermutation> enumerate_partial_permutations(int n, int bound = 7);

// d[i-1][j-1] = rank of the submatrix on rows i..n and columns 1..j.
std::vector<std::vector<int>> rank_profile(const PrimeFieldMatrix& a);

// Reduces the rows of m between row_begin and row_end to a 0/1 pattern with
// at most one 1 per row and column, using only row additions from lower rows
// of the block to upper ones, column additions from earlier columns to later
// ones, and scalings.  Column operations act on the whole matrix, row
// operations only inside the block.  Returns the block's word: entry j is the
// 1-based pivot row within the block of column j, or 0.
std::vector<int> canonicalize_rows_in_place(PrimeFieldMatrix& m, int row_begin, int row_end);

// The unique partial permutation whose double coset under upper-triangular
// matrices contains a.
PartialPermutation canonicalize_matrix(const PrimeFieldMatrix& a);

// The permutations w1, w2 of {1..n} whose classical Steinberg shapes give the
// two components of the generalized map: w1 = (i_1..i_r, l_s..l_1) and
// w2 = (m_s..m_1, sigma^{-1}(i_1)..sigma^{-1}(i_r)) in one-line notation.
std::pair<Bijection, Bijection> build_w1_w2(const PartialPermutation& tau);

}  // namespace steinberg
