#pragma once

#include <functional>
#include <utility>

#include "steinberg/bijection.hpp"
#include "steinberg/partition.hpp"
#include "steinberg/tableau.hpp"

namespace steinberg {

struct InsertionResult {
  Tableau tableau;
  int row = 0;
  int col = 0;
};

// Row-inserts a into T, bumping the smallest larger entry down row by row;
// a must not already be an entry of T.
Tableau row_insert(const Tableau& t, int a);

// Row insertion that also reports the box created by the final placement.
InsertionResult row_insert_traced(const Tableau& t, int a);

// Column insertion, the transpose of row insertion.
Tableau column_insert(int a, const Tableau& t);

// Runs row insertion of the targets in source order; the first tableau is the
// insertion tableau, the second records each source at the box its insertion
// created.
std::pair<Tableau, Tableau> rs_pair(const Bijection& w);

// Recovers the unique bijection w with rs_pair(w) == (p, q); p and q must
// share a shape and q must have increasing rows and columns.
Bijection rs_inverse(const Tableau& p, const Tableau& q);

// Undoes the row insertion whose final placement created the box (row, col),
// which must be a removable corner; returns the shrunken tableau and the
// ejected value.
std::pair<Tableau, int> reverse_row_insert(const Tableau& t, int row, int col);

// Given the number of removable inside corners, returns the index of the one
// to slide from next.
using InsideCornerChooser = std::function<std::size_t(std::size_t)>;

// Jeu de taquin rectification; the default slides from the bottom-most
// removable inside corner each time.  The result does not depend on the
// choices.
Tableau rectify(const SkewTableau& s);
Tableau rectify(const SkewTableau& s, const InsideCornerChooser& choose);

// Rectification of s placed at the top-right of t; entry sets must be
// disjoint.
Tableau star(const Tableau& t, const Tableau& s);

// Shape of the insertion tableau of a full permutation of {1..n}.
Partition steinberg_classical(const Bijection& w);

}  // namespace steinberg
