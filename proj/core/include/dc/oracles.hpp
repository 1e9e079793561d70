#pragma once

#include <utility>

#include "dc/matrices.hpp"

// Classical insertion algorithms, written without reference to the crystal
// code so they can serve as an independent check on it.

namespace dc {

// Column insertion into a straight tableau. SST: the letter bumps the first
// entry >= it in the column; transpose SST: the first entry > it.
Tableau column_insert(const Tableau& t, int letter, Flavor flavor = Flavor::sst);
// Row insertion. SST: bumps the first entry > letter; transpose SST: >=.
Tableau row_insert(const Tableau& t, int letter, Flavor flavor = Flavor::sst);

struct TableauPair {
  Tableau first;
  Tableau second;
};

// Semitic reading order (rows top to bottom, each right to left), column
// inserting M[i,j] copies of j. second is the recording chain of shapes
// before each row.
TableauPair burge(const IntegralMatrix& m);

// Kanji reading order (columns right to left, each top to bottom), column
// inserting i for every bit at (i,j). second is the reverse transpose chain
// of shapes after each column.
TableauPair dual_rsk_col(const BinaryMatrix& m);

// Classical RSK: rows in order, letters j increasing, row insertion.
TableauPair rsk_row(const IntegralMatrix& m);

// Dual RSK with row insertion bumping the first entry >= the letter; first
// is the transpose semistandard insertion tableau, second the recording SST.
TableauPair dual_rsk_row(const BinaryMatrix& m);

// Jeu de taquin rectification of a skew SST or skew transpose SST; slides
// start at the lexicographically largest inner corner.
Tableau rectify(const Tableau& t);

// Same, but slides are started at inner corners chosen by the callback
// (given the list of inner corners, returns an index into it).
template <class Choose>
Tableau rectify_with(const Tableau& t, Choose&& choose);

// Single straight tableau with lambda[i] entries i in row i.
Tableau superstandard(const Partition& lambda);

namespace detail {
using Grid = std::vector<std::vector<int>>;  // -1 marks cells of the inner shape
Grid to_grid(const Tableau& t);
Tableau from_grid(Flavor f, const Grid& g);
Grid conjugate_grid(const Grid& g);
std::vector<std::pair<int, int>> inner_corners(const Grid& g);
void slide(Grid& g, int r, int c);
}  // namespace detail

template <class Choose>
Tableau rectify_with(const Tableau& t, Choose&& choose) {
  if (is_reverse(t.flavor)) throw precondition_error("rectify expects a forward flavor");
  bool tr = is_transpose(t.flavor);
  detail::Grid g = detail::to_grid(t);
  if (tr) g = detail::conjugate_grid(g);
  for (;;) {
    auto corners = detail::inner_corners(g);
    if (corners.empty()) break;
    auto [r, c] = corners.at(choose(corners));
    detail::slide(g, r, c);
  }
  if (tr) g = detail::conjugate_grid(g);
  return detail::from_grid(t.flavor, g);
}

}  // namespace dc
