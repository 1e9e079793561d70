#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dc/matrices.hpp"

namespace dc {

// Straightening sign of alpha relative to lambda: -1, 0 or +1.
int edge_symbol(const Composition& alpha, const Partition& lambda);

enum class Stage { brute, tab_first, lr_first, fully_reduced };

const char* stage_name(Stage s);
Stage parse_stage(const std::string& s);

struct Box {
  std::size_t rows = 0, cols = 0;
};

// Default box for a shape pair; the stabilization check grows it by one.
Box default_box(const SkewShape& shape1, const SkewShape& shape2, Mode mode);

// One term of a summation: shape1 = lambda/kappa drives the tableau factor,
// shape2 = nu/mu the LR factor.
template <class Tag>
int summand(const Matrix<Tag>& m, const SkewShape& shape1, const SkewShape& shape2, Stage stage);

// Sum of the stage's summand over every matrix of the mode supported in the
// box. Terms are generated margin by margin, skipping margins for which a
// factor vanishes. Unless box is given explicitly the value is recomputed
// with one more row and column, and box_too_small is thrown if it moves.
long alternating_sum(const SkewShape& shape1, const SkewShape& shape2, Stage stage, Mode mode,
                     std::optional<Box> box = std::nullopt, bool check_stable = true);

// Nonzero terms of a stage, in enumeration order.
template <class Tag>
std::vector<std::pair<Matrix<Tag>, int>> terms(const SkewShape& shape1, const SkewShape& shape2,
                                               Stage stage, Box box);

// Number of matrices satisfying both conditions.
long lr_count(const SkewShape& shape1, const SkewShape& shape2, Mode mode);

// Margins r (length n) with edge_symbol(base + r, lambda) != 0 and |r| = total,
// together with that sign.
std::vector<std::pair<Composition, int>> nonzero_margins(const Composition& base,
                                                         const Partition& lambda, std::size_t n,
                                                         int total);

// All matrices with the given row and column sums.
std::vector<BinaryMatrix> binary_with_margins(const Composition& rows, const Composition& cols,
                                              std::size_t h, std::size_t w);
std::vector<IntegralMatrix> integral_with_margins(const Composition& rows,
                                                  const Composition& cols, std::size_t h,
                                                  std::size_t w);

// The crystal-ladder pairing for a matrix failing the named condition on the
// shape (lambda/kappa for the tableau condition, nu/mu for the LR one).
// Throws not_cancellable when m satisfies it, or when no witness exists
// because the summand vanishes anyway.
BinaryMatrix involution(const BinaryMatrix& m, Condition failing, const SkewShape& shape);
IntegralMatrix involution(const IntegralMatrix& m, Condition failing, const SkewShape& shape);

}  // namespace dc
