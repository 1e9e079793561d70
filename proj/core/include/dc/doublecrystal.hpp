#pragma once

#include <optional>
#include <set>
#include <vector>

#include "dc/crystal_bin.hpp"
#include "dc/crystal_int.hpp"

namespace dc {

using OpSequence = std::vector<MoveRecord>;

// Moves in one direction restricted to ladder indices in [lo, hi).
struct OpRange {
  Direction direction;
  std::size_t lo = 0;
  std::size_t hi = Interval::npos;
};

// Repeatedly applies the admissible move with the lowest index (climbing that
// ladder fully) until none remains. Ranges with hi = npos use the stored
// extent of the matrix, which only works for raising directions.
template <class Tag>
std::pair<Matrix<Tag>, OpSequence> exhaust(const Matrix<Tag>& m, const std::vector<OpRange>& ops);

// Directions subset with an optional bound k: raising moves use every index,
// lowering moves use indices in [[k-1]]. A lowering direction without a bound
// is a usage_error.
template <class Tag>
std::pair<Matrix<Tag>, OpSequence> exhaust(const Matrix<Tag>& m, const std::set<Direction>& dirs,
                                           std::optional<std::size_t> bound = std::nullopt);

// Replays a sequence; throws std::logic_error if a step is not the move the
// record describes.
template <class Tag>
Matrix<Tag> replay(const Matrix<Tag>& m, const OpSequence& seq);

std::optional<Partition> is_normal(const BinaryMatrix& m);
std::optional<Partition> is_normal(const IntegralMatrix& m);

Partition normal_form(const BinaryMatrix& m);
Partition normal_form(const IntegralMatrix& m);

template <class Tag>
struct Decomposition {
  Matrix<Tag> p;
  Matrix<Tag> q;
};

Decomposition<binary_tag> decompose(const BinaryMatrix& m);
Decomposition<integral_tag> decompose(const IntegralMatrix& m);

// Inverse of decompose; throws compose_error naming the failed precondition.
BinaryMatrix compose(const BinaryMatrix& p, const BinaryMatrix& q);
IntegralMatrix compose(const IntegralMatrix& p, const IntegralMatrix& q);

// Lowering potentials at the highest-weight vertex of the axis.
Composition crystal_class_potentials(const BinaryMatrix& m, Orientation axis);
Composition crystal_class_potentials(const IntegralMatrix& m, Orientation axis);

}  // namespace dc
