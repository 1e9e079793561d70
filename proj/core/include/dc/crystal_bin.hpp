#pragma once

#include <optional>
#include <string>
#include <utility>

#include "dc/matrices.hpp"

namespace dc {

enum class Direction { up, down, left, right };

const char* direction_name(Direction d);
Direction parse_direction(const std::string& s);
Direction opposite(Direction d);
inline bool is_vertical(Direction d) { return d == Direction::up || d == Direction::down; }

enum class Orientation { vertical, horizontal };
enum class Axis { rows, cols };

// One applied move: direction, ladder index (row pair i,i+1 or column pair
// j,j+1) and the cell of the moved unit before the move.
struct MoveRecord {
  Direction direction;
  std::size_t index;
  std::size_t row, col;
  int amount = 1;
  bool operator==(const MoveRecord&) const = default;
};

// Literal test of the interchangeability conditions. Vertical: the pair
// (M[k,l], M[k+1,l]); horizontal: the pair (M[k,l], M[k,l+1]).
bool interchangeable(const BinaryMatrix& m, std::size_t k, std::size_t l, Orientation o);

// In-place single move; returns false (leaving m untouched) if none exists.
bool apply_move(BinaryMatrix& m, Direction d, std::size_t index, MoveRecord* rec = nullptr);

std::optional<std::pair<BinaryMatrix, MoveRecord>> move(const BinaryMatrix& m, Direction d,
                                                       std::size_t index);

// num / ndm / nlm / nrm.
int potential(const BinaryMatrix& m, Direction d, std::size_t index);

struct ParenProfile {
  std::string symbols;
  // matched[p] for each position of symbols (false for separators and '-').
  std::vector<bool> matched;
  int unmatched_open = 0;
  int unmatched_close = 0;
};

// Rows i,i+1: '(' for (0,1)^T, ')' for (1,0)^T, '-' otherwise; columns use
// the quarter-turn picture.
ParenProfile paren_profile(const BinaryMatrix& m, Axis axis, std::size_t index);

}  // namespace dc
