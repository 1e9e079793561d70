#pragma once

#include <optional>
#include <utility>

#include "dc/crystal_bin.hpp"

namespace dc {

// Literal evaluation of the transfer conditions: rows k,k+1 at column `at`
// (axis rows) or columns k,k+1 at row `at` (axis cols), moving a units
// (a > 0 up/left, a < 0 down/right).
bool transfer_legal(const IntegralMatrix& m, Axis axis, std::size_t k, std::size_t at, int a);

// Applies a transfer after checking legality; returns false if illegal.
bool apply_transfer(IntegralMatrix& m, Axis axis, std::size_t k, std::size_t at, int a);

bool apply_move(IntegralMatrix& m, Direction d, std::size_t index, MoveRecord* rec = nullptr);

std::optional<std::pair<IntegralMatrix, MoveRecord>> move(const IntegralMatrix& m, Direction d,
                                                         std::size_t index);

int potential(const IntegralMatrix& m, Direction d, std::size_t index);

// Rows i,i+1: per column j, M[i+1,j] copies of ')' then M[i,j] copies of
// '('; columns separated by '|'. Columns are handled on the transpose.
// Unmatched '(' count the down (right) potential, unmatched ')' the up (left).
ParenProfile paren_profile(const IntegralMatrix& m, Axis axis, std::size_t index);

}  // namespace dc
