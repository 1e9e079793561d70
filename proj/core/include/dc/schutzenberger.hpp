#pragma once

#include <cstddef>
#include <optional>

#include "dc/shapes.hpp"

namespace dc {

// Schutzenberger dual of a straight tableau, by exhausting the crystal
// operations opposite to those characterizing its encoding. The result has
// the reverse flavor (sst <-> reverse_sst, transpose_sst <->
// reverse_transpose_sst) and the same weight. k defaults to the number of
// rows of the shape.
Tableau dual(const Tableau& t, std::optional<std::size_t> k = std::nullopt);

// Half-turn rotation inside the k x l rectangle rho: pi -> rho - revert(pi, k)
// for every chain member; flips forward/reverse.
Tableau rotate_complement(const Tableau& t, std::size_t k, std::size_t l);

}  // namespace dc
