#pragma once

#include <vector>

#include "dc/matrices.hpp"
#include "golden.hpp"

namespace testdata {

// Vertical moves example, 3 x 13.
inline dc::BinaryMatrix wide_binary() {
  return dc::BinaryMatrix::from_rows({{1, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 1},
                                      {0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 1, 1, 1},
                                      {0, 1, 0, 1, 0, 0, 1, 1, 1, 0, 1, 0, 1}});
}

// Vertical transfers example, 2 x 9.
inline dc::IntegralMatrix wide_integral() {
  return dc::IntegralMatrix::from_rows({{1, 2, 1, 3, 3, 1, 2, 4, 0}, {2, 1, 1, 4, 2, 0, 5, 2, 0}});
}

inline dc::Tableau running_t() { return golden::tableau(dc::Flavor::sst, golden::kT); }

}  // namespace testdata
