#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dc/matrices.hpp"

namespace dc {

using Square = std::pair<int, int>;

struct Picture {
  SkewShape dom, cod;
  std::map<Square, Square> map;

  Picture inverse() const;
  bool operator==(const Picture&) const = default;
};

// Bijectivity and both order implications over all square pairs.
bool validate(const std::map<Square, Square>& f, const SkewShape& dom, const SkewShape& cod);
inline bool validate(const Picture& p) { return validate(p.map, p.dom, p.cod); }

// Int: (domain row, codomain row) counts. Bin: (codomain row, domain column).
IntegralMatrix project_int(const Picture& p);
BinaryMatrix project_bin(const Picture& p);

// The picture with the given projection; squares are assigned in Semitic
// order (integral) or Kanji order (binary). Throws lift_error unless m
// satisfies the tableau condition for dom and the LR condition for cod.
Picture lift(const IntegralMatrix& m, const SkewShape& dom, const SkewShape& cod);
Picture lift(const BinaryMatrix& m, const SkewShape& dom, const SkewShape& cod);

constexpr int kPictureCap = 8;

// All pictures dom -> cod; throws size_error beyond kPictureCap squares.
std::vector<Picture> enumerate_pictures(const SkewShape& dom, const SkewShape& cod);

}  // namespace dc
