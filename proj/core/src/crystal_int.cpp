#include "dc/crystal_int.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace dc {

namespace {

// Entry accessor that views the matrix transposed for column operations.
struct View {
  const IntegralMatrix& m;
  bool t;
  int operator()(std::size_t i, std::size_t j) const { return t ? m(j, i) : m(i, j); }
  std::size_t width() const { return t ? m.rows() : m.cols(); }
};

struct Scan {
  int best = 0;
  std::size_t where = 0;
};

// up_i: F(l) = M[i+1,0] + sum_{j<l} (M[i+1,j+1] - M[i,j]), smallest l at the
// maximum. down_i: G(l) = sum_{j>=l} (M[i,j] - M[i+1,j+1]), largest l.
Scan scan_up(const View& v, std::size_t i) {
  Scan s;
  int f = v(i + 1, 0);
  s.best = f;
  s.where = 0;
  for (std::size_t l = 1; l <= v.width(); ++l) {
    f += v(i + 1, l) - v(i, l - 1);
    if (f > s.best) {
      s.best = f;
      s.where = l;
    }
  }
  return s;
}

Scan scan_down(const View& v, std::size_t i) {
  Scan s;
  int g = 0;
  for (std::size_t l = v.width(); l-- > 0;) {
    g += v(i, l) - v(i + 1, l + 1);
    if (g > s.best) {
      s.best = g;
      s.where = l;
    }
  }
  return s;
}

Scan scan(const IntegralMatrix& m, Direction d, std::size_t index) {
  bool t = !is_vertical(d);
  View v{m, t};
  bool raising = d == Direction::up || d == Direction::left;
  return raising ? scan_up(v, index) : scan_down(v, index);
}

}  // namespace

bool transfer_legal(const IntegralMatrix& m, Axis axis, std::size_t k, std::size_t at, int a) {
  if (a == 0) throw precondition_error("transfer amount must be nonzero");
  View v{m, axis == Axis::cols};
  std::size_t l = at;
  int pos = std::max(a, 0), neg = std::max(-a, 0);
  if (l == 0) {
    if (v(k + 1, 0) < a) return false;
  } else {
    int s = 0;
    for (std::size_t lp = l; lp-- > 0;) {
      s += v(k + 1, lp + 1) - v(k, lp);
      if (s < pos) return false;
    }
  }
  int s = 0;
  // Terms beyond the support are zero, so checking up to width+1 suffices.
  for (std::size_t lp = l + 1; lp <= std::max(v.width(), l) + 1; ++lp) {
    s += v(k, lp - 1) - v(k + 1, lp);
    if (s < neg) return false;
  }
  return true;
}

bool apply_transfer(IntegralMatrix& m, Axis axis, std::size_t k, std::size_t at, int a) {
  if (!transfer_legal(m, axis, k, at, a)) return false;
  if (axis == Axis::rows) {
    m.add(k, at, a);
    m.add(k + 1, at, -a);
  } else {
    m.add(at, k, a);
    m.add(at, k + 1, -a);
  }
  return true;
}

int potential(const IntegralMatrix& m, Direction d, std::size_t index) {
  return scan(m, d, index).best;
}

bool apply_move(IntegralMatrix& m, Direction d, std::size_t index, MoveRecord* rec) {
  Scan s = scan(m, d, index);
  if (s.best <= 0) return false;
  std::size_t from_r, from_c, to_r, to_c;
  switch (d) {
    case Direction::up: from_r = index + 1, from_c = s.where, to_r = index, to_c = s.where; break;
    case Direction::down: from_r = index, from_c = s.where, to_r = index + 1, to_c = s.where; break;
    case Direction::left: from_r = s.where, from_c = index + 1, to_r = s.where, to_c = index; break;
    default: from_r = s.where, from_c = index, to_r = s.where, to_c = index + 1; break;
  }
  if (m(from_r, from_c) <= 0) throw std::logic_error("crystal move would create a negative entry");
  m.add(from_r, from_c, -1);
  m.add(to_r, to_c, 1);
  if (rec) *rec = MoveRecord{d, index, from_r, from_c, 1};
  return true;
}

std::optional<std::pair<IntegralMatrix, MoveRecord>> move(const IntegralMatrix& m, Direction d,
                                                         std::size_t index) {
  IntegralMatrix out = m;
  MoveRecord rec{};
  if (!apply_move(out, d, index, &rec)) return std::nullopt;
  return std::make_pair(std::move(out), rec);
}

ParenProfile paren_profile(const IntegralMatrix& m, Axis axis, std::size_t index) {
  View v{m, axis == Axis::cols};
  ParenProfile p;
  for (std::size_t j = 0; j < v.width(); ++j) {
    if (j) p.symbols += '|';
    p.symbols.append(static_cast<std::size_t>(v(index + 1, j)), ')');
    p.symbols.append(static_cast<std::size_t>(v(index, j)), '(');
  }
  p.matched.assign(p.symbols.size(), false);
  std::vector<std::size_t> open;
  for (std::size_t q = 0; q < p.symbols.size(); ++q) {
    char ch = p.symbols[q];
    if (ch == '(') {
      open.push_back(q);
    } else if (ch == ')') {
      if (open.empty()) {
        ++p.unmatched_close;
      } else {
        p.matched[q] = p.matched[open.back()] = true;
        open.pop_back();
      }
    }
  }
  p.unmatched_open = static_cast<int>(open.size());
  return p;
}

}  // namespace dc
