#include "dc/crystal_bin.hpp"

#include <algorithm>
#include <vector>

namespace dc {

const char* direction_name(Direction d) {
  switch (d) {
    case Direction::up: return "up";
    case Direction::down: return "down";
    case Direction::left: return "left";
    case Direction::right: return "right";
  }
  return "?";
}

Direction parse_direction(const std::string& s) {
  if (s == "up") return Direction::up;
  if (s == "down") return Direction::down;
  if (s == "left") return Direction::left;
  if (s == "right") return Direction::right;
  throw usage_error("unknown direction '" + s + "'");
}

Direction opposite(Direction d) {
  switch (d) {
    case Direction::up: return Direction::down;
    case Direction::down: return Direction::up;
    case Direction::left: return Direction::right;
    case Direction::right: return Direction::left;
  }
  return d;
}

bool interchangeable(const BinaryMatrix& m, std::size_t k, std::size_t l, Orientation o) {
  if (o == Orientation::vertical) {
    if (m(k, l) == m(k + 1, l)) return false;
    int a = 0, b = 0;
    for (std::size_t lp = l; lp-- > 0;) {
      a += m(k, lp);
      b += m(k + 1, lp);
      if (a < b) return false;
    }
    a = b = 0;
    for (std::size_t lp = l + 1; lp < m.cols(); ++lp) {
      a += m(k, lp);
      b += m(k + 1, lp);
      if (a > b) return false;
    }
    return true;
  }
  if (m(k, l) == m(k, l + 1)) return false;
  int a = 0, b = 0;
  for (std::size_t kp = k; kp-- > 0;) {
    a += m(kp, l);
    b += m(kp, l + 1);
    if (a > b) return false;
  }
  a = b = 0;
  for (std::size_t kp = k + 1; kp < m.rows(); ++kp) {
    a += m(kp, l);
    b += m(kp, l + 1);
    if (a < b) return false;
  }
  return true;
}

namespace {

// For up_i: f(l) = sum_{j>=l} (M[i+1,j] - M[i,j]); the move is at the
// largest l attaining the maximum. For down_i: g(l) = sum_{j<l} (M[i,j] -
// M[i+1,j]); the move is at column l-1 for the smallest l attaining it.
// Horizontal moves are the same scans with the roles of rows and columns
// exchanged through the quarter turn.
struct Scan {
  int best = 0;
  std::size_t where = 0;
};

Scan scan(const BinaryMatrix& m, Direction d, std::size_t idx) {
  Scan s;
  switch (d) {
    case Direction::up: {
      int f = 0;
      for (std::size_t l = m.cols(); l-- > 0;) {
        f += m(idx + 1, l) - m(idx, l);
        if (f > s.best) {
          s.best = f;
          s.where = l;
        }
      }
      break;
    }
    case Direction::down: {
      int g = 0;
      for (std::size_t l = 1; l <= m.cols(); ++l) {
        g += m(idx, l - 1) - m(idx + 1, l - 1);
        if (g > s.best) {
          s.best = g;
          s.where = l - 1;
        }
      }
      break;
    }
    case Direction::left: {
      // F(k) = sum_{i<k} (M[i,j+1] - M[i,j]); row k-1 for the smallest k.
      int f = 0;
      for (std::size_t k = 1; k <= m.rows(); ++k) {
        f += m(k - 1, idx + 1) - m(k - 1, idx);
        if (f > s.best) {
          s.best = f;
          s.where = k - 1;
        }
      }
      break;
    }
    case Direction::right: {
      // G(k) = sum_{i>=k} (M[i,j] - M[i,j+1]); row k for the largest k.
      int g = 0;
      for (std::size_t k = m.rows(); k-- > 0;) {
        g += m(k, idx) - m(k, idx + 1);
        if (g > s.best) {
          s.best = g;
          s.where = k;
        }
      }
      break;
    }
  }
  return s;
}

}  // namespace

int potential(const BinaryMatrix& m, Direction d, std::size_t index) {
  return scan(m, d, index).best;
}

bool apply_move(BinaryMatrix& m, Direction d, std::size_t index, MoveRecord* rec) {
  Scan s = scan(m, d, index);
  if (s.best == 0) return false;
  std::size_t r = 0, c = 0, r2 = 0, c2 = 0;
  switch (d) {
    case Direction::up: r = index + 1, c = s.where, r2 = index, c2 = s.where; break;
    case Direction::down: r = index, c = s.where, r2 = index + 1, c2 = s.where; break;
    case Direction::left: r = s.where, c = index + 1, r2 = s.where, c2 = index; break;
    case Direction::right: r = s.where, c = index, r2 = s.where, c2 = index + 1; break;
  }
  m.set(r, c, 0);
  m.set(r2, c2, 1);
  if (rec) *rec = MoveRecord{d, index, r, c, 1};
  return true;
}

std::optional<std::pair<BinaryMatrix, MoveRecord>> move(const BinaryMatrix& m, Direction d,
                                                       std::size_t index) {
  BinaryMatrix out = m;
  MoveRecord rec{};
  if (!apply_move(out, d, index, &rec)) return std::nullopt;
  return std::make_pair(std::move(out), rec);
}

ParenProfile paren_profile(const BinaryMatrix& m, Axis axis, std::size_t index) {
  ParenProfile p;
  if (axis == Axis::rows) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      int a = m(index, j), b = m(index + 1, j);
      p.symbols += (a == 0 && b == 1) ? '(' : (a == 1 && b == 0) ? ')' : '-';
    }
  } else {
    // Quarter turn: rows read bottom to top become columns left to right.
    for (std::size_t k = m.rows(); k-- > 0;) {
      int a = m(k, index), b = m(k, index + 1);
      p.symbols += (a == 0 && b == 1) ? '(' : (a == 1 && b == 0) ? ')' : '-';
    }
  }
  p.matched.assign(p.symbols.size(), false);
  std::vector<std::size_t> open;
  for (std::size_t q = 0; q < p.symbols.size(); ++q) {
    if (p.symbols[q] == '(') {
      open.push_back(q);
    } else if (p.symbols[q] == ')') {
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
