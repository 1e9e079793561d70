#include "dc/doublecrystal.hpp"

#include <stdexcept>

namespace dc {

namespace {

template <class Tag>
std::size_t extent(const Matrix<Tag>& m, Direction d) {
  std::size_t n = is_vertical(d) ? m.rows() : m.cols();
  return n == 0 ? 0 : n - 1;
}

}  // namespace

template <class Tag>
std::pair<Matrix<Tag>, OpSequence> exhaust(const Matrix<Tag>& m, const std::vector<OpRange>& ops) {
  Matrix<Tag> cur = m;
  OpSequence seq;
  for (const auto& op : ops)
    if (op.hi == Interval::npos && (op.direction == Direction::down || op.direction == Direction::right))
      throw usage_error(std::string("exhausting ") + direction_name(op.direction) +
                        " moves needs a bound");
  for (;;) {
    // Lowest admissible index over all requested ranges.
    bool found = false;
    Direction bd{};
    std::size_t bi = 0;
    for (const auto& op : ops) {
      std::size_t hi = op.hi == Interval::npos ? extent(cur, op.direction) : op.hi;
      for (std::size_t i = op.lo; i < hi; ++i) {
        if (found && i >= bi) break;
        if (potential(cur, op.direction, i) > 0) {
          found = true;
          bd = op.direction;
          bi = i;
          break;
        }
      }
    }
    if (!found) break;
    MoveRecord rec{};
    while (apply_move(cur, bd, bi, &rec)) seq.push_back(rec);
  }
  return {std::move(cur), std::move(seq)};
}

template <class Tag>
std::pair<Matrix<Tag>, OpSequence> exhaust(const Matrix<Tag>& m, const std::set<Direction>& dirs,
                                           std::optional<std::size_t> bound) {
  if (dirs.empty()) throw usage_error("exhaust needs at least one direction");
  std::vector<OpRange> ops;
  for (Direction d : dirs) {
    if (d == Direction::up || d == Direction::left) {
      ops.push_back({d, 0, Interval::npos});
    } else {
      if (!bound) throw usage_error(std::string(direction_name(d)) + " exhaustion needs --bound");
      ops.push_back({d, 0, *bound == 0 ? 0 : *bound - 1});
    }
  }
  return exhaust(m, ops);
}

template <class Tag>
Matrix<Tag> replay(const Matrix<Tag>& m, const OpSequence& seq) {
  Matrix<Tag> cur = m;
  for (const auto& r : seq) {
    MoveRecord got{};
    if (!apply_move(cur, r.direction, r.index, &got) || !(got == r))
      throw std::logic_error("operation sequence does not replay");
  }
  return cur;
}

template std::pair<BinaryMatrix, OpSequence> exhaust(const BinaryMatrix&, const std::vector<OpRange>&);
template std::pair<IntegralMatrix, OpSequence> exhaust(const IntegralMatrix&,
                                                       const std::vector<OpRange>&);
template std::pair<BinaryMatrix, OpSequence> exhaust(const BinaryMatrix&, const std::set<Direction>&,
                                                     std::optional<std::size_t>);
template std::pair<IntegralMatrix, OpSequence> exhaust(const IntegralMatrix&,
                                                       const std::set<Direction>&,
                                                       std::optional<std::size_t>);
template BinaryMatrix replay(const BinaryMatrix&, const OpSequence&);
template IntegralMatrix replay(const IntegralMatrix&, const OpSequence&);

std::optional<Partition> is_normal(const BinaryMatrix& m) {
  std::vector<int> rs = row_sums(m).parts();
  if (!Partition::is_partition(rs)) return std::nullopt;
  Partition lam(rs);
  if (m == diagram(lam)) return lam;
  return std::nullopt;
}

std::optional<Partition> is_normal(const IntegralMatrix& m) {
  std::vector<int> rs = row_sums(m).parts();
  if (!Partition::is_partition(rs)) return std::nullopt;
  Partition lam(rs);
  if (m == diagon(lam)) return lam;
  return std::nullopt;
}

namespace {

template <class Tag>
Partition normal_form_impl(const Matrix<Tag>& m) {
  auto p = exhaust(m, std::set<Direction>{Direction::up}).first;
  return Partition(row_sums(p));
}

template <class Tag>
Decomposition<Tag> decompose_impl(const Matrix<Tag>& m) {
  return {exhaust(m, std::set<Direction>{Direction::up}).first,
          exhaust(m, std::set<Direction>{Direction::left}).first};
}

template <class Tag>
bool raising_free(const Matrix<Tag>& m, Direction d) {
  std::size_t n = is_vertical(d) ? m.rows() : m.cols();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (potential(m, d, i) > 0) return false;
  return true;
}

template <class Tag>
Matrix<Tag> compose_impl(const Matrix<Tag>& p, const Matrix<Tag>& q) {
  if (!raising_free(p, Direction::up)) throw compose_error("P admits an upward move");
  if (!raising_free(q, Direction::left)) throw compose_error("Q admits a leftward move");
  Composition rp = row_sums(p);
  Composition cq = col_sums(q);
  bool ok;
  if constexpr (Tag::binary) {
    ok = Partition::is_partition(cq.parts()) && rp == conjugate(Partition(cq));
  } else {
    ok = rp == cq;
  }
  if (!ok) throw compose_error("margins of P and Q are incompatible");
  auto [n, seq] = exhaust(q, std::set<Direction>{Direction::up});
  Matrix<Tag> m = p;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it)
    if (!apply_move(m, Direction::down, it->index))
      throw std::logic_error("compose: inverse move unavailable");
  auto back = decompose_impl(m);
  if (!(back.p == p) || !(back.q == q)) throw std::logic_error("compose: round trip mismatch");
  return m;
}

}  // namespace

Partition normal_form(const BinaryMatrix& m) { return normal_form_impl(m); }
Partition normal_form(const IntegralMatrix& m) { return normal_form_impl(m); }

Decomposition<binary_tag> decompose(const BinaryMatrix& m) { return decompose_impl(m); }
Decomposition<integral_tag> decompose(const IntegralMatrix& m) { return decompose_impl(m); }

BinaryMatrix compose(const BinaryMatrix& p, const BinaryMatrix& q) { return compose_impl(p, q); }
IntegralMatrix compose(const IntegralMatrix& p, const IntegralMatrix& q) {
  return compose_impl(p, q);
}

namespace {

template <class Tag>
Composition class_potentials(const Matrix<Tag>& m, Orientation axis) {
  Direction raise = axis == Orientation::vertical ? Direction::up : Direction::left;
  Direction lower = opposite(raise);
  auto top = exhaust(m, std::set<Direction>{raise}).first;
  std::size_t n = axis == Orientation::vertical ? top.rows() : top.cols();
  std::vector<int> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(potential(top, lower, i));
  return Composition(std::move(v));
}

}  // namespace

Composition crystal_class_potentials(const BinaryMatrix& m, Orientation axis) {
  return class_potentials(m, axis);
}
Composition crystal_class_potentials(const IntegralMatrix& m, Orientation axis) {
  return class_potentials(m, axis);
}

}  // namespace dc
