#include "dc/cancellation.hpp"

#include <algorithm>
#include <functional>

#include "dc/crystal_bin.hpp"
#include "dc/crystal_int.hpp"
#include "dc/errors.hpp"

namespace dc {

int edge_symbol(const Composition& alpha, const Partition& lambda) {
  std::size_t n = std::max(alpha.length(), lambda.length());
  std::vector<int> beta(n);
  for (std::size_t i = 0; i < n; ++i) beta[i] = alpha[i] - static_cast<int>(i);
  int sign = 1;
  // insertion sort into decreasing order, counting transpositions
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i; j > 0 && beta[j - 1] <= beta[j]; --j) {
      if (beta[j - 1] == beta[j]) return 0;
      std::swap(beta[j - 1], beta[j]);
      sign = -sign;
    }
  for (std::size_t i = 0; i < n; ++i)
    if (beta[i] != lambda[i] - static_cast<int>(i)) return 0;
  return sign;
}

const char* stage_name(Stage s) {
  switch (s) {
    case Stage::brute: return "brute";
    case Stage::tab_first: return "tab_first";
    case Stage::lr_first: return "lr_first";
    case Stage::fully_reduced: return "fully_reduced";
  }
  return "?";
}

Stage parse_stage(const std::string& s) {
  for (Stage st : {Stage::brute, Stage::tab_first, Stage::lr_first, Stage::fully_reduced})
    if (s == stage_name(st)) return st;
  if (s == "tab-first") return Stage::tab_first;
  if (s == "lr-first") return Stage::lr_first;
  if (s == "fully-reduced" || s == "reduced") return Stage::fully_reduced;
  throw usage_error("unknown stage '" + s + "'");
}

namespace {

bool tab_reduced(Stage s) { return s == Stage::tab_first || s == Stage::fully_reduced; }
bool lr_reduced(Stage s) { return s == Stage::lr_first || s == Stage::fully_reduced; }

int weight(const SkewShape& s) { return s.size(); }

}  // namespace

Box default_box(const SkewShape& shape1, const SkewShape& shape2, Mode mode) {
  std::size_t n = static_cast<std::size_t>(std::max(weight(shape1), weight(shape2)));
  if (mode == Mode::binary)
    return {shape2.outer.length() + n + 1, static_cast<std::size_t>(shape1.outer[0]) + n + 1};
  return {shape1.outer.length() + n + 1, shape2.outer.length() + n + 1};
}

template <class Tag>
int summand(const Matrix<Tag>& m, const SkewShape& shape1, const SkewShape& shape2, Stage stage) {
  int a, b;
  if constexpr (Tag::binary) {
    a = tab_reduced(stage) ? tableau_condition(m, shape1)
                           : edge_symbol(conjugate(shape1.inner) + col_sums(m),
                                         conjugate(shape1.outer));
    if (!a) return 0;
    b = lr_reduced(stage) ? lr_condition(m, shape2)
                          : edge_symbol(shape2.inner + row_sums(m), shape2.outer);
  } else {
    a = tab_reduced(stage) ? tableau_condition(m, shape1)
                           : edge_symbol(shape1.inner + row_sums(m), shape1.outer);
    if (!a) return 0;
    b = lr_reduced(stage) ? lr_condition(m, shape2)
                          : edge_symbol(shape2.inner + col_sums(m), shape2.outer);
  }
  return a * b;
}

std::vector<std::pair<Composition, int>> nonzero_margins(const Composition& base,
                                                         const Partition& lambda, std::size_t n,
                                                         int total) {
  std::size_t N = std::max({n, base.length(), lambda.length()});
  std::vector<int> targets(N);  // lambda_j - j, strictly decreasing
  for (std::size_t j = 0; j < N; ++j) targets[j] = lambda[j] - static_cast<int>(j);
  std::vector<std::pair<Composition, int>> out;
  std::vector<int> r(N, 0), slot(N, 0);
  std::vector<bool> used(N, false);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == N) {
      if (left) return;
      int inv = 0;
      for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = a + 1; b < N; ++b)
          if (slot[a] > slot[b]) ++inv;
      out.emplace_back(Composition(std::vector<int>(r.begin(), r.begin() + n)),
                       inv % 2 ? -1 : 1);
      return;
    }
    for (std::size_t j = 0; j < N; ++j) {
      if (used[j]) continue;
      int ri = targets[j] + static_cast<int>(i) - base[i];
      if (ri < 0 || ri > left || (i >= n && ri != 0)) continue;
      used[j] = true;
      r[i] = ri;
      slot[i] = static_cast<int>(j);
      rec(i + 1, left - ri);
      used[j] = false;
    }
    r[i] = 0;
  };
  if (total >= 0) rec(0, total);
  return out;
}

namespace {

template <class Tag>
void with_margins(const Composition& rows, const Composition& cols, std::size_t h, std::size_t w,
                  const std::function<void(const Matrix<Tag>&)>& visit) {
  if (rows.length() > h || cols.length() > w || rows.size() != cols.size()) return;
  std::vector<int> rr = rows.padded(h), cc = cols.padded(w);
  Matrix<Tag> m(h, w);
  // suffix sums of column needs let us prune early
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
    if (i == h) {
      for (int c : cc)
        if (c) return;
      visit(m);
      return;
    }
    if (j == w) {
      if (rr[i]) return;
      int need = 0;
      for (int c : cc) need += c;
      int cap = 0;
      for (std::size_t q = i + 1; q < h; ++q) cap += rr[q];
      if (need != cap) return;
      rec(i + 1, 0);
      return;
    }
    int hi = std::min(rr[i], cc[j]);
    if constexpr (Tag::binary) hi = std::min(hi, 1);
    int lo = 0;
    if (j + 1 == w) lo = rr[i];  // the last column must absorb the rest
    if (lo > hi) return;
    if constexpr (Tag::binary) {
      if (rr[i] > static_cast<int>(w - j)) return;
    }
    for (int v = lo; v <= hi; ++v) {
      rr[i] -= v;
      cc[j] -= v;
      m.set(i, j, v);
      rec(i, j + 1);
      m.set(i, j, 0);
      rr[i] += v;
      cc[j] += v;
    }
  };
  rec(0, 0);
}

// Margins for one factor: every margin with a nonzero edge symbol, or the
// single margin forced by the condition.
std::vector<Composition> factor_margins(bool reduced, const Composition& base,
                                        const Partition& target, std::size_t n) {
  std::vector<Composition> out;
  if (reduced) {
    std::vector<int> d(std::max(target.length(), base.length()));
    for (std::size_t i = 0; i < d.size(); ++i) {
      d[i] = target[i] - base[i];
      if (d[i] < 0) return out;
    }
    Composition c(d);
    if (c.length() <= n) out.push_back(c);
    return out;
  }
  for (auto& [c, s] : nonzero_margins(base, target, n, target.size() - base.size()))
    out.push_back(c);
  return out;
}

template <class Tag>
void for_each_term(const SkewShape& shape1, const SkewShape& shape2, Stage stage, Box box,
                   const std::function<void(const Matrix<Tag>&, int)>& visit) {
  if (shape1.size() != shape2.size()) return;
  std::vector<Composition> rms, cms;
  if constexpr (Tag::binary) {
    cms = factor_margins(tab_reduced(stage), conjugate(shape1.inner), conjugate(shape1.outer),
                         box.cols);
    rms = factor_margins(lr_reduced(stage), shape2.inner, shape2.outer, box.rows);
  } else {
    rms = factor_margins(tab_reduced(stage), shape1.inner, shape1.outer, box.rows);
    cms = factor_margins(lr_reduced(stage), shape2.inner, shape2.outer, box.cols);
  }
  for (const auto& r : rms)
    for (const auto& c : cms)
      with_margins<Tag>(r, c, box.rows, box.cols, [&](const Matrix<Tag>& m) {
        int s = summand(m, shape1, shape2, stage);
        if (s) visit(m, s);
      });
}

template <class Tag>
long sum_in_box(const SkewShape& shape1, const SkewShape& shape2, Stage stage, Box box) {
  long total = 0;
  for_each_term<Tag>(shape1, shape2, stage, box, [&](const Matrix<Tag>&, int s) { total += s; });
  return total;
}

}  // namespace

std::vector<BinaryMatrix> binary_with_margins(const Composition& rows, const Composition& cols,
                                              std::size_t h, std::size_t w) {
  std::vector<BinaryMatrix> out;
  with_margins<binary_tag>(rows, cols, h, w, [&](const BinaryMatrix& m) { out.push_back(m); });
  return out;
}

std::vector<IntegralMatrix> integral_with_margins(const Composition& rows,
                                                  const Composition& cols, std::size_t h,
                                                  std::size_t w) {
  std::vector<IntegralMatrix> out;
  with_margins<integral_tag>(rows, cols, h, w,
                             [&](const IntegralMatrix& m) { out.push_back(m); });
  return out;
}

template <class Tag>
std::vector<std::pair<Matrix<Tag>, int>> terms(const SkewShape& shape1, const SkewShape& shape2,
                                               Stage stage, Box box) {
  std::vector<std::pair<Matrix<Tag>, int>> out;
  for_each_term<Tag>(shape1, shape2, stage, box,
                     [&](const Matrix<Tag>& m, int s) { out.emplace_back(m, s); });
  return out;
}

long alternating_sum(const SkewShape& shape1, const SkewShape& shape2, Stage stage, Mode mode,
                     std::optional<Box> box, bool check_stable) {
  Box b = box ? *box : default_box(shape1, shape2, mode);
  auto eval = [&](Box bx) {
    return mode == Mode::binary ? sum_in_box<binary_tag>(shape1, shape2, stage, bx)
                                : sum_in_box<integral_tag>(shape1, shape2, stage, bx);
  };
  long v = eval(b);
  if (check_stable) {
    long w = eval({b.rows + 1, b.cols + 1});
    if (v != w)
      throw box_too_small("sum changed from " + std::to_string(v) + " to " + std::to_string(w) +
                          " when the box grew");
  }
  return v;
}

long lr_count(const SkewShape& shape1, const SkewShape& shape2, Mode mode) {
  if (shape1.size() != shape2.size()) return 0;
  long n = 0;
  if (mode == Mode::binary) {
    Composition cols = conjugate(shape1.outer) - conjugate(shape1.inner);
    Composition rows = shape2.outer - shape2.inner;
    with_margins<binary_tag>(rows, cols, rows.length(), cols.length(), [&](const BinaryMatrix& m) {
      if (tableau_condition(m, shape1) && lr_condition(m, shape2)) ++n;
    });
  } else {
    Composition rows = shape1.outer - shape1.inner;
    Composition cols = shape2.outer - shape2.inner;
    with_margins<integral_tag>(rows, cols, rows.length(), cols.length(),
                               [&](const IntegralMatrix& m) {
                                 if (tableau_condition(m, shape1) && lr_condition(m, shape2)) ++n;
                               });
  }
  return n;
}

namespace {

template <class M>
void ladder(M& m, Direction d, std::size_t idx, int times) {
  for (int t = 0; t < times; ++t)
    if (!apply_move(m, d, idx)) throw std::logic_error("ladder is shorter than the displacement");
}

// Binary LR pairing (vertical ladders), witness: maximal l, then minimal i.
BinaryMatrix binary_lr(const BinaryMatrix& m, const SkewShape& nm) {
  std::size_t w = m.cols();
  for (std::size_t l = w; l-- > 0;) {
    std::vector<int> beta = nm.inner.padded(std::max(nm.inner.length(), m.rows()) + 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = l; j < w; ++j) beta[i] += m(i, j);
    for (std::size_t i = 0; i + 1 < beta.size(); ++i) {
      if (beta[i + 1] != beta[i] + 1) continue;
      Composition alpha = nm.inner + row_sums(m);
      int d = alpha[i + 1] - alpha[i] - 1;
      if (d == 0) throw not_cancellable("the summand vanishes (d = 0)");
      BinaryMatrix r = m;
      if (d > 0)
        ladder(r, Direction::up, i, d);
      else
        ladder(r, Direction::down, i, -d);
      return r;
    }
  }
  throw not_cancellable("no witness; the summand vanishes");
}

// Integral LR pairing (horizontal ladders), witness: first row k, maximal j.
IntegralMatrix integral_lr(const IntegralMatrix& m, const SkewShape& nm) {
  std::vector<int> a = nm.inner.padded(std::max(nm.inner.length(), m.cols()) + 1);
  for (std::size_t k = 0; k < m.rows(); ++k) {
    std::vector<int> b = a;
    for (std::size_t j = 0; j < m.cols(); ++j) b[j] += m(k, j);
    for (std::size_t j = b.size() - 1; j-- > 0;) {
      if (a[j] >= b[j + 1]) continue;
      Composition alpha = nm.inner + col_sums(m);
      int d = alpha[j + 1] - alpha[j] - 1;
      if (d == 0) throw not_cancellable("the summand vanishes (d = 0)");
      IntegralMatrix r = m;
      if (d > 0)
        ladder(r, Direction::left, j, d);
      else
        ladder(r, Direction::right, j, -d);
      return r;
    }
    a = b;
  }
  throw not_cancellable("no witness; the summand vanishes");
}

}  // namespace

BinaryMatrix involution(const BinaryMatrix& m, Condition failing, const SkewShape& shape) {
  if (condition(m, shape, failing)) throw not_cancellable("matrix satisfies the condition");
  if (failing == Condition::lr) return binary_lr(m, shape);
  std::size_t h = m.rows();
  SkewShape conj(conjugate(shape.outer), conjugate(shape.inner));
  return unrotate_quarter(binary_lr(rotate_quarter_ccw(m), conj), h);
}

IntegralMatrix involution(const IntegralMatrix& m, Condition failing, const SkewShape& shape) {
  if (condition(m, shape, failing)) throw not_cancellable("matrix satisfies the condition");
  if (failing == Condition::lr) return integral_lr(m, shape);
  return transpose(integral_lr(transpose(m), shape));
}

template int summand(const BinaryMatrix&, const SkewShape&, const SkewShape&, Stage);
template int summand(const IntegralMatrix&, const SkewShape&, const SkewShape&, Stage);
template std::vector<std::pair<BinaryMatrix, int>> terms<binary_tag>(const SkewShape&,
                                                                      const SkewShape&, Stage,
                                                                      Box);
template std::vector<std::pair<IntegralMatrix, int>> terms<integral_tag>(const SkewShape&,
                                                                          const SkewShape&, Stage,
                                                                          Box);

}  // namespace dc
