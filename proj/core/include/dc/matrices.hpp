#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dc/errors.hpp"
#include "dc/shapes.hpp"

namespace dc {

struct binary_tag {
  static constexpr bool binary = true;
  static constexpr const char* name = "binary";
};
struct integral_tag {
  static constexpr bool binary = false;
  static constexpr const char* name = "integral";
};

enum class Mode { binary, integral };

// Dense finite window of an N x N matrix; reads outside the window are 0 and
// writes outside it grow the window. Equality ignores zero padding.
template <class Tag>
class Matrix {
 public:
  using tag = Tag;
  static constexpr bool binary = Tag::binary;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, 0) {}

  static Matrix from_rows(const std::vector<std::vector<int>>& rows) {
    std::size_t w = 0;
    for (const auto& row : rows) w = std::max(w, row.size());
    Matrix m(rows.size(), w);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j]);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }

  int operator()(std::size_t i, std::size_t j) const {
    return (i < r_ && j < c_) ? a_[i * c_ + j] : 0;
  }

  void set(std::size_t i, std::size_t j, int v) {
    if (v < 0) throw precondition_error("negative matrix entry");
    if constexpr (Tag::binary) {
      if (v > 1) throw precondition_error("binary matrix entry must be 0 or 1");
    }
    if (i >= r_ || j >= c_) {
      if (v == 0) return;
      resize(std::max(r_, i + 1), std::max(c_, j + 1));
    }
    a_[i * c_ + j] = v;
  }

  void add(std::size_t i, std::size_t j, int delta) {
    int v = (*this)(i, j);
    if (delta > 0 && v > std::numeric_limits<int>::max() - delta)
      throw domain_error("matrix entry overflow");
    set(i, j, v + delta);
  }

  void resize(std::size_t rows, std::size_t cols) {
    std::vector<int> b(rows * cols, 0);
    for (std::size_t i = 0; i < std::min(r_, rows); ++i)
      for (std::size_t j = 0; j < std::min(c_, cols); ++j) b[i * cols + j] = a_[i * c_ + j];
    r_ = rows;
    c_ = cols;
    a_ = std::move(b);
  }

  // Smallest window holding every nonzero entry.
  Matrix trimmed() const {
    std::size_t h = 0, w = 0;
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j)
        if (a_[i * c_ + j]) {
          h = std::max(h, i + 1);
          w = std::max(w, j + 1);
        }
    Matrix m = *this;
    m.resize(h, w);
    return m;
  }

  bool is_zero() const {
    for (int x : a_)
      if (x) return false;
    return true;
  }

  int total() const {
    int s = 0;
    for (int x : a_) s += x;
    return s;
  }

  std::vector<std::vector<int>> to_rows() const {
    std::vector<std::vector<int>> out(r_, std::vector<int>(c_));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) out[i][j] = a_[i * c_ + j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    std::size_t h = std::max(a.r_, b.r_), w = std::max(a.c_, b.c_);
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < w; ++j)
        if (a(i, j) != b(i, j)) return false;
    return true;
  }

  friend bool operator<(const Matrix& a, const Matrix& b) {
    auto x = a.trimmed(), y = b.trimmed();
    if (x.r_ != y.r_) return x.r_ < y.r_;
    if (x.c_ != y.c_) return x.c_ < y.c_;
    return x.a_ < y.a_;
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<int> a_;
};

using BinaryMatrix = Matrix<binary_tag>;
using IntegralMatrix = Matrix<integral_tag>;

template <class Tag>
Composition row_sums(const Matrix<Tag>& m) {
  std::vector<int> v(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v[i] += m(i, j);
  return Composition(std::move(v));
}

template <class Tag>
Composition col_sums(const Matrix<Tag>& m) {
  std::vector<int> v(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v[j] += m(i, j);
  return Composition(std::move(v));
}

template <class Tag>
std::pair<Composition, Composition> margins(const Matrix<Tag>& m) {
  return {row_sums(m), col_sums(m)};
}

template <class Tag>
Matrix<Tag> transpose(const Matrix<Tag>& m) {
  Matrix<Tag> t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t.set(j, i, m(i, j));
  return t;
}

// Quarter turn on the stored window: row i of m becomes column h-1-i, so the
// columns of the result read from right to left are the rows of m from top
// to bottom. Trim first for canonical results.
template <class Tag>
Matrix<Tag> rotate_quarter_ccw(const Matrix<Tag>& m) {
  std::size_t h = m.rows();
  Matrix<Tag> r(m.cols(), h);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.set(j, h - 1 - i, m(i, j));
  return r;
}

// Inverse of rotate_quarter_ccw for a window of the given original height.
template <class Tag>
Matrix<Tag> unrotate_quarter(const Matrix<Tag>& r, std::size_t h) {
  Matrix<Tag> m(h, r.rows());
  for (std::size_t a = 0; a < r.rows(); ++a)
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (r(a, j)) {
        if (j >= h) throw precondition_error("unrotate: window too small");
        m.set(h - 1 - j, a, r(a, j));
      }
  return m;
}

// Half-open interval [lo, hi) of N; hi = npos means unbounded.
struct Interval {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  std::size_t lo = 0;
  std::size_t hi = npos;

  static Interval first(std::size_t k) { return {0, k}; }   // [[k]]
  static Interval from(std::size_t k) { return {k, npos}; }  // N - [[k]]
  static Interval all() { return {0, npos}; }
  bool has(std::size_t x) const { return x >= lo && x < hi; }
};

template <class Tag>
Matrix<Tag> restrict(const Matrix<Tag>& m, Interval rows, Interval cols) {
  Matrix<Tag> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (rows.has(i) && cols.has(j)) r.set(i, j, m(i, j));
  return r;
}

// diagram(lambda): bits at (i, j) with j < lambda[i]; diagon(lambda): diagonal.
BinaryMatrix diagram(const Partition& lambda);
IntegralMatrix diagon(const Partition& lambda);

BinaryMatrix encode_binary(const Tableau& t);
IntegralMatrix encode_integral(const Tableau& t);

// Inverse of encode; throws decode_error naming the first failing index.
Tableau decode(const BinaryMatrix& m, const SkewShape& shape);
Tableau decode(const IntegralMatrix& m, const SkewShape& shape);

// Tableau conditions (binary BE, integral IE) for shape lambda/kappa.
bool tableau_condition(const BinaryMatrix& m, const SkewShape& shape);
bool tableau_condition(const IntegralMatrix& m, const SkewShape& shape);
// Littlewood-Richardson conditions (binary BL, integral IL) for nu/mu.
bool lr_condition(const BinaryMatrix& m, const SkewShape& shape);
bool lr_condition(const IntegralMatrix& m, const SkewShape& shape);

enum class Condition { tableau, lr };

template <class Tag>
bool condition(const Matrix<Tag>& m, const SkewShape& shape, Condition which) {
  return which == Condition::tableau ? tableau_condition(m, shape) : lr_condition(m, shape);
}

}  // namespace dc
