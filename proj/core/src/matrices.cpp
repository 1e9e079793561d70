#include "dc/matrices.hpp"

namespace dc {

namespace {

std::vector<int> add_row(std::vector<int> acc, const BinaryMatrix& m, std::size_t i) {
  if (acc.size() < m.cols()) acc.resize(m.cols(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j) acc[j] += m(i, j);
  return acc;
}

template <class Tag>
std::vector<int> column(const Matrix<Tag>& m, std::size_t j) {
  std::vector<int> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

template <class Tag>
std::vector<int> row(const Matrix<Tag>& m, std::size_t i) {
  std::vector<int> v(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) v[j] = m(i, j);
  return v;
}

std::vector<int> plus(std::vector<int> a, const std::vector<int>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

void require_sst(const Tableau& t) {
  if (t.flavor != Flavor::sst || !t.valid())
    throw precondition_error("encode expects a valid semistandard tableau");
}

}  // namespace

BinaryMatrix diagram(const Partition& lambda) {
  BinaryMatrix m(lambda.length(), lambda.empty() ? 0 : lambda[0]);
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) m.set(i, j, 1);
  return m;
}

IntegralMatrix diagon(const Partition& lambda) {
  IntegralMatrix m(lambda.length(), lambda.length());
  for (std::size_t i = 0; i < lambda.length(); ++i) m.set(i, i, lambda[i]);
  return m;
}

BinaryMatrix encode_binary(const Tableau& t) {
  require_sst(t);
  BinaryMatrix m;
  for (std::size_t i = 0; i + 1 < t.chain.size(); ++i) {
    Partition a = conjugate(t.chain[i]), b = conjugate(t.chain[i + 1]);
    for (std::size_t j = 0; j < b.length(); ++j) {
      int d = b[j] - a[j];
      if (d) m.set(i, j, d);
    }
  }
  return m;
}

IntegralMatrix encode_integral(const Tableau& t) {
  require_sst(t);
  IntegralMatrix m;
  for (std::size_t j = 0; j + 1 < t.chain.size(); ++j) {
    const auto& a = t.chain[j];
    const auto& b = t.chain[j + 1];
    for (std::size_t i = 0; i < b.length(); ++i) {
      int d = b[i] - a[i];
      if (d) m.set(i, j, d);
    }
  }
  return m;
}

Tableau decode(const BinaryMatrix& m, const SkewShape& shape) {
  Partition lt = conjugate(shape.outer), kt = conjugate(shape.inner);
  if (col_sums(m) != lt - kt)
    throw decode_error("column sums differ from " + lt.str() + " - " + kt.str(), 0);
  Tableau t;
  t.flavor = Flavor::sst;
  std::vector<int> acc = kt.parts();
  t.chain.push_back(shape.inner);
  for (std::size_t k = 0; k < m.rows(); ++k) {
    acc = add_row(acc, m, k);
    if (!Partition::is_partition(acc))
      throw decode_error("partial sum through row " + std::to_string(k) + " is not a partition",
                         k + 1);
    t.chain.push_back(conjugate(Partition(acc)));
  }
  return t;
}

Tableau decode(const IntegralMatrix& m, const SkewShape& shape) {
  if (row_sums(m) != shape.outer - shape.inner)
    throw decode_error("row sums differ from " + shape.outer.str() + " - " + shape.inner.str(), 0);
  Tableau t;
  t.flavor = Flavor::sst;
  std::vector<int> acc = shape.inner.parts();
  t.chain.push_back(shape.inner);
  for (std::size_t l = 0; l < m.cols(); ++l) {
    std::vector<int> next = plus(acc, column(m, l));
    if (!strip_le(Composition(acc), Composition(next), Strip::horizontal))
      throw decode_error("column " + std::to_string(l) + " does not add a horizontal strip", l);
    acc = next;
    t.chain.emplace_back(acc);
  }
  return t;
}

bool tableau_condition(const BinaryMatrix& m, const SkewShape& shape) {
  Partition lt = conjugate(shape.outer), kt = conjugate(shape.inner);
  if (col_sums(m) != lt - kt) return false;
  std::vector<int> acc = kt.parts();
  for (std::size_t k = 0; k < m.rows(); ++k) {
    acc = add_row(acc, m, k);
    if (!Partition::is_partition(acc)) return false;
  }
  return true;
}

bool tableau_condition(const IntegralMatrix& m, const SkewShape& shape) {
  if (row_sums(m) != shape.outer - shape.inner) return false;
  std::vector<int> acc = shape.inner.parts();
  for (std::size_t l = 0; l < m.cols(); ++l) {
    std::vector<int> next = plus(acc, column(m, l));
    if (!strip_le(Composition(acc), Composition(next), Strip::horizontal)) return false;
    acc = std::move(next);
  }
  return true;
}

bool lr_condition(const BinaryMatrix& m, const SkewShape& shape) {
  if (row_sums(m) != shape.outer - shape.inner) return false;
  std::vector<int> acc = shape.inner.parts();
  for (std::size_t l = m.cols(); l-- > 0;) {
    acc = plus(acc, column(m, l));
    if (!Partition::is_partition(acc)) return false;
  }
  return true;
}

bool lr_condition(const IntegralMatrix& m, const SkewShape& shape) {
  if (col_sums(m) != shape.outer - shape.inner) return false;
  std::vector<int> acc = shape.inner.parts();
  for (std::size_t k = 0; k < m.rows(); ++k) {
    std::vector<int> next = plus(acc, row(m, k));
    if (!strip_le(Composition(acc), Composition(next), Strip::horizontal)) return false;
    acc = std::move(next);
  }
  return true;
}

}  // namespace dc
