#include "dc/schutzenberger.hpp"

#include <stdexcept>

#include "dc/doublecrystal.hpp"
#include "dc/errors.hpp"
#include "dc/matrices.hpp"

namespace dc {

namespace {

template <class Tag>
Composition rsum_cols(const Matrix<Tag>& m, Interval cols) {
  return row_sums(restrict(m, Interval::all(), cols));
}

template <class Tag>
void set_column(Matrix<Tag>& m, std::size_t j, const Composition& c) {
  for (std::size_t i = 0; i < c.length(); ++i)
    if (c[i]) m.set(i, j, c[i]);
}

Flavor opposite_flavor(Flavor f) {
  switch (f) {
    case Flavor::sst: return Flavor::reverse_sst;
    case Flavor::reverse_sst: return Flavor::sst;
    case Flavor::transpose_sst: return Flavor::reverse_transpose_sst;
    case Flavor::reverse_transpose_sst: return Flavor::transpose_sst;
  }
  return f;
}

// (c[k-1], ..., c[0])
Composition reversed(const Composition& c, std::size_t k) {
  std::vector<int> v = c.padded(k);
  if (c.length() > k) throw std::logic_error("dual: margin longer than the bound");
  return Composition(std::vector<int>(v.rbegin(), v.rend()));
}

Partition as_partition(const Composition& c) {
  if (!Partition::is_partition(c.parts()))
    throw std::logic_error("dual: margin " + c.str() + " is not a partition");
  return Partition(c.parts());
}

}  // namespace

Tableau dual(const Tableau& t, std::optional<std::size_t> bound) {
  if (!t.valid()) throw precondition_error("dual: not a valid tableau");
  if (!t.straight()) throw precondition_error("dual: tableau is not straight");
  const auto& ch = t.chain;
  std::size_t n = ch.size() ? ch.size() - 1 : 0;  // number of letters
  Partition shape = t.shape().outer;
  std::size_t k = bound ? *bound : shape.length();
  if (shape[k] != 0) throw precondition_error("dual: bound smaller than the number of rows");
  Tableau out;
  if (k == 0 || n == 0) {
    out.flavor = opposite_flavor(t.flavor);
    out.chain = ch;
    return out;
  }
  auto rev = [k](const Partition& p) { return revert(p, k); };
  switch (t.flavor) {
    case Flavor::sst: {
      IntegralMatrix p(k, n);
      for (std::size_t j = 0; j < n; ++j) set_column(p, j, ch[j + 1] - ch[j]);
      IntegralMatrix pt = exhaust(p, {Direction::down}, k).first;
      out.flavor = Flavor::reverse_sst;
      for (std::size_t j = 0; j <= n; ++j)
        out.chain.push_back(as_partition(reversed(rsum_cols(pt, Interval::from(j)), k)));
      break;
    }
    case Flavor::reverse_sst: {
      IntegralMatrix pt(k, n);
      for (std::size_t j = 0; j < n; ++j) set_column(pt, j, rev(ch[j]) - rev(ch[j + 1]));
      IntegralMatrix p = exhaust(pt, {Direction::up}).first;
      out.flavor = Flavor::sst;
      for (std::size_t j = 0; j <= n; ++j)
        out.chain.push_back(as_partition(rsum_cols(p, Interval::first(j))));
      break;
    }
    case Flavor::reverse_transpose_sst: {
      BinaryMatrix p(k, n);
      for (std::size_t j = 0; j < n; ++j) set_column(p, j, ch[j] - ch[j + 1]);
      BinaryMatrix pt = exhaust(p, {Direction::down}, k).first;
      out.flavor = Flavor::transpose_sst;
      for (std::size_t j = 0; j <= n; ++j)
        out.chain.push_back(
            as_partition(reversed(rsum_cols(pt, Interval::first(j)), k)));
      break;
    }
    case Flavor::transpose_sst: {
      BinaryMatrix pt(k, n);
      for (std::size_t j = 0; j < n; ++j) set_column(pt, j, rev(ch[j + 1]) - rev(ch[j]));
      BinaryMatrix p = exhaust(pt, {Direction::up}).first;
      out.flavor = Flavor::reverse_transpose_sst;
      for (std::size_t j = 0; j <= n; ++j)
        out.chain.push_back(as_partition(rsum_cols(p, Interval::from(j))));
      break;
    }
  }
  if (!out.valid()) throw std::logic_error("dual: result is not a tableau");
  return out;
}

Tableau rotate_complement(const Tableau& t, std::size_t k, std::size_t l) {
  Tableau out;
  out.flavor = opposite_flavor(t.flavor);
  std::vector<int> rho(k, static_cast<int>(l));
  // An empty chain is the empty tableau: the constant chain at the empty shape.
  const std::vector<Partition> empty{Partition{}};
  for (const auto& p : t.chain.empty() ? empty : t.chain) {
    if (p[k] != 0 || p[0] > static_cast<int>(l))
      throw precondition_error("rotate_complement: " + p.str() + " does not fit the rectangle");
    Composition r = revert(p, k);
    std::vector<int> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = rho[i] - r[i];
    out.chain.push_back(Partition(v));
  }
  return out;
}

}  // namespace dc
