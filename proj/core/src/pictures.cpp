#include "dc/pictures.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "dc/errors.hpp"

namespace dc {

namespace {

bool le_nw(const Square& a, const Square& b) { return a.first <= b.first && a.second <= b.second; }
bool le_ne(const Square& a, const Square& b) { return a.first <= b.first && a.second >= b.second; }

// Order conditions for one ordered pair of assigned squares.
bool compatible(const Square& s, const Square& fs, const Square& t, const Square& ft) {
  if (le_nw(s, t) && !le_ne(fs, ft)) return false;
  if (le_nw(fs, ft) && !le_ne(s, t)) return false;
  return true;
}

std::vector<Square> semitic(const SkewShape& sh) {
  auto cells = sh.cells();
  std::sort(cells.begin(), cells.end(), [](const Square& a, const Square& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  });
  return cells;
}

std::vector<Square> kanji(const SkewShape& sh) {
  auto cells = sh.cells();
  std::sort(cells.begin(), cells.end(), [](const Square& a, const Square& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  return cells;
}

// Backtracking over images of dom squares in the given order. accept(s, t)
// filters candidates beyond the order conditions; take/untake maintain the
// caller's bookkeeping. Stops after the first hit when first_only is set.
void search(const std::vector<Square>& order, const SkewShape& cod,
            const std::function<bool(const Square&, const Square&)>& accept,
            const std::function<void(const Square&, const Square&, int)>& adjust,
            const std::function<void(const std::map<Square, Square>&)>& found, bool first_only) {
  auto targets = cod.cells();
  std::map<Square, Square> f;
  std::set<Square> used;
  bool done = false;
  std::function<void(std::size_t)> rec = [&](std::size_t q) {
    if (done) return;
    if (q == order.size()) {
      found(f);
      if (first_only) done = true;
      return;
    }
    const Square& s = order[q];
    for (const auto& t : targets) {
      if (used.count(t) || !accept(s, t)) continue;
      bool ok = true;
      for (const auto& [u, fu] : f)
        if (!compatible(s, t, u, fu) || !compatible(u, fu, s, t)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      f[s] = t;
      used.insert(t);
      adjust(s, t, -1);
      rec(q + 1);
      adjust(s, t, +1);
      used.erase(t);
      f.erase(s);
      if (done) return;
    }
  };
  rec(0);
}

}  // namespace

Picture Picture::inverse() const {
  Picture p{cod, dom, {}};
  for (const auto& [s, t] : map) p.map[t] = s;
  return p;
}

bool validate(const std::map<Square, Square>& f, const SkewShape& dom, const SkewShape& cod) {
  auto ds = dom.cells(), cs = cod.cells();
  if (f.size() != ds.size() || ds.size() != cs.size()) return false;
  std::set<Square> image;
  for (const auto& s : ds) {
    auto it = f.find(s);
    if (it == f.end() || !cod.has(it->second.first, it->second.second)) return false;
    image.insert(it->second);
  }
  if (image.size() != cs.size()) return false;
  for (const auto& [s, fs] : f)
    for (const auto& [t, ft] : f)
      if (!compatible(s, fs, t, ft)) return false;
  return true;
}

IntegralMatrix project_int(const Picture& p) {
  IntegralMatrix m;
  for (const auto& [s, t] : p.map) m.add(s.first, t.first, 1);
  return m;
}

BinaryMatrix project_bin(const Picture& p) {
  IntegralMatrix counts;
  for (const auto& [s, t] : p.map) counts.add(t.first, s.second, 1);
  BinaryMatrix m;
  for (std::size_t i = 0; i < counts.rows(); ++i)
    for (std::size_t j = 0; j < counts.cols(); ++j)
      if (counts(i, j)) m.set(i, j, counts(i, j));  // rejects counts above 1
  return m;
}

namespace {

template <class Tag>
Picture lift_impl(const Matrix<Tag>& m, const SkewShape& dom, const SkewShape& cod) {
  if (!tableau_condition(m, dom)) throw lift_error("matrix fails the tableau condition for " + dom.str());
  if (!lr_condition(m, cod)) throw lift_error("matrix fails the LR condition for " + cod.str());
  IntegralMatrix left;  // remaining counts
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j)) left.set(i, j, m(i, j));
  // integral: (domain row, codomain row); binary: (codomain row, domain column)
  auto key = [](const Square& s, const Square& t) {
    return Tag::binary ? Square{t.first, s.second} : Square{s.first, t.first};
  };
  auto accept = [&](const Square& s, const Square& t) {
    auto [a, b] = key(s, t);
    return left(a, b) > 0;
  };
  auto adjust = [&](const Square& s, const Square& t, int d) {
    auto [a, b] = key(s, t);
    left.add(a, b, d);
  };
  std::optional<Picture> out;
  search(Tag::binary ? kanji(dom) : semitic(dom), cod, accept, adjust,
         [&](const std::map<Square, Square>& f) { out = Picture{dom, cod, f}; }, true);
  if (!out) throw lift_error("no picture has this projection");
  return *out;
}

}  // namespace

Picture lift(const IntegralMatrix& m, const SkewShape& dom, const SkewShape& cod) {
  return lift_impl(m, dom, cod);
}

Picture lift(const BinaryMatrix& m, const SkewShape& dom, const SkewShape& cod) {
  return lift_impl(m, dom, cod);
}

std::vector<Picture> enumerate_pictures(const SkewShape& dom, const SkewShape& cod) {
  if (dom.size() > kPictureCap || cod.size() > kPictureCap)
    throw size_error("picture enumeration is capped at " + std::to_string(kPictureCap) +
                     " squares");
  std::vector<Picture> out;
  if (dom.size() != cod.size()) return out;
  search(
      semitic(dom), cod, [](const Square&, const Square&) { return true; },
      [](const Square&, const Square&, int) {},
      [&](const std::map<Square, Square>& f) { out.push_back({dom, cod, f}); }, false);
  return out;
}

}  // namespace dc
