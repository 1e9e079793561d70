#include "dc/oracles.hpp"

#include <algorithm>

namespace dc {

namespace detail {

Grid to_grid(const Tableau& t) {
  Display d = to_display(t);
  Grid g(d.rows.size());
  for (std::size_t r = 0; r < d.rows.size(); ++r) {
    g[r].assign(static_cast<std::size_t>(d.inner[r]), -1);
    g[r].insert(g[r].end(), d.rows[r].begin(), d.rows[r].end());
  }
  return g;
}

Tableau from_grid(Flavor f, const Grid& g) {
  Display d;
  std::vector<int> inner;
  for (const auto& row : g) {
    int k = 0;
    while (k < static_cast<int>(row.size()) && row[k] < 0) ++k;
    inner.push_back(k);
    d.rows.emplace_back(row.begin() + k, row.end());
  }
  while (!d.rows.empty() && d.rows.back().empty() && inner.back() == 0) {
    d.rows.pop_back();
    inner.pop_back();
  }
  d.inner = Partition(inner);
  return from_display(f, d);
}

Grid conjugate_grid(const Grid& g) {
  std::size_t w = 0;
  for (const auto& row : g) w = std::max(w, row.size());
  Grid t(w);
  for (std::size_t c = 0; c < w; ++c)
    for (std::size_t r = 0; r < g.size() && c < g[r].size(); ++r) t[c].push_back(g[r][c]);
  return t;
}

std::vector<std::pair<int, int>> inner_corners(const Grid& g) {
  std::vector<std::pair<int, int>> out;
  auto inner = [&](int r, int c) {
    return r >= 0 && r < static_cast<int>(g.size()) && c >= 0 &&
           c < static_cast<int>(g[r].size()) && g[r][c] < 0;
  };
  for (int r = 0; r < static_cast<int>(g.size()); ++r)
    for (int c = 0; c < static_cast<int>(g[r].size()); ++c)
      if (inner(r, c) && !inner(r + 1, c) && !inner(r, c + 1)) out.emplace_back(r, c);
  return out;
}

// Moves the hole at (r,c) outward: the smaller of the right and lower
// neighbours fills it, the lower one on ties.
void slide(Grid& g, int r, int c) {
  auto at = [&](int i, int j) -> int {
    if (i < 0 || i >= static_cast<int>(g.size()) || j < 0 || j >= static_cast<int>(g[i].size()))
      return -2;
    return g[i][j];
  };
  for (;;) {
    int right = at(r, c + 1), below = at(r + 1, c);
    if (right < 0 && below < 0) break;
    if (below >= 0 && (right < 0 || below <= right)) {
      g[r][c] = below;
      ++r;
    } else {
      g[r][c] = right;
      ++c;
    }
  }
  // The hole is now at an outer corner; drop it.
  g[r].erase(g[r].begin() + c);
  while (!g.empty() && g.back().empty()) g.pop_back();
}

}  // namespace detail

namespace {

using Cols = std::vector<std::vector<int>>;

Cols columns_of(const Tableau& t) {
  if (!t.straight()) throw precondition_error("insertion expects a straight tableau");
  return detail::conjugate_grid(detail::to_grid(t));
}

Tableau tableau_of_columns(Flavor f, const Cols& cols) {
  return detail::from_grid(f, detail::conjugate_grid(cols));
}

void col_insert(Cols& cols, int x, bool strict) {
  for (std::size_t c = 0;; ++c) {
    if (c == cols.size()) cols.emplace_back();
    auto& col = cols[c];
    auto it = strict ? std::upper_bound(col.begin(), col.end(), x)
                     : std::lower_bound(col.begin(), col.end(), x);
    if (it == col.end()) {
      col.push_back(x);
      return;
    }
    std::swap(*it, x);
  }
}

void row_ins(detail::Grid& rows, int x, bool weak) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) rows.emplace_back();
    auto& row = rows[r];
    auto it = weak ? std::lower_bound(row.begin(), row.end(), x)
                   : std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return;
    }
    std::swap(*it, x);
  }
}

Partition shape_of(const Cols& cols) {
  std::vector<int> t;
  for (const auto& c : cols)
    if (!c.empty()) t.push_back(static_cast<int>(c.size()));
  return conjugate(Partition(t));
}

Partition shape_of_rows(const detail::Grid& rows) {
  std::vector<int> v;
  for (const auto& r : rows) v.push_back(static_cast<int>(r.size()));
  return Partition(v);
}

Tableau chain_tableau(Flavor f, std::vector<Partition> chain) {
  Tableau t{f, std::move(chain)};
  if (!t.valid()) throw std::logic_error("oracle produced an invalid recording chain");
  return t;
}

// Recording tableau from a list of (letter, new cell row) events.
Tableau recording(const std::vector<std::pair<int, std::size_t>>& events, int letters) {
  std::vector<Partition> chain;
  std::vector<int> cur;
  chain.emplace_back();
  std::size_t e = 0;
  for (int a = 0; a < letters; ++a) {
    for (; e < events.size() && events[e].first == a; ++e) {
      std::size_t r = events[e].second;
      if (cur.size() <= r) cur.resize(r + 1, 0);
      ++cur[r];
    }
    chain.emplace_back(cur);
  }
  return chain_tableau(Flavor::sst, std::move(chain));
}

}  // namespace

Tableau column_insert(const Tableau& t, int letter, Flavor flavor) {
  if (letter < 0) throw precondition_error("negative letter");
  Cols cols = columns_of(t);
  col_insert(cols, letter, flavor == Flavor::transpose_sst);
  return tableau_of_columns(flavor, cols);
}

Tableau row_insert(const Tableau& t, int letter, Flavor flavor) {
  if (letter < 0) throw precondition_error("negative letter");
  if (!t.straight()) throw precondition_error("insertion expects a straight tableau");
  detail::Grid rows = detail::to_grid(t);
  row_ins(rows, letter, flavor == Flavor::transpose_sst);
  return detail::from_grid(flavor, rows);
}

TableauPair burge(const IntegralMatrix& m) {
  Cols cols;
  std::vector<Partition> rec{Partition{}};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = m.cols(); j-- > 0;)
      for (int c = 0; c < m(i, j); ++c) col_insert(cols, static_cast<int>(j), false);
    rec.push_back(shape_of(cols));
  }
  Tableau p = cols.empty() ? Tableau{Flavor::sst, {Partition{}}} : tableau_of_columns(Flavor::sst, cols);
  return {p, chain_tableau(Flavor::sst, std::move(rec))};
}

TableauPair dual_rsk_col(const BinaryMatrix& m) {
  Cols cols;
  std::vector<Partition> rec(m.cols() + 1);
  for (std::size_t j = m.cols(); j-- > 0;) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m(i, j)) col_insert(cols, static_cast<int>(i), false);
    rec[j] = shape_of(cols);
  }
  Tableau s = cols.empty() ? Tableau{Flavor::sst, {Partition{}}} : tableau_of_columns(Flavor::sst, cols);
  return {s, chain_tableau(Flavor::reverse_transpose_sst, std::move(rec))};
}

TableauPair rsk_row(const IntegralMatrix& m) {
  detail::Grid rows;
  std::vector<std::pair<int, std::size_t>> events;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (int c = 0; c < m(i, j); ++c) {
        auto before = shape_of_rows(rows);
        row_ins(rows, static_cast<int>(j), false);
        auto after = shape_of_rows(rows);
        std::size_t r = 0;
        while (before[r] == after[r]) ++r;
        events.emplace_back(static_cast<int>(i), r);
      }
  Tableau p = detail::from_grid(Flavor::sst, rows);
  return {p, recording(events, static_cast<int>(m.rows()))};
}

TableauPair dual_rsk_row(const BinaryMatrix& m) {
  detail::Grid rows;
  std::vector<std::pair<int, std::size_t>> events;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j)) {
        auto before = shape_of_rows(rows);
        row_ins(rows, static_cast<int>(j), true);
        auto after = shape_of_rows(rows);
        std::size_t r = 0;
        while (before[r] == after[r]) ++r;
        events.emplace_back(static_cast<int>(i), r);
      }
  Tableau p = detail::from_grid(Flavor::transpose_sst, rows);
  return {p, recording(events, static_cast<int>(m.rows()))};
}

Tableau rectify(const Tableau& t) {
  return rectify_with(t, [](const std::vector<std::pair<int, int>>& corners) {
    return static_cast<std::size_t>(
        std::max_element(corners.begin(), corners.end()) - corners.begin());
  });
}

Tableau superstandard(const Partition& lambda) {
  Tableau t{Flavor::sst, {Partition{}}};
  std::vector<int> cur;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    cur.push_back(lambda[i]);
    t.chain.emplace_back(cur);
  }
  return t;
}

}  // namespace dc
