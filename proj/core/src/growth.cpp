#include "dc/growth.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dc/doublecrystal.hpp"

namespace dc {

Partition implicit_shape(const BinaryMatrix& m) { return normal_form(m); }
Partition implicit_shape(const IntegralMatrix& m) { return normal_form(m); }

namespace {

std::size_t span(std::initializer_list<const Partition*> ps) {
  std::size_t n = 0;
  for (auto* p : ps) n = std::max(n, p->length());
  return n + 1;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw shape_datum_error(what);
}

}  // namespace

Partition burge_forward(const Partition& lambda, const Partition& mu, const Partition& nu, int m,
                        std::vector<BurgeStep>* trace) {
  require(m >= 0, "negative matrix entry");
  require(strip_le(lambda, mu, Strip::horizontal), "burge: lambda <=h mu fails");
  require(strip_le(lambda, nu, Strip::horizontal), "burge: lambda <=h nu fails");
  // kappa_i vanishes beyond both mu and nu, so the loop can start there
  std::size_t n = std::max(mu.length(), nu.length());
  std::vector<int> kappa(n + 1, 0);
  int c = m;
  for (std::size_t i = n; i >= 1; --i) {
    int d = mu[i] + nu[i] - lambda[i] + c;
    kappa[i] = std::min(d, lambda[i - 1]);
    c = d - kappa[i];
    if (trace) trace->push_back({i, d, kappa[i], c});
  }
  kappa[0] = mu[0] - lambda[0] + c + nu[0];
  return Partition(kappa);
}

std::pair<Partition, int> burge_backward(const Partition& mu, const Partition& nu,
                                         const Partition& kappa, std::vector<BurgeStep>* trace) {
  require(strip_le(mu, kappa, Strip::horizontal), "burge: mu <=h kappa fails");
  require(strip_le(nu, kappa, Strip::horizontal), "burge: nu <=h kappa fails");
  std::size_t n = span({&mu, &nu, &kappa});
  std::vector<int> lambda(n + 1, 0);
  int c = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    int d = mu[i] + nu[i] - kappa[i] - c;  // may be negative
    lambda[i] = std::max(d, kappa[i + 1]);
    c = lambda[i] - d;
    if (trace) trace->push_back({i, d, lambda[i], c});
  }
  require(Partition::is_partition(lambda), "burge: backward result is not a partition");
  return {Partition(lambda), c};
}

Partition rsk_forward(const Partition& lambda, const Partition& mu, const Partition& nu, int m) {
  require(m >= 0, "negative matrix entry");
  require(strip_le(lambda, mu, Strip::horizontal), "rsk: lambda <=h mu fails");
  require(strip_le(lambda, nu, Strip::horizontal), "rsk: lambda <=h nu fails");
  std::size_t n = span({&lambda, &mu, &nu});
  std::vector<int> kappa(n + 1, 0);
  kappa[0] = m + std::max(mu[0], nu[0]);
  for (std::size_t i = 0; i < n; ++i)
    kappa[i + 1] = std::min(nu[i], mu[i]) - lambda[i] + std::max(mu[i + 1], nu[i + 1]);
  require(Partition::is_partition(kappa), "rsk: result is not a partition");
  return Partition(kappa);
}

std::pair<Partition, int> rsk_backward(const Partition& mu, const Partition& nu,
                                       const Partition& kappa) {
  require(strip_le(mu, kappa, Strip::horizontal), "rsk: mu <=h kappa fails");
  require(strip_le(nu, kappa, Strip::horizontal), "rsk: nu <=h kappa fails");
  int m = kappa[0] - std::max(mu[0], nu[0]);
  require(m >= 0, "rsk: negative entry");
  std::size_t n = span({&mu, &nu, &kappa});
  std::vector<int> lambda(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    lambda[i] = std::min(nu[i], mu[i]) + std::max(mu[i + 1], nu[i + 1]) - kappa[i + 1];
  require(Partition::is_partition(lambda), "rsk: backward result is not a partition");
  Partition lam(lambda);
  require(strip_le(lam, mu, Strip::horizontal) && strip_le(lam, nu, Strip::horizontal),
          "rsk: backward result is not below mu and nu");
  require(rsk_forward(lam, mu, nu, m) == kappa, "rsk: inputs are not a valid datum");
  return {lam, m};
}

namespace {

using Cell = std::pair<int, int>;

struct Optional {
  std::vector<Cell> s, t;
  std::vector<int> match;  // index into t for each s
  int t0 = -1;
};

Optional optional_squares(const Partition& mu, const Partition& nu, DualFlavor flavor) {
  Partition mut = conjugate(mu), nut = conjugate(nu);
  Optional o;
  for (std::size_t r = 0; r < mu.length(); ++r) {
    int c = mu[r] - 1;
    if (static_cast<int>(r) == nut[c] - 1) o.s.emplace_back(static_cast<int>(r), c);
  }
  int cmax = std::max(mu[0], nu[0]) + 1;
  for (int c = 0; c <= cmax; ++c) {
    int r = mut[c];
    if (nu[r] == c) o.t.emplace_back(r, c);
  }
  require(o.t.size() == o.s.size() + 1, "optional square sets have wrong sizes");
  std::vector<bool> used(o.t.size(), false);
  for (const auto& s : o.s) {
    int best = -1;
    for (std::size_t q = 0; q < o.t.size(); ++q) {
      const auto& t = o.t[q];
      bool beyond = flavor == DualFlavor::row_insertion ? t.first > s.first : t.second > s.second;
      if (!beyond) continue;
      if (best < 0) {
        best = static_cast<int>(q);
        continue;
      }
      const auto& b = o.t[best];
      bool closer = flavor == DualFlavor::row_insertion ? t.first < b.first : t.second < b.second;
      if (closer) best = static_cast<int>(q);
    }
    require(best >= 0 && !used[best], "optional squares do not match up");
    used[best] = true;
    o.match.push_back(best);
  }
  for (std::size_t q = 0; q < o.t.size(); ++q)
    if (!used[q]) o.t0 = static_cast<int>(q);
  return o;
}

std::vector<int> union_rows(const Partition& a, const Partition& b) {
  std::size_t n = std::max(a.length(), b.length());
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = std::max(a[i], b[i]);
  return v;
}

std::vector<int> meet_rows(const Partition& a, const Partition& b) {
  std::size_t n = std::max(a.length(), b.length());
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = std::min(a[i], b[i]);
  return v;
}

void add_cell(std::vector<int>& rows, const Cell& c) {
  if (rows.size() <= static_cast<std::size_t>(c.first)) rows.resize(c.first + 1, 0);
  require(rows[c.first] == c.second, "optional square is not at a row end");
  ++rows[c.first];
}

}  // namespace

Partition dual_forward(const Partition& lambda, const Partition& mu, const Partition& nu, int bit,
                       DualFlavor flavor) {
  require(bit == 0 || bit == 1, "binary entry must be 0 or 1");
  require(strip_le(lambda, mu, Strip::vertical), "dual datum: lambda <=v mu fails");
  require(strip_le(lambda, nu, Strip::horizontal), "dual datum: lambda <=h nu fails");
  Optional o = optional_squares(mu, nu, flavor);
  std::vector<int> meet = meet_rows(mu, nu);
  // lambda = meet minus the absent squares of S.
  std::vector<int> expect = meet;
  std::vector<bool> absent(o.s.size(), false);
  for (std::size_t q = 0; q < o.s.size(); ++q) {
    auto [r, c] = o.s[q];
    if (lambda[r] <= c) {
      absent[q] = true;
      --expect[r];
    }
  }
  require(Partition(expect) == lambda, "dual datum: lambda is not meet(mu,nu) minus squares of S");
  std::vector<int> kappa = union_rows(mu, nu);
  std::vector<Cell> extra;
  if (bit) extra.push_back(o.t[o.t0]);
  for (std::size_t q = 0; q < o.s.size(); ++q)
    if (absent[q]) extra.push_back(o.t[o.match[q]]);
  std::sort(extra.begin(), extra.end());
  for (const auto& c : extra) add_cell(kappa, c);
  require(Partition::is_partition(kappa), "dual datum: result is not a partition");
  return Partition(kappa);
}

std::pair<Partition, int> dual_backward(const Partition& mu, const Partition& nu,
                                        const Partition& kappa, DualFlavor flavor) {
  require(strip_le(mu, kappa, Strip::horizontal), "dual datum: mu <=h kappa fails");
  require(strip_le(nu, kappa, Strip::vertical), "dual datum: nu <=v kappa fails");
  Optional o = optional_squares(mu, nu, flavor);
  auto in_kappa = [&](const Cell& c) { return kappa[c.first] > c.second; };
  std::vector<int> base = union_rows(mu, nu);
  std::vector<int> check = base;
  std::vector<Cell> present;
  for (const auto& t : o.t)
    if (in_kappa(t)) present.push_back(t);
  std::sort(present.begin(), present.end());
  for (const auto& c : present) add_cell(check, c);
  require(Partition(check) == kappa, "dual datum: kappa is not mu+nu plus squares of T");
  int bit = in_kappa(o.t[o.t0]) ? 1 : 0;
  std::vector<int> lambda = meet_rows(mu, nu);
  for (std::size_t q = 0; q < o.s.size(); ++q)
    if (in_kappa(o.t[o.match[q]])) --lambda[o.s[q].first];
  require(Partition::is_partition(lambda), "dual datum: backward result is not a partition");
  return {Partition(lambda), bit};
}

const char* corner_name(Corner c) {
  switch (c) {
    case Corner::NW: return "NW";
    case Corner::NE: return "NE";
    case Corner::SW: return "SW";
    case Corner::SE: return "SE";
  }
  return "?";
}

Corner parse_corner(const std::string& s) {
  if (s == "NW" || s == "nw") return Corner::NW;
  if (s == "NE" || s == "ne") return Corner::NE;
  if (s == "SW" || s == "sw") return Corner::SW;
  if (s == "SE" || s == "se") return Corner::SE;
  throw usage_error("unknown orientation '" + s + "'");
}

namespace {

template <class Tag>
GrowthDiagram blank(const Matrix<Tag>& src, Corner c) {
  Matrix<Tag> m = src.trimmed();
  GrowthDiagram g;
  g.orientation = c;
  g.mode = Tag::binary ? Mode::binary : Mode::integral;
  g.k = m.rows();
  g.l = m.cols();
  g.grid.assign(g.k + 1, std::vector<Partition>(g.l + 1));
  g.entries = m.to_rows();
  return g;
}

template <class Tag>
Partition corner_shape(const Matrix<Tag>& m, Corner c, std::size_t i, std::size_t j) {
  Interval rows = (c == Corner::NW || c == Corner::NE) ? Interval::first(i) : Interval::from(i);
  Interval cols = (c == Corner::NW || c == Corner::SW) ? Interval::first(j) : Interval::from(j);
  return implicit_shape(restrict(m, rows, cols));
}

template <class Tag>
GrowthDiagram direct_impl(const Matrix<Tag>& src, Corner c) {
  GrowthDiagram g = blank(src, c);
  Matrix<Tag> m = src.trimmed();
  for (std::size_t i = 0; i <= g.k; ++i)
    for (std::size_t j = 0; j <= g.l; ++j) g.grid[i][j] = corner_shape(m, c, i, j);
  return g;
}

// Local rule for a unit square given its corners (lambda smallest).
using Rule = Partition (*)(const Partition&, const Partition&, const Partition&, int);

Partition rule_burge(const Partition& a, const Partition& b, const Partition& c, int m) {
  return burge_forward(a, b, c, m);
}
Partition rule_rsk(const Partition& a, const Partition& b, const Partition& c, int m) {
  return rsk_forward(a, b, c, m);
}
Partition rule_dual_row(const Partition& a, const Partition& b, const Partition& c, int m) {
  return dual_forward(a, b, c, m, DualFlavor::row_insertion);
}
Partition rule_dual_col(const Partition& a, const Partition& b, const Partition& c, int m) {
  return dual_forward(a, b, c, m, DualFlavor::col_insertion);
}

void grow(GrowthDiagram& g, Rule rule) {
  auto& G = g.grid;
  auto e = [&](std::size_t i, std::size_t j) { return g.entries[i][j]; };
  std::size_t k = g.k, l = g.l;
  switch (g.orientation) {
    case Corner::NW:
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < l; ++j)
          G[i + 1][j + 1] = rule(G[i][j], G[i][j + 1], G[i + 1][j], e(i, j));
      break;
    case Corner::NE:
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = l; j-- > 0;)
          G[i + 1][j] = rule(G[i][j + 1], G[i][j], G[i + 1][j + 1], e(i, j));
      break;
    case Corner::SW:
      for (std::size_t i = k; i-- > 0;)
        for (std::size_t j = 0; j < l; ++j)
          G[i][j + 1] = rule(G[i + 1][j], G[i + 1][j + 1], G[i][j], e(i, j));
      break;
    case Corner::SE:
      for (std::size_t i = k; i-- > 0;)
        for (std::size_t j = l; j-- > 0;)
          G[i][j] = rule(G[i + 1][j + 1], G[i + 1][j], G[i][j + 1], e(i, j));
      break;
  }
}

template <class Tag>
void verify_against_direct(const GrowthDiagram& g, const Matrix<Tag>& m) {
  GrowthDiagram d = direct_impl(m, g.orientation);
  for (std::size_t i = 0; i <= g.k; ++i)
    for (std::size_t j = 0; j <= g.l; ++j)
      if (!(g.grid[i][j] == d.grid[i][j]))
        throw std::logic_error("growth cell (" + std::to_string(i) + "," + std::to_string(j) +
                               ") is " + g.grid[i][j].str() + " but normalization gives " +
                               d.grid[i][j].str());
}

}  // namespace

GrowthDiagram growth_diagram(const BinaryMatrix& m, Corner c, bool verify) {
  GrowthDiagram g = blank(m, c);
  grow(g, (c == Corner::NW || c == Corner::SE) ? rule_dual_row : rule_dual_col);
  if (verify) verify_against_direct(g, m);
  return g;
}

GrowthDiagram growth_diagram(const IntegralMatrix& m, Corner c, bool verify) {
  GrowthDiagram g = blank(m, c);
  grow(g, (c == Corner::NW || c == Corner::SE) ? rule_burge : rule_rsk);
  if (verify) verify_against_direct(g, m);
  return g;
}

GrowthDiagram direct_diagram(const BinaryMatrix& m, Corner c) { return direct_impl(m, c); }
GrowthDiagram direct_diagram(const IntegralMatrix& m, Corner c) { return direct_impl(m, c); }

std::string render(const GrowthDiagram& g) {
  std::vector<std::vector<std::string>> cells(g.k + 1, std::vector<std::string>(g.l + 1));
  std::size_t width = 0;
  for (std::size_t i = 0; i <= g.k; ++i)
    for (std::size_t j = 0; j <= g.l; ++j) {
      std::string s;
      if (i >= 1 && j >= 1) s = std::to_string(g.entries[i - 1][j - 1]) + " ";
      const auto& p = g.grid[i][j];
      s += "(" + (p.empty() ? std::string() : p.str()) + ")";
      cells[i][j] = s;
      width = std::max(width, s.size());
    }
  std::ostringstream out;
  out << corner_name(g.orientation) << ' ' << (g.mode == Mode::binary ? "binary" : "integral")
      << ' ' << g.k << 'x' << g.l << '\n';
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << " | ";
      out << row[j] << std::string(width - row[j].size(), ' ');
    }
    out << '\n';
  }
  return out.str();
}

BinaryMatrix french_form(const Partition& lambda, std::size_t k) {
  if (lambda[k] != 0) throw precondition_error("french form needs lambda[k] = 0");
  BinaryMatrix m(k, lambda.empty() ? 0 : lambda[0]);
  for (std::size_t i = 0; i < k; ++i)
    for (int j = 0; j < lambda[k - 1 - i]; ++j) m.set(i, j, 1);
  return m;
}

std::optional<Partition> recognize_french(const BinaryMatrix& m, std::size_t k) {
  for (std::size_t i = k; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j)) return std::nullopt;
  std::vector<int> lam(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) lam[k - 1 - i] += m(i, j);
  if (!Partition::is_partition(lam)) return std::nullopt;
  Partition p(lam);
  if (french_form(p, k) == m) return p;
  return std::nullopt;
}

IntegralMatrix sliced_form(const Partition& lambda, std::size_t k, std::size_t l) {
  if (lambda[l] != 0) throw precondition_error("sliced form needs lambda[l] = 0");
  IntegralMatrix m;
  for (std::size_t i = k; i < k + lambda.length(); ++i)
    for (std::size_t j = 0; j < l; ++j) {
      long mm = static_cast<long>(i) - static_cast<long>(k) - static_cast<long>(j) +
                static_cast<long>(l);
      if (mm < 1) continue;
      int v = lambda[mm - 1] - lambda[mm];
      if (v) m.set(i, j, v);
    }
  return m;
}

std::optional<Partition> recognize_sliced(const IntegralMatrix& m, std::size_t k, std::size_t l) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) && (i < k || j >= l)) return std::nullopt;
  std::vector<int> lam;
  for (std::size_t i = k; i < m.rows(); ++i) {
    int s = 0;
    for (std::size_t j = 0; j < l; ++j) s += m(i, j);
    lam.push_back(s);
  }
  if (!Partition::is_partition(lam)) return std::nullopt;
  Partition p(lam);
  if (p[l] != 0) return std::nullopt;
  if (sliced_form(p, k, l) == m) return p;
  return std::nullopt;
}

}  // namespace dc
