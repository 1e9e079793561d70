#include "dc/shapes.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "dc/errors.hpp"

namespace dc {

namespace {

void trim(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip_ws(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Composition::Composition(std::initializer_list<int> parts) : p_(parts) {
  for (int x : p_)
    if (x < 0) throw precondition_error("negative part in composition");
  trim(p_);
}

Composition::Composition(std::vector<int> parts) : p_(std::move(parts)) {
  for (int x : p_)
    if (x < 0) throw precondition_error("negative part in composition");
  trim(p_);
}

int Composition::size() const { return std::accumulate(p_.begin(), p_.end(), 0); }

std::vector<int> Composition::padded(std::size_t n) const {
  std::vector<int> v(n, 0);
  for (std::size_t i = 0; i < n && i < p_.size(); ++i) v[i] = p_[i];
  return v;
}

std::string Composition::str() const {
  if (p_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p_[i]);
  }
  return s;
}

bool Partition::is_partition(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) return false;
    if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return false;
  }
  return true;
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) {
  if (!is_partition(parts)) throw precondition_error("parts are not weakly decreasing naturals");
  p_ = std::move(parts);
  trim(p_);
}

Partition::Partition(const Composition& c) : Partition(c.parts()) {}

Composition operator+(const Composition& a, const Composition& b) {
  std::size_t n = std::max(a.length(), b.length());
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = a[i] + b[i];
  return Composition(std::move(v));
}

Composition operator-(const Composition& a, const Composition& b) {
  std::size_t n = std::max(a.length(), b.length());
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = a[i] - b[i];
    if (v[i] < 0) throw precondition_error("difference has a negative part");
  }
  return Composition(std::move(v));
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> t(lambda.empty() ? 0 : lambda[0], 0);
  for (int x : lambda.parts())
    for (int j = 0; j < x; ++j) ++t[j];
  return Partition(std::move(t));
}

bool strip_le(const Composition& alpha, const Composition& beta, Strip kind) {
  if (kind == Strip::vertical) {
    if (!Partition::is_partition(alpha.parts()) || !Partition::is_partition(beta.parts()))
      return false;
    return strip_le(conjugate(Partition(alpha)), conjugate(Partition(beta)), Strip::horizontal);
  }
  std::size_t n = std::max(alpha.length(), beta.length());
  for (std::size_t i = 0; i < n; ++i)
    if (!(beta[i + 1] <= alpha[i] && alpha[i] <= beta[i])) return false;
  return true;
}

Composition revert(const Partition& lambda, std::size_t k) {
  if (lambda[k] != 0)
    throw precondition_error("revert: part " + std::to_string(k) + " of " + lambda.str() +
                             " is nonzero");
  std::vector<int> v(k);
  for (std::size_t i = 0; i < k; ++i) v[i] = lambda[k - 1 - i];
  return Composition(std::move(v));
}

bool contains(const Partition& outer, const Partition& inner) {
  for (std::size_t i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

SkewShape::SkewShape(Partition o, Partition i) : outer(std::move(o)), inner(std::move(i)) {
  if (!contains(outer, inner))
    throw precondition_error("skew shape: " + inner.str() + " not contained in " + outer.str());
}

std::vector<std::pair<int, int>> SkewShape::cells() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t r = 0; r < outer.length(); ++r)
    for (int c = inner[r]; c < outer[r]; ++c) out.emplace_back(static_cast<int>(r), c);
  return out;
}

bool SkewShape::has(int r, int c) const {
  if (r < 0 || c < 0) return false;
  return c >= inner[r] && c < outer[r];
}

std::string SkewShape::str() const { return outer.str() + "/" + inner.str(); }

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int maxpart) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::size_t i, int bound) -> void {
    if (i == lambda.length()) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 0; p <= std::min(bound, lambda[i]); ++p) {
      cur.push_back(p);
      self(self, i + 1, p);
      cur.pop_back();
    }
  };
  rec(rec, 0, lambda.empty() ? 0 : lambda[0]);
  return out;
}

std::vector<SkewShape> skew_shapes_up_to(int n) {
  std::vector<SkewShape> out;
  for (int m = 0; m <= n; ++m)
    for (const auto& lam : partitions_of(m))
      for (const auto& kap : subpartitions(lam)) out.emplace_back(lam, kap);
  return out;
}

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::sst: return "sst";
    case Flavor::transpose_sst: return "transpose_sst";
    case Flavor::reverse_sst: return "reverse_sst";
    case Flavor::reverse_transpose_sst: return "reverse_transpose_sst";
  }
  return "?";
}

bool is_reverse(Flavor f) {
  return f == Flavor::reverse_sst || f == Flavor::reverse_transpose_sst;
}

bool is_transpose(Flavor f) {
  return f == Flavor::transpose_sst || f == Flavor::reverse_transpose_sst;
}

bool Tableau::valid() const {
  if (chain.empty()) return false;
  Strip kind = is_transpose(flavor) ? Strip::vertical : Strip::horizontal;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const auto& a = is_reverse(flavor) ? chain[i + 1] : chain[i];
    const auto& b = is_reverse(flavor) ? chain[i] : chain[i + 1];
    if (!strip_le(a, b, kind)) return false;
  }
  return true;
}

SkewShape Tableau::shape() const {
  if (chain.empty()) return {};
  if (is_reverse(flavor)) return SkewShape(chain.front(), chain.back());
  return SkewShape(chain.back(), chain.front());
}

Tableau Tableau::normalized() const {
  Tableau t = *this;
  while (t.chain.size() > 1 && t.chain[t.chain.size() - 1] == t.chain[t.chain.size() - 2])
    t.chain.pop_back();
  return t;
}

bool Tableau::operator==(const Tableau& o) const {
  return flavor == o.flavor && normalized().chain == o.normalized().chain;
}

Composition tableau_weight(const Tableau& t) {
  std::vector<int> w;
  for (std::size_t i = 0; i + 1 < t.chain.size(); ++i)
    w.push_back(std::abs(t.chain[i + 1].size() - t.chain[i].size()));
  return Composition(std::move(w));
}

Display to_display(const Tableau& t) {
  SkewShape sh = t.shape();
  Display d;
  d.inner = sh.inner;
  d.rows.resize(sh.outer.length());
  for (std::size_t r = 0; r < sh.outer.length(); ++r) {
    for (int c = sh.inner[r]; c < sh.outer[r]; ++c) {
      // Index of the step that adds (r, c).
      int entry = -1;
      for (std::size_t i = 0; i + 1 < t.chain.size(); ++i) {
        const auto& small = is_reverse(t.flavor) ? t.chain[i + 1] : t.chain[i];
        const auto& big = is_reverse(t.flavor) ? t.chain[i] : t.chain[i + 1];
        if (c >= small[r] && c < big[r]) {
          entry = static_cast<int>(i);
          break;
        }
      }
      d.rows[r].push_back(entry);
    }
  }
  return d;
}

Tableau from_display(Flavor f, const Display& d) {
  int maxe = -1;
  for (const auto& row : d.rows)
    for (int e : row) {
      if (e < 0) throw precondition_error("negative tableau entry");
      maxe = std::max(maxe, e);
    }
  Tableau t;
  t.flavor = f;
  for (int i = 0; i <= maxe + 1; ++i) {
    std::vector<int> parts(std::max(d.rows.size(), d.inner.length()), 0);
    for (std::size_t r = 0; r < parts.size(); ++r) {
      parts[r] = d.inner[r];
      int extra = 0;
      if (r < d.rows.size())
        for (int e : d.rows[r])
          if (is_reverse(f) ? e >= i : e < i) ++extra;
      parts[r] += extra;
      // The counted cells must form an initial segment of the row.
      if (r < d.rows.size()) {
        for (std::size_t c = 0; c < d.rows[r].size(); ++c) {
          bool in = is_reverse(f) ? d.rows[r][c] >= i : d.rows[r][c] < i;
          if (in != (static_cast<int>(c) < extra))
            throw precondition_error("display rows are not monotone for flavor " +
                                     std::string(flavor_name(f)));
        }
      }
    }
    if (!Partition::is_partition(parts))
      throw precondition_error("display does not define a chain of partitions");
    t.chain.emplace_back(parts);
  }
  if (!t.valid())
    throw precondition_error("display violates the strip condition of flavor " +
                             std::string(flavor_name(f)));
  return t;
}

Composition parse_composition(const std::string& text) {
  std::string s = strip_ws(text);
  if (s.empty()) throw parse_error("empty composition", 1, 1);
  std::vector<int> v;
  std::size_t col = 1;
  for (const auto& tok : split(s, ',')) {
    std::string t = strip_ws(tok);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("expected a natural number, got '" + tok + "'", 1, col);
    if (t.size() > 9) throw parse_error("number too large", 1, col);
    v.push_back(std::stoi(t));
    col += tok.size() + 1;
  }
  return Composition(std::move(v));
}

Partition parse_partition(const std::string& s) {
  Composition c = parse_composition(s);
  if (!Partition::is_partition(c.parts()))
    throw parse_error("'" + s + "' is not weakly decreasing", 1, 1);
  return Partition(c);
}

SkewShape parse_skew(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return SkewShape(parse_partition(s));
  return SkewShape(parse_partition(s.substr(0, slash)), parse_partition(s.substr(slash + 1)));
}

}  // namespace dc
