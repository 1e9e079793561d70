#include <doctest.h>

#include <functional>
#include <map>
#include <random>

#include "dc/cancellation.hpp"
#include "helpers.hpp"

using namespace dc;

namespace {

using Parts = std::vector<int>;

void partitions_into(int n, int max, Parts& cur, std::vector<Parts>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max); p >= 1; --p) {
    cur.push_back(p);
    partitions_into(n - p, p, cur, out);
    cur.pop_back();
  }
}

// Reverse lexicographic, so every partition precedes those it dominates.
std::vector<Parts> parts_of(int n) {
  std::vector<Parts> out;
  Parts cur;
  partitions_into(n, n, cur, out);
  return out;
}

int at(const Parts& p, std::size_t i) { return i < p.size() ? p[i] : 0; }

// Semistandard fillings of outer/inner with weight w, counted as chains of
// horizontal strips.
long kostka(const Parts& outer, const Parts& inner, const Parts& w) {
  std::size_t rows = outer.size();
  std::function<long(const Parts&, std::size_t)> go = [&](const Parts& cur, std::size_t k) -> long {
    if (k == w.size()) return cur == outer ? 1 : 0;
    long total = 0;
    Parts next(rows, 0);
    std::function<void(std::size_t, int)> fill = [&](std::size_t i, int left) {
      if (i == rows) {
        if (left == 0) total += go(next, k + 1);
        return;
      }
      int lo = at(cur, i);
      int hi = std::min(outer[i], i == 0 ? outer[0] : at(cur, i - 1));
      for (int v = lo; v <= hi && v - lo <= left; ++v) {
        next[i] = v;
        fill(i + 1, left - (v - lo));
      }
    };
    fill(0, w[k]);
    return total;
  };
  Parts start(rows, 0);
  for (std::size_t i = 0; i < inner.size(); ++i) start[i] = inner[i];
  return go(start, 0);
}

std::map<Parts, long> lr_coefficients(const Parts& outer, const Parts& inner) {
  int n = 0;
  for (int x : outer) n += x;
  for (int x : inner) n -= x;
  std::map<Parts, long> c;
  for (const auto& alpha : parts_of(n)) {
    long v = kostka(outer, inner, alpha);
    for (const auto& [rho, cr] : c) v -= cr * kostka(rho, {}, alpha);
    if (v != 0) c[alpha] = v;
  }
  return c;
}

long scalar_oracle(const SkewShape& a, const SkewShape& b) {
  if (a.size() != b.size()) return 0;
  auto ca = lr_coefficients(a.outer.parts(), a.inner.parts());
  auto cb = lr_coefficients(b.outer.parts(), b.inner.parts());
  long s = 0;
  for (const auto& [rho, x] : ca) {
    auto it = cb.find(rho);
    if (it != cb.end()) s += x * it->second;
  }
  return s;
}

Composition exchanged(const Composition& a, std::size_t i) {
  auto p = a.padded(std::max(a.length(), i + 2));
  int x = p[i], y = p[i + 1];
  p[i] = y - 1;
  p[i + 1] = x + 1;
  return Composition(p);
}

}  // namespace

TEST_SUITE("cancellation") {
  TEST_CASE("edge symbol examples") {
    CHECK(edge_symbol(Composition{2, 1}, Partition{2, 1}) == 1);
    CHECK(edge_symbol(Composition{0, 2}, Partition{1, 1}) == -1);
    for (const auto& l : {Partition{1}, Partition{1, 1}, Partition{2}})
      CHECK(edge_symbol(Composition{0, 1}, l) == 0);
    CHECK(edge_symbol(Composition{}, Partition{}) == 1);
    CHECK(edge_symbol(Composition{1, 2}, Partition{2, 1}) == 0);
  }

  TEST_CASE("edge symbol: partition case and exchange antisymmetry") {
    std::mt19937 rng(41);
    for (int t = 0; t < 10000; ++t) {
      std::size_t len = 1 + rng() % 4;
      std::vector<int> parts(len);
      int left = static_cast<int>(rng() % 9);
      for (auto& x : parts) {
        x = left ? static_cast<int>(rng() % (left + 1)) : 0;
        left -= x;
      }
      Composition alpha(parts);
      auto ps = partitions_of(alpha.size());
      Partition lambda = ps[rng() % ps.size()];
      if (Partition::is_partition(alpha.parts()))
        CHECK(edge_symbol(alpha, lambda) == (Partition(alpha) == lambda ? 1 : 0));
      std::size_t i = rng() % len;
      if (alpha[i + 1] == 0) continue;  // exchange would go negative
      auto beta = exchanged(alpha, i);
      CHECK(edge_symbol(alpha, lambda) + edge_symbol(beta, lambda) == 0);
    }
  }

  TEST_CASE("alternating sum examples") {
    SkewShape one{Partition{1}};
    for (Mode mode : {Mode::binary, Mode::integral})
      CHECK(alternating_sum(one, one, Stage::fully_reduced, mode) == 1);
    SkewShape l{Partition{2, 1}};
    SkewShape sk{Partition{3, 2}, Partition{1}};
    for (Mode mode : {Mode::binary, Mode::integral})
      for (Stage s : {Stage::brute, Stage::tab_first, Stage::lr_first, Stage::fully_reduced}) {
        CHECK(alternating_sum(l, l, s, mode) == 1);
        CHECK(alternating_sum(sk, sk, s, mode) == scalar_oracle(sk, sk));
      }
    CHECK(scalar_oracle(sk, sk) == 2);
  }

  TEST_CASE("lr_count matches the Kostka oracle") {
    auto shapes = skew_shapes_up_to(4);
    for (const auto& a : shapes)
      for (const auto& b : shapes) {
        long want = scalar_oracle(a, b);
        CAPTURE(a.str());
        CAPTURE(b.str());
        CHECK(lr_count(a, b, Mode::binary) == want);
        CHECK(lr_count(a, b, Mode::integral) == want);
      }
  }

  TEST_CASE("running matrix is counted for its shapes") {
    SkewShape dom{Partition{9, 8, 5, 5, 3}, Partition{4, 1}};
    auto m = golden::integ(golden::kIntM);
    Composition w = col_sums(m);
    CHECK(w == Composition{2, 3, 3, 2, 4, 4, 7});
    CHECK(tableau_condition(m, dom));
  }

  TEST_CASE("an undersized box is reported") {
    SkewShape l{Partition{2, 1}};
    CHECK_THROWS_AS(alternating_sum(l, l, Stage::brute, Mode::binary, Box{1, 1}, true),
                    box_too_small);
    CHECK(parse_stage("lr_first") == Stage::lr_first);
    CHECK_THROWS_AS(parse_stage("quick"), usage_error);
  }

  TEST_CASE("involution refuses matrices satisfying the condition") {
    Partition l{3, 1};
    CHECK_THROWS_AS(involution(diagram(l), Condition::lr, SkewShape{l}), not_cancellable);
    CHECK_THROWS_AS(involution(diagon(l), Condition::tableau, SkewShape{l}), not_cancellable);
  }

  TEST_CASE("binary LR pairing on 3x3 with mu = (1)") {
    SkewShape shape{Partition{3, 2, 1}, Partition{1}};
    int paired = 0;
    for (int bits = 0; bits < 512; ++bits) {
      BinaryMatrix m(3, 3);
      for (int b = 0; b < 9; ++b) m.set(b / 3, b % 3, (bits >> b) & 1);
      if (lr_condition(m, shape)) continue;
      Composition alpha = shape.inner + row_sums(m);
      if (edge_symbol(alpha, shape.outer) == 0) continue;
      auto m2 = involution(m, Condition::lr, shape);
      CHECK_FALSE(m2 == m);
      CHECK(involution(m2, Condition::lr, shape) == m);
      CHECK_FALSE(lr_condition(m2, shape));
      CHECK(edge_symbol(alpha, shape.outer) + edge_symbol(shape.inner + row_sums(m2), shape.outer) ==
            0);
      for (const auto& s : skew_shapes_up_to(3))
        CHECK(tableau_condition(m, s) == tableau_condition(m2, s));
      ++paired;
    }
    CHECK(paired > 0);
  }

  TEST_CASE("integral LR pairing keeps the maximal witness") {
    SkewShape shape{Partition{2, 1}};
    int paired = 0;
    for (int code = 0; code < 81; ++code) {
      IntegralMatrix m(2, 2);
      int c = code;
      for (int k = 0; k < 4; ++k, c /= 3) m.set(k / 2, k % 2, c % 3);
      if (lr_condition(m, shape)) continue;
      IntegralMatrix m2;
      try {
        m2 = involution(m, Condition::lr, shape);
      } catch (const not_cancellable&) {
        continue;
      }
      CHECK(involution(m2, Condition::lr, shape) == m);
      CHECK(col_sums(m2) != col_sums(m));
      ++paired;
    }
    CHECK(paired > 0);
  }
}
