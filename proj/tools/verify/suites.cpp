#include "suites.hpp"

#include <chrono>
#include <cstdlib>
#include <exception>
#include <random>
#include <set>
#include <sstream>

#include "dc/cancellation.hpp"
#include "dc/doublecrystal.hpp"
#include "dc/growth.hpp"
#include "dc/oracles.hpp"
#include "dc/pictures.hpp"
#include "dc/schutzenberger.hpp"
#include "dc/text_io.hpp"
#include "golden.hpp"

namespace dc::verify {
namespace {

template <class F>
void expect(Result& r, bool ok, F&& what) {
  ++r.checks;
  if (ok) return;
  ++r.failures;
  if (r.notes.size() < 5) r.notes.push_back(what());
}

template <class Tag>
std::string brief(const Matrix<Tag>& m) {
  std::string s = format_matrix(m.trimmed());
  for (auto& c : s)
    if (c == '\n') c = '/';
  if (!s.empty() && s.back() == '/') s.pop_back();
  return s.empty() ? "0" : s;
}

// Runs f, recording an exception as a failure attributed to `where`.
template <class F, class W>
void guarded(Result& r, F&& f, W&& where) {
  try {
    f();
  } catch (const std::exception& e) {
    expect(r, false, [&] { return where() + ": " + e.what(); });
  }
}

std::vector<BinaryMatrix> all_binary(std::size_t h, std::size_t w) {
  std::vector<BinaryMatrix> out;
  std::size_t n = h * w;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    BinaryMatrix m(h, w);
    for (std::size_t b = 0; b < n; ++b)
      if (mask >> b & 1) m.set(b / w, b % w, 1);
    out.push_back(m);
  }
  return out;
}

std::vector<IntegralMatrix> all_integral(std::size_t h, std::size_t w, int top) {
  std::vector<IntegralMatrix> out;
  std::vector<int> v(h * w, 0);
  for (;;) {
    IntegralMatrix m(h, w);
    for (std::size_t b = 0; b < v.size(); ++b) m.set(b / w, b % w, v[b]);
    out.push_back(m);
    std::size_t b = 0;
    while (b < v.size() && v[b] == top) v[b++] = 0;
    if (b == v.size()) break;
    ++v[b];
  }
  return out;
}

const std::vector<BinaryMatrix>& binary_domain() {
  static const auto d = all_binary(3, 4);
  return d;
}
const std::vector<IntegralMatrix>& integral_domain() {
  static const auto d = all_integral(3, 3, 2);
  return d;
}

// ---- goldens

void decompose_binary(Result& r, std::uint64_t) {
  auto t = golden::tableau(Flavor::sst, golden::kT);
  auto m = encode_binary(t);
  expect(r, m == golden::bin(golden::kBinM), [] { return std::string("binary encoding of T"); });
  auto d = decompose(m);
  expect(r, d.p == golden::bin(golden::kBinP), [&] { return "P = " + brief(d.p); });
  expect(r, d.q == golden::bin(golden::kBinQ), [&] { return "Q = " + brief(d.q); });
  auto n = exhaust(m, {Direction::up, Direction::left}).first;
  expect(r, n == golden::bin(golden::kBinN), [&] { return "N = " + brief(n); });
  Partition lambda = normal_form(m);
  expect(r, lambda == Partition{8, 8, 5, 3, 1}, [&] { return "lambda = " + lambda.str(); });
  expect(r, diagram(lambda) == n, [] { return std::string("N is not diagram(lambda)"); });
}

void decompose_integral(Result& r, std::uint64_t) {
  auto t = golden::tableau(Flavor::sst, golden::kT);
  auto m = encode_integral(t);
  expect(r, m == golden::integ(golden::kIntM), [] { return std::string("integral encoding of T"); });
  auto d = decompose(m);
  expect(r, d.p == golden::integ(golden::kIntP), [&] { return "P = " + brief(d.p); });
  expect(r, d.q == golden::integ(golden::kIntQ), [&] { return "Q = " + brief(d.q); });
  auto n = exhaust(m, {Direction::up, Direction::left}).first;
  expect(r, n == golden::integ(golden::kIntN), [&] { return "N = " + brief(n); });
  Partition lambda = normal_form(m);
  expect(r, lambda == Partition{8, 8, 5, 3, 1}, [&] { return "lambda = " + lambda.str(); });
  expect(r, diagon(lambda) == n, [] { return std::string("N is not diagon(lambda)"); });
}

void burge_datum(Result& r, std::uint64_t) {
  std::vector<BurgeStep> trace;
  Partition k = burge_forward({8, 4, 2}, {8, 7, 2}, {8, 5, 3, 1}, 2, &trace);
  expect(r, k == Partition{8, 8, 4, 2}, [&] { return "forward = " + k.str(); });
  // (i, d, kappa_i, c) as printed for i = 3, 2, 1.
  const BurgeStep want[] = {{3, 3, 2, 1}, {2, 4, 4, 0}, {1, 8, 8, 0}};
  int carry = 2;
  std::size_t seen = 0;
  for (const auto& s : trace) {
    if (s.i > 3) {
      // Rows beyond the printed ones must not contribute.
      expect(r, s.kappa_i == 0 && s.c == carry,
             [&] { return "extra step i=" + std::to_string(s.i) + " is not trivial"; });
      continue;
    }
    const BurgeStep& w = want[seen++];
    expect(r, s.i == w.i && s.d == w.d && s.kappa_i == w.kappa_i && s.c == w.c, [&] {
      return "step i=" + std::to_string(s.i) + ": d=" + std::to_string(s.d) +
             " kappa=" + std::to_string(s.kappa_i) + " c=" + std::to_string(s.c);
    });
    carry = s.c;
  }
  expect(r, seen == 3, [] { return std::string("trace does not cover i = 3, 2, 1"); });
  auto [lambda, m] = burge_backward({11, 9, 8}, {10, 9, 8, 2}, {13, 9, 9, 5});
  expect(r, lambda == Partition{9, 9, 6} && m == 3,
         [&, l = lambda, e = m] { return "backward = " + l.str() + ", " + std::to_string(e); });
}

void dual_datum(Result& r, std::uint64_t) {
  Partition a = dual_forward({5, 3, 2}, {6, 3, 3, 1, 1}, {6, 3, 2, 2}, 1, DualFlavor::row_insertion);
  expect(r, a == Partition{7, 4, 3, 2, 1, 1}, [&] { return "row flavor = " + a.str(); });
  Partition b = dual_forward({3, 2, 1}, {4, 2, 2, 1}, {5, 2, 2}, 0, DualFlavor::col_insertion);
  expect(r, b == Partition{6, 3, 2, 1}, [&] { return "column flavor = " + b.str(); });
  auto ra = dual_backward({6, 3, 3, 1, 1}, {6, 3, 2, 2}, a, DualFlavor::row_insertion);
  expect(r, ra.first == Partition{5, 3, 2} && ra.second == 1,
         [] { return std::string("row flavor backward"); });
  auto rb = dual_backward({4, 2, 2, 1}, {5, 2, 2}, b, DualFlavor::col_insertion);
  expect(r, rb.first == Partition{3, 2, 1} && rb.second == 0,
         [] { return std::string("column flavor backward"); });
}

void rsk_formula(Result& r, std::uint64_t) {
  Partition k = rsk_forward({5, 5, 2, 1}, {8, 5, 5, 2}, {8, 5, 3, 1, 1}, 0);
  expect(r, k == Partition{8, 8, 5, 3, 1}, [&] { return "forward = " + k.str(); });
  auto back = rsk_backward({8, 5, 5, 2}, {8, 5, 3, 1, 1}, k);
  expect(r, back.first == Partition{5, 5, 2, 1} && back.second == 0,
         [] { return std::string("backward"); });
}

void compare_grid(Result& r, const GrowthDiagram& g, const std::vector<std::string>& rows,
                  const char* name) {
  auto want = golden::parse_grid(rows);
  bool ok = want.size() == g.grid.size();
  for (std::size_t i = 0; ok && i < want.size(); ++i) {
    ok = want[i].size() == g.grid[i].size();
    for (std::size_t j = 0; ok && j < want[i].size(); ++j) ok = want[i][j] == g.grid[i][j];
  }
  expect(r, ok, [&] { return std::string(name) + " differs from the printed diagram"; });
}

template <class Tag>
void growth_case(Result& r, const Matrix<Tag>& m, Corner c, const std::vector<std::string>& rows,
                 const char* name) {
  guarded(
      r,
      [&] {
        GrowthDiagram g = growth_diagram(m, c, true);
        compare_grid(r, g, rows, name);
        compare_grid(r, direct_diagram(m, c), rows, name);
      },
      [&] { return std::string(name); });
}

void growth(Result& r, std::uint64_t) {
  auto t = golden::tableau(Flavor::sst, golden::kT);
  auto bm = encode_binary(t);
  auto im = encode_integral(t);
  growth_case(r, im, Corner::NW, golden::kGrowthIntNW, "NW integral");
  growth_case(r, bm, Corner::NW, golden::kGrowthBinNW, "NW binary");
  growth_case(r, bm, Corner::NE, golden::kGrowthBinNE, "NE binary");
  growth_case(r, im, Corner::SW, golden::kGrowthIntSW, "SW integral");
}

// ---- exhaustive crystal properties

template <class Tag>
void commutation_on(Result& r, const std::vector<Matrix<Tag>>& domain, std::size_t h,
                    std::size_t w) {
  for (const auto& m : domain) {
    for (Direction dv : {Direction::up, Direction::down})
      for (Direction dh : {Direction::left, Direction::right})
        for (std::size_t i = 0; i < h; ++i)
          for (std::size_t j = 0; j < w; ++j) {
            auto a = move(m, dv, i);
            auto b = move(m, dh, j);
            if (a) {
              expect(r, potential(a->first, dh, j) == potential(m, dh, j),
                     [&] { return "vertical move changes horizontal potential on " + brief(m); });
            }
            if (b) {
              expect(r, potential(b->first, dv, i) == potential(m, dv, i),
                     [&] { return "horizontal move changes vertical potential on " + brief(m); });
            }
            if (!a || !b) continue;
            auto ab = move(a->first, dh, j);
            auto ba = move(b->first, dv, i);
            expect(r, ab && ba && ab->first == ba->first, [&] {
              return std::string(direction_name(dv)) + "_" + std::to_string(i) + " / " +
                     direction_name(dh) + "_" + std::to_string(j) + " on " + brief(m);
            });
          }
  }
}

IntegralMatrix power(IntegralMatrix m, Direction d, std::size_t index, int n) {
  for (int t = 0; t < n; ++t)
    if (!apply_move(m, d, index)) throw std::logic_error("power not defined");
  return m;
}

void power_commutation(Result& r) {
  for (const auto& m : integral_domain())
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        int pu = potential(m, Direction::up, i), pl = potential(m, Direction::left, j);
        for (int n = 1; n <= pu; ++n)
          for (int k = 1; k <= pl; ++k)
            guarded(
                r,
                [&] {
                  auto x = power(power(m, Direction::up, i, n), Direction::left, j, k);
                  auto y = power(power(m, Direction::left, j, k), Direction::up, i, n);
                  expect(r, x == y, [&] { return "power commutation on " + brief(m); });
                },
                [&] { return "power commutation on " + brief(m); });
      }
}

void commutation(Result& r, std::uint64_t) {
  commutation_on(r, binary_domain(), 3, 4);
  commutation_on(r, integral_domain(), 3, 3);
  power_commutation(r);
}

template <class Tag>
void potentials_on(Result& r, const std::vector<Matrix<Tag>>& domain, std::size_t h,
                   std::size_t w) {
  for (const auto& m : domain) {
    auto rs = row_sums(m);
    auto cs = col_sums(m);
    for (Direction d : {Direction::up, Direction::down, Direction::left, Direction::right}) {
      std::size_t n = is_vertical(d) ? h : w;
      for (std::size_t idx = 0; idx < n; ++idx) {
        Matrix<Tag> x = m;
        int count = 0;
        while (count < 64 && apply_move(x, d, idx)) ++count;
        int p = potential(m, d, idx);
        expect(r, p == count, [&] {
          return std::string(direction_name(d)) + "_" + std::to_string(idx) + " potential " +
                 std::to_string(p) + " but " + std::to_string(count) + " moves on " + brief(m);
        });
        auto prof = paren_profile(m, is_vertical(d) ? Axis::rows : Axis::cols, idx);
        // Binary '(' marks a unit that can rise; integral '(' one that can sink.
        bool rising = d == Direction::up || d == Direction::left;
        int unmatched = rising == Tag::binary ? prof.unmatched_open : prof.unmatched_close;
        expect(r, unmatched == p, [&] {
          return std::string("bracket count for ") + direction_name(d) + "_" + std::to_string(idx) +
                 " differs on " + brief(m);
        });
      }
    }
    for (std::size_t i = 0; i < h; ++i)
      expect(r,
             potential(m, Direction::down, i) - potential(m, Direction::up, i) ==
                 rs[i] - rs[i + 1],
             [&] { return "row margin identity at " + std::to_string(i) + " on " + brief(m); });
    for (std::size_t j = 0; j < w; ++j)
      expect(r,
             potential(m, Direction::right, j) - potential(m, Direction::left, j) ==
                 cs[j] - cs[j + 1],
             [&] { return "column margin identity at " + std::to_string(j) + " on " + brief(m); });
  }
}

void potentials(Result& r, std::uint64_t) {
  potentials_on(r, binary_domain(), 3, 4);
  potentials_on(r, integral_domain(), 3, 3);
}

template <class Tag>
void round_trip_on(Result& r, const std::vector<Matrix<Tag>>& domain) {
  for (const auto& m : domain)
    guarded(
        r,
        [&] {
          auto d = decompose(m);
          expect(r, compose(d.p, d.q) == m, [&] { return "round trip fails on " + brief(m); });
        },
        [&] { return brief(m); });
}

void round_trip(Result& r, std::uint64_t) {
  round_trip_on(r, binary_domain());
  round_trip_on(r, integral_domain());
}

// ---- insertion oracles

// R: the reverse transpose tableau whose j-th member is the row sum of P
// restricted to columns >= j.
Tableau r_from_p(const BinaryMatrix& p) {
  Tableau t{Flavor::reverse_transpose_sst, {}};
  for (std::size_t j = 0; j <= p.cols(); ++j)
    t.chain.emplace_back(row_sums(restrict(p, Interval::all(), Interval::from(j))));
  return t.normalized();
}

void dual_row_case(Result& r, const BinaryMatrix& m) {
  guarded(
      r,
      [&] {
        auto d = decompose(m);
        auto pair = dual_rsk_row(m);
        expect(r, pair.first == dual(r_from_p(d.p)),
               [&] { return "dual_rsk_row insertion tableau on " + brief(m); });
        expect(r, encode_binary(pair.second) == d.q,
               [&] { return "dual_rsk_row recording tableau on " + brief(m); });
      },
      [&] { return "dual_rsk_row on " + brief(m); });
}

void oracles(Result& r, std::uint64_t seed) {
  for (const auto& m : integral_domain())
    guarded(
        r,
        [&] {
          auto d = decompose(m);
          auto b = burge(m);
          expect(r, encode_integral(b.first) == d.p, [&] { return "burge P on " + brief(m); });
          expect(r, transpose(encode_integral(b.second)) == d.q,
                 [&] { return "burge Q on " + brief(m); });
        },
        [&] { return "burge on " + brief(m); });
  for (const auto& m : binary_domain())
    guarded(
        r,
        [&] {
          auto d = decompose(m);
          auto c = dual_rsk_col(m);
          expect(r, encode_binary(c.first) == d.q, [&] { return "dual_rsk_col Q on " + brief(m); });
          expect(r, c.second == r_from_p(d.p), [&] { return "dual_rsk_col P on " + brief(m); });
        },
        [&] { return "dual_rsk_col on " + brief(m); });

  auto example = encode_binary(golden::tableau(Flavor::sst, golden::kT));
  dual_row_case(r, example);
  expect(r,
         dual_rsk_row(example).first == golden::tableau(Flavor::transpose_sst, golden::kRStar),
         [] { return std::string("dual_rsk_row on the example is not R*"); });
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 50; ++t) {
    std::size_t h = 1 + rng() % 5, w = 1 + rng() % 6;
    BinaryMatrix m(h, w);
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < w; ++j) m.set(i, j, static_cast<int>(rng() % 2));
    dual_row_case(r, m);
  }
}

// ---- cancellation

const std::vector<SkewShape>& small_shapes() {
  static const auto s = skew_shapes_up_to(5);
  return s;
}

constexpr Stage kStages[] = {Stage::brute, Stage::tab_first, Stage::lr_first, Stage::fully_reduced};

void sums(Result& r, std::uint64_t) {
  for (const auto& a : small_shapes())
    for (const auto& b : small_shapes()) {
      auto where = [&] { return a.str() + " , " + b.str(); };
      guarded(
          r,
          [&] {
            long c = lr_count(a, b, Mode::binary);
            long ci = lr_count(a, b, Mode::integral);
            expect(r, c == ci, [&] {
              return "lr_count " + where() + ": " + std::to_string(c) + " vs " + std::to_string(ci);
            });
            for (Mode mode : {Mode::binary, Mode::integral})
              for (Stage s : kStages) {
                long v = alternating_sum(a, b, s, mode);
                expect(r, v == c, [&] {
                  return std::string(stage_name(s)) +
                         (mode == Mode::binary ? " binary " : " integral ") + where() + " = " +
                         std::to_string(v) + ", lr_count " + std::to_string(c);
                });
              }
          },
          where);
    }
}

template <class Tag>
void involution_case(Result& r, const SkewShape& a, const SkewShape& b, Stage stage,
                     Condition failing, const std::vector<SkewShape>& pool, std::mt19937_64& rng) {
  Mode mode = Tag::binary ? Mode::binary : Mode::integral;
  auto ts = terms<Tag>(a, b, stage, default_box(a, b, mode));
  std::set<Matrix<Tag>> members;
  for (const auto& t : ts) members.insert(t.first.trimmed());
  const SkewShape& shape = failing == Condition::tableau ? a : b;
  Condition perp = failing == Condition::tableau ? Condition::lr : Condition::tableau;
  for (const auto& [m, sign] : ts) {
    if (condition(m, shape, failing)) continue;
    auto where = [&, &m = m] {
      return std::string(stage_name(stage)) + " " + Tag::name + " " + a.str() + " , " + b.str() +
             " at " + brief(m);
    };
    guarded(
        r,
        [&, &m = m, sign = sign] {
          Matrix<Tag> m2 = involution(m, failing, shape);
          Matrix<Tag> m3 = involution(m2, failing, shape);
          expect(r, !(m2 == m), [&] { return "fixed point: " + where(); });
          expect(r, m3 == m, [&] { return "not involutive: " + where(); });
          expect(r, summand(m2, a, b, stage) == -sign, [&] { return "sign: " + where(); });
          expect(r, members.count(m2.trimmed()) == 1, [&] { return "partner not a term: " + where(); });
          for (int k = 0; k < 3; ++k) {
            const SkewShape& sigma = pool[rng() % pool.size()];
            expect(r, condition(m, sigma, perp) == condition(m2, sigma, perp),
                   [&] { return "perpendicular condition for " + sigma.str() + ": " + where(); });
          }
        },
        where);
  }
}

void involutions(Result& r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  static const auto pool = skew_shapes_up_to(6);
  for (const auto& a : small_shapes())
    for (const auto& b : small_shapes()) {
      if (a.size() != b.size()) continue;  // no terms at all otherwise
      // Each reduction step cancels terms failing one condition.
      involution_case<binary_tag>(r, a, b, Stage::brute, Condition::tableau, pool, rng);
      involution_case<binary_tag>(r, a, b, Stage::brute, Condition::lr, pool, rng);
      involution_case<binary_tag>(r, a, b, Stage::tab_first, Condition::lr, pool, rng);
      involution_case<binary_tag>(r, a, b, Stage::lr_first, Condition::tableau, pool, rng);
      involution_case<integral_tag>(r, a, b, Stage::brute, Condition::tableau, pool, rng);
      involution_case<integral_tag>(r, a, b, Stage::brute, Condition::lr, pool, rng);
      involution_case<integral_tag>(r, a, b, Stage::tab_first, Condition::lr, pool, rng);
      involution_case<integral_tag>(r, a, b, Stage::lr_first, Condition::tableau, pool, rng);
    }
}

// ---- Schutzenberger duals

Tableau random_sst(std::mt19937_64& rng) {
  int n = static_cast<int>(rng() % 11);
  auto parts = partitions_of(n);
  Partition lambda = parts[rng() % parts.size()];
  Display d;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    std::vector<int> row;
    for (int j = 0; j < lambda[i]; ++j) {
      int lo = 0;
      if (j > 0) lo = row.back();
      if (i > 0) lo = std::max(lo, d.rows[i - 1][j] + 1);
      row.push_back(lo + static_cast<int>(rng() % 3));
    }
    d.rows.push_back(row);
  }
  return from_display(Flavor::sst, d);
}

void schutzenberger(Result& r, std::uint64_t seed) {
  using golden::tableau;
  auto R = tableau(Flavor::reverse_transpose_sst, golden::kR);
  expect(r, dual(R) == tableau(Flavor::transpose_sst, golden::kRStar),
         [] { return std::string("dual(R) != R*"); });
  auto L = tableau(Flavor::sst, golden::kLbar);
  expect(r, dual(L) == tableau(Flavor::reverse_sst, golden::kLbarStar),
         [] { return std::string("dual(Lbar) != Lbar*"); });
  auto S = tableau(Flavor::sst, golden::kS);
  auto rot = rotate_complement(dual(S), 5, 8);
  expect(r, rot == tableau(Flavor::sst, golden::kSStarRot),
         [] { return std::string("rotated dual of S differs"); });
  expect(r, rectify(rot) == S, [] { return std::string("rectification of S*rot != S"); });

  std::mt19937_64 rng(seed);
  for (int t = 0; t < 100; ++t) {
    Tableau s = random_sst(rng);
    auto where = [&] { return format_display(to_display(s)); };
    guarded(
        r,
        [&] {
          Tableau d = dual(s);
          expect(r, d.valid() && tableau_weight(d) == tableau_weight(s),
                 [&] { return "dual not a tableau of the same weight: " + where(); });
          expect(r, dual(d) == s, [&] { return "dual(dual) != id: " + where(); });
          if (s.chain.empty() || s.shape().outer.empty()) return;
          Partition lam = s.shape().outer;
          auto rc = rotate_complement(d, lam.length(), static_cast<std::size_t>(lam[0]));
          expect(r, rectify(rc) == s, [&] { return "rectification route: " + where(); });
        },
        where);
  }
}

// ---- pictures

template <class Tag>
void lift_round_trip(Result& r, const SkewShape& a, const SkewShape& b) {
  Mode mode = Tag::binary ? Mode::binary : Mode::integral;
  for (const auto& [m, sign] : terms<Tag>(a, b, Stage::fully_reduced, default_box(a, b, mode))) {
    auto where = [&, &m = m] { return std::string(Tag::name) + " lift " + brief(m); };
    guarded(
        r,
        [&, &m = m] {
          Picture p = lift(m, a, b);
          expect(r, validate(p), [&] { return "invalid: " + where(); });
          Matrix<Tag> back;
          if constexpr (Tag::binary)
            back = project_bin(p);
          else
            back = project_int(p);
          expect(r, back == m, [&] { return "projection differs: " + where(); });
        },
        where);
  }
}

void pictures(Result& r, std::uint64_t) {
  for (const auto& a : small_shapes())
    for (const auto& b : small_shapes()) {
      if (a.size() != b.size()) continue;
      auto where = [&] { return a.str() + " -> " + b.str(); };
      guarded(
          r,
          [&] {
            auto all = enumerate_pictures(a, b);
            long c = lr_count(a, b, Mode::integral);
            expect(r, static_cast<long>(all.size()) == c, [&] {
              return where() + ": " + std::to_string(all.size()) + " pictures, lr_count " +
                     std::to_string(c);
            });
            for (const auto& p : all) {
              expect(r, lift(project_int(p), a, b) == p, [&] { return "Int round trip " + where(); });
              expect(r, lift(project_bin(p), a, b) == p, [&] { return "Bin round trip " + where(); });
              expect(r, p.inverse().inverse() == p, [&] { return "inverse " + where(); });
            }
            lift_round_trip<integral_tag>(r, a, b);
            lift_round_trip<binary_tag>(r, a, b);
          },
          where);
    }
}

}  // namespace

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"decompose-binary", 1, 1, "binary decomposition of the running example", decompose_binary},
      {"decompose-integral", 2, 1, "integral decomposition of the running example",
       decompose_integral},
      {"burge-datum", 3, 0, "Burge shape datum, forward trace and backward", burge_datum},
      {"dual-datum", 4, 0, "binary shape data, row and column flavors", dual_datum},
      {"rsk-formula", 5, 0, "closed-form RSK shape datum", rsk_formula},
      {"growth", 6, 10, "four growth diagrams by local rules and by normalization", growth},
      {"commutation", 7, 60, "vertical and horizontal moves commute", commutation},
      {"potentials", 8, 0, "potentials count moves; margin identities", potentials},
      {"round-trip", 9, 0, "compose(decompose(M)) = M", round_trip},
      {"oracles", 10, 300, "insertion algorithms agree with decompose", oracles},
      {"sums", 11, 600, "alternating sums agree with lr_count", sums},
      {"involutions", 12, 0, "cancellation pairings", involutions},
      {"schutzenberger", 13, 0, "duals and rectification", schutzenberger},
      {"pictures", 14, 0, "picture counts and project/lift", pictures},
  };
  return all;
}

const Suite* find_suite(const std::string& name) {
  for (const auto& s : suites())
    if (s.name == name) return &s;
  return nullptr;
}

Result run_suite(const Suite& s, std::uint64_t seed) {
  Result r;
  r.name = s.name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    s.body(r, seed);
  } catch (const std::exception& e) {
    ++r.failures;
    r.notes.push_back(std::string("aborted: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.ok = r.failures == 0;
  return r;
}

std::uint64_t seed_from_env() {
  if (const char* s = std::getenv("DC_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && end != s) return v;
  }
  return 20240917;
}

}  // namespace dc::verify
