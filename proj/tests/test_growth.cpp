#include <doctest.h>

#include <random>

#include "dc/doublecrystal.hpp"
#include "dc/growth.hpp"
#include "helpers.hpp"

using namespace dc;

namespace {

template <class Tag>
Matrix<Tag> random_matrix(std::mt19937& rng, std::size_t h, std::size_t w, int top) {
  Matrix<Tag> m(h, w);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < w; ++j) m.set(i, j, static_cast<int>(rng() % (top + 1)));
  return m;
}

// Every unit square of a diagram, as (lambda, mu, nu, kappa, entry) in the
// orientation's corner convention.
struct Square {
  Partition lambda, mu, nu, kappa;
  int entry;
};

std::vector<Square> squares(const GrowthDiagram& g) {
  std::vector<Square> out;
  for (std::size_t i = 0; i < g.k; ++i)
    for (std::size_t j = 0; j < g.l; ++j) {
      const auto& G = g.grid;
      int e = g.entries[i][j];
      switch (g.orientation) {
        case Corner::NW:
          out.push_back({G[i][j], G[i][j + 1], G[i + 1][j], G[i + 1][j + 1], e});
          break;
        case Corner::NE:
          out.push_back({G[i][j + 1], G[i][j], G[i + 1][j + 1], G[i + 1][j], e});
          break;
        case Corner::SW:
          out.push_back({G[i + 1][j], G[i + 1][j + 1], G[i][j], G[i][j + 1], e});
          break;
        case Corner::SE:
          out.push_back({G[i + 1][j + 1], G[i + 1][j], G[i][j + 1], G[i][j], e});
          break;
      }
    }
  return out;
}

}  // namespace

TEST_SUITE("growth") {
  TEST_CASE("implicit shapes of submatrices") {
    auto im = golden::integ(golden::kIntM);
    CHECK(implicit_shape(restrict(im, Interval::first(4), Interval::first(7))) ==
          Partition{8, 8, 4, 2});
    auto bm = golden::bin(golden::kBinM);
    CHECK(implicit_shape(restrict(bm, Interval::first(6), Interval::first(4))) ==
          Partition{4, 4, 2, 1});
    CHECK(implicit_shape(IntegralMatrix(3, 3)) == Partition{});
  }

  TEST_CASE("Burge datum") {
    std::vector<BurgeStep> trace;
    CHECK(burge_forward({8, 4, 2}, {8, 7, 2}, {8, 5, 3, 1}, 2, &trace) == Partition{8, 8, 4, 2});
    std::vector<std::tuple<int, int, int>> seen;
    for (const auto& s : trace)
      if (s.i <= 3) seen.emplace_back(s.d, s.kappa_i, s.c);
    CHECK(seen == std::vector<std::tuple<int, int, int>>{{3, 2, 1}, {4, 4, 0}, {8, 8, 0}});
    CHECK(burge_forward({}, {}, {}, 0) == Partition{});
    // Equal corners: the value is the normal form of diag(3, 1, 5).
    Partition l{3, 1};
    auto d = IntegralMatrix::from_rows({{3, 0, 0}, {0, 1, 0}, {0, 0, 5}});
    CHECK(burge_forward(l, l, l, 5) == normal_form(d));
    CHECK(burge_forward({1}, {1}, {1}, 0) == Partition{1});
    auto [lam, m] = burge_backward({11, 9, 8}, {10, 9, 8, 2}, {13, 9, 9, 5});
    CHECK(lam == Partition{9, 9, 6});
    CHECK(m == 3);
    CHECK(burge_backward({}, {}, {}) == std::pair<Partition, int>{Partition{}, 0});
  }

  TEST_CASE("RSK formula") {
    CHECK(rsk_forward({5, 5, 2, 1}, {8, 5, 5, 2}, {8, 5, 3, 1, 1}, 0) == Partition{8, 8, 5, 3, 1});
    CHECK(rsk_backward({8, 5, 5, 2}, {8, 5, 3, 1, 1}, {8, 8, 5, 3, 1}) ==
          std::pair<Partition, int>{Partition{5, 5, 2, 1}, 0});
    CHECK(rsk_forward({}, {}, {}, 0) == Partition{});
    CHECK(rsk_forward({1}, {1}, {1}, 0) == Partition{1});
    CHECK(rsk_backward({}, {}, {}) == std::pair<Partition, int>{Partition{}, 0});
  }

  TEST_CASE("binary shape data") {
    CHECK(dual_forward({5, 3, 2}, {6, 3, 3, 1, 1}, {6, 3, 2, 2}, 1, DualFlavor::row_insertion) ==
          Partition{7, 4, 3, 2, 1, 1});
    CHECK(dual_forward({3, 2, 1}, {4, 2, 2, 1}, {5, 2, 2}, 0, DualFlavor::col_insertion) ==
          Partition{6, 3, 2, 1});
    CHECK(dual_forward({}, {}, {}, 0, DualFlavor::row_insertion) == Partition{});
  }

  TEST_CASE("local rules invert on every square of random diagrams") {
    std::mt19937 rng(23);
    for (int t = 0; t < 60; ++t) {
      auto im = random_matrix<integral_tag>(rng, 3, 4, 2);
      auto bm = random_matrix<binary_tag>(rng, 4, 4, 1);
      for (Corner c : {Corner::NW, Corner::NE, Corner::SW, Corner::SE}) {
        bool burge = c == Corner::NW || c == Corner::SE;
        for (const auto& s : squares(growth_diagram(im, c))) {
          auto back = burge ? burge_backward(s.mu, s.nu, s.kappa) : rsk_backward(s.mu, s.nu, s.kappa);
          CHECK(back.first == s.lambda);
          CHECK(back.second == s.entry);
        }
        DualFlavor f = burge ? DualFlavor::row_insertion : DualFlavor::col_insertion;
        for (const auto& s : squares(growth_diagram(bm, c))) {
          auto back = dual_backward(s.mu, s.nu, s.kappa, f);
          CHECK(back.first == s.lambda);
          CHECK(back.second == s.entry);
        }
      }
    }
  }

  TEST_CASE("growth diagrams of the running matrices") {
    auto bm = golden::bin(golden::kBinM);
    auto im = golden::integ(golden::kIntM);
    CHECK(growth_diagram(im, Corner::NW, true).grid == golden::parse_grid(golden::kGrowthIntNW));
    CHECK(growth_diagram(im, Corner::NW).at(2, 6) == Partition{7, 2});
    CHECK(growth_diagram(bm, Corner::NW, true).grid == golden::parse_grid(golden::kGrowthBinNW));
    CHECK(growth_diagram(bm, Corner::NE, true).grid == golden::parse_grid(golden::kGrowthBinNE));
    CHECK(growth_diagram(im, Corner::SW, true).grid == golden::parse_grid(golden::kGrowthIntSW));
  }

  TEST_CASE("all orientations agree with direct normalization") {
    std::mt19937 rng(29);
    for (int t = 0; t < 40; ++t) {
      auto im = random_matrix<integral_tag>(rng, 4, 5, 3);
      auto bm = random_matrix<binary_tag>(rng, 5, 5, 1);
      for (Corner c : {Corner::NW, Corner::NE, Corner::SW, Corner::SE}) {
        CHECK(growth_diagram(im, c).grid == direct_diagram(im, c).grid);
        CHECK(growth_diagram(bm, c).grid == direct_diagram(bm, c).grid);
      }
    }
  }

  TEST_CASE("zero matrix gives an empty grid") {
    auto g = growth_diagram(IntegralMatrix(2, 3), Corner::SE);
    for (const auto& row : g.grid)
      for (const auto& p : row) CHECK(p.empty());
  }

  TEST_CASE("rendering") {
    auto g = growth_diagram(golden::integ(golden::kIntM), Corner::NW);
    std::string text = render(g);
    CHECK(text.rfind("NW integral 5x7\n", 0) == 0);
    CHECK(text.find("2 (8,8,5,3,1)") != std::string::npos);
    CHECK(parse_corner("se") == Corner::SE);
    CHECK_THROWS_AS(parse_corner("N"), usage_error);
  }

  TEST_CASE("French normal form") {
    auto f = french_form(Partition{4, 4, 2, 1}, 6);
    CHECK(f == BinaryMatrix::from_rows({{0, 0, 0, 0},
                                        {0, 0, 0, 0},
                                        {1, 0, 0, 0},
                                        {1, 1, 0, 0},
                                        {1, 1, 1, 1},
                                        {1, 1, 1, 1}}));
    CHECK(col_sums(f) == conjugate(Partition{4, 4, 2, 1}));
    CHECK(row_sums(f) == revert(Partition{4, 4, 2, 1}, 6));
    CHECK(french_form(Partition{}, 3).is_zero());
    CHECK(recognize_french(f, 6) == Partition{4, 4, 2, 1});
    CHECK_FALSE(recognize_french(golden::bin(golden::kBinM), 7));
  }

  TEST_CASE("French normalisation of a submatrix") {
    auto m = golden::bin(golden::kBinM);
    auto r = exhaust(m, std::vector<OpRange>{OpRange{Direction::down, 0, 5}, OpRange{Direction::left, 0, 3}}).first;
    CHECK(r == BinaryMatrix::from_rows({{0, 0, 0, 0, 0, 0, 0, 0, 0},
                                        {0, 0, 0, 0, 1, 0, 0, 0, 0},
                                        {1, 0, 0, 0, 0, 0, 0, 0, 0},
                                        {1, 1, 0, 0, 0, 1, 0, 0, 0},
                                        {1, 1, 1, 1, 1, 0, 0, 0, 0},
                                        {1, 1, 1, 1, 1, 0, 1, 1, 1},
                                        {0, 1, 1, 1, 1, 1, 1, 1, 0}}));
    CHECK(recognize_french(restrict(r, Interval::first(6), Interval::first(4)), 6) ==
          Partition{4, 4, 2, 1});
  }

  TEST_CASE("sliced form") {
    auto m = golden::integ(golden::kIntM);
    auto r = exhaust(m, std::vector<OpRange>{OpRange{Direction::up, 1}, OpRange{Direction::right, 0, 5}}).first;
    CHECK(r == IntegralMatrix::from_rows({{0, 1, 0, 1, 0, 3, 0},
                                          {0, 0, 1, 1, 3, 0, 3},
                                          {0, 0, 0, 1, 1, 3, 0},
                                          {0, 0, 0, 0, 1, 1, 3},
                                          {0, 0, 0, 0, 0, 1, 1}}));
    auto block = restrict(r, Interval::from(1), Interval::first(6));
    CHECK(block == sliced_form(Partition{5, 5, 2, 1}, 1, 6));
    CHECK(recognize_sliced(block, 1, 6) == Partition{5, 5, 2, 1});
    CHECK(sliced_form(Partition{}, 2, 3).is_zero());
    auto s = sliced_form(Partition{3, 2, 2}, 2, 4);
    CHECK(row_sums(s) == Composition{0, 0, 3, 2, 2});
  }
}
