#include <doctest.h>

#include <random>

#include "dc/crystal_int.hpp"
#include "helpers.hpp"

using namespace dc;

TEST_SUITE("crystal_int") {
  TEST_CASE("transfer legality in the wide example") {
    auto m = testdata::wide_integral();
    CHECK(transfer_legal(m, Axis::rows, 0, 3, 2));
    CHECK_FALSE(transfer_legal(m, Axis::rows, 0, 3, 3));
    CHECK(transfer_legal(m, Axis::rows, 0, 7, -4));
    CHECK_FALSE(transfer_legal(m, Axis::rows, 0, 7, -5));
    CHECK_FALSE(transfer_legal(m, Axis::rows, 0, 3, -1));
    for (std::size_t j = 0; j < 3; ++j)
      for (int a = 1; a <= 3; ++a) CHECK_FALSE(transfer_legal(m, Axis::rows, 0, j, a));
  }

  TEST_CASE("upward transfers") {
    auto m = testdata::wide_integral();
    MoveRecord rec{};
    REQUIRE(apply_move(m, Direction::up, 0, &rec));
    CHECK(rec.col == 3);
    REQUIRE(apply_move(m, Direction::up, 0, &rec));
    CHECK(rec.col == 3);
    CHECK(m == IntegralMatrix::from_rows({{1, 2, 1, 5, 3, 1, 2, 4, 0}, {2, 1, 1, 2, 2, 0, 5, 2, 0}}));
    REQUIRE(apply_move(m, Direction::up, 0, &rec));
    CHECK(rec.col == 0);
    CHECK(potential(testdata::wide_integral(), Direction::up, 0) == 4);
  }

  TEST_CASE("downward transfers") {
    auto m = testdata::wide_integral();
    for (int t = 0; t < 4; ++t) {
      MoveRecord rec{};
      REQUIRE(apply_move(m, Direction::down, 0, &rec));
      CHECK(rec.col == 7);
    }
    CHECK(m(0, 7) == 0);
    CHECK(m(1, 7) == 6);
    CHECK_FALSE(apply_move(m, Direction::down, 0));
    CHECK(potential(testdata::wide_integral(), Direction::down, 0) == 4);
  }

  TEST_CASE("bracket string") {
    auto p = paren_profile(testdata::wide_integral(), Axis::rows, 0);
    std::string s = p.symbols;
    while (!s.empty() && s.back() == '|') s.pop_back();
    CHECK(s == "))(|)((|)(|))))(((|))(((|(|)))))((|))((((");
    CHECK(p.unmatched_open == 4);
    CHECK(p.unmatched_close == 4);
    // diagon((2,1)): "((" then ")": one unit of row 0 can sink.
    auto q = paren_profile(diagon(Partition{2, 1}), Axis::rows, 0);
    CHECK(q.unmatched_open == 1);
    CHECK(q.unmatched_close == 0);
    CHECK(potential(diagon(Partition{2, 1}), Direction::down, 0) == 1);
    CHECK(paren_profile(IntegralMatrix(2, 2), Axis::rows, 0).unmatched_open == 0);
  }

  TEST_CASE("diagonal normal forms are blocked") {
    auto d = diagon(Partition{4, 2, 2, 1});
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK_FALSE(move(d, Direction::up, i));
      CHECK_FALSE(move(d, Direction::left, i));
    }
  }

  TEST_CASE("zero matrix") {
    IntegralMatrix z(2, 2);
    for (Direction d : {Direction::up, Direction::down, Direction::left, Direction::right})
      CHECK(potential(z, d, 0) == 0);
  }

  TEST_CASE("random 4x4: multi-unit transfers split into unit moves") {
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
      IntegralMatrix m(4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m.set(i, j, static_cast<int>(rng() % 5));
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t at = 0; at < 4; ++at)
          for (int a : {2, 3, -2, -3}) {
            if (!transfer_legal(m, Axis::rows, k, at, a)) continue;
            IntegralMatrix x = m;
            int step = a > 0 ? 1 : -1;
            bool ok = true;
            for (int u = 0; u < std::abs(a) && ok; ++u) ok = apply_transfer(x, Axis::rows, k, at, step);
            CHECK(ok);
          }
      // min(M[i,j], M[i+1,j+1]) is invariant under transfers between rows i, i+1.
      for (std::size_t i = 0; i < 3; ++i) {
        for (Direction d : {Direction::up, Direction::down}) {
          auto r = move(m, d, i);
          if (!r) continue;
          for (std::size_t j = 0; j < 3; ++j)
            CHECK(std::min(m(i, j), m(i + 1, j + 1)) ==
                  std::min(r->first(i, j), r->first(i + 1, j + 1)));
        }
      }
    }
  }

  TEST_CASE("successive up transfers move leftwards") {
    std::mt19937 rng(5);
    for (int t = 0; t < 200; ++t) {
      IntegralMatrix m(2, 5);
      for (std::size_t j = 0; j < 5; ++j) {
        m.set(0, j, static_cast<int>(rng() % 3));
        m.set(1, j, static_cast<int>(rng() % 3));
      }
      MoveRecord rec{};
      std::size_t last = 99;
      while (apply_move(m, Direction::up, 0, &rec)) {
        CHECK(rec.col <= last);
        last = rec.col;
      }
    }
  }
}
