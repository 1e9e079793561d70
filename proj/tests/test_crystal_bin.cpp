#include <doctest.h>

#include <random>

#include "dc/crystal_bin.hpp"
#include "helpers.hpp"

using namespace dc;

namespace {

std::vector<std::size_t> columns_moved(BinaryMatrix m, Direction d, std::size_t index) {
  std::vector<std::size_t> cols;
  MoveRecord rec{};
  while (apply_move(m, d, index, &rec)) cols.push_back(rec.col);
  return cols;
}

}  // namespace

TEST_SUITE("crystal_bin") {
  TEST_CASE("interchangeable pairs in the wide example") {
    auto m = testdata::wide_binary();
    CHECK(interchangeable(m, 0, 0, Orientation::vertical));
    CHECK(interchangeable(m, 0, 1, Orientation::vertical));
    CHECK_FALSE(interchangeable(m, 0, 2, Orientation::vertical));
    for (std::size_t l = 0; l < 13; ++l)
      CHECK(interchangeable(m, 1, l, Orientation::vertical) == (l == 4));
  }

  TEST_CASE("equal pairs are never interchangeable") {
    BinaryMatrix ones = BinaryMatrix::from_rows({{1, 1}, {1, 1}});
    for (std::size_t l = 0; l < 2; ++l) {
      CHECK_FALSE(interchangeable(ones, 0, l, Orientation::vertical));
      CHECK_FALSE(interchangeable(BinaryMatrix(2, 2), 0, l, Orientation::vertical));
      CHECK_FALSE(interchangeable(ones, l, 0, Orientation::horizontal));
    }
  }

  TEST_CASE("successive upward moves") {
    auto m = testdata::wide_binary();
    CHECK(columns_moved(m, Direction::up, 0) == std::vector<std::size_t>{1, 7, 8, 10, 11});
    CHECK(potential(m, Direction::up, 0) == 5);
  }

  TEST_CASE("successive downward moves") {
    auto m = testdata::wide_binary();
    CHECK(columns_moved(m, Direction::down, 1) == std::vector<std::size_t>{4, 2});
    CHECK(potential(m, Direction::down, 0) == 1);
    auto rs = row_sums(m);
    CHECK(potential(m, Direction::down, 0) - potential(m, Direction::up, 0) == rs[0] - rs[1]);
  }

  TEST_CASE("normal forms admit no raising moves") {
    auto d = diagram(Partition{3, 2});
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK_FALSE(move(d, Direction::up, i));
      CHECK_FALSE(move(d, Direction::left, i));
    }
  }

  TEST_CASE("bracket strings") {
    auto m = testdata::wide_binary();
    auto p = paren_profile(m, Axis::rows, 0);
    CHECK(p.symbols == ")((-())((-((-");
    CHECK(p.unmatched_open == 5);
    CHECK(p.unmatched_close == 1);
    CHECK(paren_profile(m, Axis::rows, 1).symbols == "--)-)-(----)-");
    CHECK(paren_profile(BinaryMatrix(2, 3), Axis::rows, 0).symbols == "---");
  }

  TEST_CASE("zero matrix") {
    BinaryMatrix z(3, 3);
    for (Direction d : {Direction::up, Direction::down, Direction::left, Direction::right})
      CHECK(potential(z, d, 0) == 0);
  }

  TEST_CASE("moves are inverse to each other and unique per ladder") {
    std::mt19937 rng(7);
    for (int t = 0; t < 300; ++t) {
      BinaryMatrix m(6, 6);
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) m.set(i, j, static_cast<int>(rng() % 2));
      for (std::size_t i = 0; i < 5; ++i) {
        for (Direction d : {Direction::up, Direction::down, Direction::left, Direction::right}) {
          auto r = move(m, d, i);
          CHECK(static_cast<bool>(r) == (potential(m, d, i) > 0));
          if (r) {
            auto back = move(r->first, opposite(d), i);
            REQUIRE(back);
            CHECK(back->first == m);
          }
        }
        auto up = move(m, Direction::up, i);
        auto down = move(m, Direction::down, i);
        if (up && down) CHECK(down->second.col < up->second.col);
        auto left = move(m, Direction::left, i);
        auto right = move(m, Direction::right, i);
        if (left && right) CHECK(left->second.row < right->second.row);
      }
    }
  }

  TEST_CASE("direction names") {
    CHECK(parse_direction("left") == Direction::left);
    CHECK_THROWS_AS(parse_direction("north"), usage_error);
  }
}
