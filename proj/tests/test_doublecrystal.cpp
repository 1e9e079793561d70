#include <doctest.h>

#include <random>

#include "dc/doublecrystal.hpp"
#include "helpers.hpp"

using namespace dc;

TEST_SUITE("doublecrystal") {
  TEST_CASE("binary exhaustion goldens") {
    auto m = golden::bin(golden::kBinM);
    CHECK(exhaust(m, {Direction::up}).first == golden::bin(golden::kBinP));
    CHECK(exhaust(m, {Direction::left}).first == golden::bin(golden::kBinQ));
    // Downward moves at indices 0..5.
    CHECK(exhaust(m, {Direction::down}, 7).first == golden::bin(golden::kBinPTilde));
  }

  TEST_CASE("integral exhaustion goldens") {
    auto m = golden::integ(golden::kIntM);
    CHECK(exhaust(m, {Direction::up}).first == golden::integ(golden::kIntP));
    CHECK(exhaust(m, {Direction::left}).first == golden::integ(golden::kIntQ));
    CHECK(exhaust(m, {Direction::right}, 7).first == golden::integ(golden::kIntQTilde));
    CHECK(exhaust(golden::integ(golden::kIntP), {Direction::down}, 5).first ==
          golden::integ(golden::kIntPTilde));
  }

  TEST_CASE("lowering without a bound is a usage error") {
    CHECK_THROWS_AS(exhaust(golden::bin(golden::kBinM), {Direction::down}), usage_error);
  }

  TEST_CASE("sequences replay") {
    auto m = golden::integ(golden::kIntM);
    auto [r, seq] = exhaust(m, {Direction::up, Direction::left});
    CHECK(replay(m, seq) == r);
    CHECK_FALSE(seq.empty());
    auto bad = seq;
    bad.front().col += 1;
    CHECK_THROWS_AS(replay(m, bad), std::logic_error);
  }

  TEST_CASE("normal forms") {
    Partition l{8, 8, 5, 3, 1};
    CHECK(is_normal(diagram(l)) == l);
    CHECK(is_normal(diagon(l)) == l);
    CHECK_FALSE(is_normal(golden::bin(golden::kBinM)));
    CHECK(normal_form(golden::bin(golden::kBinM)) == l);
    CHECK(normal_form(golden::integ(golden::kIntM)) == l);
    CHECK(normal_form(BinaryMatrix(2, 2)) == Partition{});
  }

  TEST_CASE("decompose and compose goldens") {
    auto bd = decompose(golden::bin(golden::kBinM));
    CHECK(bd.p == golden::bin(golden::kBinP));
    CHECK(bd.q == golden::bin(golden::kBinQ));
    CHECK(compose(bd.p, bd.q) == golden::bin(golden::kBinM));
    auto id = decompose(golden::integ(golden::kIntM));
    CHECK(id.p == golden::integ(golden::kIntP));
    CHECK(id.q == golden::integ(golden::kIntQ));
    CHECK(compose(id.p, id.q) == golden::integ(golden::kIntM));
    auto d = diagram(Partition{3, 1});
    auto dd = decompose(d);
    CHECK(dd.p == d);
    CHECK(dd.q == d);
    CHECK(compose(d, d) == d);
  }

  TEST_CASE("compose rejects mismatched pairs") {
    auto bd = decompose(golden::bin(golden::kBinM));
    // Not exhausted upward.
    CHECK_THROWS_AS(compose(golden::bin(golden::kBinM), bd.q), compose_error);
    // Shapes differ.
    CHECK_THROWS_AS(compose(diagram(Partition{2}), diagram(Partition{1, 1})), compose_error);
  }

  TEST_CASE("random round trips") {
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
      IntegralMatrix m(5, 5);
      BinaryMatrix b(5, 6);
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
          if (j < 5) m.set(i, j, static_cast<int>(rng() % 4));
          b.set(i, j, static_cast<int>(rng() % 2));
        }
      auto dm = decompose(m);
      CHECK(compose(dm.p, dm.q) == m);
      CHECK(normal_form(dm.p) == normal_form(m));
      auto db = decompose(b);
      CHECK(compose(db.p, db.q) == b);
    }
  }

  TEST_CASE("crystal class potentials") {
    CHECK(crystal_class_potentials(diagon(Partition{8, 8, 5, 3, 1}), Orientation::vertical) ==
          Composition{0, 3, 2, 2, 1});
    CHECK(crystal_class_potentials(diagram(Partition{2, 1}), Orientation::vertical) ==
          Composition{1, 1});
    CHECK(crystal_class_potentials(IntegralMatrix(3, 3), Orientation::vertical).empty());
  }
}
