#include <doctest.h>

#include <random>

#include "dc/doublecrystal.hpp"
#include "dc/oracles.hpp"
#include "helpers.hpp"

using namespace dc;

namespace {

std::vector<Partition> shapes_of(const Tableau& t) { return t.normalized().chain; }

IntegralMatrix reverse_rows(const IntegralMatrix& m) {
  IntegralMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.set(m.rows() - 1 - i, j, m(i, j));
  return r;
}

IntegralMatrix reverse_cols(const IntegralMatrix& m) {
  IntegralMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.set(i, m.cols() - 1 - j, m(i, j));
  return r;
}

}  // namespace

TEST_SUITE("oracles") {
  TEST_CASE("column insertion") {
    Tableau t{Flavor::sst, {}};
    for (int x : {5, 5, 4, 2, 0}) t = column_insert(t, x);
    CHECK(t.shape().outer == Partition{5});
    CHECK(column_insert(Tableau{Flavor::sst, {}}, 0).shape().outer == Partition{1});
  }

  TEST_CASE("Semitic reading of T inserts to S") {
    Tableau t{Flavor::sst, {}};
    Display d = parse_display(golden::kT);
    for (const auto& row : d.rows)
      for (auto it = row.rbegin(); it != row.rend(); ++it) t = column_insert(t, *it);
    CHECK(t == golden::tableau(Flavor::sst, golden::kS));
  }

  TEST_CASE("burge on the running integral matrix") {
    auto b = burge(golden::integ(golden::kIntM));
    CHECK(b.first == golden::tableau(Flavor::sst, golden::kS));
    CHECK(b.second == golden::tableau(Flavor::sst, golden::kLbar));
    std::vector<Partition> want = {{}, {5}, {7, 5}, {8, 7, 2}, {8, 8, 4, 2}, {8, 8, 5, 3, 1}};
    CHECK(shapes_of(b.second) == want);
  }

  TEST_CASE("burge of zero and of diagonal matrices") {
    auto z = burge(IntegralMatrix(3, 3));
    CHECK(z.first.shape().outer.empty());
    CHECK(z.second.shape().outer.empty());
    Partition l{4, 2, 1};
    auto d = burge(diagon(l));
    CHECK(d.first == superstandard(l));
    CHECK(d.second == superstandard(l));
  }

  TEST_CASE("dual RSK by column insertion") {
    auto c = dual_rsk_col(golden::bin(golden::kBinM));
    CHECK(c.first == golden::tableau(Flavor::sst, golden::kS));
    CHECK(c.second == golden::tableau(Flavor::reverse_transpose_sst, golden::kR));
    std::vector<Partition> want = {{8, 8, 5, 3, 1}, {7, 7, 4, 3, 1}, {6, 6, 3, 2, 1}, {5, 5, 2, 2},
                                   {5, 4, 1, 1},    {4, 3},          {3, 2},          {2, 1},
                                   {1},             {}};
    CHECK(shapes_of(c.second) == want);
    auto z = dual_rsk_col(BinaryMatrix(2, 2));
    CHECK(z.first.shape().outer.empty());
  }

  TEST_CASE("dual RSK of a single bit") {
    BinaryMatrix m(5, 3);
    m.set(4, 2, 1);
    auto c = dual_rsk_col(m);
    CHECK(to_display(c.first).rows == std::vector<std::vector<int>>{{4}});
    CHECK(shapes_of(c.second).front() == Partition{1});
    CHECK(shapes_of(c.second).back() == Partition{});
    BinaryMatrix one(1, 1);
    one.set(0, 0, 1);
    auto r = dual_rsk_row(one);
    CHECK(to_display(r.first).rows == std::vector<std::vector<int>>{{0}});
    CHECK(to_display(r.second).rows == std::vector<std::vector<int>>{{0}});
  }

  TEST_CASE("dual RSK by row insertion gives R*") {
    auto r = dual_rsk_row(golden::bin(golden::kBinM));
    CHECK(r.first == golden::tableau(Flavor::transpose_sst, golden::kRStar));
    CHECK(r.second == golden::tableau(Flavor::sst, golden::kS));
    auto z = dual_rsk_row(BinaryMatrix(3, 3));
    CHECK(z.first.shape().outer.empty());
    CHECK(z.second.shape().outer.empty());
  }

  TEST_CASE("RSK against decompose after reversal") {
    auto m = golden::integ(golden::kIntM);
    auto a = rsk_row(reverse_rows(m));
    CHECK(a.first == golden::tableau(Flavor::sst, golden::kS));
    auto b = rsk_row(reverse_cols(m));
    CHECK(transpose(encode_integral(b.second)) == golden::integ(golden::kIntQ));
    Partition l{3, 3, 1};
    CHECK(rsk_row(reverse_rows(diagon(l))).first.shape().outer == l);
  }

  TEST_CASE("rectification") {
    CHECK(rectify(testdata::running_t()) == golden::tableau(Flavor::sst, golden::kS));
    auto s = golden::tableau(Flavor::sst, golden::kS);
    CHECK(rectify(s) == s);
    CHECK(rectify(golden::tableau(Flavor::sst, golden::kSStarRot)) == s);
  }

  TEST_CASE("rectification does not depend on the slide order") {
    std::mt19937 rng(17);
    auto t = testdata::running_t();
    auto want = rectify(t);
    for (int k = 0; k < 20; ++k)
      CHECK(rectify_with(t, [&](const auto& corners) { return rng() % corners.size(); }) == want);
  }

  TEST_CASE("rectification agrees with exhausting upward moves") {
    // Inward slides move entries to lower rows: upward moves on the encoding.
    auto t = testdata::running_t();
    auto n = exhaust(encode_integral(t), {Direction::up}).first;
    auto shape = rectify(t).shape();
    CHECK(decode(n, shape) == rectify(t));
  }
}
