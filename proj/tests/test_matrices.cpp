#include <doctest.h>

#include "dc/doublecrystal.hpp"
#include "dc/matrices.hpp"
#include "dc/text_io.hpp"
#include "helpers.hpp"

using namespace dc;

TEST_SUITE("matrices") {
  TEST_CASE("binary entries are bits") {
    BinaryMatrix m(2, 2);
    CHECK_THROWS_AS(m.set(0, 0, 2), precondition_error);
    IntegralMatrix n(2, 2);
    CHECK_THROWS_AS(n.set(0, 0, -1), precondition_error);
  }

  TEST_CASE("equality ignores padding and writes grow the window") {
    BinaryMatrix a(1, 1), b(4, 5);
    a.set(0, 0, 1);
    b.set(0, 0, 1);
    CHECK(a == b);
    a.set(3, 6, 1);
    CHECK(a.rows() == 4);
    CHECK(a.cols() == 7);
    CHECK(a.trimmed().cols() == 7);
  }

  TEST_CASE("margins") {
    auto n = golden::integ(golden::kIntM);
    auto [r, c] = margins(n);
    CHECK(r == Composition{5, 7, 5, 5, 3});
    CHECK(c == Composition{2, 3, 3, 2, 4, 4, 7});
    CHECK(row_sums(IntegralMatrix(3, 3)).empty());
    auto d = diagon(Partition{8, 8, 5, 3, 1});
    CHECK(row_sums(d) == Composition{8, 8, 5, 3, 1});
    CHECK(col_sums(d) == Composition{8, 8, 5, 3, 1});
    CHECK(col_sums(diagram(Partition{3, 1})) == Composition{2, 1, 1});
  }

  TEST_CASE("encodings of the running tableau") {
    Tableau t = testdata::running_t();
    CHECK(encode_binary(t) == golden::bin(golden::kBinM));
    CHECK(encode_integral(t) == golden::integ(golden::kIntM));
    Tableau flat{Flavor::sst, {Partition{2, 1}, Partition{2, 1}}};
    CHECK(encode_binary(flat).is_zero());
    CHECK(encode_integral(flat).is_zero());
  }

  TEST_CASE("decoding") {
    SkewShape shape(Partition{9, 8, 5, 5, 3}, Partition{4, 1});
    CHECK(decode(golden::bin(golden::kBinM), shape) == testdata::running_t());
    CHECK(decode(golden::integ(golden::kIntM), shape) == testdata::running_t());
    SkewShape flat(Partition{2, 1}, Partition{2, 1});
    CHECK(decode(BinaryMatrix(2, 2), flat).shape() == flat);
    CHECK(decode(IntegralMatrix(2, 2), flat).shape() == flat);
    // Wrong shape: the margins cannot match.
    CHECK_THROWS_AS(decode(golden::bin(golden::kBinM), SkewShape(Partition{9, 8, 5, 5, 3})),
                    decode_error);
  }

  TEST_CASE("conditions") {
    SkewShape shape(Partition{9, 8, 5, 5, 3}, Partition{4, 1});
    auto m = golden::bin(golden::kBinM);
    CHECK(tableau_condition(m, shape));
    auto flipped = m;
    flipped.set(0, 0, 1 - m(0, 0));
    CHECK_FALSE(tableau_condition(flipped, shape));
    CHECK(tableau_condition(golden::integ(golden::kIntM), shape));
    CHECK(lr_condition(diagram(Partition{3, 2}), SkewShape(Partition{3, 2})));
    CHECK(lr_condition(diagon(Partition{3, 2}), SkewShape(Partition{3, 2})));
    CHECK_FALSE(lr_condition(diagon(Partition{2, 1}), SkewShape(Partition{3})));
  }

  TEST_CASE("restriction") {
    auto m = golden::integ(golden::kIntM);
    CHECK(restrict(m, Interval::first(0), Interval::all()).is_zero());
    CHECK(restrict(m, Interval::all(), Interval::all()) == m);
    auto block = restrict(golden::integ(golden::kIntP), Interval::first(3), Interval::first(6));
    // Entries below 6 in the first three rows of S: a straight tableau of shape (8,5,3).
    CHECK(normal_form(block) == Partition{8, 5, 3});
    CHECK(exhaust(block, {Direction::up, Direction::left}).first == diagon(Partition{8, 5, 3}));
  }

  TEST_CASE("transpose and quarter turn") {
    auto m = golden::bin(golden::kBinM);
    CHECK(transpose(transpose(m)) == m);
    auto r = rotate_quarter_ccw(m);
    CHECK(r.rows() == m.cols());
    CHECK(unrotate_quarter(r, m.rows()) == m);
    CHECK(row_sums(r) == col_sums(m));
  }

  TEST_CASE("matrix text") {
    auto m = parse_matrix<integral_tag>("# comment\n1 2\n\n0 0 3\n");
    CHECK(m == IntegralMatrix::from_rows({{1, 2, 0}, {0, 0, 3}}));
    CHECK(format_matrix(m) == "1 2 0\n0 0 3\n");
    try {
      parse_matrix<integral_tag>("1 2\n3 x\n");
      FAIL("no error");
    } catch (const parse_error& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_matrix<binary_tag>("0 2\n"), domain_error);
  }
}
