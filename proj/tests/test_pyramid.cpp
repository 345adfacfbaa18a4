#include "doctest.h"
#include "walg/pyramid.hpp"

#include <random>

using namespace walg;

TEST_CASE("box coordinates of the four-row example") {
  Pyramid p(Partition{{6, 3, 3, 2}});
  CHECK(p.box_count() == 14);
  CHECK(p.row_of(13) == 4);
  CHECK(p.col_of(13) == half_from_int(3));
  CHECK(p.row_of(12) == 3);
  CHECK(p.col_of(12) == 9);  // column 4.5
  // bottom row is row 1, numbered left to right
  CHECK(p.row_of(1) == 1);
  CHECK(p.col_of(1) == half_from_int(1));
  CHECK(p.col_of(6) == half_from_int(6));
}

TEST_CASE("single box") {
  Pyramid p(Partition{{1}});
  CHECK(p.box_count() == 1);
  CHECK(p.row_of(1) == 1);
  CHECK(p.col_of(1) == half_from_int(1));
}

TEST_CASE("invalid partitions are rejected") {
  CHECK_THROWS(Partition::parse(""));
  CHECK_THROWS(Partition::parse("0"));
  CHECK_THROWS(Partition::parse("3,5"));
  CHECK_THROWS(Partition::parse("2,x"));
  CHECK(Partition::parse("6,3,3,2").parts == std::vector<int>{6, 3, 3, 2});
}

TEST_CASE("weights of basis vectors and units") {
  Pyramid p(Partition{{6, 3, 3, 2}});
  CHECK(p.delta_vec(1) == 5);   // 5/2
  CHECK(p.delta_vec(13) == 1);  // (6+1)/2 - 3 = 1/2
  CHECK(p.delta_unit(13, 13) == 0);
  CHECK(p.delta_unit(13, 14) == 2);  // adjacent columns differ by one
}

TEST_CASE("delta identities on random pairs") {
  Pyramid p(Partition{{5, 3, 1}});
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> box(1, p.box_count());
  for (int it = 0; it < 100; ++it) {
    int a = box(rng), b = box(rng);
    CHECK(p.delta_unit(a, b) == -p.delta_unit(b, a));
    CHECK(p.delta_unit(a, b) == p.delta_vec(a) - p.delta_vec(b));
  }
}

TEST_CASE("row placement invariant") {
  for (auto parts : {std::vector<int>{6, 3, 3, 2}, {4, 2}, {5, 3, 1}, {2, 2, 2}}) {
    Pyramid p(Partition{parts});
    for (int box = 1; box <= p.box_count(); ++box) {
      CHECK(p.col_of(box) >= half_from_int(1));
      CHECK(p.col_of(box) <= half_from_int(parts[0]));
    }
    for (int row = 1; row <= p.row_count(); ++row)
      CHECK(p.row_start_col(row) == parts[0] - parts[static_cast<size_t>(row) - 1] + 2);
  }
}

TEST_CASE("truncation bounds") {
  Pyramid p5(Partition{{5}});
  auto b = p5.truncation_bounds(half_from_int(2));
  CHECK(b.s_col == half_from_int(1));
  CHECK(b.e_col == half_from_int(5));
  CHECK(b.r_len == 5);
  b = p5.truncation_bounds(half_from_int(1));
  CHECK(b.s_col == half_from_int(2));
  CHECK(b.e_col == half_from_int(4));
  CHECK(b.r_len == 3);
  Pyramid p6(Partition{{6}});
  b = p6.truncation_bounds(5);  // k = 5/2
  CHECK(b.s_col == half_from_int(1));
  CHECK(b.e_col == half_from_int(6));
  CHECK(b.r_len == 6);
  CHECK_THROWS(p6.truncation_bounds(6));
  // s + e = lambda_1 + 1 and e - s + 1 = r for admissible k
  for (Half k = 0; k <= 4; ++k) {
    auto bb = p5.truncation_bounds(k);
    CHECK(bb.s_col + bb.e_col == half_from_int(6));
    CHECK((bb.e_col - bb.s_col) / 2 + 1 == bb.r_len);
  }
}

TEST_CASE("renderer places boxes per the example") {
  Pyramid p(Partition{{6, 3, 3, 2}});
  std::string art = p.render();
  // 13 sits in the top drawn row, the second row's boxes below it
  size_t pos13 = art.find("13");
  CHECK(pos13 != std::string::npos);
  CHECK(pos13 < art.find(" 7 "));
  CHECK(art.find("4.5") != std::string::npos);
}
