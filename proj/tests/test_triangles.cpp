#include "chordlab/errors.hpp"
#include "chordlab/triangles.hpp"

#include "doctest.h"

using namespace chordlab;

namespace {

using Rows = std::vector<std::vector<BigInt>>;

Rows rows_of(TriangleKind kind, int n_max) {
  Rows out;
  for (int n = first_row(kind); n <= n_max; ++n) out.push_back(row(kind, n));
  return out;
}

}  // namespace

TEST_CASE("L point values") {
  CHECK(L(4, 1) == 41);
  CHECK(L(6, 0) == 3655);
  CHECK(L(5, 5) == 1);
  CHECK(L(8, 0) == 721315);  // forced by the row sum 15!!
  CHECK(L(0, 0) == 1);
  CHECK(L(3, 4) == 0);
  CHECK(L(3, -1) == 0);
  CHECK_THROWS_AS(L(-1, 0), ValidationError);
}

TEST_CASE("L rows through n = 8") {
  const Rows want{
      {1},
      {0, 1},
      {1, 1, 1},
      {5, 6, 3, 1},
      {36, 41, 21, 6, 1},
      {329, 365, 185, 55, 10, 1},
      {3655, 3984, 2010, 610, 120, 15, 1},
      {47844, 51499, 25914, 7980, 1645, 231, 21, 1},
      {721315, 769159, 386407, 120274, 25585, 3850, 406, 28, 1},
  };
  CHECK(rows_of(TriangleKind::L, 8) == want);
}

TEST_CASE("E and T") {
  CHECK(E(4, 2) == 58);
  CHECK(E(7, 1) == 240);
  CHECK(E(5, 0) == 1);
  CHECK(T(4, 3) == 22);
  CHECK(T(5, 2) == 444);
  CHECK(T(6, 1) == 720);
  CHECK_THROWS_AS(E(3, 3), ValidationError);
  CHECK_THROWS_AS(E(0, 0), ValidationError);
  CHECK_THROWS_AS(T(3, 0), ValidationError);
  CHECK_THROWS_AS(T(3, 4), ValidationError);

  const Rows e_want{
      {1},
      {1, 2},
      {1, 8, 6},
      {1, 22, 58, 24},
      {1, 52, 328, 444, 120},
      {1, 114, 1452, 4400, 3708, 720},
      {1, 240, 5610, 32120, 58140, 33984, 5040},
  };
  CHECK(rows_of(TriangleKind::E, 7) == e_want);
  const Rows t_want{
      {1},
      {2, 1},
      {6, 8, 1},
      {24, 58, 22, 1},
      {120, 444, 328, 52, 1},
      {720, 3708, 4400, 1452, 114, 1},
      {5040, 33984, 58140, 32120, 5610, 240, 1},
  };
  CHECK(rows_of(TriangleKind::T, 7) == t_want);
}

TEST_CASE("row reversal, T(n,1) = n! and row sums to n = 20") {
  for (int n = 1; n <= 20; ++n) {
    BigInt t_sum = 0;
    for (int k = 1; k <= n; ++k) {
      CHECK(T(n, k) == E(n, n - k));
      t_sum += T(n, k);
    }
    CHECK(T(n, 1) == factorial(n));
    CHECK(t_sum == double_factorial_odd(n));
  }
  // E(20, .) does not fit in 64 bits.
  CHECK(E(20, 10) > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("L identities to n = 20") {
  for (int n = 0; n <= 20; ++n) {
    BigInt sum = 0;
    BigInt weighted = 0;
    for (int s = 0; s <= n; ++s) {
      sum += L(n, s);
      weighted += s * L(n, s);
    }
    CHECK(sum == double_factorial_odd(n));
    if (n >= 1) {
      CHECK(weighted == double_factorial_odd(n));
      CHECK(L(n, n - 1) == binomial(n, 2));
      CHECK(L(n, n) == 1);
    }
  }
}

TEST_CASE("narayana") {
  CHECK(narayana(5, 3) == 20);
  CHECK(narayana(4, 2) == 6);
  for (int n = 1; n <= 10; ++n) CHECK(narayana(n, 1) == 1);
  const Rows want{{1}, {1, 1}, {1, 3, 1}, {1, 6, 6, 1}, {1, 10, 20, 10, 1}};
  CHECK(rows_of(TriangleKind::narayana, 5) == want);
  for (int n = 1; n <= 12; ++n) {
    BigInt sum = 0;
    for (int k = 1; k <= n; ++k) sum += narayana(n, k);
    CHECK(sum == catalan(n));
  }
  CHECK_THROWS_AS(narayana(3, 0), ValidationError);
}

TEST_CASE("sullivan") {
  CHECK(sullivan(5, 2) == 329);
  CHECK(sullivan(4, 4) == 1);
  CHECK(sullivan(3, 1) == 15);
  const Rows want{{1}, {3, 1}, {15, 5, 1}, {105, 36, 10, 1}, {945, 329, 99, 20, 1}};
  CHECK(rows_of(TriangleKind::sullivan, 5) == want);
  CHECK_THROWS_AS(sullivan(9, 2), ResourceLimitError);
  CHECK_THROWS_AS(row(TriangleKind::sullivan, 9), ResourceLimitError);
  CHECK_THROWS_AS(row(TriangleKind::L, 201), ResourceLimitError);
}

TEST_CASE("row and export formats") {
  CHECK(row(TriangleKind::L, 3) == std::vector<BigInt>{5, 6, 3, 1});
  CHECK(row(TriangleKind::T, 3) == std::vector<BigInt>{6, 8, 1});
  CHECK(row(TriangleKind::E, 1) == std::vector<BigInt>{1});

  CHECK(export_triangle(TriangleKind::E, 1, ExportFormat::text) == "1\n");
  CHECK(export_triangle(TriangleKind::L, 2, ExportFormat::text) == "1\n0 1\n1 1 1\n");
  CHECK(export_triangle(TriangleKind::L, 2, ExportFormat::csv) == "n,0,1,2\n0,1,,\n1,0,1,\n2,1,1,1\n");
  CHECK(export_triangle(TriangleKind::T, 3, ExportFormat::csv) ==
        "n,1,2,3\n1,1,,\n2,2,1,\n3,6,8,1\n");
  CHECK(export_triangle(TriangleKind::T, 3, ExportFormat::json) == "[[1],[2,1],[6,8,1]]\n");
  CHECK(export_triangle(TriangleKind::L, 2, ExportFormat::bfile) ==
        "0 1\n1 0\n2 1\n3 1\n4 1\n5 1\n");
  CHECK(export_triangle(TriangleKind::narayana, 3, ExportFormat::bfile) ==
        "1 1\n2 1\n3 1\n4 1\n5 3\n6 1\n");
  CHECK(export_triangle(TriangleKind::T, 0, ExportFormat::text).empty());
  CHECK_THROWS_AS(parse_export_format("xml"), ParseError);
  CHECK(parse_triangle_kind("narayana") == TriangleKind::narayana);
  CHECK_THROWS_AS(parse_triangle_kind("Q"), ParseError);
}

TEST_CASE("large rows stay exact") {
  // Row sums are an independent double factorial at n = 200.
  BigInt sum = 0;
  for (const auto& v : row(TriangleKind::L, 200)) sum += v;
  CHECK(sum == double_factorial_odd(200));
}
