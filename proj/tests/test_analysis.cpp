#include "chordlab/analysis.hpp"
#include "chordlab/errors.hpp"

#include "doctest.h"

#include <random>

using namespace chordlab;

namespace {

std::vector<BigInt> seq(std::initializer_list<int> values) { return {values.begin(), values.end()}; }

}  // namespace

TEST_CASE("unimodality") {
  auto r = is_unimodal(seq({5, 6, 3, 1}));
  CHECK(r.unimodal);
  CHECK(r.peak_first == 1);
  CHECK(r.peak_last == 1);
  CHECK_FALSE(is_unimodal(seq({1, 2, 1, 2})).unimodal);
  CHECK(is_unimodal(seq({7})).unimodal);
  r = is_unimodal(seq({1, 3, 3, 2}));
  CHECK(r.unimodal);
  CHECK(r.peak_first == 1);
  CHECK(r.peak_last == 2);
  CHECK_THROWS_AS(is_unimodal({}), ValidationError);
}

TEST_CASE("log-concavity") {
  CHECK(is_log_concave(seq({24, 58, 22, 1})).log_concave);
  CHECK(is_log_concave(seq({36, 41, 21, 6, 1})).log_concave);
  const auto r = is_log_concave(seq({1, 1, 2}));
  CHECK_FALSE(r.log_concave);
  CHECK(r.first_violation == 1);
  CHECK(is_log_concave(seq({3})).log_concave);
  CHECK_THROWS_AS(is_log_concave({}), ValidationError);
}

TEST_CASE("log-concave positive sequences are unimodal") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> value(1, 40);
  std::uniform_int_distribution<int> length(1, 8);
  int log_concave = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    std::vector<BigInt> s(static_cast<std::size_t>(length(rng)));
    for (auto& v : s) v = value(rng);
    if (is_log_concave(s).log_concave) {
      ++log_concave;
      CHECK(is_unimodal(s).unimodal);
    }
  }
  CHECK(log_concave > 0);
}

TEST_CASE("Kurtz hypotheses") {
  CHECK(kurtz_hypothesis_check(1, 1, -1, 1, -1, 1));
  CHECK_FALSE(kurtz_hypothesis_check(0, 0, 0, 0, 0, 0));
  CHECK_FALSE(kurtz_hypothesis_check(-1, 0, 2, 1, 0, 1));
  CHECK_FALSE(kurtz_hypothesis_check(1, 1, -1, 1, -1, 0));
}

TEST_CASE("sweeps") {
  for (const auto& r : sweep(TriangleKind::L, 20)) {
    CHECK(r.unimodal);
    CHECK(r.consistent());
  }
  for (const auto& r : sweep(TriangleKind::T, 20)) CHECK(r.log_concave);
  for (const auto& r : sweep(TriangleKind::E, 20)) CHECK(r.log_concave);

  const auto one = sweep(TriangleKind::L, 25, 1);
  const auto many = sweep(TriangleKind::L, 25, 4);
  CHECK(to_json(one) == to_json(many));
  CHECK(to_table(one) == to_table(many));
  CHECK(one.size() == 26);

  const auto l4 = shape_report(TriangleKind::L, 4, row(TriangleKind::L, 4));
  CHECK(l4.peak_first == 1);
  CHECK(l4.log_concave);
  // T columns are labelled from 1.
  const auto t4 = shape_report(TriangleKind::T, 4, row(TriangleKind::T, 4));
  CHECK(t4.peak_first == 2);
}

TEST_CASE("report formats") {
  const auto reports = sweep(TriangleKind::L, 2);
  const auto json = to_json(reports);
  CHECK(json.find(R"({"kind":"L","n":0,"unimodal":true,"peak":[0,0],"log_concave":true,"first_violation":null})") !=
        std::string::npos);
  const auto table = to_table(reports);
  CHECK(table.find("✓") != std::string::npos);
}
