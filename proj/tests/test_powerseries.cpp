#include "chordlab/errors.hpp"
#include "chordlab/powerseries.hpp"
#include "chordlab/triangles.hpp"

#include "doctest.h"

#include <random>

using namespace chordlab;

namespace {

RationalSeries series(std::initializer_list<int> values) {
  std::vector<Rational> c;
  for (int v : values) c.emplace_back(v);
  return RationalSeries(std::move(c));
}

Rational q(int p, int d) { return Rational(p, d); }

}  // namespace

TEST_CASE("arithmetic") {
  CHECK(series({1, 1, 0}) * series({1, -1, 0}) == series({1, 0, -1}));
  const auto a = series({3, -2, 5, 7});
  CHECK(a * RationalSeries::constant(1, 3) == a);
  CHECK(a - a == RationalSeries(3));
  CHECK(-a + a == RationalSeries(3));
  CHECK(scale(a, 2) == series({6, -4, 10, 14}));
  CHECK(series({1, 2, 3}) * series({1, 1}) == series({1, 3}));  // truncates to the smaller order
  CHECK(power(series({1, 1, 0, 0}), 3) == series({1, 3, 3, 1}));
  CHECK(inverse(series({1, -1, 0, 0})) == series({1, 1, 1, 1}));
  CHECK_THROWS_AS(inverse(series({0, 1})), ValidationError);
  CHECK(series({5, 1, 1, 1}).derivative() == series({1, 2, 3}));
}

TEST_CASE("exponential") {
  const auto e = exp_series(RationalSeries::variable(6), 6);
  CHECK(e[4] == q(1, 24));
  CHECK((e * e)[3] == q(8, 6));
  CHECK(exp_series(RationalSeries(5), 5) == RationalSeries::constant(1, 5));
  CHECK_THROWS_AS(exp_series(series({1, 1}), 3), ValidationError);
}

TEST_CASE("sqrt(1-2t)") {
  const auto s = sqrt_one_minus_2t(4);
  CHECK(s[0] == 1);
  CHECK(s[1] == -1);
  CHECK(s[2] == q(-1, 2));
  CHECK(s[3] == q(-1, 2));
  CHECK(s[4] == q(-5, 8));
  for (int order = 0; order <= 30; ++order) {
    const auto r = sqrt_one_minus_2t(order);
    RationalSeries want(order);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    if (order >= 1) c[1] = -2;
    CHECK(r * r == RationalSeries(c));
  }
  const auto x = exp_series(sqrt_one_minus_2t(4) - RationalSeries::constant(1, 4), 4);
  CHECK(x[2] == 0);
  CHECK(x[3] == q(-1, 6));
}

TEST_CASE("exp is a homomorphism on random series") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const int order = 1 + trial % 12;
    std::vector<Rational> ca(static_cast<std::size_t>(order) + 1);
    std::vector<Rational> cb(ca.size());
    for (std::size_t i = 1; i < ca.size(); ++i) {
      ca[i] = q(num(rng), den(rng));
      cb[i] = q(num(rng), den(rng));
    }
    const RationalSeries a(ca);
    const RationalSeries b(cb);
    CHECK(exp_series(a + b, order) == exp_series(a, order) * exp_series(b, order));
    // (e^a)' = a' e^a
    const auto ea = exp_series(a, order);
    CHECK(ea.derivative() == (a.derivative() * ea).truncated(order - 1));
  }
}

TEST_CASE("column generating functions match L") {
  for (int s = 0; s <= 6; ++s) {
    const auto counts = egf_counts(egf_L_column(s, 12));
    for (int n = 0; n <= 12; ++n) {
      INFO("n=" << n << " s=" << s);
      CHECK(counts[static_cast<std::size_t>(n)] == Rational(L(n, s)));
    }
  }
}

TEST_CASE("Riordan product gives the total short-chord count") {
  const auto r = riordan_short_chord_total(12);
  CHECK(r == short_chord_total_closed_form(12));
  CHECK(r[0] == 0);
  const auto c = egf_counts(r);
  for (int n = 1; n <= 12; ++n) CHECK(c[static_cast<std::size_t>(n)] == Rational(double_factorial_odd(n)));
  CHECK(r[1] == 1);
  CHECK(r[2] == q(3, 2));
  CHECK(r[3] == q(5, 2));
  CHECK(r[4] == q(35, 8));
}

TEST_CASE("formatting") {
  CHECK(to_string(sqrt_one_minus_2t(3)) == "1 - t - 1/2 t^2 - 1/2 t^3");
  CHECK(to_string(RationalSeries(3)) == "0");
  CHECK(to_string(series({0, 2, 0, -1})) == "2 t - t^3");
  CHECK(to_json(sqrt_one_minus_2t(2)) == "[[1,1],[-1,1],[-1,2]]");
}
