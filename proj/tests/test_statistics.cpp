#include "chordlab/errors.hpp"
#include "chordlab/statistics.hpp"
#include "chordlab/triangles.hpp"

#include "doctest.h"

#include <set>

using namespace chordlab;

namespace {

ChordDiagram D(std::string_view text) { return parse_diagram(text); }

// LR pairs straight from the definition, using the chord list.
int lr_pairs_by_definition(const ChordDiagram& d) {
  std::set<int> starts;
  std::set<int> ends;
  for (const Chord& c : d.chords()) {
    starts.insert(c.start);
    ends.insert(c.end);
  }
  int count = 0;
  for (int i = 1; i < d.points(); ++i) count += starts.count(i) && ends.count(i + 1);
  return count;
}

std::map<int, BigInt> counts(std::initializer_list<std::pair<const int, int>> values) {
  std::map<int, BigInt> out;
  for (auto [k, v] : values) out.emplace(k, v);
  return out;
}

}  // namespace

TEST_CASE("short chords") {
  CHECK(short_chords(D("(1,6)(2,5)(3,4)"), 1) == 1);
  CHECK(short_chords(D("(1,2)(3,4)(5,6)"), 1) == 3);
  CHECK(short_chords(D("(1,4)(2,6)(3,5)"), 1) == 0);
  CHECK(short_chords(D("(1,4)(2,6)(3,5)"), 2) == 1);
  CHECK(short_chords(ChordDiagram(), 1) == 0);
  CHECK_THROWS_AS(short_chords(D("(1,2)"), 0), ValidationError);
}

TEST_CASE("LR pairs") {
  CHECK(lr_pairs(D("(1,2)")) == 1);
  CHECK(lr_pairs(D("(1,3)(2,5)(4,6)")) == 2);
  CHECK(lr_pairs(D("(1,4)(2,5)(3,6)")) == 1);
  CHECK(lr_pairs(ChordDiagram()) == 0);
}

TEST_CASE("LR scan agrees with the definition on every diagram up to n = 6") {
  for (int n = 0; n <= 6; ++n) {
    auto s = enumerate(n, Filter::all());
    while (auto d = s.next()) CHECK(lr_pairs(*d) == lr_pairs_by_definition(*d));
  }
}

TEST_CASE("crossings, nestings and minimum length") {
  CHECK(crossing_count(D("(1,3)(2,4)")) == 1);
  CHECK(nesting_count(D("(1,3)(2,4)")) == 0);
  CHECK(nesting_count(D("(1,6)(2,5)(3,4)")) == 3);
  CHECK(crossing_count(D("(1,6)(2,5)(3,4)")) == 0);
  CHECK(min_length(D("(1,2)")) == 1);
  CHECK(min_length(D("(1,4)(2,6)(3,5)")) == 2);
  CHECK_THROWS_AS(min_length(ChordDiagram()), ValidationError);
}

TEST_CASE("histograms for small n") {
  CHECK(histogram(4, Filter::min_length(2), Statistic::sc(2)).counts ==
        counts({{0, 10}, {1, 14}, {2, 9}, {3, 2}, {4, 1}}));
  CHECK(histogram(4, Filter::min_length(3), Statistic::sc(3)).counts ==
        counts({{0, 1}, {1, 3}, {2, 4}, {3, 2}}));
  CHECK(histogram(4, Filter::all(), Statistic::lr()).counts ==
        counts({{1, 24}, {2, 58}, {3, 22}, {4, 1}}));
  CHECK(histogram(5, Filter::all(), Statistic::sc(1)).counts ==
        counts({{0, 329}, {1, 365}, {2, 185}, {3, 55}, {4, 10}, {5, 1}}));
  // minlen rows for n <= 3
  CHECK(histogram(2, Filter::min_length(2), Statistic::sc(2)).counts == counts({{2, 1}}));
  CHECK(histogram(3, Filter::min_length(2), Statistic::sc(2)).counts ==
        counts({{0, 1}, {1, 2}, {2, 2}}));
  CHECK(histogram(3, Filter::min_length(3), Statistic::sc(3)).counts == counts({{3, 1}}));
}

TEST_CASE("parallel kernel equals the serial reference for every thread count") {
  for (int n = 0; n <= 6; ++n) {
    for (Filter f : {Filter::all(), Filter::min_length(2), Filter::noncrossing(),
                     Filter::nonnesting()}) {
      for (Statistic st : {Statistic::sc(1), Statistic::sc(2), Statistic::lr()}) {
        const auto reference = histogram_serial(n, f, st);
        for (int threads : {1, 2, 3, 8}) CHECK(histogram(n, f, st, threads) == reference);
        CHECK(reference.total() == count(n, f));
      }
    }
  }
}

TEST_CASE("expected number of short chords is one") {
  for (int n = 1; n <= 8; ++n) {
    auto h = histogram(n, Filter::all(), Statistic::sc(1));
    BigInt total = 0;
    for (const auto& [s, c] : h.counts) total += c * s;
    CHECK(total == double_factorial_odd(n));
  }
}

TEST_CASE("noncrossing short chords and nonnesting LR pairs follow Narayana") {
  for (int n = 1; n <= 7; ++n) {
    auto nc = histogram(n, Filter::noncrossing(), Statistic::sc(1));
    auto nn = histogram(n, Filter::nonnesting(), Statistic::lr());
    CHECK(nc.at(0) == 0);
    CHECK(nn.at(0) == 0);
    for (int k = 1; k <= n; ++k) {
      CHECK(nc.at(k) == narayana(n, k));
      CHECK(nn.at(k) == narayana(n, k));
    }
  }
}

TEST_CASE("histogram keys stay within bounds") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& [v, c] : histogram(n, Filter::all(), Statistic::sc(1)).counts) CHECK(v <= n);
    for (const auto& [v, c] : histogram(n, Filter::all(), Statistic::lr()).counts) {
      CHECK(v <= 2 * n - 1);
    }
  }
}

TEST_CASE("histogram JSON and dense rows") {
  auto h = histogram(4, Filter::all(), Statistic::lr());
  CHECK(h.to_json() ==
        R"({"n":4,"filter":"all","statistic":"lr","counts":{"1":24,"2":58,"3":22,"4":1}})");
  CHECK(h.dense(4) == std::vector<BigInt>{0, 24, 58, 22, 1});
}

TEST_CASE("statistic parsing") {
  CHECK(Statistic::parse("lr") == Statistic::lr());
  CHECK(Statistic::parse("sc") == Statistic::sc(1));
  CHECK(Statistic::parse("sc", Filter::min_length(3)) == Statistic::sc(3));
  CHECK(Statistic::parse("sc2") == Statistic::sc(2));
  CHECK(Statistic::sc(2).to_string() == "sc2");
  CHECK_THROWS_AS(Statistic::parse("sc0"), ParseError);
  CHECK_THROWS_AS(Statistic::parse("nest"), ParseError);
}
