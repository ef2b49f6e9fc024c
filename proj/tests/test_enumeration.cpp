#include "chordlab/enumeration.hpp"
#include "chordlab/errors.hpp"

#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

using namespace chordlab;

namespace {

std::vector<ChordDiagram> drain(DiagramStream s) {
  std::vector<ChordDiagram> out;
  while (auto d = s.next()) out.push_back(*d);
  return out;
}

// Every perfect matching on 2n points, from all permutations read as
// consecutive pairs. Independent of DiagramStream.
std::set<ChordDiagram> brute_force(int n) {
  std::vector<int> perm(static_cast<std::size_t>(2 * n));
  std::iota(perm.begin(), perm.end(), 1);
  std::set<ChordDiagram> out;
  do {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) pairs.emplace_back(perm[2 * i], perm[2 * i + 1]);
    out.insert(ChordDiagram::from_chords(pairs, n));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("stream sizes for small n") {
  CHECK(drain(enumerate(2, Filter::all())).size() == 3);
  CHECK(drain(enumerate(3, Filter::all())).size() == 15);
  CHECK(drain(enumerate(5, Filter::min_length(3))).size() == 99);
  CHECK(drain(enumerate(3, Filter::noncrossing())).size() == 5);
  CHECK(drain(enumerate(0, Filter::all())).size() == 1);
}

TEST_CASE("stream equals the brute-force set, and filters equal post-hoc filtering") {
  for (int n = 0; n <= 4; ++n) {
    const auto all = brute_force(n);
    for (Filter f : {Filter::all(), Filter::min_length(2), Filter::min_length(3),
                     Filter::noncrossing(), Filter::nonnesting()}) {
      std::set<ChordDiagram> want;
      for (const auto& d : all) {
        if (f.admits(d)) want.insert(d);
      }
      const auto got = drain(enumerate(n, f));
      CHECK(std::set<ChordDiagram>(got.begin(), got.end()) == want);
      CHECK(got.size() == want.size());
    }
  }
}

TEST_CASE("yield order is depth-first on the partner of the smallest free point") {
  const auto ds = drain(enumerate(2, Filter::all()));
  REQUIRE(ds.size() == 3);
  CHECK(to_text(ds[0]) == "(1,2)(3,4)");
  CHECK(to_text(ds[1]) == "(1,3)(2,4)");
  CHECK(to_text(ds[2]) == "(1,4)(2,3)");
  // Lexicographic on partner sequence is the same order.
  for (int n = 1; n <= 5; ++n) {
    const auto v = drain(enumerate(n, Filter::all()));
    CHECK(std::is_sorted(v.begin(), v.end()));
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(enumeration_rank(v[i]) == i);
  }
}

TEST_CASE("counts: double factorial, Catalan and table (1)") {
  for (int n = 0; n <= 8; ++n) {
    CHECK(BigInt(drain(enumerate(n, Filter::all())).size()) == double_factorial_odd(n));
    CHECK(count(n, Filter::all()) == double_factorial_odd(n));
  }
  for (int n = 0; n <= 7; ++n) {
    CHECK(BigInt(drain(enumerate(n, Filter::noncrossing())).size()) == catalan(n));
    CHECK(BigInt(drain(enumerate(n, Filter::nonnesting())).size()) == catalan(n));
  }
  CHECK(count(4, Filter::all()) == 105);
  CHECK(count(5, Filter::min_length(2)) == 329);
  CHECK(count(0, Filter::all()) == 1);
  CHECK(count(5, Filter::min_length(4)) == 20);
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n + 1; ++k) {
      CHECK(count(n, Filter::min_length(k)) ==
            BigInt(drain(enumerate(n, Filter::min_length(k))).size()));
    }
  }
}

TEST_CASE("every yielded diagram passes its filter") {
  for (Filter f : {Filter::min_length(2), Filter::noncrossing(), Filter::nonnesting()}) {
    for (const auto& d : drain(enumerate(6, f))) CHECK(f.admits(d));
  }
}

TEST_CASE("split examples") {
  auto parts = enumerate(3, Filter::all()).split(5);
  REQUIRE(parts.size() == 5);
  for (int i = 0; i < 5; ++i) {
    const auto v = drain(parts[static_cast<std::size_t>(i)]);
    CHECK(v.size() == 3);
    for (const auto& d : v) CHECK(d.partner(1) == i + 2);
  }

  auto one = enumerate(1, Filter::all()).split(1);
  REQUIRE(one.size() == 1);
  CHECK(drain(one[0]).size() == 1);

  auto three = enumerate(2, Filter::all()).split(3);
  REQUIRE(three.size() == 3);
  for (auto& s : three) CHECK(drain(s).size() == 1);
}

TEST_CASE("split is an order-preserving partition for every part count") {
  for (Filter f : {Filter::all(), Filter::min_length(2), Filter::noncrossing(),
                   Filter::nonnesting()}) {
    for (int n = 0; n <= 5; ++n) {
      const auto whole = drain(enumerate(n, f));
      for (int parts = 1; parts <= 12; ++parts) {
        std::vector<ChordDiagram> joined;
        const auto pieces = enumerate(n, f).split(parts);
        CHECK(pieces.size() == static_cast<std::size_t>(parts));
        for (const auto& s : pieces) {
          for (auto& d : drain(s)) joined.push_back(std::move(d));
        }
        CHECK(joined == whole);
      }
      std::vector<ChordDiagram> fanned;
      for (const auto& s : fan_out(enumerate(n, f), 3)) {
        for (auto& d : drain(s)) fanned.push_back(std::move(d));
      }
      CHECK(fanned == whole);
    }
  }
}

TEST_CASE("split preconditions") {
  auto s = enumerate(3, Filter::all());
  CHECK_THROWS_AS(s.split(0), ValidationError);
  s.next();
  CHECK_THROWS_AS(s.split(2), ValidationError);
}

TEST_CASE("filter parsing") {
  CHECK(Filter::parse("all") == Filter::all());
  CHECK(Filter::parse("minlen=3") == Filter::min_length(3));
  CHECK(Filter::parse("noncrossing") == Filter::noncrossing());
  CHECK(Filter::parse("nonnesting").to_string() == "nonnesting");
  CHECK(Filter::min_length(2).to_string() == "minlen=2");
  CHECK_THROWS_AS(Filter::parse("minlen=0"), ParseError);
  CHECK_THROWS_AS(Filter::parse("minlen="), ParseError);
  CHECK_THROWS_AS(Filter::parse("crossing"), ParseError);
  CHECK_THROWS_AS(Filter::min_length(0), ValidationError);
}
