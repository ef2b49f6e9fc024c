#include "chordlab/statistics.hpp"

#include "chordlab/errors.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cstdint>

namespace chordlab {

int short_chords(std::span<const int> partners, int k) {
  int count = 0;
  const int points = static_cast<int>(partners.size());
  for (int i = 0; i < points; ++i) {
    if (partners[i] - i == k) ++count;
  }
  return count;
}

int lr_pairs(std::span<const int> partners) {
  int count = 0;
  const int points = static_cast<int>(partners.size());
  for (int i = 0; i + 1 < points; ++i) {
    if (partners[i] > i && partners[i + 1] < i + 1) ++count;
  }
  return count;
}

int short_chords(const ChordDiagram& d, int k) {
  if (k < 1) throw ValidationError("short chord length must be at least 1");
  return short_chords(d.partners(), k);
}

int lr_pairs(const ChordDiagram& d) { return lr_pairs(d.partners()); }

int crossing_count(const ChordDiagram& d) {
  const auto chords = d.chords();
  int count = 0;
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) count += crossing(chords[i], chords[j]);
  }
  return count;
}

int nesting_count(const ChordDiagram& d) {
  const auto chords = d.chords();
  int count = 0;
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) count += nesting(chords[i], chords[j]);
  }
  return count;
}

int min_length(const ChordDiagram& d) {
  if (d.empty()) throw ValidationError("minimum chord length of the empty diagram is undefined");
  int best = d.points();
  for (const Chord& c : d.chords()) best = std::min(best, c.length());
  return best;
}

Statistic Statistic::sc(int k) {
  if (k < 1) throw ValidationError("short chord length must be at least 1");
  return {Kind::short_chords, k};
}

std::string Statistic::to_string() const {
  return kind == Kind::lr_pairs ? "lr" : "sc" + std::to_string(k);
}

Statistic Statistic::parse(std::string_view text, const Filter& filter) {
  if (text == "lr") return lr();
  if (text == "sc") return sc(filter.kind == Filter::Kind::min_length ? filter.k : 1);
  if (text.starts_with("sc")) {
    auto digits = text.substr(2);
    int k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && k >= 1) return sc(k);
  }
  throw ParseError("unknown statistic \"" + std::string(text) + "\" (expected sc, scK or lr)");
}

BigInt StatisticHistogram::total() const {
  BigInt sum = 0;
  for (const auto& [value, c] : counts) sum += c;
  return sum;
}

BigInt StatisticHistogram::at(int value) const {
  auto it = counts.find(value);
  return it == counts.end() ? BigInt(0) : it->second;
}

std::vector<BigInt> StatisticHistogram::dense(int max_value) const {
  std::vector<BigInt> out(static_cast<std::size_t>(std::max(max_value + 1, 0)));
  for (const auto& [value, c] : counts) {
    if (value <= max_value) out[static_cast<std::size_t>(value)] = c;
  }
  return out;
}

std::string StatisticHistogram::to_json() const {
  std::string out = "{\"n\":" + std::to_string(n) + ",\"filter\":\"" + filter.to_string() +
                    "\",\"statistic\":\"" + statistic.to_string() + "\",\"counts\":{";
  bool first = true;
  for (const auto& [value, c] : counts) {
    if (!first) out += ',';
    first = false;
    out += "\"" + std::to_string(value) + "\":" + c.str();
  }
  return out + "}}";
}

StatisticHistogram histogram(int n, Filter filter, Statistic statistic, int threads) {
  // Two levels give (2n-1)(2n-3) tasks for the unfiltered stream, enough to
  // balance dynamic scheduling.
  std::vector<DiagramStream> tasks = fan_out(enumerate(n, filter), 2);
  const int task_count = static_cast<int>(tasks.size());
  const std::size_t width = static_cast<std::size_t>(2 * n + 1);
  std::vector<std::vector<std::uint64_t>> partial(tasks.size(),
                                                  std::vector<std::uint64_t>(width, 0));
  const int team = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
  for (int t = 0; t < task_count; ++t) {
    DiagramStream& stream = tasks[static_cast<std::size_t>(t)];
    auto& tally = partial[static_cast<std::size_t>(t)];
    while (stream.advance()) ++tally[static_cast<std::size_t>(statistic(stream.current()))];
  }

  StatisticHistogram h{n, filter, statistic, {}};
  std::vector<BigInt> merged(width, 0);
  for (const auto& tally : partial) {
    for (std::size_t v = 0; v < width; ++v) merged[v] += tally[v];
  }
  for (std::size_t v = 0; v < width; ++v) {
    if (merged[v] != 0) h.counts.emplace(static_cast<int>(v), merged[v]);
  }
  return h;
}

StatisticHistogram histogram_serial(int n, Filter filter, Statistic statistic) {
  StatisticHistogram h{n, filter, statistic, {}};
  DiagramStream stream = enumerate(n, filter);
  while (auto d = stream.next()) {
    const int value = statistic.kind == Statistic::Kind::lr_pairs ? lr_pairs(*d)
                                                                   : short_chords(*d, statistic.k);
    h.counts[value] += 1;
  }
  return h;
}

}  // namespace chordlab
