#pragma once

#include "chordlab/bigint.hpp"
#include "chordlab/diagram.hpp"
#include "chordlab/enumeration.hpp"

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chordlab {

// Kernel forms over a 0-based partner sequence. They skip argument checks.
int short_chords(std::span<const int> partners, int k);
int lr_pairs(std::span<const int> partners);

/// Number of chords of length exactly k (k >= 1).
int short_chords(const ChordDiagram& d, int k);
/// Number of points i with i a startpoint and i+1 an endpoint.
int lr_pairs(const ChordDiagram& d);
int crossing_count(const ChordDiagram& d);
int nesting_count(const ChordDiagram& d);
/// Shortest chord length; the empty diagram throws ValidationError.
int min_length(const ChordDiagram& d);

/// A per-diagram statistic that histograms are built from.
struct Statistic {
  enum class Kind { short_chords, lr_pairs };

  Kind kind = Kind::short_chords;
  int k = 1;  // chord length counted by short_chords

  static Statistic sc(int k);
  static Statistic lr() { return {Kind::lr_pairs, 1}; }

  int operator()(std::span<const int> partners) const {
    return kind == Kind::lr_pairs ? lr_pairs(partners) : short_chords(partners, k);
  }

  // "scK" or "lr"
  std::string to_string() const;
  // Accepts "scK", "lr", and bare "sc", which counts chords of the filter's
  // minimum length (1 unless the filter is minlen=K).
  static Statistic parse(std::string_view text, const Filter& filter = Filter::all());

  friend bool operator==(const Statistic&, const Statistic&) = default;
};

struct StatisticHistogram {
  int n = 0;
  Filter filter;
  Statistic statistic;
  std::map<int, BigInt> counts;  // zero counts are not stored

  BigInt total() const;
  // Entry for value v, zero when absent.
  BigInt at(int value) const;
  // Counts for values 0..max_value with explicit zeros.
  std::vector<BigInt> dense(int max_value) const;

  // {"n":4,"filter":"all","statistic":"lr","counts":{"1":24,...}}
  std::string to_json() const;

  friend bool operator==(const StatisticHistogram&, const StatisticHistogram&) = default;
};

/// Exact distribution by full enumeration, fanned out over OpenMP threads.
/// threads <= 0 uses the OpenMP default. The result does not depend on the
/// thread count.
StatisticHistogram histogram(int n, Filter filter, Statistic statistic, int threads = 0);

/// Single-threaded reference: materializes every diagram and tallies it.
StatisticHistogram histogram_serial(int n, Filter filter, Statistic statistic);

}  // namespace chordlab
