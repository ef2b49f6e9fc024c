#pragma once

#include "chordlab/bigint.hpp"
#include "chordlab/diagram.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chordlab {

// Largest n for which exhaustive enumeration is practical ((2*10-1)!! is
// about 6.5e8 diagrams).
inline constexpr int kPracticalEnumerationBound = 10;

/// Restriction applied while generating diagrams.
struct Filter {
  enum class Kind { all, min_length, noncrossing, nonnesting };

  Kind kind = Kind::all;
  int k = 1;  // minimum chord length, meaningful for min_length only

  static Filter all() { return {}; }
  static Filter min_length(int k);
  static Filter noncrossing() { return {Kind::noncrossing, 1}; }
  static Filter nonnesting() { return {Kind::nonnesting, 1}; }

  // "all", "minlen=K", "noncrossing", "nonnesting"
  std::string to_string() const;
  static Filter parse(std::string_view text);

  bool admits(const ChordDiagram& d) const;

  friend bool operator==(const Filter&, const Filter&) = default;
};

/// Single-pass, depth-first generator of every diagram of size n that passes
/// a filter.
///
/// Order: the smallest unmatched point is paired with each larger unmatched
/// point in increasing order, recursively. Filters prune partial matchings as
/// soon as they are violated, so filtered streams never visit rejected
/// subtrees.
///
/// A stream may carry a fixed prefix of chords and a window on the partners
/// allowed for the first free point; split() uses both to cut the search tree
/// into disjoint, order-preserving pieces that can be consumed on different
/// threads.
class DiagramStream {
 public:
  DiagramStream(int n, Filter filter);

  int size() const { return n_; }
  const Filter& filter() const { return filter_; }
  bool consumed() const { return started_; }

  // Advances to the next diagram; current() is valid after a true return.
  bool advance();
  // 0-based partner sequence of the current diagram.
  std::span<const int> current() const { return partner_; }

  std::optional<ChordDiagram> next();

  // Partitions the remaining search tree into `parts` streams (some possibly
  // empty). Requires an unconsumed stream; parts < 1 throws ValidationError.
  std::vector<DiagramStream> split(int parts) const;
  // One stream per admissible partner of the first free point.
  std::vector<DiagramStream> split_branches() const;

 private:
  struct Frame {
    int a;
    int b;
  };

  DiagramStream descended() const;
  int smallest_unmatched() const;
  bool admissible(int a, int b, bool first_free_level) const;
  int next_candidate(int a, int from, bool first_free_level) const;
  std::vector<int> first_level_candidates() const;
  bool backtrack();
  void match(int a, int b);
  void unmatch(int a, int b);

  int n_;
  Filter filter_;
  std::vector<int> partner_;
  std::vector<Frame> frames_;
  int matched_ = 0;
  int window_lo_ = 0;
  int window_hi_;
  bool empty_ = false;
  bool started_ = false;
  bool done_ = false;
};

DiagramStream enumerate(int n, Filter filter);

// Splits `levels` deep with split_branches(); the concatenation of the result
// yields the same diagrams in the same order as `stream`.
std::vector<DiagramStream> fan_out(const DiagramStream& stream, int levels);

// Number of diagrams enumerate(n, filter) yields, without building them.
BigInt count(int n, Filter filter);

// Position of `d` in enumerate(d.size(), Filter::all()), read as a mixed-radix
// number of partner choices. Defined for n <= 17, where (2n-1)!! fits.
std::uint64_t enumeration_rank(const ChordDiagram& d);

}  // namespace chordlab
