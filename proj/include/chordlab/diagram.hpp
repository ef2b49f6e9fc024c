#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chordlab {

/// A chord {start, end} with 1-based points and start < end.
struct Chord {
  int start = 0;
  int end = 0;

  int length() const { return end - start; }

  friend bool operator==(const Chord&, const Chord&) = default;
  friend auto operator<=>(const Chord&, const Chord&) = default;
};

// Normalizes the endpoints so that start < end. Throws ValidationError for
// a degenerate chord or a point below 1.
Chord make_chord(int a, int b);

// Both predicates order the chords by startpoint first. Chords sharing a
// point throw ValidationError.
bool crossing(Chord c1, Chord c2);
bool nesting(Chord c1, Chord c2);

/// A linear chord diagram: a perfect matching on the points 1..2n.
///
/// The diagram is stored as its partner sequence, which is also the canonical
/// form: two diagrams are equal iff they match every point to the same
/// partner. Ordering is lexicographic on (n, partner sequence). Internally the
/// sequence is 0-based; every public accessor that takes or returns a point
/// speaks 1-based points.
class ChordDiagram {
 public:
  ChordDiagram() = default;

  static ChordDiagram from_chords(std::span<const std::pair<int, int>> pairs, int n);
  static ChordDiagram from_chords(std::span<const Chord> chords);
  // 0-based involution without fixed points.
  static ChordDiagram from_partners(std::vector<int> partners);

  int size() const { return static_cast<int>(partner_.size() / 2); }
  int points() const { return static_cast<int>(partner_.size()); }
  bool empty() const { return partner_.empty(); }

  int partner(int point) const { return partner_[static_cast<std::size_t>(point - 1)] + 1; }
  bool is_start(int point) const { return partner(point) > point; }

  // 0-based partner sequence, for kernels that scan many diagrams.
  std::span<const int> partners() const { return partner_; }

  // Chords sorted by startpoint.
  std::vector<Chord> chords() const;

  friend bool operator==(const ChordDiagram& a, const ChordDiagram& b) {
    return a.partner_ == b.partner_;
  }
  friend std::strong_ordering operator<=>(const ChordDiagram& a, const ChordDiagram& b);

 private:
  explicit ChordDiagram(std::vector<int> partners) : partner_(std::move(partners)) {}

  std::vector<int> partner_;
};

// Text form: "(a,b)(c,d)..." sorted by startpoint; the empty diagram is "".
std::string to_text(const ChordDiagram& d);
std::string to_text(Chord c);
// JSON form: [[a,b],[c,d],...] sorted by startpoint, no whitespace.
std::string to_json(const ChordDiagram& d);

// Parsers accept chords in any order and ignore whitespace. Malformed or
// invalid input throws ParseError.
ChordDiagram parse_diagram(std::string_view text);
ChordDiagram parse_diagram_json(std::string_view json);
Chord parse_chord(std::string_view text);

}  // namespace chordlab

template <>
struct std::hash<chordlab::ChordDiagram> {
  std::size_t operator()(const chordlab::ChordDiagram& d) const noexcept;
};
