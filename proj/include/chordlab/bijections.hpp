#pragma once

#include "chordlab/diagram.hpp"

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace chordlab {

/// A diagram together with one of its length-1 chords.
class MarkedDiagram {
 public:
  // Throws ValidationError unless `mark` is a chord of `diagram` of length 1.
  MarkedDiagram(ChordDiagram diagram, Chord mark);

  const ChordDiagram& diagram() const { return diagram_; }
  Chord mark() const { return mark_; }

  friend bool operator==(const MarkedDiagram&, const MarkedDiagram&) = default;

 private:
  ChordDiagram diagram_;
  Chord mark_;
};

// "(a,b)(c,d)... mark=(i,i+1)"
std::string to_text(const MarkedDiagram& md);

/// Sends the marked chord {i, i+1} to {1, i+1}; points 1..i-1 move one place
/// right and points above i+1 stay. A mark at {1,2} leaves the diagram as is.
ChordDiagram unwrap(const MarkedDiagram& md);
ChordDiagram unwrap(const ChordDiagram& d, Chord mark);

/// Inverse of unwrap. The first chord {1, i+1} becomes the marked chord
/// {i, i+1} and points 2..i move one place left. Throws ValidationError on
/// the empty diagram.
MarkedDiagram rewrap(const ChordDiagram& d);

/// Injections between the classes of diagrams with j and j-1 (j >= 2) or 0
/// and 1 (j = 0) length-1 chords. j >= 2 unwraps the rightmost length-1 chord;
/// j = 0 applies rewrap to the first chord. j must equal short_chords(d, 1)
/// and may not be 1.
ChordDiagram phi(const ChordDiagram& d, int j);

/// A sequence of up and down steps that never dips below its start and ends
/// level.
class DyckPath {
 public:
  enum class Step : char { up = 'U', down = 'D' };

  DyckPath() = default;
  // Throws ValidationError for an unbalanced sequence.
  explicit DyckPath(std::vector<Step> steps);

  // Parses a string over {U, D}; anything else throws ParseError.
  static DyckPath parse(std::string_view text);

  int semilength() const { return static_cast<int>(steps_.size() / 2); }
  const std::vector<Step>& steps() const { return steps_; }
  // Number of UD factors.
  int peaks() const;

  std::string to_string() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  // Lexicographic with U before D.
  friend std::strong_ordering operator<=>(const DyckPath& a, const DyckPath& b) {
    return std::lexicographical_compare_three_way(
        a.steps_.begin(), a.steps_.end(), b.steps_.begin(), b.steps_.end(),
        [](Step x, Step y) { return (x == Step::down) <=> (y == Step::down); });
  }

 private:
  std::vector<Step> steps_;
};

/// Joins the i-th up step with the i-th down step (both counted from the
/// left). The result is nonnesting and its LR pairs are the path's peaks.
ChordDiagram dyck_to_matching(const DyckPath& path);

/// Reads startpoints as U and endpoints as D. A nesting diagram throws
/// ValidationError naming a nested pair.
DyckPath matching_to_dyck(const ChordDiagram& d);

/// All Dyck paths of the given semilength in lexicographic order (U < D).
std::vector<DyckPath> dyck_paths(int semilength);

}  // namespace chordlab
