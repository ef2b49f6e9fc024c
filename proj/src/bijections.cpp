#include "chordlab/bijections.hpp"

#include "chordlab/errors.hpp"
#include "chordlab/statistics.hpp"

#include <functional>

namespace chordlab {

MarkedDiagram::MarkedDiagram(ChordDiagram diagram, Chord mark)
    : diagram_(std::move(diagram)), mark_(mark) {
  if (mark.length() != 1) {
    throw ValidationError("mark " + chordlab::to_text(mark) + " is not a chord of length 1");
  }
  if (mark.start < 1 || mark.end > diagram_.points() || diagram_.partner(mark.start) != mark.end) {
    throw ValidationError("mark " + chordlab::to_text(mark) + " is not a chord of " +
                          chordlab::to_text(diagram_));
  }
}

std::string to_text(const MarkedDiagram& md) {
  return to_text(md.diagram()) + " mark=" + to_text(md.mark());
}

ChordDiagram unwrap(const MarkedDiagram& md) {
  const ChordDiagram& d = md.diagram();
  const int i = md.mark().start;
  if (i == 1) return d;
  auto relabel = [i](int p) { return p <= i - 1 ? p + 1 : p; };
  std::vector<Chord> out{{1, i + 1}};
  for (const Chord& c : d.chords()) {
    if (c == md.mark()) continue;
    out.push_back({relabel(c.start), relabel(c.end)});
  }
  return ChordDiagram::from_chords(out);
}

ChordDiagram unwrap(const ChordDiagram& d, Chord mark) { return unwrap(MarkedDiagram(d, mark)); }

MarkedDiagram rewrap(const ChordDiagram& d) {
  if (d.empty()) throw ValidationError("rewrap needs a diagram with at least one chord");
  const int i = d.partner(1) - 1;
  if (i == 1) return MarkedDiagram(d, {1, 2});
  auto relabel = [i](int p) { return p <= i ? p - 1 : p; };
  std::vector<Chord> out{{i, i + 1}};
  for (const Chord& c : d.chords()) {
    if (c.start == 1) continue;
    out.push_back({relabel(c.start), relabel(c.end)});
  }
  return MarkedDiagram(ChordDiagram::from_chords(out), {i, i + 1});
}

ChordDiagram phi(const ChordDiagram& d, int j) {
  const int sc = short_chords(d, 1);
  if (j != sc) {
    throw ValidationError("phi: diagram has " + std::to_string(sc) + " short chords, not " +
                          std::to_string(j));
  }
  if (j == 1) throw ValidationError("phi is not defined on diagrams with one short chord");
  if (j == 0) return rewrap(d).diagram();
  for (int p = d.points() - 1; p >= 1; --p) {
    if (d.partner(p) == p + 1) return unwrap(d, {p, p + 1});
  }
  throw std::logic_error("phi: short chord vanished");
}

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  int height = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    height += steps_[i] == Step::up ? 1 : -1;
    if (height < 0) {
      throw ValidationError("Dyck path falls below zero at step " + std::to_string(i + 1));
    }
  }
  if (height != 0) throw ValidationError("Dyck path ends at height " + std::to_string(height));
}

DyckPath DyckPath::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    if (c == 'U') {
      steps.push_back(Step::up);
    } else if (c == 'D') {
      steps.push_back(Step::down);
    } else {
      throw ParseError("Dyck path may only contain U and D, got '" + std::string(1, c) + "'");
    }
  }
  try {
    return DyckPath(std::move(steps));
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

int DyckPath::peaks() const {
  int count = 0;
  for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
    count += steps_[i] == Step::up && steps_[i + 1] == Step::down;
  }
  return count;
}

std::string DyckPath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out += static_cast<char>(s);
  return out;
}

ChordDiagram dyck_to_matching(const DyckPath& path) {
  std::vector<int> ups;
  std::vector<int> downs;
  const auto& steps = path.steps();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    (steps[i] == DyckPath::Step::up ? ups : downs).push_back(static_cast<int>(i) + 1);
  }
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < ups.size(); ++i) pairs.emplace_back(ups[i], downs[i]);
  return ChordDiagram::from_chords(pairs, static_cast<int>(pairs.size()));
}

DyckPath matching_to_dyck(const ChordDiagram& d) {
  const auto chords = d.chords();
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      if (nesting(chords[i], chords[j])) {
        throw ValidationError("chords " + to_text(chords[i]) + " and " + to_text(chords[j]) +
                              " nest");
      }
    }
  }
  std::vector<DyckPath::Step> steps;
  for (int p = 1; p <= d.points(); ++p) {
    steps.push_back(d.is_start(p) ? DyckPath::Step::up : DyckPath::Step::down);
  }
  return DyckPath(std::move(steps));
}

std::vector<DyckPath> dyck_paths(int semilength) {
  if (semilength < 0) throw ValidationError("negative semilength");
  std::vector<DyckPath> out;
  std::vector<DyckPath::Step> steps;
  std::function<void(int, int)> walk = [&](int ups, int downs) {
    if (downs == semilength) {
      out.emplace_back(steps);
      return;
    }
    if (ups < semilength) {
      steps.push_back(DyckPath::Step::up);
      walk(ups + 1, downs);
      steps.pop_back();
    }
    if (downs < ups) {
      steps.push_back(DyckPath::Step::down);
      walk(ups, downs + 1);
      steps.pop_back();
    }
  };
  walk(0, 0);
  return out;
}

}  // namespace chordlab
