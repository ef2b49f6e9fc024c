#include "chordlab/diagram.hpp"

#include "chordlab/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace chordlab {

Chord make_chord(int a, int b) {
  if (a == b) throw ValidationError("chord joins point " + std::to_string(a) + " to itself");
  if (a > b) std::swap(a, b);
  if (a < 1) throw ValidationError("point " + std::to_string(a) + " is below 1");
  return {a, b};
}

namespace {

std::pair<Chord, Chord> ordered_disjoint(Chord c1, Chord c2) {
  c1 = make_chord(c1.start, c1.end);
  c2 = make_chord(c2.start, c2.end);
  for (int p : {c1.start, c1.end}) {
    if (p == c2.start || p == c2.end) {
      throw ValidationError("chords " + to_text(c1) + " and " + to_text(c2) + " share point " +
                            std::to_string(p));
    }
  }
  if (c2.start < c1.start) std::swap(c1, c2);
  return {c1, c2};
}

}  // namespace

bool crossing(Chord c1, Chord c2) {
  auto [x, y] = ordered_disjoint(c1, c2);
  return x.start < y.start && y.start < x.end && x.end < y.end;
}

bool nesting(Chord c1, Chord c2) {
  auto [x, y] = ordered_disjoint(c1, c2);
  return x.start < y.start && y.end < x.end;
}

ChordDiagram ChordDiagram::from_chords(std::span<const std::pair<int, int>> pairs, int n) {
  if (n < 0) throw ValidationError("negative chord count");
  if (static_cast<int>(pairs.size()) != n) {
    throw ValidationError("expected " + std::to_string(n) + " chords, got " +
                          std::to_string(pairs.size()));
  }
  const int points = 2 * n;
  std::vector<int> partner(static_cast<std::size_t>(points), -1);
  auto claim = [&](int p) {
    if (p < 1 || p > points) {
      throw ValidationError("point " + std::to_string(p) + " out of range [1, " +
                            std::to_string(points) + "]");
    }
    if (partner[p - 1] != -1) throw ValidationError("point " + std::to_string(p) + " duplicated");
  };
  for (auto [a, b] : pairs) {
    claim(a);
    partner[a - 1] = a - 1;  // placeholder so a == b is caught as a duplicate
    claim(b);
    partner[a - 1] = b - 1;
    partner[b - 1] = a - 1;
  }
  return ChordDiagram(std::move(partner));
}

ChordDiagram ChordDiagram::from_chords(std::span<const Chord> chords) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(chords.size());
  for (const Chord& c : chords) pairs.emplace_back(c.start, c.end);
  return from_chords(pairs, static_cast<int>(pairs.size()));
}

ChordDiagram ChordDiagram::from_partners(std::vector<int> partners) {
  const int points = static_cast<int>(partners.size());
  if (points % 2 != 0) throw ValidationError("odd number of points");
  for (int i = 0; i < points; ++i) {
    const int j = partners[i];
    if (j < 0 || j >= points) {
      throw ValidationError("point " + std::to_string(i + 1) + " has partner out of range");
    }
    if (j == i) throw ValidationError("point " + std::to_string(i + 1) + " is a fixed point");
    if (partners[j] != i) {
      throw ValidationError("partner sequence is not an involution at point " +
                            std::to_string(i + 1));
    }
  }
  return ChordDiagram(std::move(partners));
}

std::vector<Chord> ChordDiagram::chords() const {
  std::vector<Chord> out;
  out.reserve(partner_.size() / 2);
  for (int i = 0; i < points(); ++i) {
    if (partner_[i] > i) out.push_back({i + 1, partner_[i] + 1});
  }
  return out;
}

std::strong_ordering operator<=>(const ChordDiagram& a, const ChordDiagram& b) {
  if (auto c = a.partner_.size() <=> b.partner_.size(); c != 0) return c;
  return a.partner_ <=> b.partner_;
}

std::string to_text(Chord c) {
  return "(" + std::to_string(c.start) + "," + std::to_string(c.end) + ")";
}

std::string to_text(const ChordDiagram& d) {
  std::string out;
  for (const Chord& c : d.chords()) out += to_text(c);
  return out;
}

std::string to_json(const ChordDiagram& d) {
  std::string out = "[";
  bool first = true;
  for (const Chord& c : d.chords()) {
    if (!first) out += ',';
    first = false;
    out += "[" + std::to_string(c.start) + "," + std::to_string(c.end) + "]";
  }
  return out + "]";
}

namespace {

class TextCursor {
 public:
  explicit TextCursor(std::string_view s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ == s_.size();
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int integer() {
    skip_space();
    int v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected a point number");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }
  std::pair<int, int> pair() {
    expect('(');
    int a = integer();
    expect(',');
    int b = integer();
    expect(')');
    return {a, b};
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) +
                     "\"");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

ChordDiagram build_or_parse_error(const std::vector<std::pair<int, int>>& pairs) {
  try {
    return ChordDiagram::from_chords(pairs, static_cast<int>(pairs.size()));
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

ChordDiagram parse_diagram(std::string_view text) {
  TextCursor cur(text);
  std::vector<std::pair<int, int>> pairs;
  while (!cur.at_end()) pairs.push_back(cur.pair());
  return build_or_parse_error(pairs);
}

Chord parse_chord(std::string_view text) {
  TextCursor cur(text);
  auto [a, b] = cur.pair();
  if (!cur.at_end()) cur.fail("trailing characters");
  try {
    return make_chord(a, b);
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

ChordDiagram parse_diagram_json(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("diagram JSON must be an array of [a,b] pairs");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& item : doc) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer()) {
      throw ParseError("diagram JSON must be an array of [a,b] pairs");
    }
    pairs.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  return build_or_parse_error(pairs);
}

}  // namespace chordlab

std::size_t std::hash<chordlab::ChordDiagram>::operator()(
    const chordlab::ChordDiagram& d) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int p : d.partners()) {
    h ^= static_cast<std::size_t>(p) + 1;
    h *= 0x100000001b3ULL;
  }
  return h;
}
