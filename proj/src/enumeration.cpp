#include "chordlab/enumeration.hpp"

#include "chordlab/errors.hpp"

#include <charconv>
#include <cstdint>

namespace chordlab {

Filter Filter::min_length(int k) {
  if (k < 1) throw ValidationError("minimum chord length must be at least 1");
  return {Kind::min_length, k};
}

std::string Filter::to_string() const {
  switch (kind) {
    case Kind::all:
      return "all";
    case Kind::min_length:
      return "minlen=" + std::to_string(k);
    case Kind::noncrossing:
      return "noncrossing";
    case Kind::nonnesting:
      return "nonnesting";
  }
  return "all";
}

Filter Filter::parse(std::string_view text) {
  if (text == "all") return all();
  if (text == "noncrossing") return noncrossing();
  if (text == "nonnesting") return nonnesting();
  constexpr std::string_view prefix = "minlen=";
  if (text.starts_with(prefix)) {
    auto digits = text.substr(prefix.size());
    int k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && k >= 1) return min_length(k);
  }
  throw ParseError("unknown filter \"" + std::string(text) +
                   "\" (expected all, minlen=K, noncrossing or nonnesting)");
}

bool Filter::admits(const ChordDiagram& d) const {
  const auto chords = d.chords();
  switch (kind) {
    case Kind::all:
      return true;
    case Kind::min_length:
      for (const Chord& c : chords) {
        if (c.length() < k) return false;
      }
      return true;
    case Kind::noncrossing:
    case Kind::nonnesting:
      for (std::size_t i = 0; i < chords.size(); ++i) {
        for (std::size_t j = i + 1; j < chords.size(); ++j) {
          bool bad = kind == Kind::noncrossing ? crossing(chords[i], chords[j])
                                               : nesting(chords[i], chords[j]);
          if (bad) return false;
        }
      }
      return true;
  }
  return false;
}

DiagramStream::DiagramStream(int n, Filter filter)
    : n_(n), filter_(filter), partner_(static_cast<std::size_t>(2 * std::max(n, 0)), -1),
      window_hi_(2 * std::max(n, 0) - 1) {
  if (n < 0) throw ValidationError("negative chord count");
  if (filter.kind == Filter::Kind::min_length && filter.k < 1) {
    throw ValidationError("minimum chord length must be at least 1");
  }
}

int DiagramStream::smallest_unmatched() const {
  for (int i = 0; i < 2 * n_; ++i) {
    if (partner_[i] < 0) return i;
  }
  return -1;
}

// `a` is the smallest unmatched point, so every matched point above `a` is
// the endpoint of a chord that starts left of `a`.
bool DiagramStream::admissible(int a, int b, bool first_free_level) const {
  if (partner_[b] >= 0) return false;
  if (first_free_level && (b < window_lo_ || b > window_hi_)) return false;
  switch (filter_.kind) {
    case Filter::Kind::all:
      return true;
    case Filter::Kind::min_length:
      return b - a >= filter_.k;
    case Filter::Kind::noncrossing:
      for (int p = a + 1; p < b; ++p) {
        if (partner_[p] >= 0) return false;
      }
      return true;
    case Filter::Kind::nonnesting:
      for (int p = b + 1; p < 2 * n_; ++p) {
        if (partner_[p] >= 0) return false;
      }
      return true;
  }
  return false;
}

int DiagramStream::next_candidate(int a, int from, bool first_free_level) const {
  for (int b = from; b < 2 * n_; ++b) {
    if (admissible(a, b, first_free_level)) return b;
  }
  return -1;
}

void DiagramStream::match(int a, int b) {
  partner_[a] = b;
  partner_[b] = a;
  matched_ += 2;
}

void DiagramStream::unmatch(int a, int b) {
  partner_[a] = -1;
  partner_[b] = -1;
  matched_ -= 2;
}

bool DiagramStream::backtrack() {
  while (!frames_.empty()) {
    const Frame top = frames_.back();
    frames_.pop_back();
    unmatch(top.a, top.b);
    const int b = next_candidate(top.a, top.b + 1, frames_.empty());
    if (b >= 0) {
      match(top.a, b);
      frames_.push_back({top.a, b});
      return true;
    }
  }
  return false;
}

bool DiagramStream::advance() {
  if (done_) return false;
  bool ok;
  if (!started_) {
    started_ = true;
    ok = !empty_;
  } else {
    ok = backtrack();
  }
  while (ok) {
    if (matched_ == 2 * n_) return true;
    const int a = smallest_unmatched();
    const int b = next_candidate(a, a + 1, frames_.empty());
    if (b >= 0) {
      match(a, b);
      frames_.push_back({a, b});
    } else {
      ok = backtrack();
    }
  }
  done_ = true;
  return false;
}

std::optional<ChordDiagram> DiagramStream::next() {
  if (!advance()) return std::nullopt;
  return ChordDiagram::from_partners(partner_);
}

std::vector<int> DiagramStream::first_level_candidates() const {
  std::vector<int> out;
  if (empty_ || matched_ == 2 * n_) return out;
  const int a = smallest_unmatched();
  for (int b = next_candidate(a, a + 1, true); b >= 0; b = next_candidate(a, b + 1, true)) {
    out.push_back(b);
  }
  return out;
}

// A level with a single admissible partner cannot be divided; fix that chord
// and move on to the level below.
DiagramStream DiagramStream::descended() const {
  DiagramStream base = *this;
  for (auto candidates = base.first_level_candidates(); candidates.size() == 1;
       candidates = base.first_level_candidates()) {
    base.match(base.smallest_unmatched(), candidates.front());
    base.window_lo_ = 0;
    base.window_hi_ = 2 * n_ - 1;
  }
  return base;
}

std::vector<DiagramStream> DiagramStream::split(int parts) const {
  if (parts < 1) throw ValidationError("split needs at least one part");
  if (started_) throw ValidationError("cannot split a stream that has been consumed");

  DiagramStream base = parts > 1 ? descended() : *this;
  const std::vector<int> candidates = base.first_level_candidates();

  std::vector<DiagramStream> out;
  out.reserve(static_cast<std::size_t>(parts));
  if (candidates.empty()) {
    // Either exhausted or a single fully determined diagram.
    out.push_back(base);
    DiagramStream none = base;
    none.empty_ = true;
    out.resize(static_cast<std::size_t>(parts), none);
    return out;
  }

  const std::size_t m = candidates.size();
  const std::size_t p = static_cast<std::size_t>(parts);
  const std::size_t quota = m / p;
  const std::size_t extra = m % p;
  std::size_t next = 0;
  for (std::size_t i = 0; i < p; ++i) {
    const std::size_t take = quota + (i < extra ? 1 : 0);
    DiagramStream piece = base;
    if (take == 0) {
      piece.empty_ = true;
    } else {
      piece.window_lo_ = candidates[next];
      piece.window_hi_ = candidates[next + take - 1];
    }
    next += take;
    out.push_back(std::move(piece));
  }
  return out;
}

std::vector<DiagramStream> DiagramStream::split_branches() const {
  if (started_) throw ValidationError("cannot split a stream that has been consumed");
  DiagramStream base = descended();
  const auto branches = base.first_level_candidates().size();
  if (branches == 0) return {base};
  return base.split(static_cast<int>(branches));
}

DiagramStream enumerate(int n, Filter filter) { return DiagramStream(n, filter); }

std::vector<DiagramStream> fan_out(const DiagramStream& stream, int levels) {
  std::vector<DiagramStream> current{stream};
  for (int level = 0; level < levels; ++level) {
    std::vector<DiagramStream> deeper;
    for (const auto& s : current) {
      for (auto& piece : s.split_branches()) deeper.push_back(std::move(piece));
    }
    current = std::move(deeper);
  }
  return current;
}

namespace {

// Counts completions of a partial matching by plain recursion; shares no
// state with DiagramStream.
std::uint64_t count_min_length(std::vector<char>& used, int points, int k) {
  int a = 0;
  while (a < points && used[a]) ++a;
  if (a == points) return 1;
  used[a] = 1;
  std::uint64_t total = 0;
  for (int b = a + k; b < points; ++b) {
    if (used[b]) continue;
    used[b] = 1;
    total += count_min_length(used, points, k);
    used[b] = 0;
  }
  used[a] = 0;
  return total;
}

}  // namespace

BigInt count(int n, Filter filter) {
  if (n < 0) throw ValidationError("negative chord count");
  switch (filter.kind) {
    case Filter::Kind::all:
      return double_factorial_odd(n);
    case Filter::Kind::noncrossing:
    case Filter::Kind::nonnesting:
      return catalan(n);
    case Filter::Kind::min_length: {
      if (filter.k < 1) throw ValidationError("minimum chord length must be at least 1");
      if (filter.k == 1) return double_factorial_odd(n);
      std::vector<char> used(static_cast<std::size_t>(2 * n), 0);
      return BigInt(count_min_length(used, 2 * n, filter.k));
    }
  }
  return 0;
}

std::uint64_t enumeration_rank(const ChordDiagram& d) {
  if (d.size() > 17) throw ValidationError("enumeration rank needs n <= 17");
  const auto partners = d.partners();
  const int points = d.points();
  std::vector<char> used(static_cast<std::size_t>(points), 0);
  std::uint64_t rank = 0;
  for (int a = 0; a < points; ++a) {
    if (used[a]) continue;
    std::uint64_t radix = 0;
    std::uint64_t digit = 0;
    for (int b = a + 1; b < points; ++b) {
      if (used[b]) continue;
      if (b == partners[a]) digit = radix;
      ++radix;
    }
    rank = rank * radix + digit;
    used[a] = used[partners[a]] = 1;
  }
  return rank;
}

}  // namespace chordlab
