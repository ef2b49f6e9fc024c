#include "chordlab/analysis.hpp"

#include "chordlab/errors.hpp"

#include <omp.h>

#include <cstdio>

namespace chordlab {

UnimodalResult is_unimodal(std::span<const BigInt> seq) {
  if (seq.empty()) throw ValidationError("unimodality of an empty sequence");
  const int size = static_cast<int>(seq.size());
  int first = 0;
  for (int i = 1; i < size; ++i) {
    if (seq[i] > seq[first]) first = i;
  }
  int last = first;
  while (last + 1 < size && seq[last + 1] == seq[first]) ++last;

  bool ok = true;
  for (int i = 1; i <= first && ok; ++i) ok = seq[i - 1] <= seq[i];
  for (int i = first + 1; i < size && ok; ++i) ok = seq[i] <= seq[i - 1];
  return {ok, first, last};
}

LogConcaveResult is_log_concave(std::span<const BigInt> seq) {
  if (seq.empty()) throw ValidationError("log-concavity of an empty sequence");
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    if (seq[i] * seq[i] < seq[i - 1] * seq[i + 1]) return {false, static_cast<int>(i)};
  }
  return {true, std::nullopt};
}

bool kurtz_hypothesis_check(const Rational& a1, const Rational& a2, const Rational& a3,
                            const Rational& b1, const Rational& b2, const Rational& b3) {
  auto holds = [](const Rational& x1, const Rational& x2, const Rational& x3) {
    return x1 >= 0 && x1 + x2 >= 0 && x1 + x2 + x3 > 0;
  };
  return holds(a1, a2, a3) && holds(b1, b2, b3);
}

ShapeReport shape_report(TriangleKind kind, int n, std::span<const BigInt> row) {
  std::size_t lo = 0;
  std::size_t hi = row.size();
  while (lo < hi && row[lo] == 0) ++lo;
  while (hi > lo && row[hi - 1] == 0) --hi;
  ShapeReport report;
  report.kind = kind;
  report.n = n;
  if (lo == hi) {
    // All-zero rows do not occur in these triangles; report them as failing.
    return report;
  }
  const auto trimmed = row.subspan(lo, hi - lo);
  const int origin = first_column(kind) + static_cast<int>(lo);
  const auto uni = is_unimodal(trimmed);
  const auto lc = is_log_concave(trimmed);
  report.unimodal = uni.unimodal;
  report.peak_first = origin + uni.peak_first;
  report.peak_last = origin + uni.peak_last;
  report.log_concave = lc.log_concave;
  if (lc.first_violation) report.first_violation = origin + *lc.first_violation;
  return report;
}

std::vector<ShapeReport> sweep(TriangleKind kind, int n_max, int threads,
                               const TriangleLimits& limits) {
  const int first = first_row(kind);
  std::vector<std::vector<BigInt>> rows;
  for (int n = first; n <= n_max; ++n) rows.push_back(row(kind, n, limits));

  std::vector<ShapeReport> reports(rows.size());
  const int count = static_cast<int>(rows.size());
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
  for (int i = 0; i < count; ++i) {
    reports[static_cast<std::size_t>(i)] =
        shape_report(kind, first + i, rows[static_cast<std::size_t>(i)]);
  }
  return reports;
}

std::string to_json(const std::vector<ShapeReport>& reports) {
  std::string out = "[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    if (i) out += ',';
    out += "{\"kind\":\"" + std::string(to_string(r.kind)) + "\",\"n\":" + std::to_string(r.n) +
           ",\"unimodal\":" + (r.unimodal ? "true" : "false") + ",\"peak\":[" +
           std::to_string(r.peak_first) + "," + std::to_string(r.peak_last) +
           "],\"log_concave\":" + (r.log_concave ? "true" : "false") + ",\"first_violation\":" +
           (r.first_violation ? std::to_string(*r.first_violation) : "null") + "}";
  }
  return out + "]";
}

std::string to_table(const std::vector<ShapeReport>& reports) {
  std::string out = "kind    n  unimodal  peak      log-concave\n";
  char line[128];
  for (const auto& r : reports) {
    const std::string peak = r.peak_first == r.peak_last
                                 ? std::to_string(r.peak_first)
                                 : std::to_string(r.peak_first) + ".." + std::to_string(r.peak_last);
    std::string lc = r.log_concave ? "✓" : "✗";
    if (r.first_violation) lc += " (first violation at " + std::to_string(*r.first_violation) + ")";
    std::snprintf(line, sizeof line, "%-8s%3d  %s         %-10s%s\n",
                  std::string(to_string(r.kind)).c_str(), r.n, r.unimodal ? "✓" : "✗",
                  peak.c_str(), lc.c_str());
    out += line;
  }
  return out;
}

}  // namespace chordlab
