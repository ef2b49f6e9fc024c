#pragma once

#include "chordlab/bigint.hpp"
#include "chordlab/triangles.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chordlab {

struct UnimodalResult {
  bool unimodal = false;
  // First and last index holding the maximum value.
  int peak_first = 0;
  int peak_last = 0;
};

struct LogConcaveResult {
  bool log_concave = false;
  // Smallest interior i with seq[i]^2 < seq[i-1] * seq[i+1].
  std::optional<int> first_violation;
};

/// Nondecreasing up to some index, nonincreasing after it. Empty input
/// throws ValidationError.
UnimodalResult is_unimodal(std::span<const BigInt> seq);
/// seq[i]^2 >= seq[i-1] * seq[i+1] at every interior index. Empty input
/// throws ValidationError.
LogConcaveResult is_log_concave(std::span<const BigInt> seq);

/// Hypotheses on the coefficients of a recurrence
///   R(n,k) = (a1 n + a2 k + a3) R(n-1,k) + (b1 n + b2 k + b3) R(n-1,k-1)
/// under which every row R(n, .) is log-concave:
///   a1 >= 0, a1 + a2 >= 0, a1 + a2 + a3 > 0 and the same for b.
bool kurtz_hypothesis_check(const Rational& a1, const Rational& a2, const Rational& a3,
                            const Rational& b1, const Rational& b2, const Rational& b3);

/// Shape of one triangle row with zeros at either end trimmed away.
struct ShapeReport {
  TriangleKind kind = TriangleKind::L;
  int n = 0;
  bool unimodal = false;
  int peak_first = 0;  // column labels in the triangle's own indexing
  int peak_last = 0;
  bool log_concave = false;
  std::optional<int> first_violation;  // column label

  bool consistent() const { return !(log_concave && !unimodal); }
};

ShapeReport shape_report(TriangleKind kind, int n, std::span<const BigInt> row);

/// One report per row first_row(kind)..n_max. Rows are built serially, then
/// checked in parallel; the result does not depend on `threads`.
std::vector<ShapeReport> sweep(TriangleKind kind, int n_max, int threads = 0,
                               const TriangleLimits& limits = {});

// One object per row in an array:
// {"kind":"L","n":4,"unimodal":true,"peak":[1,1],"log_concave":true,"first_violation":null}
std::string to_json(const std::vector<ShapeReport>& reports);
// Fixed-width table with a ✓ or ✗ per property.
std::string to_table(const std::vector<ShapeReport>& reports);

}  // namespace chordlab
