#pragma once

#include "chordlab/bigint.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace chordlab {

/// The number triangles, each with its own row and column origin:
///
///   kind      rows    columns
///   L         n >= 0  s = 0..n      diagrams by number of length-1 chords
///   T         n >= 1  k = 1..n      diagrams by number of LR pairs
///   E         n >= 1  k = 0..n-1    second-order Eulerian numbers
///   narayana  n >= 1  k = 1..n
///   sullivan  n >= 1  k = 1..n      diagrams with every chord of length >= k
enum class TriangleKind { L, T, E, narayana, sullivan };

std::string_view to_string(TriangleKind kind);
TriangleKind parse_triangle_kind(std::string_view text);

int first_row(TriangleKind kind);
int first_column(TriangleKind kind);

inline constexpr int kDefaultEnumerationCap = 8;
inline constexpr int kRecurrenceRowLimit = 200;

/// Bounds for row queries. Sullivan entries come from enumeration and are
/// limited by enumeration_cap; every other triangle by recurrence_rows.
struct TriangleLimits {
  int enumeration_cap = kDefaultEnumerationCap;
  int recurrence_rows = kRecurrenceRowLimit;
};

/// L(n,s) = L(n-1,s-1) + (2n-2-s) L(n-1,s) + (s+1) L(n-1,s+1), L(0,0) = 1.
/// Zero outside 0 <= s <= n.
BigInt L(int n, int s);
/// E(n,k) = (k+1) E(n-1,k) + (2n-k-1) E(n-1,k-1), E(n,0) = 1.
BigInt E(int n, int k);
/// T(n,k) = (n-k+1) T(n-1,k-1) + (n-1+k) T(n-1,k), T(1,1) = 1.
/// Built from its own recurrence, not by reversing E.
BigInt T(int n, int k);
/// N(n,k) = C(n-1,k-1) C(n,k-1) / k.
BigInt narayana(int n, int k);
/// Number of n-chord diagrams whose chords all have length >= k. Counted by
/// enumeration and memoized; n above `cap` throws ResourceLimitError.
BigInt sullivan(int n, int k, int cap = kDefaultEnumerationCap);

/// Row n trimmed to the triangle's shape.
std::vector<BigInt> row(TriangleKind kind, int n, const TriangleLimits& limits = {});

enum class ExportFormat { csv, json, bfile, text };

std::string_view to_string(ExportFormat format);
ExportFormat parse_export_format(std::string_view text);

/// Offset of the first index in the b-file export: 0 for L (whose first row
/// is n = 0), 1 for the others.
int bfile_offset(TriangleKind kind);

/// Renders rows first_row(kind)..n_max.
///
///   text   one row per line, entries separated by single spaces
///   csv    header "n,<column labels>", then one line per row with empty
///          cells outside the triangle
///   json   array of row arrays; entries are bare integer literals
///   bfile  "index value" per entry in row-major order from bfile_offset
std::string export_triangle(TriangleKind kind, int n_max, ExportFormat format,
                            const TriangleLimits& limits = {});

}  // namespace chordlab
