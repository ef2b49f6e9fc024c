#include "chordlab/triangles.hpp"

#include "chordlab/enumeration.hpp"
#include "chordlab/errors.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <utility>

namespace chordlab {

namespace {

// Bottom-up row memo. Rows are appended under the lock, so a reader never
// sees a partially built row.
class RowMemo {
 public:
  using Builder = std::function<std::vector<BigInt>(int n, const std::vector<BigInt>& previous)>;

  RowMemo(int first, std::vector<BigInt> seed, Builder build)
      : first_(first), build_(std::move(build)) {
    rows_.push_back(std::move(seed));
  }

  std::vector<BigInt> row(int n) {
    std::lock_guard lock(mutex_);
    extend(n);
    return rows_[static_cast<std::size_t>(n - first_)];
  }

  BigInt at(int n, int column_index) {
    std::lock_guard lock(mutex_);
    extend(n);
    const auto& r = rows_[static_cast<std::size_t>(n - first_)];
    if (column_index < 0 || column_index >= static_cast<int>(r.size())) return 0;
    return r[static_cast<std::size_t>(column_index)];
  }

 private:
  void extend(int n) {
    while (first_ + static_cast<int>(rows_.size()) <= n) {
      const int next = first_ + static_cast<int>(rows_.size());
      rows_.push_back(build_(next, rows_.back()));
    }
  }

  int first_;
  Builder build_;
  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

BigInt entry(const std::vector<BigInt>& r, int i) {
  if (i < 0 || i >= static_cast<int>(r.size())) return 0;
  return r[static_cast<std::size_t>(i)];
}

RowMemo& l_memo() {
  static RowMemo memo(0, {BigInt(1)}, [](int n, const std::vector<BigInt>& prev) {
    std::vector<BigInt> r(static_cast<std::size_t>(n + 1));
    for (int s = 0; s <= n; ++s) {
      r[s] = entry(prev, s - 1) + (2 * n - 2 - s) * entry(prev, s) + (s + 1) * entry(prev, s + 1);
    }
    return r;
  });
  return memo;
}

// Column index k is stored at position k.
RowMemo& e_memo() {
  static RowMemo memo(1, {BigInt(1)}, [](int n, const std::vector<BigInt>& prev) {
    std::vector<BigInt> r(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      r[k] = (k + 1) * entry(prev, k) + (2 * n - k - 1) * entry(prev, k - 1);
    }
    return r;
  });
  return memo;
}

// Column k is stored at position k - 1.
RowMemo& t_memo() {
  static RowMemo memo(1, {BigInt(1)}, [](int n, const std::vector<BigInt>& prev) {
    std::vector<BigInt> r(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
      r[k - 1] = (n - k + 1) * entry(prev, k - 2) + (n - 1 + k) * entry(prev, k - 1);
    }
    return r;
  });
  return memo;
}

void require_row(int n, int first, const char* name) {
  if (n < first) {
    throw ValidationError(std::string(name) + ": row " + std::to_string(n) + " is below " +
                          std::to_string(first));
  }
}

void require_column(int n, int k, int lo, int hi, const char* name) {
  if (k < lo || k > hi) {
    throw ValidationError(std::string(name) + "(" + std::to_string(n) + ", " +
                          std::to_string(k) + "): column outside " + std::to_string(lo) + ".." +
                          std::to_string(hi));
  }
}

}  // namespace

std::string_view to_string(TriangleKind kind) {
  switch (kind) {
    case TriangleKind::L:
      return "L";
    case TriangleKind::T:
      return "T";
    case TriangleKind::E:
      return "E";
    case TriangleKind::narayana:
      return "narayana";
    case TriangleKind::sullivan:
      return "sullivan";
  }
  return "L";
}

TriangleKind parse_triangle_kind(std::string_view text) {
  for (auto kind : {TriangleKind::L, TriangleKind::T, TriangleKind::E, TriangleKind::narayana,
                    TriangleKind::sullivan}) {
    if (text == to_string(kind)) return kind;
  }
  throw ParseError("unknown triangle \"" + std::string(text) +
                   "\" (expected L, T, E, narayana or sullivan)");
}

int first_row(TriangleKind kind) { return kind == TriangleKind::L ? 0 : 1; }

int first_column(TriangleKind kind) {
  return kind == TriangleKind::L || kind == TriangleKind::E ? 0 : 1;
}

BigInt L(int n, int s) {
  require_row(n, 0, "L");
  if (s < 0 || s > n) return 0;
  return l_memo().at(n, s);
}

BigInt E(int n, int k) {
  require_row(n, 1, "E");
  require_column(n, k, 0, n - 1, "E");
  return e_memo().at(n, k);
}

BigInt T(int n, int k) {
  require_row(n, 1, "T");
  require_column(n, k, 1, n, "T");
  return t_memo().at(n, k - 1);
}

BigInt narayana(int n, int k) {
  require_row(n, 1, "narayana");
  require_column(n, k, 1, n, "narayana");
  BigInt numerator = binomial(n - 1, k - 1) * binomial(n, k - 1);
  if (numerator % k != 0) {
    throw std::logic_error("narayana(" + std::to_string(n) + ", " + std::to_string(k) +
                           "): inexact division");
  }
  return numerator / k;
}

BigInt sullivan(int n, int k, int cap) {
  require_row(n, 1, "sullivan");
  require_column(n, k, 1, n, "sullivan");
  if (n > cap) {
    throw ResourceLimitError("sullivan: n = " + std::to_string(n) +
                             " exceeds the enumeration cap " + std::to_string(cap));
  }
  static std::mutex mutex;
  static std::map<std::pair<int, int>, BigInt> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find({n, k}); it != memo.end()) return it->second;
  }
  BigInt value = count(n, Filter::min_length(k));
  std::lock_guard lock(mutex);
  memo.emplace(std::make_pair(n, k), value);
  return value;
}

std::vector<BigInt> row(TriangleKind kind, int n, const TriangleLimits& limits) {
  require_row(n, first_row(kind), std::string(to_string(kind)).c_str());
  if (kind == TriangleKind::sullivan) {
    if (n > limits.enumeration_cap) {
      throw ResourceLimitError("sullivan rows are enumeration-backed; n = " + std::to_string(n) +
                               " exceeds the cap " + std::to_string(limits.enumeration_cap));
    }
  } else if (n > limits.recurrence_rows) {
    throw ResourceLimitError("row " + std::to_string(n) + " exceeds the limit " +
                             std::to_string(limits.recurrence_rows));
  }
  switch (kind) {
    case TriangleKind::L:
      return l_memo().row(n);
    case TriangleKind::E:
      return e_memo().row(n);
    case TriangleKind::T:
      return t_memo().row(n);
    case TriangleKind::narayana: {
      std::vector<BigInt> r;
      for (int k = 1; k <= n; ++k) r.push_back(narayana(n, k));
      return r;
    }
    case TriangleKind::sullivan: {
      std::vector<BigInt> r;
      for (int k = 1; k <= n; ++k) r.push_back(sullivan(n, k, limits.enumeration_cap));
      return r;
    }
  }
  return {};
}

std::string_view to_string(ExportFormat format) {
  switch (format) {
    case ExportFormat::csv:
      return "csv";
    case ExportFormat::json:
      return "json";
    case ExportFormat::bfile:
      return "bfile";
    case ExportFormat::text:
      return "text";
  }
  return "text";
}

ExportFormat parse_export_format(std::string_view text) {
  for (auto f : {ExportFormat::csv, ExportFormat::json, ExportFormat::bfile, ExportFormat::text}) {
    if (text == to_string(f)) return f;
  }
  throw ParseError("unsupported format \"" + std::string(text) +
                   "\" (expected csv, json, bfile or text)");
}

int bfile_offset(TriangleKind kind) { return kind == TriangleKind::L ? 0 : 1; }

std::string export_triangle(TriangleKind kind, int n_max, ExportFormat format,
                            const TriangleLimits& limits) {
  const int first = first_row(kind);
  std::vector<std::vector<BigInt>> rows;
  for (int n = first; n <= n_max; ++n) rows.push_back(row(kind, n, limits));

  std::string out;
  switch (format) {
    case ExportFormat::text:
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out += (i ? " " : "") + r[i].str();
        out += '\n';
      }
      break;
    case ExportFormat::csv: {
      std::size_t width = 0;
      for (const auto& r : rows) width = std::max(width, r.size());
      out += "n";
      for (std::size_t i = 0; i < width; ++i) {
        out += "," + std::to_string(first_column(kind) + static_cast<int>(i));
      }
      out += '\n';
      for (std::size_t j = 0; j < rows.size(); ++j) {
        out += std::to_string(first + static_cast<int>(j));
        for (std::size_t i = 0; i < width; ++i) {
          out += ',';
          if (i < rows[j].size()) out += rows[j][i].str();
        }
        out += '\n';
      }
      break;
    }
    case ExportFormat::json:
      out += '[';
      for (std::size_t j = 0; j < rows.size(); ++j) {
        out += j ? ",[" : "[";
        for (std::size_t i = 0; i < rows[j].size(); ++i) out += (i ? "," : "") + rows[j][i].str();
        out += ']';
      }
      out += "]\n";
      break;
    case ExportFormat::bfile: {
      long long index = bfile_offset(kind);
      for (const auto& r : rows) {
        for (const auto& v : r) out += std::to_string(index++) + " " + v.str() + "\n";
      }
      break;
    }
  }
  return out;
}

}  // namespace chordlab
