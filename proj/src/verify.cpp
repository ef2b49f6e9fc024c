#include "chordlab/verify.hpp"

#include "chordlab/analysis.hpp"
#include "chordlab/bijections.hpp"
#include "chordlab/enumeration.hpp"
#include "chordlab/errors.hpp"
#include "chordlab/powerseries.hpp"
#include "chordlab/statistics.hpp"
#include "chordlab/triangles.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <optional>

namespace chordlab {

namespace {

// Runs `check(n)` for n = first..last and keeps the first counterexample.
CheckResult over_rows(std::string identity, int first, int last,
                      const std::function<std::optional<std::string>(int)>& check) {
  CheckResult result{std::move(identity), first, last, true, {}};
  for (int n = first; n <= last; ++n) {
    if (auto failure = check(n)) {
      result.passed = false;
      result.counterexample = "n=" + std::to_string(n) + ": " + *failure;
      break;
    }
  }
  return result;
}

std::string mismatch(const std::string& what, const BigInt& got, const BigInt& want) {
  return what + " = " + got.str() + ", expected " + want.str();
}

std::optional<std::string> compare_rows(const std::string& name, int origin,
                                        const std::vector<BigInt>& got,
                                        const std::vector<BigInt>& want) {
  const std::size_t width = std::max(got.size(), want.size());
  for (std::size_t i = 0; i < width; ++i) {
    const BigInt g = i < got.size() ? got[i] : BigInt(0);
    const BigInt w = i < want.size() ? want[i] : BigInt(0);
    if (g != w) return mismatch(name + "[" + std::to_string(origin + static_cast<int>(i)) + "]", g, w);
  }
  return std::nullopt;
}

int team_size(const VerifyOptions& o) { return o.threads > 0 ? o.threads : omp_get_max_threads(); }

int enumeration_last(const VerifyOptions& o) { return std::min(o.n_max, o.enumeration_cap); }

std::vector<BigInt> l_row(int n) { return row(TriangleKind::L, n, {1 << 30, 1 << 30}); }

// ---------------------------------------------------------------- recurrence

SuiteReport recurrence_suite(const VerifyOptions& o) {
  SuiteReport r{Suite::recurrence, {}};
  const int enum_last = enumeration_last(o);
  r.checks.push_back(over_rows("L(n,s) = #diagrams with s chords of length 1 (enumeration)", 0,
                               enum_last, [&](int n) {
                                 auto h = histogram(n, Filter::all(), Statistic::sc(1), o.threads);
                                 return compare_rows("sc histogram", 0, h.dense(n), l_row(n));
                               }));
  r.checks.push_back(over_rows("T(n,k) = #diagrams with k LR pairs (enumeration)", 1, enum_last,
                               [&](int n) {
                                 auto h = histogram(n, Filter::all(), Statistic::lr(), o.threads);
                                 auto dense = h.dense(n);
                                 if (dense[0] != 0) return std::optional<std::string>("diagram with no LR pair");
                                 dense.erase(dense.begin());
                                 return compare_rows("lr histogram", 1, dense, row(TriangleKind::T, n));
                               }));
  r.checks.push_back(over_rows("sum_s L_n^k(q) coefficients = sullivan(n,k), k = 2,3", 2,
                               enum_last, [&](int n) -> std::optional<std::string> {
                                 for (int k = 2; k <= std::min(3, n); ++k) {
                                   auto h = histogram(n, Filter::min_length(k), Statistic::sc(k), o.threads);
                                   auto want = sullivan(n, k, o.enumeration_cap);
                                   if (h.total() != want) {
                                     return mismatch("L_n^" + std::to_string(k) + "(1)", h.total(), want);
                                   }
                                 }
                                 return std::nullopt;
                               }));
  r.checks.push_back(over_rows("T(n,1) = n!", 1, o.n_max, [](int n) -> std::optional<std::string> {
    if (T(n, 1) != factorial(n)) return mismatch("T(n,1)", T(n, 1), factorial(n));
    return std::nullopt;
  }));
  r.checks.push_back(over_rows("L(n,n) = 1 and L(n,n-1) = C(n,2)", 1, o.n_max,
                               [](int n) -> std::optional<std::string> {
                                 if (L(n, n) != 1) return mismatch("L(n,n)", L(n, n), 1);
                                 if (L(n, n - 1) != binomial(n, 2)) {
                                   return mismatch("L(n,n-1)", L(n, n - 1), binomial(n, 2));
                                 }
                                 return std::nullopt;
                               }));
  return r;
}

// ----------------------------------------------------------------------- egf

SuiteReport egf_suite(const VerifyOptions& o) {
  SuiteReport r{Suite::egf, {}};
  const int order = o.n_max;
  r.checks.push_back(over_rows("n! [t^n] egf_L_column(s) = L(n,s), s = 0..6", 0, order,
                               [&, cache = std::map<int, std::vector<Rational>>()](
                                   int n) mutable -> std::optional<std::string> {
                                 for (int s = 0; s <= 6; ++s) {
                                   auto it = cache.find(s);
                                   if (it == cache.end()) {
                                     it = cache.emplace(s, egf_counts(egf_L_column(s, order))).first;
                                   }
                                   const Rational& c = it->second[static_cast<std::size_t>(n)];
                                   if (c != Rational(L(n, s))) {
                                     return "s=" + std::to_string(s) + ": n! [t^n] = " + to_string(c) +
                                            ", expected " + L(n, s).str();
                                   }
                                 }
                                 return std::nullopt;
                               }));
  const auto product = riordan_short_chord_total(order);
  const auto closed = short_chord_total_closed_form(order);
  r.checks.push_back(over_rows("g f e^f = 1/sqrt(1-2t) - 1 coefficientwise", 0, order,
                               [&](int n) -> std::optional<std::string> {
                                 if (product[n] != closed[n]) {
                                   return "[t^n] " + to_string(product[n]) + " vs " + to_string(closed[n]);
                                 }
                                 return std::nullopt;
                               }));
  const auto counts = egf_counts(product);
  r.checks.push_back(over_rows("n! [t^n] (g f e^f) = (2n-1)!!", 1, order,
                               [&](int n) -> std::optional<std::string> {
                                 const Rational want(double_factorial_odd(n));
                                 if (counts[n] != want) {
                                   return "n! [t^n] = " + to_string(counts[n]) + ", expected " + to_string(want);
                                 }
                                 return std::nullopt;
                               }));
  const auto root = sqrt_one_minus_2t(order);
  const auto square = root * root;
  r.checks.push_back(over_rows("sqrt(1-2t)^2 = 1 - 2t", 0, order,
                               [&](int n) -> std::optional<std::string> {
                                 const Rational want = n == 0 ? 1 : (n == 1 ? -2 : 0);
                                 if (square[n] != want) return "[t^n] = " + to_string(square[n]);
                                 return std::nullopt;
                               }));
  return r;
}

// ----------------------------------------------------------------- bijection

struct TaskFailure {
  std::optional<std::string> message;
};

// Runs `visit` over every diagram of size n on the OpenMP team and returns the
// first failure in enumeration order.
std::optional<std::string> for_all_diagrams(
    int n, Filter filter, int team,
    const std::function<std::optional<std::string>(const ChordDiagram&)>& visit) {
  std::vector<DiagramStream> tasks = fan_out(enumerate(n, filter), 2);
  std::vector<TaskFailure> failures(tasks.size());
  const int count = static_cast<int>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
  for (int t = 0; t < count; ++t) {
    auto& stream = tasks[static_cast<std::size_t>(t)];
    // Exceptions may not leave the parallel region; they become failures.
    try {
      while (auto d = stream.next()) {
        if (auto failure = visit(*d)) {
          failures[static_cast<std::size_t>(t)].message = std::move(failure);
          break;
        }
      }
    } catch (const std::exception& e) {
      failures[static_cast<std::size_t>(t)].message = std::string("exception: ") + e.what();
    }
  }
  for (auto& f : failures) {
    if (f.message) return f.message;
  }
  return std::nullopt;
}

// Hit counters indexed by enumeration rank.
class HitTable {
 public:
  explicit HitTable(int n)
      : size_(static_cast<std::size_t>(double_factorial_odd(n))),
        hits_(std::make_unique<std::atomic<std::uint8_t>[]>(size_)) {
    for (std::size_t i = 0; i < size_; ++i) hits_[i].store(0, std::memory_order_relaxed);
  }

  void hit(const ChordDiagram& d) {
    auto& slot = hits_[enumeration_rank(d)];
    std::uint8_t seen = slot.load(std::memory_order_relaxed);
    while (seen < 255 && !slot.compare_exchange_weak(seen, seen + 1, std::memory_order_relaxed)) {
    }
  }
  std::uint8_t count(std::size_t rank) const { return hits_[rank].load(std::memory_order_relaxed); }
  std::size_t size() const { return size_; }

 private:
  std::size_t size_;
  std::unique_ptr<std::atomic<std::uint8_t>[]> hits_;
};

// Smallest rank whose count is not `expected` (counts of zero are allowed
// when `expected` is 1 and `allow_missing` is set).
std::optional<std::size_t> first_bad_rank(const HitTable& table, bool allow_missing) {
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto c = table.count(i);
    if (c > 1 || (c == 0 && !allow_missing)) return i;
  }
  return std::nullopt;
}

std::string describe_rank(int n, std::size_t rank, const HitTable& table) {
  DiagramStream s = enumerate(n, Filter::all());
  std::size_t i = 0;
  while (s.advance()) {
    if (i++ == rank) {
      return to_text(ChordDiagram::from_partners({s.current().begin(), s.current().end()})) +
             " hit " + std::to_string(table.count(rank)) + " times";
    }
  }
  return "rank " + std::to_string(rank);
}

SuiteReport bijection_suite(const VerifyOptions& o) {
  SuiteReport r{Suite::bijection, {}};
  const int last = enumeration_last(o);
  const int team = team_size(o);

  r.checks.push_back(over_rows(
      "unwrap: {(D, short chord s)} -> diagrams is a bijection", 1, last,
      [&](int n) -> std::optional<std::string> {
        HitTable table(n);
        auto failure = for_all_diagrams(n, Filter::all(), team, [&](const ChordDiagram& d) {
          for (const Chord& c : d.chords()) {
            if (c.length() == 1) table.hit(unwrap(d, c));
          }
          return std::optional<std::string>();
        });
        if (failure) return failure;
        if (auto bad = first_bad_rank(table, false)) return describe_rank(n, *bad, table);
        return std::nullopt;
      }));
  r.checks.push_back(over_rows(
      "rewrap(unwrap(D, s)) = (D, s) and unwrap(rewrap(D)) = D", 1, last, [&](int n) {
        return for_all_diagrams(n, Filter::all(), team,
                                [](const ChordDiagram& d) -> std::optional<std::string> {
                                  for (const Chord& c : d.chords()) {
                                    if (c.length() != 1) continue;
                                    MarkedDiagram md(d, c);
                                    if (!(rewrap(unwrap(md)) == md)) return "rewrap(unwrap(" + to_text(md) + ")) differs";
                                  }
                                  auto md = rewrap(d);
                                  if (!(unwrap(md) == d)) return "unwrap(rewrap(" + to_text(d) + ")) differs";
                                  return std::nullopt;
                                });
      }));
  r.checks.push_back(over_rows(
      "phi_j injective into sc = j-1 (j >= 2) and phi_0 injective into sc = 1", 1, last,
      [&](int n) -> std::optional<std::string> {
        // phi_0 and phi_2 both land in sc = 1; phi_j for j >= 3 land in
        // pairwise distinct classes.
        HitTable from_zero(n);
        HitTable from_many(n);
        auto failure = for_all_diagrams(n, Filter::all(), team,
                                        [&](const ChordDiagram& d) -> std::optional<std::string> {
                                          const int j = short_chords(d, 1);
                                          if (j == 1) return std::nullopt;
                                          const ChordDiagram image = phi(d, j);
                                          const int want = j == 0 ? 1 : j - 1;
                                          if (short_chords(image, 1) != want) {
                                            return "phi(" + to_text(d) + ") = " + to_text(image) + " has " +
                                                   std::to_string(short_chords(image, 1)) + " short chords";
                                          }
                                          (j == 0 ? from_zero : from_many).hit(image);
                                          return std::nullopt;
                                        });
        if (failure) return failure;
        if (auto bad = first_bad_rank(from_zero, true)) return "phi_0: " + describe_rank(n, *bad, from_zero);
        if (auto bad = first_bad_rank(from_many, true)) return "phi_j: " + describe_rank(n, *bad, from_many);
        return std::nullopt;
      }));
  r.checks.push_back(over_rows("dyck_to_matching and matching_to_dyck are inverse", 0, last,
                               [&](int n) -> std::optional<std::string> {
                                 for (const DyckPath& p : dyck_paths(n)) {
                                   if (!(matching_to_dyck(dyck_to_matching(p)) == p)) {
                                     return "path " + p.to_string() + " does not round-trip";
                                   }
                                 }
                                 return for_all_diagrams(
                                     n, Filter::nonnesting(), team,
                                     [](const ChordDiagram& d) -> std::optional<std::string> {
                                       if (!(dyck_to_matching(matching_to_dyck(d)) == d)) {
                                         return "diagram " + to_text(d) + " does not round-trip";
                                       }
                                       return std::nullopt;
                                     });
                               }));
  return r;
}

// -------------------------------------------------------------------- rowsum

SuiteReport rowsum_suite(const VerifyOptions& o) {
  SuiteReport r{Suite::rowsum, {}};
  const int enum_last = enumeration_last(o);
  const int team = team_size(o);
  r.checks.push_back(over_rows("sum_s L(n,s) = (2n-1)!!", 0, o.n_max,
                               [](int n) -> std::optional<std::string> {
                                 BigInt sum = 0;
                                 for (const auto& v : l_row(n)) sum += v;
                                 if (sum != double_factorial_odd(n)) {
                                   return mismatch("row sum", sum, double_factorial_odd(n));
                                 }
                                 return std::nullopt;
                               }));
  r.checks.push_back(over_rows("sum_k T(n,k) = sum_k E(n,k) = (2n-1)!!", 1, o.n_max,
                               [](int n) -> std::optional<std::string> {
                                 BigInt t = 0;
                                 BigInt e = 0;
                                 for (const auto& v : row(TriangleKind::T, n)) t += v;
                                 for (const auto& v : row(TriangleKind::E, n)) e += v;
                                 if (t != double_factorial_odd(n)) return mismatch("T row sum", t, double_factorial_odd(n));
                                 if (e != double_factorial_odd(n)) return mismatch("E row sum", e, double_factorial_odd(n));
                                 return std::nullopt;
                               }));
  auto stream_length = [team](int n, Filter f) {
    std::vector<DiagramStream> tasks = fan_out(enumerate(n, f), 2);
    std::vector<std::uint64_t> lengths(tasks.size(), 0);
    const int count = static_cast<int>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
    for (int t = 0; t < count; ++t) {
      while (tasks[static_cast<std::size_t>(t)].advance()) ++lengths[static_cast<std::size_t>(t)];
    }
    BigInt total = 0;
    for (auto v : lengths) total += v;
    return total;
  };
  r.checks.push_back(over_rows("|enumerate(n, all)| = (2n-1)!!", 0, enum_last,
                               [&](int n) -> std::optional<std::string> {
                                 const BigInt got = stream_length(n, Filter::all());
                                 if (got != double_factorial_odd(n)) return mismatch("stream length", got, double_factorial_odd(n));
                                 return std::nullopt;
                               }));
  r.checks.push_back(over_rows("|enumerate(n, noncrossing)| = |enumerate(n, nonnesting)| = C_n", 0,
                               enum_last, [&](int n) -> std::optional<std::string> {
                                 for (Filter f : {Filter::noncrossing(), Filter::nonnesting()}) {
                                   const BigInt got = stream_length(n, f);
                                   if (got != catalan(n)) return mismatch(f.to_string() + " stream length", got, catalan(n));
                                 }
                                 return std::nullopt;
                               }));
  r.checks.push_back(over_rows("|enumerate(n, minlen=k)| = count(n, minlen=k), k = 2..n", 1,
                               enum_last, [&](int n) -> std::optional<std::string> {
                                 for (int k = 2; k <= n; ++k) {
                                   const BigInt got = stream_length(n, Filter::min_length(k));
                                   const BigInt want = count(n, Filter::min_length(k));
                                   if (got != want) return mismatch("minlen=" + std::to_string(k) + " stream length", got, want);
                                 }
                                 return std::nullopt;
                               }));
  return r;
}

// --------------------------------------------------------------- expectation

SuiteReport expectation_suite(const VerifyOptions& o) {
  SuiteReport r{Suite::expectation, {}};
  r.checks.push_back(over_rows("sum_s s L(n,s) = (2n-1)!!", 1, o.n_max,
                               [](int n) -> std::optional<std::string> {
                                 const auto values = l_row(n);
                                 BigInt total = 0;
                                 for (std::size_t s = 0; s < values.size(); ++s) total += values[s] * s;
                                 if (total != double_factorial_odd(n)) {
                                   return mismatch("total short chords", total, double_factorial_odd(n));
                                 }
                                 return std::nullopt;
                               }));
  r.checks.push_back(over_rows("total short chords over all diagrams = (2n-1)!! (enumeration)", 1,
                               enumeration_last(o), [&](int n) -> std::optional<std::string> {
                                 auto h = histogram(n, Filter::all(), Statistic::sc(1), o.threads);
                                 BigInt total = 0;
                                 for (const auto& [s, c] : h.counts) total += c * s;
                                 if (total != double_factorial_odd(n)) {
                                   return mismatch("total short chords", total, double_factorial_odd(n));
                                 }
                                 return std::nullopt;
                               }));
  r.checks.push_back(over_rows("L(n,0) <= L(n,1) >= L(n,2) >= ... >= L(n,n)", 1, o.n_max,
                               [](int n) -> std::optional<std::string> {
                                 const auto values = l_row(n);
                                 if (values[0] > values[1]) return mismatch("L(n,0) > L(n,1): L(n,0)", values[0], values[1]);
                                 for (int s = 1; s < n; ++s) {
                                   if (values[s] < values[s + 1]) {
                                     return "L(n," + std::to_string(s) + ") < L(n," + std::to_string(s + 1) + ")";
                                   }
                                 }
                                 return std::nullopt;
                               }));
  return r;
}

// -------------------------------------------------------- narayana-transport

SuiteReport narayana_suite(const VerifyOptions& o) {
  SuiteReport r{Suite::narayana_transport, {}};
  const int last = enumeration_last(o);
  auto narayana_row = [](int n) { return row(TriangleKind::narayana, n); };
  auto without_zero_key = [](const StatisticHistogram& h, int n) -> std::optional<std::vector<BigInt>> {
    auto dense = h.dense(n);
    if (dense[0] != 0) return std::nullopt;
    dense.erase(dense.begin());
    return dense;
  };
  r.checks.push_back(over_rows("Dyck paths by peaks = N(n,k)", 1, last,
                               [&](int n) -> std::optional<std::string> {
                                 std::vector<BigInt> peaks(static_cast<std::size_t>(n));
                                 for (const auto& p : dyck_paths(n)) peaks[p.peaks() - 1] += 1;
                                 return compare_rows("peak histogram", 1, peaks, narayana_row(n));
                               }));
  r.checks.push_back(over_rows("nonnesting diagrams by LR pairs = N(n,k)", 1, last,
                               [&](int n) -> std::optional<std::string> {
                                 auto h = histogram(n, Filter::nonnesting(), Statistic::lr(), o.threads);
                                 auto dense = without_zero_key(h, n);
                                 if (!dense) return "nonnesting diagram without LR pairs";
                                 return compare_rows("lr histogram", 1, *dense, narayana_row(n));
                               }));
  r.checks.push_back(over_rows("noncrossing diagrams by chords of length 1 = N(n,k)", 1, last,
                               [&](int n) -> std::optional<std::string> {
                                 auto h = histogram(n, Filter::noncrossing(), Statistic::sc(1), o.threads);
                                 auto dense = without_zero_key(h, n);
                                 if (!dense) return "noncrossing diagram without short chords";
                                 return compare_rows("sc histogram", 1, *dense, narayana_row(n));
                               }));
  r.checks.push_back(over_rows("peaks(p) = lr_pairs(dyck_to_matching(p))", 0, last,
                               [](int n) -> std::optional<std::string> {
                                 for (const auto& p : dyck_paths(n)) {
                                   if (p.peaks() != lr_pairs(dyck_to_matching(p))) {
                                     return "path " + p.to_string();
                                   }
                                 }
                                 return std::nullopt;
                               }));
  return r;
}

// ------------------------------------------------------------------ reversal

SuiteReport reversal_suite(const VerifyOptions& o) {
  SuiteReport r{Suite::reversal, {}};
  r.checks.push_back(over_rows("T(n,k) = E(n,n-k)", 1, o.n_max,
                               [](int n) -> std::optional<std::string> {
                                 for (int k = 1; k <= n; ++k) {
                                   if (T(n, k) != E(n, n - k)) {
                                     return mismatch("T(n," + std::to_string(k) + ")", T(n, k), E(n, n - k));
                                   }
                                 }
                                 return std::nullopt;
                               }));
  r.checks.push_back(over_rows(
      "reversed E satisfies (n+k-1) R(n-1,k) + (n-k+1) R(n-1,k-1)", 2, o.n_max,
      [](int n) -> std::optional<std::string> {
        auto rev = [](int m, int k) -> BigInt { return k < 1 || k > m ? BigInt(0) : E(m, m - k); };
        for (int k = 1; k <= n; ++k) {
          const BigInt want = (n + k - 1) * rev(n - 1, k) + (n - k + 1) * rev(n - 1, k - 1);
          if (rev(n, k) != want) return mismatch("E(n,n-" + std::to_string(k) + ")", rev(n, k), want);
        }
        return std::nullopt;
      }));
  const bool hypotheses = kurtz_hypothesis_check(1, 1, -1, 1, -1, 1);
  r.checks.push_back({"log-concavity hypotheses hold for (a1,a2,a3,b1,b2,b3) = (1,1,-1,1,-1,1)", 0, 0,
                      hypotheses, hypotheses ? "" : "hypothesis check failed"});
  r.checks.push_back(over_rows("T(n,.) is log-concave", 1, o.n_max,
                               [](int n) -> std::optional<std::string> {
                                 const auto values = row(TriangleKind::T, n);
                                 auto lc = is_log_concave(values);
                                 if (!lc.log_concave) return "violation at k=" + std::to_string(*lc.first_violation + 1);
                                 return std::nullopt;
                               }));
  return r;
}

}  // namespace

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::recurrence:
      return "recurrence";
    case Suite::egf:
      return "egf";
    case Suite::bijection:
      return "bijection";
    case Suite::rowsum:
      return "rowsum";
    case Suite::expectation:
      return "expectation";
    case Suite::narayana_transport:
      return "narayana-transport";
    case Suite::reversal:
      return "reversal";
  }
  return "rowsum";
}

Suite parse_suite(std::string_view text) {
  for (auto s : {Suite::recurrence, Suite::egf, Suite::bijection, Suite::rowsum, Suite::expectation,
                 Suite::narayana_transport, Suite::reversal}) {
    if (text == to_string(s)) return s;
  }
  throw ParseError("unknown suite \"" + std::string(text) +
                   "\" (expected recurrence, egf, bijection, rowsum, expectation, "
                   "narayana-transport or reversal)");
}

int default_n_max(Suite suite) {
  switch (suite) {
    case Suite::egf:
      return 12;
    case Suite::bijection:
      return 6;
    case Suite::narayana_transport:
      return 7;
    default:
      return 20;
  }
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string SuiteReport::to_text() const {
  std::string out = "suite " + std::string(to_string(suite)) + "\n";
  int ok = 0;
  for (const auto& c : checks) {
    ok += c.passed;
    out += c.passed ? "PASS  " : "FAIL  ";
    out += c.identity;
    if (c.n_last >= c.n_first) {
      out += "  [n=" + std::to_string(c.n_first) + ".." + std::to_string(c.n_last) + "]";
    } else {
      out += "  [no rows in range]";
    }
    if (!c.passed) out += "\n      first counterexample: " + c.counterexample;
    out += '\n';
  }
  out += "result: " + std::string(passed() ? "PASS" : "FAIL") + " (" + std::to_string(ok) + "/" +
         std::to_string(checks.size()) + " checks)\n";
  return out;
}

SuiteReport run_suite(Suite suite, const VerifyOptions& options) {
  if (options.n_max > kRecurrenceRowLimit) {
    throw ResourceLimitError("--nmax " + std::to_string(options.n_max) + " exceeds the limit " +
                             std::to_string(kRecurrenceRowLimit));
  }
  if (options.n_max < 0) throw ValidationError("--nmax must be nonnegative");
  switch (suite) {
    case Suite::recurrence:
      return recurrence_suite(options);
    case Suite::egf:
      return egf_suite(options);
    case Suite::bijection:
      return bijection_suite(options);
    case Suite::rowsum:
      return rowsum_suite(options);
    case Suite::expectation:
      return expectation_suite(options);
    case Suite::narayana_transport:
      return narayana_suite(options);
    case Suite::reversal:
      return reversal_suite(options);
  }
  return {};
}

}  // namespace chordlab
