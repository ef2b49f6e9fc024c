#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace chordlab {

enum class Suite { recurrence, egf, bijection, rowsum, expectation, narayana_transport, reversal };

std::string_view to_string(Suite suite);
Suite parse_suite(std::string_view text);
// Row bound used when the caller does not give one.
int default_n_max(Suite suite);

struct VerifyOptions {
  int n_max = 8;
  int threads = 0;
  // Enumeration-backed checks stop at min(n_max, enumeration_cap).
  int enumeration_cap = 8;
};

struct CheckResult {
  std::string identity;
  int n_first = 0;
  int n_last = -1;  // below n_first when the range is empty
  bool passed = true;
  std::string counterexample;  // first failure, in increasing n
};

struct SuiteReport {
  Suite suite = Suite::rowsum;
  std::vector<CheckResult> checks;

  bool passed() const;
  // One line per check, then a summary line. Contains nothing that depends
  // on timing or thread count.
  std::string to_text() const;
};

/// Runs every identity of a suite. n_max above the recurrence row limit
/// throws ResourceLimitError.
SuiteReport run_suite(Suite suite, const VerifyOptions& options);

}  // namespace chordlab
