#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperjacobi/real.hpp"

namespace hyperjacobi {

// One checked instance. Exact checks fill lhs/rhs with rationals; numeric
// checks fill lhs/rhs with floats and bound with the evaluators' allowance.
struct CheckRecord {
  std::string check_id;
  std::string paper_anchor;
  std::string form;  // identity form, or the compared pair for cross checks
  std::size_t trial = 0;
  std::vector<std::pair<std::string, std::string>> params;
  std::optional<unsigned> n;
  std::string lhs, rhs;
  std::optional<std::string> bound;
  bool pass = false;
  bool suspect = false;
  std::string validated_form;  // suspect checks only
};

// Per suspect entry: which reading held and how often each form passed.
struct SuspectSummary {
  std::string check_id;
  std::string validated_form;
  std::vector<std::pair<std::string, std::size_t>> form_pass_counts;
  std::size_t trials = 0;
};

struct VerifyOptions {
  std::string suite = "all";  // pochhammer | jacobi | expansions | integrals | all
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  std::optional<Real> tol;  // overrides the per-check tolerances of numeric checks
  unsigned threads = 0;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckRecord> records;  // sorted by check_id, then trial
  std::vector<SuspectSummary> suspects;
  std::size_t counted = 0;  // non-suspect records
  std::size_t failed = 0;   // non-suspect failures
  bool ok() const { return failed == 0; }
};

std::vector<std::string> verify_suites();
// std::invalid_argument for an unknown suite; evaluator errors propagate.
VerifyReport run_verify(const VerifyOptions& opts);

// "PASS k/k" or "FAIL j/k".
std::string summary_line(const VerifyReport& r);
// format: json | csv | text. The timestamp appears once, in the header.
std::string render_report(const VerifyReport& r, const std::string& format, const std::string& timestamp);

}  // namespace hyperjacobi
