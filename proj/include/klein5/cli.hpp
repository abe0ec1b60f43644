#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "klein5/rational.hpp"

namespace klein5::cli {

using Json = nlohmann::ordered_json;

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string description;
  CheckStatus status = CheckStatus::skipped;
  std::optional<std::string> witness;
};

struct VerifyOptions {
  int samples = 20;          // finite-field trials and random family members
  std::uint64_t seed = 7;
  long height = 1000;        // hyperelliptic search bound
  bool literal = false;      // printed resolvent convention and inverse transform
};

struct VerificationReport {
  std::string suite;
  VerifyOptions options;
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;
  std::optional<double> wall_time_ms;

  /// Every non-skipped check passes.
  bool pass() const;
};

Json to_json(const VerificationReport& r);

struct QuinticRecord {
  Rational A;
  Rational B;
  Rational C;
  std::optional<std::string> label;
};

/// Object with "B", "C" and optional "A", "label". Coefficients are "p/q" strings or JSON
/// integers. Throws std::invalid_argument on anything else.
QuinticRecord parse_record(const Json& j);

/// Invariants, j candidates, t and the local hypothesis. Failures of individual fields are
/// reported under "errors" rather than thrown.
Json analyze_record(const QuinticRecord& q);

/// Records analyzed on a bounded worker pool; output keeps input order.
std::vector<Json> analyze_batch(const std::vector<QuinticRecord>& records, unsigned workers = 0);

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite.
VerificationReport verify_suite(const std::string& suite, const VerifyOptions& opts);

VerificationReport table_report();
/// Side-by-side rows of the table reproduction.
Json table_rows_json();

/// The command-line entry point. Exit codes: 0 pass, 1 verification failure, 2 usage or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace klein5::cli
