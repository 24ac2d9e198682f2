#pragma once

#include <string>
#include <vector>

#include "cliffrad/json_io.hpp"
#include "cliffrad/quadrature.hpp"

namespace cliffrad {

/// Invalid user-supplied parameters (exit status 2 in the command-line tool).
class UsageError : public Error {
public:
  using Error::Error;
};

struct VerifyConfig {
  int m = 3;
  int kmax = 3;
  QuadratureSpec spec;
};

/// Throws UsageError unless 3 <= m <= 6, 0 <= kmax <= 6 and samples >= 2.
void validate(const VerifyConfig& config);

enum class CheckStatus { pass, fail, discrepancy };

std::string_view to_string(CheckStatus s);

struct CheckRecord {
  std::string id;
  std::string anchor;
  CheckStatus status = CheckStatus::pass;
  json measured;
  json expected;
  double tolerance = 0.0;
  /// "published" for identities stated in the source, "oracle" for values
  /// fixed by an independent computation, "elementary" for direct consequences.
  std::string provenance;
  /// Range covered, e.g. "k<=3".
  std::string scope;
  /// Side-by-side values for discrepancy entries.
  json oracle_value;
  json printed_value;
};

struct VerifyReport {
  std::string suite = "cliffrad-verify";
  VerifyConfig config;
  std::vector<CheckRecord> checks;

  bool failed() const;
  int count(CheckStatus s) const;
  json record_json(const CheckRecord& r) const;
  json summary_json() const;
  /// One JSON object per line, checks in id order, summary last.
  std::string to_jsonl() const;
};

VerifyReport run_verify(const VerifyConfig& config);

}  // namespace cliffrad
