#pragma once

// Identity reports and their JSON form. Reals are written with 15
// significant digits; a report read back prints identically.

#include <string>
#include <vector>

#include <json.hpp>

#include "zs/core.hpp"

namespace zs {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);
Status parse_status(const std::string& text);

struct IdentityReport {
  std::string identity_id;
  SumResult lhs;
  SumResult rhs;
  double abs_discrepancy = 0.0;
  double rel_discrepancy = 0.0;
  double tolerance = 0.0;
  Status status = Status::skipped;
  std::string reason;  // error kind and message when skipped

  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

/// Pass iff |lhs - rhs| ≤ lhs.err + rhs.err + tolerance.
IdentityReport make_report(std::string id, const SumResult& lhs, const SumResult& rhs, double tolerance);
IdentityReport skipped_report(std::string id, double tolerance, const Error& why);

/// Rounds to 15 significant digits.
double round15(double x);

nlohmann::json to_json(const SumResult& r);
SumResult sum_result_from_json(const nlohmann::json& j);
nlohmann::json to_json(const IdentityReport& r);
IdentityReport report_from_json(const nlohmann::json& j);

struct SuiteReport {
  std::vector<IdentityReport> reports;  // sorted by identity_id, natural order
  int passed = 0;
  int failed = 0;
  int skipped = 0;

  bool all_passed() const { return failed == 0 && skipped == 0 && !reports.empty(); }
};

SuiteReport summarize(std::vector<IdentityReport> reports);
nlohmann::json to_json(const SuiteReport& r);
SuiteReport suite_from_json(const nlohmann::json& j);

/// "7.2" < "7.10" < "prop-2" < "prop-10".
bool natural_less(const std::string& a, const std::string& b);

}  // namespace zs
