#include "zs/report.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <string>

namespace zs {

using nlohmann::json;

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "skipped";
}

Status parse_status(const std::string& text) {
  if (text == "pass") return Status::pass;
  if (text == "fail") return Status::fail;
  if (text == "skipped") return Status::skipped;
  throw ConfigError("unknown status '" + text + "'");
}

double round15(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

IdentityReport make_report(std::string id, const SumResult& lhs, const SumResult& rhs, double tolerance) {
  IdentityReport r;
  r.identity_id = std::move(id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tolerance = tolerance;
  r.abs_discrepancy = std::abs(lhs.value - rhs.value);
  const double scale = std::max(std::abs(lhs.value), std::abs(rhs.value));
  r.rel_discrepancy = scale > 0.0 ? r.abs_discrepancy / scale : 0.0;
  const bool ok = r.abs_discrepancy <= lhs.abs_error_estimate + rhs.abs_error_estimate + tolerance;
  r.status = ok ? Status::pass : Status::fail;
  if (!ok) r.reason = "discrepancy exceeds the combined error estimates plus tolerance";
  return r;
}

IdentityReport skipped_report(std::string id, double tolerance, const Error& why) {
  IdentityReport r;
  r.identity_id = std::move(id);
  r.tolerance = tolerance;
  r.status = Status::skipped;
  r.reason = std::string(why.kind()) + ": " + why.what();
  return r;
}

json to_json(const SumResult& r) {
  return {{"value", {round15(r.value.real()), round15(r.value.imag())}},
          {"err", round15(r.abs_error_estimate)},
          {"terms", r.terms_used},
          {"method", r.method.to_string()}};
}

SumResult sum_result_from_json(const json& j) {
  SumResult r;
  r.value = {j.at("value").at(0).get<double>(), j.at("value").at(1).get<double>()};
  r.abs_error_estimate = j.at("err").get<double>();
  r.terms_used = j.at("terms").get<std::int64_t>();
  r.method = Method::parse(j.at("method").get<std::string>());
  return r;
}

json to_json(const IdentityReport& r) {
  return {{"identity_id", r.identity_id},
          {"lhs", to_json(r.lhs)},
          {"rhs", to_json(r.rhs)},
          {"abs_discrepancy", round15(r.abs_discrepancy)},
          {"rel_discrepancy", round15(r.rel_discrepancy)},
          {"tolerance", round15(r.tolerance)},
          {"status", to_string(r.status)},
          {"reason", r.reason}};
}

IdentityReport report_from_json(const json& j) {
  IdentityReport r;
  r.identity_id = j.at("identity_id").get<std::string>();
  r.lhs = sum_result_from_json(j.at("lhs"));
  r.rhs = sum_result_from_json(j.at("rhs"));
  r.abs_discrepancy = j.at("abs_discrepancy").get<double>();
  r.rel_discrepancy = j.at("rel_discrepancy").get<double>();
  r.tolerance = j.at("tolerance").get<double>();
  r.status = parse_status(j.at("status").get<std::string>());
  r.reason = j.value("reason", "");
  return r;
}

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, k = 0;
  while (i < a.size() && k < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[k])) != 0;
    if (da && db) {
      std::size_t ei = i, ek = k;
      while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
      while (ek < b.size() && std::isdigit(static_cast<unsigned char>(b[ek]))) ++ek;
      const std::string na = a.substr(i, ei - i), nb = b.substr(k, ek - k);
      const auto strip = [](const std::string& s) {
        const auto p = s.find_first_not_of('0');
        return p == std::string::npos ? std::string() : s.substr(p);
      };
      const std::string sa = strip(na), sb = strip(nb);
      if (sa.size() != sb.size()) return sa.size() < sb.size();
      if (sa != sb) return sa < sb;
      if (na.size() != nb.size()) return na.size() < nb.size();
      i = ei;
      k = ek;
      continue;
    }
    if (a[i] != b[k]) return a[i] < b[k];
    ++i;
    ++k;
  }
  return a.size() - i < b.size() - k;
}

SuiteReport summarize(std::vector<IdentityReport> reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const IdentityReport& x, const IdentityReport& y) { return natural_less(x.identity_id, y.identity_id); });
  SuiteReport out;
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::pass: ++out.passed; break;
      case Status::fail: ++out.failed; break;
      case Status::skipped: ++out.skipped; break;
    }
  }
  out.reports = std::move(reports);
  return out;
}

json to_json(const SuiteReport& r) {
  json list = json::array();
  for (const auto& x : r.reports) list.push_back(to_json(x));
  return {{"summary", {{"total", r.reports.size()}, {"passed", r.passed}, {"failed", r.failed}, {"skipped", r.skipped}}},
          {"reports", list}};
}

SuiteReport suite_from_json(const json& j) {
  std::vector<IdentityReport> reports;
  for (const auto& x : j.at("reports")) reports.push_back(report_from_json(x));
  return summarize(std::move(reports));
}

}  // namespace zs
