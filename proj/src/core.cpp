#include "zs/core.hpp"

#include <algorithm>
#include <cmath>

namespace zs {

void EvalConfig::validate() const {
  if (!(target_abs_error >= kMinTargetError) || !std::isfinite(target_abs_error))
    throw ConfigError("target_abs_error must be finite and >= 1e-14");
  if (max_terms < kMinMaxTerms) throw ConfigError("max_terms must be >= 16");
  if (euler_maclaurin_order < 2 || euler_maclaurin_order % 2 != 0)
    throw ConfigError("euler_maclaurin_order must be an even integer >= 2");
}

EvalConfig EvalConfig::tightened(double factor) const {
  EvalConfig out = *this;
  out.target_abs_error = std::max(kMinTargetError, target_abs_error * factor);
  return out;
}

std::string Method::to_string() const {
  switch (kind) {
    case MethodKind::direct: return "direct";
    case MethodKind::euler_maclaurin_tail: return "euler_maclaurin_tail";
    case MethodKind::cesaro: return "cesaro(" + std::to_string(order) + ")";
    case MethodKind::abel: return "abel";
    case MethodKind::closed_form: return "closed_form";
  }
  return "direct";
}

Method Method::parse(const std::string& text) {
  if (text == "direct") return direct();
  if (text == "euler_maclaurin_tail") return euler_maclaurin_tail();
  if (text == "abel") return abel();
  if (text == "closed_form") return closed_form();
  // accepted spellings: cesaro(k) and cesaro:k
  if (text.rfind("cesaro", 0) == 0 && text.size() > 7) {
    std::string digits = text.substr(7);
    if (!digits.empty() && digits.back() == ')') digits.pop_back();
    try {
      std::size_t used = 0;
      int k = std::stoi(digits, &used);
      if (used == digits.size() && (text[6] == '(' || text[6] == ':')) return cesaro(k);
    } catch (const std::exception&) {
    }
  }
  throw ConfigError("unknown summation method '" + text + "'");
}

}  // namespace zs
