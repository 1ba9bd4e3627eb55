#include "zs/summation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "zs/kernels.hpp"

namespace zs {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxDepth = 6;
constexpr std::int64_t kFirstCheckpoint = 16;

// Richardson table for samples taken at step h, h/2, h/4, ... of a quantity
// with an expansion in powers of h.
class DyadicExtrapolator {
public:
  void push(Complex sample) {
    std::vector<Complex> row{sample};
    const std::size_t depth = std::min<std::size_t>(rows_.size(), kMaxDepth);
    for (std::size_t i = 1; i <= depth; ++i) {
      const double factor = std::ldexp(1.0, static_cast<int>(i)) - 1.0;
      row.push_back(row[i - 1] + (row[i - 1] - rows_.back()[i - 1]) / factor);
    }
    rows_.push_back(std::move(row));
  }

  std::size_t size() const { return rows_.size(); }
  Complex best() const { return rows_.back().back(); }

  /// Gap between the last two diagonal extrapolants.
  double spread() const {
    if (rows_.size() < 2) return std::numeric_limits<double>::infinity();
    const auto& last = rows_.back();
    const auto& prev = rows_[rows_.size() - 2];
    double gap = std::abs(last.back() - prev.back());
    if (last.size() >= 2) gap = std::max(gap, std::abs(last.back() - last[last.size() - 2]));
    return gap;
  }

  /// Bound on the sum of |weights| the current best value puts on the samples.
  double amplification() const {
    double a = 1.0;
    const std::size_t depth = rows_.empty() ? 0 : rows_.back().size() - 1;
    for (std::size_t i = 1; i <= depth; ++i) {
      const double p = std::ldexp(1.0, static_cast<int>(i));
      a *= (p + 1.0) / (p - 1.0);
    }
    return a;
  }

private:
  std::vector<std::vector<Complex>> rows_;
};

double binomial(double n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out *= (n - k + i) / i;
  return out;
}

}  // namespace

void SummationMethod::validate() const {
  if (kind == Kind::cesaro && (cesaro_order < 1 || cesaro_order > kMaxCesaroOrder))
    throw ConfigError("Cesàro order must lie in [1, 4]");
  if (kind == Kind::abel &&
      (abel_schedule.first_level < 1 || abel_schedule.last_level < abel_schedule.first_level + 2 ||
       abel_schedule.last_level > 52))
    throw ConfigError("Abel schedule must satisfy 1 <= first < first + 2 <= last <= 52");
}

Method SummationMethod::tag() const {
  switch (kind) {
    case Kind::direct: return Method::direct();
    case Kind::cesaro: return Method::cesaro(cesaro_order);
    case Kind::abel: return Method::abel();
  }
  return Method::direct();
}

SummationMethod SummationMethod::parse(const std::string& text) {
  if (text == "direct") return direct();
  if (text == "abel") return abel();
  const Method m = Method::parse(text);
  if (m.kind != MethodKind::cesaro) throw ConfigError("unknown summation method '" + text + "'");
  SummationMethod out = cesaro(m.order);
  out.validate();
  return out;
}

SumResult cesaro_sum(const PartialSumStream& stream, int order, const EvalConfig& cfg) {
  cfg.validate();
  if (order < 1 || order > kMaxCesaroOrder) throw ConfigError("Cesàro order must lie in [1, 4]");
  if (!stream.term) throw ConfigError("cesaro_sum: stream has no term generator");

  // levels[0] = partial sum s_n, levels[i] = Σ_{j≤n} levels[i-1]_j
  std::array<kernels::CompensatedSum<Complex>, kMaxCesaroOrder + 1> levels{};
  // Means at counts 16·2^j and 16·2^j - 1. A stream that is not (C,k)
  // summable can still have means that settle along even counts alone.
  DyadicExtrapolator table, odd_table;
  double propagated = 0.0;
  double largest = 0.0;
  std::int64_t next_checkpoint = kFirstCheckpoint;
  Complex previous{};

  for (std::int64_t n = 0; n < cfg.max_terms; ++n) {
    const Complex t = stream.term(n);
    if (!is_finite(t)) throw ConvergenceError("cesaro_sum: stream produced a non-finite term");
    if (stream.term_error) propagated += stream.term_error(n);
    levels[0].add(t);
    Complex carry = levels[0].value();
    for (int i = 1; i <= order; ++i) {
      levels[static_cast<std::size_t>(i)].add(carry);
      carry = levels[static_cast<std::size_t>(i)].value();
    }

    const std::int64_t count = n + 1;
    const Complex before = previous;
    previous = carry;
    if (count != next_checkpoint) continue;
    next_checkpoint *= 2;

    // (C,k) mean over count terms: S^{(k)} / C(count-1+k, k)
    const Complex mean = carry / binomial(static_cast<double>(count - 1 + order), order);
    const Complex odd_mean = before / binomial(static_cast<double>(count - 2 + order), order);
    largest = std::max({largest, std::abs(mean), std::abs(odd_mean)});
    table.push(mean);
    odd_table.push(odd_mean);
    if (table.size() < 4) continue;
    const double spread = std::max({table.spread(), odd_table.spread(), std::abs(table.best() - odd_table.best())});
    if (spread <= cfg.target_abs_error) {
      const double err = spread + table.amplification() * (propagated + 8.0 * kEps * largest);
      return {table.best(), err, count, Method::cesaro(order)};
    }
  }
  throw ConvergenceError("Cesàro (C," + std::to_string(order) + ") means did not settle within " +
                         std::to_string(cfg.max_terms) + " terms");
}

SumResult abel_limit(const std::function<SumResult(double)>& at_radius, const EvalConfig& cfg,
                     const AbelSchedule& schedule) {
  cfg.validate();
  SummationMethod::abel(schedule).validate();
  DyadicExtrapolator table;
  double worst_inner = 0.0;
  std::int64_t terms = 0;

  for (int level = schedule.first_level; level <= schedule.last_level; ++level) {
    const double r = 1.0 - std::ldexp(1.0, -level);
    SumResult inner;
    try {
      inner = at_radius(r);
    } catch (const ConvergenceError& e) {
      throw ConvergenceError(std::string("abel_limit: evaluation at r = 1 - 2^-") + std::to_string(level) +
                             " failed before the limit settled: " + e.what());
    }
    if (!is_finite(inner.value)) throw ConvergenceError("abel_limit: non-finite value at radius " + std::to_string(r));
    worst_inner = std::max(worst_inner, inner.abs_error_estimate);
    terms += inner.terms_used;
    table.push(inner.value);
    if (table.size() < 3) continue;
    const double spread = table.spread();
    if (spread <= cfg.target_abs_error)
      return {table.best(), spread + table.amplification() * worst_inner, terms, Method::abel()};
  }
  throw ConvergenceError("abel_limit: extrapolants did not settle by r = 1 - 2^-" +
                         std::to_string(schedule.last_level));
}

}  // namespace zs
