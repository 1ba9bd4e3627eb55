#pragma once

// Summability methods for boundary points of the disc of convergence.
//
// cesaro_sum forms binomial (C,k) means of the partial sums and samples them
// at term counts 16·2^j. Those means expand in powers of 1/n for the streams
// this library produces (a periodic part plus a geometrically convergent
// part), so a Richardson table over the samples removes the slow 1/n decay.
// abel_limit does the same over radii r_j = 1 - 2^-j. Both report the gap
// between the last two diagonal extrapolants as the error: an oscillation
// estimate, not a bound.

#include <cstdint>
#include <functional>
#include <string>

#include "zs/core.hpp"

namespace zs {

struct AbelSchedule {
  int first_level = 3;  // r = 1 - 2^-first_level
  int last_level = 22;
};

struct SummationMethod {
  enum class Kind { direct, cesaro, abel };

  Kind kind = Kind::direct;
  int cesaro_order = 0;
  AbelSchedule abel_schedule{};

  static SummationMethod direct() { return {}; }
  static SummationMethod cesaro(int k) { return {Kind::cesaro, k, {}}; }
  static SummationMethod abel(AbelSchedule schedule = {}) { return {Kind::abel, 0, schedule}; }

  /// Throws ConfigError for Cesàro orders outside [1, 4] or a bad schedule.
  void validate() const;
  Method tag() const;

  /// "direct", "abel", "cesaro:k" or "cesaro(k)".
  static SummationMethod parse(const std::string& text);
};

inline constexpr int kMaxCesaroOrder = 4;

/// term(k), k ≥ 0, must be a pure function. term_error, when set, bounds the
/// absolute error of term(k) and is propagated into the result.
struct PartialSumStream {
  std::function<Complex(std::int64_t)> term;
  std::function<double(std::int64_t)> term_error;
};

/// Cesàro (C,k) sum of the stream. Throws ConvergenceError when the
/// extrapolated means do not settle within cfg.max_terms terms.
SumResult cesaro_sum(const PartialSumStream& stream, int order, const EvalConfig& cfg = {});

/// Radial Abel limit lim_{r→1⁻} F(r) of a family evaluated at radius r < 1.
/// Throws ConvergenceError when the extrapolants do not settle.
SumResult abel_limit(const std::function<SumResult(double)>& at_radius, const EvalConfig& cfg = {},
                     const AbelSchedule& schedule = {});

}  // namespace zs
