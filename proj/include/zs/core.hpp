#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace zs {

using Complex = std::complex<double>;

/// Smallest margin above the line Re(s) = 1 accepted by the zeta-type evaluators.
inline constexpr double kDomainEpsilon = 1e-9;

/// Relative distance to a pole below which evaluation is refused.
inline constexpr double kPoleExclusion = 1e-9;

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// ---------------------------------------------------------------------------
// Errors. Every public evaluator reports failure through one of these; kind()
// is the machine-readable tag the CLI prints.

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

#define ZS_DEFINE_ERROR(Name)                                                  \
  class Name : public Error {                                                  \
  public:                                                                      \
    using Error::Error;                                                        \
    const char* kind() const noexcept override { return #Name; }               \
  }

ZS_DEFINE_ERROR(DomainError);
ZS_DEFINE_ERROR(ConvergenceError);
ZS_DEFINE_ERROR(PoleError);
ZS_DEFINE_ERROR(BoundaryError);
ZS_DEFINE_ERROR(RadiusError);
ZS_DEFINE_ERROR(RangeError);
ZS_DEFINE_ERROR(CapacityError);
ZS_DEFINE_ERROR(NotAPoleError);
ZS_DEFINE_ERROR(ConfigError);

#undef ZS_DEFINE_ERROR

// ---------------------------------------------------------------------------

struct EvalConfig {
  double target_abs_error = 1e-12;
  std::int64_t max_terms = 1'000'000;
  int euler_maclaurin_order = 8;

  /// Throws ConfigError when a field is outside its documented range.
  void validate() const;

  /// Same config with the target tightened by `factor`, clamped to the
  /// double-precision floor. Used for nested evaluations.
  EvalConfig tightened(double factor) const;
};

inline constexpr double kMinTargetError = 1e-14;
inline constexpr std::int64_t kMinMaxTerms = 16;

enum class MethodKind { direct, euler_maclaurin_tail, cesaro, abel, closed_form };

struct Method {
  MethodKind kind = MethodKind::direct;
  int order = 0;  // Cesàro order; unused otherwise

  static Method direct() { return {MethodKind::direct, 0}; }
  static Method euler_maclaurin_tail() { return {MethodKind::euler_maclaurin_tail, 0}; }
  static Method cesaro(int k) { return {MethodKind::cesaro, k}; }
  static Method abel() { return {MethodKind::abel, 0}; }
  static Method closed_form() { return {MethodKind::closed_form, 0}; }

  /// Summability-method estimates are oscillation based, not rigorous.
  bool heuristic_error() const { return kind == MethodKind::cesaro || kind == MethodKind::abel; }

  std::string to_string() const;
  /// Inverse of to_string(); throws ConfigError on unknown tags.
  static Method parse(const std::string& text);

  friend bool operator==(const Method&, const Method&) = default;
};

struct SumResult {
  Complex value{};
  double abs_error_estimate = 0.0;
  std::int64_t terms_used = 0;
  Method method{};

  friend bool operator==(const SumResult&, const SumResult&) = default;
};

}  // namespace zs
