#include "zs/series.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "zs/kernels.hpp"
#include "zs/specialfns.hpp"

namespace zs {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::int64_t kMinDirectTerms = 32;
// |z| times the largest omitted base stays below this after the direct part
constexpr double kTailRatio = 1.0 / 16.0;
constexpr double kBoundaryTol = 1e-12;

double binom(int n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out *= static_cast<double>(n - k + i) / i;
  return out;
}

// log Σ_{j≥J} C(j+m,m) w^j
double log_binomial_geometric_tail(int J, int m, double w) {
  if (w <= 0.0) return J == 0 ? 0.0 : -kInf;
  const double ratio = w * (J + 1.0 + m) / (J + 1.0);
  if (ratio >= 1.0) return kInf;
  return std::log(binom(J + m, m)) + J * std::log(w) - std::log1p(-ratio);
}

double safe_exp(double x) { return x == -kInf ? 0.0 : std::exp(x); }
double safe_log(double x) { return x <= 0.0 ? -kInf : std::log(x); }

EvalConfig with_target(const EvalConfig& cfg, double target) {
  EvalConfig out = cfg;
  out.target_abs_error = std::clamp(target, kMinTargetError, cfg.target_abs_error);
  return out;
}

void require_finite(Complex z, const char* who) {
  if (!is_finite(z)) throw DomainError(std::string(who) + ": z must be finite");
}

void require_derivative_order(int m) {
  if (m < 0 || m > kMaxSeriesDerivative) throw DomainError("derivative order must lie in [0, 6]");
}

class Accumulator {
public:
  void add(Complex c, const SumResult& r) {
    const Complex v = c * r.value;
    sum_.add(v);
    err_ += std::abs(c) * r.abs_error_estimate;
    mag_ += std::abs(v);
  }
  void add_direct(const kernels::RangeSum<Complex>& r, double rounding_factor) {
    sum_.add(r.value);
    err_ += rounding_factor * kEps * r.abs_sum;
    terms_ += r.count;
  }
  void add_error(double e) { err_ += e; }
  void count_term() { ++terms_; }
  std::int64_t terms() const { return terms_; }

  SumResult result(Method method, const char* who) const {
    const Complex v = sum_.value();
    const double err = err_ + 8.0 * kEps * mag_;
    if (!is_finite(v) || !std::isfinite(err))
      throw ConvergenceError(std::string(who) + ": result not representable in double precision");
    return {v, err, terms_, method};
  }

private:
  kernels::CompensatedSum<Complex> sum_;
  double err_ = 0.0;
  double mag_ = 0.0;
  std::int64_t terms_ = 0;
};

// Σ_{j≥0} coef(j) · eval(j, target_j) until remainder_after(j) ≤ goal. The
// per-term targets sum to less than goal.
template <class Coef, class Eval, class Rest>
void expand(Coef&& coef, Eval&& eval, Rest&& remainder_after, double goal, const EvalConfig& cfg, Accumulator& acc,
            const char* who) {
  for (int j = 0;; ++j) {
    const Complex c = coef(j);
    if (c != Complex(0.0)) {
      const double share = goal / (std::abs(c) * (j + 2.0) * (j + 2.0));
      acc.add(c, eval(j, share));
    }
    acc.count_term();
    const double rest = remainder_after(j);
    if (rest <= goal) {
      acc.add_error(rest);
      return;
    }
    if (j >= cfg.max_terms)
      throw ConvergenceError(std::string(who) + ": series did not reach the target within max_terms terms");
  }
}

std::int64_t choose_cutoff(const std::function<double(std::int64_t)>& first_omitted_ratio, const EvalConfig& cfg,
                           const char* who) {
  for (std::int64_t N = kMinDirectTerms; N <= cfg.max_terms; N *= 2)
    if (first_omitted_ratio(N) <= kTailRatio) return N;
  throw ConvergenceError(std::string(who) + ": |z| too large for a direct part within max_terms");
}

Complex n_pow(std::int64_t n, Complex s) { return std::exp(s * std::log(static_cast<double>(n))); }

void check_dirichlet_poles(const std::function<Complex(std::int64_t)>& coeff, Complex s, Complex w) {
  if (w == Complex(0.0)) return;
  const double n0 = std::pow(std::abs(w), 1.0 / s.real());
  const auto lo = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(n0)) - 1);
  const auto hi = static_cast<std::int64_t>(std::ceil(n0)) + 1;
  for (std::int64_t n = lo; n <= hi; ++n) {
    const Complex p = n_pow(n, s);
    if (coeff(n) != Complex(0.0) && std::abs(p + w) <= kPoleExclusion * std::abs(p))
      throw PoleError("z lies within the exclusion radius of the pole at -n^s, n = " + std::to_string(n));
  }
}

enum class Position { interior, boundary };

// |z| against a radius: RadiusError outside, boundary within kBoundaryTol.
Position classify_radius(double az, double radius, const char* who) {
  if (std::isinf(radius)) return Position::interior;
  if (az > radius * (1.0 + kBoundaryTol))
    throw RadiusError(std::string(who) + ": |z| = " + std::to_string(az) + " exceeds the radius " + std::to_string(radius));
  return std::fabs(az - radius) <= kBoundaryTol * radius ? Position::boundary : Position::interior;
}

using RadiusFamily = std::function<SumResult(Complex, const EvalConfig&)>;

// Dispatch a right-hand side on its summation method. `interior` evaluates at
// a point strictly inside the disc; `term`/`term_error` feed Cesàro.
SumResult dispatch_rhs(const SummationMethod& method, Position pos, Complex z, const RadiusFamily& interior,
                       const std::function<Complex(std::int64_t)>& term,
                       const std::function<double(std::int64_t)>& term_error, const EvalConfig& cfg, const char* who) {
  switch (method.kind) {
    case SummationMethod::Kind::direct:
      if (pos == Position::boundary)
        throw BoundaryError(std::string(who) + ": |z| on the circle of convergence needs method cesaro:k or abel");
      return interior(z, cfg);
    case SummationMethod::Kind::cesaro:
      return cesaro_sum({term, term_error}, method.cesaro_order, cfg);
    case SummationMethod::Kind::abel: {
      const EvalConfig inner = cfg.tightened(0.1);
      return abel_limit([&](double r) { return interior(z * r, inner); }, cfg, method.abel_schedule);
    }
  }
  throw ConfigError("unknown summation method");
}

// ---------------------------------------------------------------------------
// Σ aₙ/(nˢ+z)^{m+1}

SumResult dirichlet_rhs_interior(const DirichletSpec& spec, Complex s, Complex z, int m, const EvalConfig& cfg) {
  const double sigma = s.real();
  const double az = std::abs(z);
  Accumulator acc;
  expand([&](int j) { return (j % 2 == 0 ? 1.0 : -1.0) * binom(j + m, m) * std::pow(z, j); },
         [&](int j, double share) { return spec.value(static_cast<double>(j + m + 1) * s, with_target(cfg, share)); },
         [&](int j) {
           return spec.abs_value_bound((j + m + 2) * sigma) * safe_exp(log_binomial_geometric_tail(j + 1, m, az));
         },
         0.5 * cfg.target_abs_error, cfg, acc, "rhs_zeta_series");
  return acc.result(Method::direct(), "rhs_zeta_series");
}

// ---------------------------------------------------------------------------
// Composition engine shared by the three power-series identities.

struct ComposeData {
  const char* who;
  std::function<Complex(std::int64_t)> weight;
  std::function<Complex(std::int64_t)> base;
  std::function<SumResult(std::int64_t, int, double, const EvalConfig&)> tail;  // Σ_{n>N} w·base^k
  std::function<double(std::int64_t, int)> abs_tail;
  std::function<SumResult(int, const EvalConfig&)> coefficient;  // Σ_n w·base^k
  std::function<double(int)> abs_coefficient;                    // nonincreasing in k
};

SumResult compose_lhs_impl(const PowerSeriesSpec& f, const ComposeData& d, Complex z, const EvalConfig& cfg) {
  const double az = std::abs(z);
  if (az * std::abs(d.base(1)) > f.radius * (1.0 + kBoundaryTol))
    throw RadiusError(std::string(d.who) + ": f is evaluated outside its radius of convergence");
  const double limit = std::min(1.0, f.radius);
  const std::int64_t N =
      choose_cutoff([&](std::int64_t n) { return az * std::abs(d.base(n + 1)) / limit; }, cfg, d.who);
  const double x = std::abs(d.base(N + 1));

  Accumulator acc;
  acc.add_direct(kernels::sum_range<Complex>(1, N, [&](std::int64_t n) { return d.weight(n) * f.eval(z * d.base(n)); }),
                 16.0);
  expand([&](int j) { return j == 0 ? Complex(0.0) : f.coeff(j) * std::pow(z, j); },
         [&](int j, double share) { return d.tail(N, j, share, cfg); },
         [&](int j) {
           const int K = j + 1;
           const double lt = safe_log(d.abs_tail(N, K));
           const double lf = safe_log(f.abs_tail(K, az * x));
           if (lt == -kInf || lf == -kInf) return 0.0;
           return std::exp(lt - K * std::log(x) + lf);
         },
         0.25 * cfg.target_abs_error, cfg, acc, d.who);
  return acc.result(Method::euler_maclaurin_tail(), d.who);
}

SumResult compose_rhs_impl(const PowerSeriesSpec& f, const ComposeData& d, Complex z, const SummationMethod& method,
                           const EvalConfig& cfg) {
  cfg.validate();
  method.validate();
  const Position pos = classify_radius(std::abs(z), f.radius, d.who);
  auto coef = [&](int k) { return k == 0 ? Complex(0.0) : f.coeff(k) * std::pow(z, k); };
  RadiusFamily interior = [&](Complex w, const EvalConfig& c) {
    const double aw = std::abs(w);
    Accumulator acc;
    expand([&](int k) { return k == 0 ? Complex(0.0) : f.coeff(k) * std::pow(w, k); },
           [&](int k, double share) { return d.coefficient(k, with_target(c, share)); },
           [&](int k) { return d.abs_coefficient(k + 1) * f.abs_tail(k + 1, aw); }, 0.5 * c.target_abs_error, c, acc,
           d.who);
    return acc.result(Method::direct(), d.who);
  };
  auto term = [&](std::int64_t k) {
    const Complex c = coef(static_cast<int>(k));
    return c == Complex(0.0) ? c : c * d.coefficient(static_cast<int>(k), cfg).value;
  };
  auto term_error = [&](std::int64_t k) {
    const Complex c = coef(static_cast<int>(k));
    return c == Complex(0.0) ? 0.0 : std::abs(c) * d.coefficient(static_cast<int>(k), cfg).abs_error_estimate;
  };
  return dispatch_rhs(method, pos, z, interior, term, term_error, cfg, d.who);
}

ComposeData dirichlet_compose_data(const DirichletSpec& g, Complex s, Complex s_prime, const char* who) {
  ComposeData d;
  d.who = who;
  d.weight = [g, s_prime](std::int64_t n) { return g.coeff(n) * n_pow(n, -s_prime); };
  d.base = [s](std::int64_t n) { return n_pow(n, -s); };
  d.tail = [g, s, s_prime](std::int64_t N, int k, double target, const EvalConfig& cfg) {
    return g.tail(N, static_cast<double>(k) * s + s_prime, target, cfg);
  };
  d.abs_tail = [g, s, s_prime](std::int64_t N, int k) { return g.abs_tail(N, k * s.real() + s_prime.real()); };
  d.coefficient = [g, s, s_prime](int k, const EvalConfig& cfg) {
    return g.value(static_cast<double>(k) * s + s_prime, cfg);
  };
  d.abs_coefficient = [g, s, s_prime](int k) { return g.abs_value_bound(k * s.real() + s_prime.real()); };
  return d;
}

void require_compose_domain(const PowerSeriesSpec& f, Complex s, const char* who) {
  if (!is_finite(s)) throw DomainError(std::string(who) + ": s must be finite");
  const bool relaxed = f.coeff(1) == Complex(0.0);
  if (s.real() > 1.0 + kDomainEpsilon) return;
  if (relaxed && s.real() > 0.5 + kDomainEpsilon) return;
  throw DomainError(std::string(who) + ": requires Re(s) > 1 (or Re(s) > 1/2 when a_1 = 0)");
}

void require_dirichlet_compose_domain(const DirichletSpec& g, Complex s, Complex s_prime, const char* who) {
  if (!is_finite(s) || !is_finite(s_prime)) throw DomainError(std::string(who) + ": s and s' must be finite");
  if (!(s.real() > 1.0 + kDomainEpsilon))
    throw DomainError(std::string(who) + ": requires Re(s) > 1; the boundary Re(s) = 1 is not evaluated");
  g.require_domain(s + s_prime);
}

ComposeData general_compose_data(const GeneralDirichletSpec& gd, Complex s) {
  ComposeData d;
  d.who = "general_dirichlet_compose";
  d.weight = [](std::int64_t) { return Complex(1.0); };
  d.base = [gd, s](std::int64_t n) { return std::exp(-gd.lambda(n) * s); };
  d.tail = [gd, s](std::int64_t N, int k, double target, const EvalConfig& cfg) {
    return gd.tail(N, static_cast<double>(k) * s, target, cfg);
  };
  d.abs_tail = [gd, s](std::int64_t N, int k) { return gd.abs_tail(N, k * s.real()); };
  d.coefficient = [gd, s](int k, const EvalConfig& cfg) { return gd.value(static_cast<double>(k) * s, cfg); };
  d.abs_coefficient = [gd, s](int k) {
    return std::exp(-gd.lambda(1) * k * s.real()) + gd.abs_tail(1, k * s.real());
  };
  return d;
}

// ---------------------------------------------------------------------------
// Multi-index enumeration for the product identity.

struct ActiveFactor {
  Complex beta;
  Complex alpha;
};

struct FactorSetup {
  std::vector<ActiveFactor> active;
  Complex base_exponent = 0.0;  // Σ βᵢ over all factors
  double alpha_max = 0.0;
  double beta_min = kInf;       // min Re βᵢ over active factors
};

FactorSetup prepare_factors(const std::vector<Factor>& factors, const DirichletSpec& spec) {
  if (factors.empty()) throw DomainError("multi_factor_series: need at least one factor");
  FactorSetup out;
  for (const auto& f : factors) {
    if (!is_finite(f.beta) || !is_finite(f.alpha)) throw DomainError("multi_factor_series: factors must be finite");
    if (!(f.beta.real() > 1.0 + kDomainEpsilon)) throw DomainError("multi_factor_series: requires Re(beta_i) > 1");
    out.base_exponent += f.beta;
    if (f.alpha == Complex(0.0)) continue;
    out.active.push_back({f.beta, f.alpha});
    out.alpha_max = std::max(out.alpha_max, std::abs(f.alpha));
    out.beta_min = std::min(out.beta_min, f.beta.real());
  }
  spec.require_domain(out.base_exponent);
  return out;
}

// Calls visit(exponent, coefficient) for every multi-index of total degree d,
// with coefficient Π (-αᵢ z)^{mᵢ} and exponent Σ (mᵢ+1) βᵢ.
template <class Visit>
void for_each_multi_index(const FactorSetup& fs, Complex z, int d, Visit&& visit) {
  const std::size_t r = fs.active.size();
  if (r == 0) {
    if (d == 0) visit(fs.base_exponent, Complex(1.0));
    return;
  }
  std::vector<int> idx(r, 0);
  std::function<void(std::size_t, int, Complex, Complex)> rec = [&](std::size_t i, int left, Complex expo, Complex coef) {
    const auto& f = fs.active[i];
    if (i + 1 == r) {
      visit(expo + static_cast<double>(left) * f.beta, coef * std::pow(-f.alpha * z, left));
      return;
    }
    for (int mi = 0; mi <= left; ++mi)
      rec(i + 1, left - mi, expo + static_cast<double>(mi) * f.beta, coef * std::pow(-f.alpha * z, mi));
  };
  rec(0, d, fs.base_exponent, Complex(1.0));
}

int active_count_minus_one(const FactorSetup& fs) { return std::max<int>(0, static_cast<int>(fs.active.size()) - 1); }

}  // namespace

// ---------------------------------------------------------------------------

SumResult lhs_derivative(const DirichletSpec& spec, Complex s, Complex z, int m, const EvalConfig& cfg) {
  cfg.validate();
  require_derivative_order(m);
  spec.require_domain(s);
  require_finite(z, "lhs_partial_fraction");
  check_dirichlet_poles(spec.coeff, s, z);

  const double sigma = s.real();
  const double az = std::abs(z);
  const std::int64_t N = choose_cutoff(
      [&](std::int64_t n) { return az * std::pow(static_cast<double>(n + 1), -sigma); }, cfg, "lhs_partial_fraction");
  const double log_base = sigma * std::log(static_cast<double>(N + 1));
  const double w = az * std::exp(-log_base);

  Accumulator acc;
  acc.add_direct(kernels::sum_range<Complex>(1, N,
                                             [&](std::int64_t n) {
                                               const Complex a = spec.coeff(n);
                                               if (a == Complex(0.0)) return a;
                                               const Complex d = n_pow(n, s) + z;
                                               Complex p = d;
                                               for (int i = 0; i < m; ++i) p *= d;
                                               return a / p;
                                             }),
                 8.0 * (m + 2));
  expand([&](int j) { return (j % 2 == 0 ? 1.0 : -1.0) * binom(j + m, m) * std::pow(z, j); },
         [&](int j, double share) { return spec.tail(N, static_cast<double>(j + m + 1) * s, share, cfg); },
         [&](int j) {
           const double lt = safe_log(spec.abs_tail(N, (j + m + 2) * sigma));
           const double lg = log_binomial_geometric_tail(j + 1, m, w);
           if (lt == -kInf || lg == -kInf) return 0.0;
           return std::exp(lt + (j + 1) * log_base + lg);
         },
         0.25 * cfg.target_abs_error, cfg, acc, "lhs_partial_fraction");
  return acc.result(Method::euler_maclaurin_tail(), "lhs_partial_fraction");
}

SumResult lhs_partial_fraction(const DirichletSpec& spec, Complex s, Complex z, const EvalConfig& cfg) {
  return lhs_derivative(spec, s, z, 0, cfg);
}

SumResult rhs_derivative(const DirichletSpec& spec, Complex s, Complex z, int m, const SummationMethod& method,
                         const EvalConfig& cfg) {
  cfg.validate();
  method.validate();
  require_derivative_order(m);
  spec.require_domain(s);
  require_finite(z, "rhs_zeta_series");
  const Position pos = classify_radius(std::abs(z), 1.0, "rhs_zeta_series");
  if (spec.coeff(1) != Complex(0.0) && std::abs(z + 1.0) <= kBoundaryTol)
    throw PoleError("rhs_zeta_series: z = -1 is a pole");

  auto coef = [&](std::int64_t j) {
    return (j % 2 == 0 ? 1.0 : -1.0) * binom(static_cast<int>(j) + m, m) * std::pow(z, static_cast<int>(j));
  };
  const Complex exponent_step = s;
  auto term = [&](std::int64_t j) {
    return coef(j) * spec.value(static_cast<double>(j + m + 1) * exponent_step, cfg).value;
  };
  auto term_error = [&](std::int64_t j) {
    return std::abs(coef(j)) * spec.value(static_cast<double>(j + m + 1) * exponent_step, cfg).abs_error_estimate;
  };
  RadiusFamily interior = [&](Complex w, const EvalConfig& c) { return dirichlet_rhs_interior(spec, s, w, m, c); };
  return dispatch_rhs(method, pos, z, interior, term, term_error, cfg, "rhs_zeta_series");
}

SumResult rhs_zeta_series(const DirichletSpec& spec, Complex s, Complex z, const SummationMethod& method,
                          const EvalConfig& cfg) {
  return rhs_derivative(spec, s, z, 0, method, cfg);
}

namespace {

void require_weighted_domain(Complex q, Complex p) {
  if (!is_finite(q) || !is_finite(p)) throw DomainError("weighted series: p and q must be finite");
  if (!(q.real() < p.real() - 1.0 - kDomainEpsilon))
    throw DomainError("weighted series: requires Re(q) < Re(p) - 1");
}

}  // namespace

SumResult lhs_weighted_series(int m, Complex q, Complex p, Complex z, const EvalConfig& cfg) {
  require_weighted_domain(q, p);
  return lhs_partial_fraction(specs::weighted(q, m), p, z, cfg);
}

SumResult rhs_weighted_series(int m, Complex q, Complex p, Complex z, const SummationMethod& method,
                              const EvalConfig& cfg) {
  require_weighted_domain(q, p);
  return rhs_zeta_series(specs::weighted(q, m), p, z, method, cfg);
}

// ---------------------------------------------------------------------------

SumResult multi_factor_lhs(const std::vector<Factor>& factors, const DirichletSpec& spec, Complex z,
                           const EvalConfig& cfg) {
  cfg.validate();
  require_finite(z, "multi_factor_series");
  const FactorSetup fs = prepare_factors(factors, spec);
  for (const auto& f : fs.active) check_dirichlet_poles(spec.coeff, f.beta, f.alpha * z);

  const double az = std::abs(z);
  const double grow = fs.alpha_max * az;
  const std::int64_t N =
      fs.active.empty()
          ? kMinDirectTerms
          : choose_cutoff([&](std::int64_t n) { return grow * std::pow(static_cast<double>(n + 1), -fs.beta_min); }, cfg,
                          "multi_factor_series");
  const double log_base = fs.active.empty() ? 0.0 : fs.beta_min * std::log(static_cast<double>(N + 1));
  const double w = grow * std::exp(-log_base);
  const int r1 = active_count_minus_one(fs);
  const double sigma0 = fs.base_exponent.real();

  Accumulator acc;
  acc.add_direct(kernels::sum_range<Complex>(1, N,
                                             [&](std::int64_t n) {
                                               Complex v = spec.coeff(n);
                                               if (v == Complex(0.0)) return v;
                                               for (const auto& f : factors) v /= n_pow(n, f.beta) + f.alpha * z;
                                               return v;
                                             }),
                 8.0 * (factors.size() + 1));

  const double goal = 0.25 * cfg.target_abs_error;
  for (int d = 0;; ++d) {
    const double share = goal / ((d + 2.0) * (d + 2.0) * std::max(1.0, binom(d + r1, r1)));
    for_each_multi_index(fs, z, d, [&](Complex expo, Complex coef) {
      if (coef == Complex(0.0)) return;
      acc.add(coef, spec.tail(N, expo, share / std::abs(coef), cfg));
    });
    acc.count_term();
    if (fs.active.empty()) break;
    const double lt = safe_log(spec.abs_tail(N, sigma0 + (d + 1) * fs.beta_min));
    const double lg = log_binomial_geometric_tail(d + 1, r1, w);
    const double rest = (lt == -kInf || lg == -kInf) ? 0.0 : std::exp(lt + (d + 1) * log_base + lg);
    if (rest <= goal) {
      acc.add_error(rest);
      break;
    }
    if (d >= cfg.max_terms) throw ConvergenceError("multi_factor_series: tail expansion did not converge");
  }
  return acc.result(Method::euler_maclaurin_tail(), "multi_factor_series");
}

SumResult multi_factor_rhs(const std::vector<Factor>& factors, const DirichletSpec& spec, Complex z,
                           const EvalConfig& cfg) {
  cfg.validate();
  require_finite(z, "multi_factor_series");
  const FactorSetup fs = prepare_factors(factors, spec);
  const double grow = fs.alpha_max * std::abs(z);
  if (grow >= 1.0)
    throw RadiusError("multi_factor_series: requires |z| < 1/max|alpha_i|, got |z| max|alpha| = " + std::to_string(grow));
  const int r1 = active_count_minus_one(fs);
  const double sigma0 = fs.base_exponent.real();

  Accumulator acc;
  const double goal = 0.5 * cfg.target_abs_error;
  for (int d = 0;; ++d) {
    const double share = goal / ((d + 2.0) * (d + 2.0) * std::max(1.0, binom(d + r1, r1)));
    for_each_multi_index(fs, z, d, [&](Complex expo, Complex coef) {
      if (coef == Complex(0.0)) return;
      acc.add(coef, spec.value(expo, with_target(cfg, share / std::abs(coef))));
    });
    acc.count_term();
    if (fs.active.empty()) break;
    const double rest = spec.abs_value_bound(sigma0 + (d + 1) * fs.beta_min) *
                        safe_exp(log_binomial_geometric_tail(d + 1, r1, grow));
    if (rest <= goal) {
      acc.add_error(rest);
      break;
    }
    if (d >= cfg.max_terms) throw ConvergenceError("multi_factor_series: series did not converge");
  }
  return acc.result(Method::direct(), "multi_factor_series");
}

IdentityPair multi_factor_series(const std::vector<Factor>& factors, const DirichletSpec& spec, Complex z,
                                 const EvalConfig& cfg) {
  SumResult rhs = multi_factor_rhs(factors, spec, z, cfg);
  return {multi_factor_lhs(factors, spec, z, cfg), rhs};
}

// ---------------------------------------------------------------------------

SumResult compose_lhs(const PowerSeriesSpec& f, Complex s, Complex z, const EvalConfig& cfg) {
  cfg.validate();
  require_compose_domain(f, s, "compose_series");
  require_finite(z, "compose_series");
  static const DirichletSpec ones = specs::ones();
  return compose_lhs_impl(f, dirichlet_compose_data(ones, s, 0.0, "compose_series"), z, cfg);
}

SumResult compose_rhs(const PowerSeriesSpec& f, Complex s, Complex z, const SummationMethod& method,
                      const EvalConfig& cfg) {
  require_compose_domain(f, s, "compose_series");
  require_finite(z, "compose_series");
  static const DirichletSpec ones = specs::ones();
  return compose_rhs_impl(f, dirichlet_compose_data(ones, s, 0.0, "compose_series"), z, method, cfg);
}

IdentityPair compose_series(const PowerSeriesSpec& f, Complex s, Complex z, const SummationMethod& method,
                            const EvalConfig& cfg) {
  SumResult rhs = compose_rhs(f, s, z, method, cfg);
  return {compose_lhs(f, s, z, cfg), rhs};
}

SumResult dirichlet_compose_lhs(const PowerSeriesSpec& f, const DirichletSpec& g, Complex s, Complex s_prime, Complex z,
                                const EvalConfig& cfg) {
  cfg.validate();
  require_dirichlet_compose_domain(g, s, s_prime, "dirichlet_compose");
  require_finite(z, "dirichlet_compose");
  return compose_lhs_impl(f, dirichlet_compose_data(g, s, s_prime, "dirichlet_compose"), z, cfg);
}

SumResult dirichlet_compose_rhs(const PowerSeriesSpec& f, const DirichletSpec& g, Complex s, Complex s_prime, Complex z,
                                const EvalConfig& cfg) {
  require_dirichlet_compose_domain(g, s, s_prime, "dirichlet_compose");
  require_finite(z, "dirichlet_compose");
  return compose_rhs_impl(f, dirichlet_compose_data(g, s, s_prime, "dirichlet_compose"), z, SummationMethod::direct(),
                          cfg);
}

IdentityPair dirichlet_compose(const PowerSeriesSpec& f, const DirichletSpec& g, Complex s, Complex s_prime, Complex z,
                               const EvalConfig& cfg) {
  SumResult rhs = dirichlet_compose_rhs(f, g, s, s_prime, z, cfg);
  return {dirichlet_compose_lhs(f, g, s, s_prime, z, cfg), rhs};
}

SumResult general_dirichlet_lhs(const PowerSeriesSpec& f, const GeneralDirichletSpec& gd, Complex s, Complex z,
                                const EvalConfig& cfg) {
  cfg.validate();
  gd.require_domain(s);
  require_finite(z, "general_dirichlet_compose");
  return compose_lhs_impl(f, general_compose_data(gd, s), z, cfg);
}

SumResult general_dirichlet_rhs(const PowerSeriesSpec& f, const GeneralDirichletSpec& gd, Complex s, Complex z,
                                const EvalConfig& cfg) {
  gd.require_domain(s);
  require_finite(z, "general_dirichlet_compose");
  return compose_rhs_impl(f, general_compose_data(gd, s), z, SummationMethod::direct(), cfg);
}

IdentityPair general_dirichlet_compose(const PowerSeriesSpec& f, const GeneralDirichletSpec& gd, Complex s, Complex z,
                                       const EvalConfig& cfg) {
  SumResult rhs = general_dirichlet_rhs(f, gd, s, z, cfg);
  return {general_dirichlet_lhs(f, gd, s, z, cfg), rhs};
}

// ---------------------------------------------------------------------------

SumResult sequence_lhs(const SequenceSpec& seq, Complex z, int m, const EvalConfig& cfg) {
  cfg.validate();
  require_derivative_order(m);
  require_finite(z, "sequence_series");
  const double az = std::abs(z);

  const std::int64_t N = choose_cutoff([&](std::int64_t n) { return az / std::abs(seq.b(n + 1)); }, cfg,
                                       "sequence_series");
  for (std::int64_t n = 1; n <= N; ++n) {
    const Complex b = seq.b(n);
    if (std::abs(b) > 2.0 * az + 1.0) break;
    if (seq.a(n) != Complex(0.0) && std::abs(b - z) <= kPoleExclusion * std::abs(b))
      throw PoleError("sequence_series: z lies within the exclusion radius of b_n, n = " + std::to_string(n));
  }
  const double big = std::abs(seq.b(N + 1));
  const double w = az / big;

  Accumulator acc;
  acc.add_direct(kernels::sum_range<Complex>(1, N,
                                             [&](std::int64_t n) {
                                               const Complex a = seq.a(n);
                                               if (a == Complex(0.0)) return a;
                                               const Complex d = seq.b(n) - z;
                                               Complex p = d;
                                               for (int i = 0; i < m; ++i) p *= d;
                                               return a / p;
                                             }),
                 8.0 * (m + 2));
  expand([&](int j) { return binom(j + m, m) * std::pow(z, j); },
         [&](int j, double share) { return seq.coeff_tail(N, j + m, share, cfg); },
         [&](int j) {
           const double lt = safe_log(seq.abs_tail(N, j + m + 1));
           const double lg = log_binomial_geometric_tail(j + 1, m, w);
           if (lt == -kInf || lg == -kInf) return 0.0;
           return std::exp(lt + (j + 1) * std::log(big) + lg);
         },
         0.25 * cfg.target_abs_error, cfg, acc, "sequence_series");
  return acc.result(Method::euler_maclaurin_tail(), "sequence_series");
}

SumResult sequence_rhs(const SequenceSpec& seq, Complex z, int m, const SummationMethod& method, const EvalConfig& cfg) {
  cfg.validate();
  method.validate();
  require_derivative_order(m);
  require_finite(z, "sequence_series");
  const Complex b1 = seq.b(1);
  const double r1 = std::abs(b1);
  const Position pos = classify_radius(std::abs(z), r1, "sequence_series");
  if (seq.a(1) != Complex(0.0) && std::abs(z - b1) <= kBoundaryTol * r1)
    throw PoleError("sequence_series: z = b_1 is a pole");
  const double a1 = std::abs(seq.a(1));

  auto coef = [&](std::int64_t j) { return binom(static_cast<int>(j) + m, m) * std::pow(z, static_cast<int>(j)); };
  auto term = [&](std::int64_t j) { return coef(j) * seq.coefficient(static_cast<int>(j) + m, cfg).value; };
  auto term_error = [&](std::int64_t j) {
    return std::abs(coef(j)) * seq.coefficient(static_cast<int>(j) + m, cfg).abs_error_estimate;
  };
  RadiusFamily interior = [&](Complex w, const EvalConfig& c) {
    const double ratio = std::abs(w) / r1;
    Accumulator acc;
    expand([&](int j) { return binom(j + m, m) * std::pow(w, j); },
           [&](int j, double share) { return seq.coefficient(j + m, share, c); },
           [&](int j) {
             const int k0 = j + m + 1;
             const double g = a1 + safe_exp((k0 + 1) * std::log(r1) + safe_log(seq.abs_tail(1, k0)));
             return g * std::pow(r1, -(m + 1)) * safe_exp(log_binomial_geometric_tail(j + 1, m, ratio));
           },
           0.5 * c.target_abs_error, c, acc, "sequence_series");
    return acc.result(Method::direct(), "sequence_series");
  };
  return dispatch_rhs(method, pos, z, interior, term, term_error, cfg, "sequence_series");
}

IdentityPair sequence_series(const SequenceSpec& seq, Complex z, int m, const SummationMethod& method,
                             const EvalConfig& cfg) {
  SumResult rhs = sequence_rhs(seq, z, m, method, cfg);
  return {sequence_lhs(seq, z, m, cfg), rhs};
}

}  // namespace zs
