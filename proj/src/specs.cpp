#include "zs/specs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>

#include "zs/kernels.hpp"
#include "zs/specialfns.hpp"

namespace zs {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::int64_t kSieveLimit = std::int64_t{1} << 20;
constexpr std::int64_t kShortSumLimit = 64;
constexpr std::int64_t kDirectTailTerms = 1 << 14;

Complex n_pow_neg(std::int64_t n, Complex s) { return std::exp(-s * std::log(static_cast<double>(n))); }

SumResult quotient(const SumResult& num, const SumResult& den) {
  const double d = std::abs(den.value);
  const double slack = d - den.abs_error_estimate;
  if (!(slack > 0.0)) throw ConvergenceError("denominator indistinguishable from zero at the requested accuracy");
  const Complex value = num.value / den.value;
  const double err = (num.abs_error_estimate + std::abs(value) * den.abs_error_estimate) / slack + 4.0 * kEps * std::abs(value);
  return {value, err, num.terms_used + den.terms_used, num.method};
}

SumResult scaled(const SumResult& r, double factor) {
  return {factor * r.value, std::fabs(factor) * r.abs_error_estimate, r.terms_used, r.method};
}

std::int64_t coefficient_index_check(std::int64_t n) {
  if (n < 1) throw RangeError("coefficient index must be >= 1");
  return n;
}

// Partial sum of a power series until the remaining bound is negligible.
Complex sum_power_series(Complex z, const std::function<Complex(int)>& coeff,
                         const std::function<double(int, double)>& abs_tail) {
  const double x = std::abs(z);
  kernels::CompensatedSum<Complex> acc;
  Complex zk = 1.0;
  for (int k = 1; k < 400; ++k) {
    zk *= z;
    acc.add(coeff(k) * zk);
    const double rest = abs_tail(k + 1, x);
    if (rest <= 0.25 * kEps * std::abs(acc.value()) || rest < 1e-300) break;
  }
  return acc.value();
}

// x^K / K!, computed in logs
double power_over_factorial(int K, double x) {
  if (x == 0.0) return K == 0 ? 1.0 : 0.0;
  return std::exp(K * std::log(x) - std::lgamma(K + 1.0));
}

double exp_tail(int K, double x) {
  K = std::max(K, 1);
  if (x < K + 1.0) return power_over_factorial(K, x) / (1.0 - x / (K + 1.0));
  return std::exp(x);
}

}  // namespace

double power_log_tail_bound(std::int64_t N, double tau, int m) {
  if (!(tau > 1.0)) return std::numeric_limits<double>::infinity();
  N = std::max<std::int64_t>(N, 0);
  // x^{-tau} ln^m x decreases for x ≥ e^{m/tau}
  const double turn = std::exp(static_cast<double>(m) / tau);
  const auto x0 = std::max<std::int64_t>(N + 1, static_cast<std::int64_t>(std::ceil(turn)));
  double total = 0.0;
  for (std::int64_t n = N + 1; n < x0; ++n) {
    const double ln = std::log(static_cast<double>(n));
    total += std::exp(-tau * ln) * std::pow(ln, m);
  }
  const double lx = std::log(static_cast<double>(x0));
  total += std::exp(-tau * lx) * std::pow(lx, m);
  // ∫_{x0}^∞ ln^m x · x^{-tau} dx
  double integral = 0.0;
  double falling = 1.0;  // m!/(m-i)!
  for (int i = 0; i <= m; ++i) {
    integral += falling * std::pow(lx, m - i) / std::pow(tau - 1.0, i + 1);
    falling *= (m - i);
  }
  total += std::exp((1.0 - tau) * lx) * integral;
  return total;
}

// ---------------------------------------------------------------------------
// DirichletSpec

void DirichletSpec::require_domain(Complex s) const {
  if (!is_finite(s)) throw DomainError(name + ": argument must be finite");
  if (!(s.real() > sigma_a + kDomainEpsilon))
    throw DomainError(name + ": requires Re(s) > " + std::to_string(sigma_a) + ", got " + std::to_string(s.real()));
}

SumResult DirichletSpec::partial(std::int64_t N, Complex s) const {
  const auto sum = kernels::sum_range<Complex>(1, N, [&](std::int64_t n) { return coeff(n) * n_pow_neg(n, s); });
  return {sum.value, 8.0 * kEps * sum.abs_sum, N, Method::direct()};
}

SumResult DirichletSpec::value(Complex s, const EvalConfig& cfg) const {
  cfg.validate();
  require_domain(s);
  const double sigma = s.real();
  for (std::int64_t N = 1; N <= kShortSumLimit; N *= 2) {
    const double rest = abs_tail(N, sigma);
    if (rest <= 0.25 * cfg.target_abs_error) {
      SumResult r = partial(N, s);
      r.abs_error_estimate += rest;
      return r;
    }
  }
  if (closed_form) return closed_form(s, cfg);
  for (std::int64_t N = 2 * kShortSumLimit; N <= cfg.max_terms; N *= 2) {
    const double rest = abs_tail(N, sigma);
    if (rest <= 0.5 * cfg.target_abs_error) {
      SumResult r = partial(N, s);
      r.abs_error_estimate += rest;
      return r;
    }
  }
  throw ConvergenceError(name + ": direct summation cannot reach the target within max_terms");
}

SumResult DirichletSpec::tail(std::int64_t N, Complex s, double abs_target, const EvalConfig& cfg) const {
  cfg.validate();
  require_domain(s);
  const double sigma = s.real();
  const double bound = abs_tail(N, sigma);
  if (bound <= 0.25 * abs_target) return {0.0, bound, 0, Method::direct()};
  // a short stretch of explicit terms often reaches tiny targets exactly
  for (std::int64_t M = 2 * std::max<std::int64_t>(N, 8); M <= N + kDirectTailTerms; M *= 2) {
    const double rest = abs_tail(M, sigma);
    if (rest > 0.25 * abs_target) continue;
    const auto sum = kernels::sum_range<Complex>(N + 1, M, [&](std::int64_t n) { return coeff(n) * n_pow_neg(n, s); });
    return {sum.value, rest + 8.0 * kEps * sum.abs_sum, M - N, Method::direct()};
  }
  if (tail_form) return tail_form(N, s, abs_target, cfg);
  const SumResult whole = value(s, cfg.tightened(0.5));
  const SumResult head = partial(N, s);
  return {whole.value - head.value, whole.abs_error_estimate + head.abs_error_estimate + 4.0 * kEps * std::abs(whole.value),
          whole.terms_used + N, whole.method};
}

double DirichletSpec::abs_value_bound(double sigma) const { return std::abs(coeff(1)) + abs_tail(1, sigma); }

const ArithSieve& shared_sieve() {
  static const ArithSieve sieve = build_sieve(kSieveLimit);
  return sieve;
}

namespace specs {

namespace {

double unit_tail(std::int64_t N, double sigma) { return power_log_tail_bound(N, sigma, 0); }

SumResult shifted_tail(int m, std::int64_t N, Complex s, double abs_target, const EvalConfig& cfg) {
  return hurwitz_tail(m, s, static_cast<double>(N) + 1.0, abs_target, cfg);
}

}  // namespace

DirichletSpec ones() {
  DirichletSpec d;
  d.name = "ones";
  d.coeff = [](std::int64_t) { return Complex(1.0); };
  d.sigma_a = 1.0;
  d.abs_tail = unit_tail;
  d.closed_form = [](Complex s, const EvalConfig& cfg) { return zeta(s, cfg); };
  d.tail_form = [](std::int64_t N, Complex s, double target, const EvalConfig& cfg) {
    return shifted_tail(0, N, s, target, cfg);
  };
  return d;
}

DirichletSpec weighted(Complex q, int m) {
  if (m < 0 || m > kMaxZetaDerivative) throw ConfigError("weighted spec: log power must lie in [0, 8]");
  if (!is_finite(q)) throw ConfigError("weighted spec: q must be finite");
  const double sign = m % 2 == 0 ? 1.0 : -1.0;
  DirichletSpec d;
  d.name = "weighted(" + std::to_string(q.real()) + (q.imag() != 0.0 ? "+" + std::to_string(q.imag()) + "i" : "") +
           "," + std::to_string(m) + ")";
  d.coeff = [q, m](std::int64_t n) {
    if (m > 0 && n == 1) return Complex(0.0);
    const double ln = std::log(static_cast<double>(n));
    return std::exp(q * ln) * std::pow(ln, m);
  };
  d.sigma_a = 1.0 + q.real();
  d.abs_tail = [q, m](std::int64_t N, double sigma) { return power_log_tail_bound(N, sigma - q.real(), m); };
  d.closed_form = [q, m, sign](Complex s, const EvalConfig& cfg) { return scaled(zeta_deriv(m, s - q, cfg), sign); };
  d.tail_form = [q, m, sign](std::int64_t N, Complex s, double target, const EvalConfig& cfg) {
    return scaled(shifted_tail(m, N, s - q, target, cfg), sign);
  };
  return d;
}

DirichletSpec mobius() {
  DirichletSpec d;
  d.name = "mobius";
  d.coeff = [](std::int64_t n) {
    coefficient_index_check(n);
    const auto& sv = shared_sieve();
    return Complex(static_cast<double>(n <= sv.limit ? sv.mu(n) : mobius_of(n)));
  };
  d.sigma_a = 1.0;
  d.abs_tail = unit_tail;
  d.closed_form = [](Complex s, const EvalConfig& cfg) {
    return quotient({1.0, 0.0, 0, Method::euler_maclaurin_tail()}, zeta(s, cfg.tightened(0.25)));
  };
  return d;
}

DirichletSpec von_mangoldt() {
  DirichletSpec d;
  d.name = "von-mangoldt";
  d.coeff = [](std::int64_t n) {
    coefficient_index_check(n);
    const auto& sv = shared_sieve();
    return Complex(n <= sv.limit ? sv.von_mangoldt(n) : von_mangoldt_of(n));
  };
  d.sigma_a = 1.0;
  d.abs_tail = [](std::int64_t N, double sigma) { return power_log_tail_bound(N, sigma, 1); };
  d.closed_form = [](Complex s, const EvalConfig& cfg) {
    const EvalConfig inner = cfg.tightened(0.25);
    return scaled(quotient(zeta_deriv(1, s, inner), zeta(s, inner)), -1.0);
  };
  return d;
}

DirichletSpec totient() {
  DirichletSpec d;
  d.name = "totient";
  d.coeff = [](std::int64_t n) {
    coefficient_index_check(n);
    const auto& sv = shared_sieve();
    return Complex(static_cast<double>(n <= sv.limit ? sv.phi(n) : totient_of(n)));
  };
  d.sigma_a = 2.0;
  d.abs_tail = [](std::int64_t N, double sigma) { return power_log_tail_bound(N, sigma - 1.0, 0); };
  d.closed_form = [](Complex s, const EvalConfig& cfg) {
    const EvalConfig inner = cfg.tightened(0.25);
    return quotient(zeta(s - 1.0, inner), zeta(s, inner));
  };
  return d;
}

DirichletSpec dirichlet_character(std::int64_t q, std::int64_t index) {
  auto chi = std::make_shared<const CharacterTable>(character(q, index));
  DirichletSpec d;
  d.name = "char:" + std::to_string(q) + ":" + std::to_string(index);
  d.coeff = [chi](std::int64_t n) { return (*chi)(coefficient_index_check(n)); };
  d.sigma_a = 1.0;
  d.abs_tail = unit_tail;
  d.closed_form = [chi](Complex s, const EvalConfig& cfg) { return l_function(s, *chi, cfg); };
  return d;
}

DirichletSpec beta() {
  DirichletSpec d = dirichlet_character(4, 1);
  d.name = "beta";
  d.closed_form = [](Complex s, const EvalConfig& cfg) { return dirichlet_beta(s, cfg); };
  return d;
}

DirichletSpec drop_leading(const DirichletSpec& base, std::int64_t count) {
  if (count < 0) throw ConfigError("drop_leading: count must be >= 0");
  DirichletSpec d = base;
  d.name = base.name + ">" + std::to_string(count);
  d.coeff = [base, count](std::int64_t n) { return n <= count ? Complex(0.0) : base.coeff(n); };
  d.abs_tail = [base, count](std::int64_t N, double sigma) { return base.abs_tail(std::max(N, count), sigma); };
  d.closed_form = [base, count](Complex s, const EvalConfig& cfg) {
    const SumResult whole = base.value(s, cfg.tightened(0.5));
    const SumResult head = base.partial(count, s);
    return SumResult{whole.value - head.value, whole.abs_error_estimate + head.abs_error_estimate, whole.terms_used,
                     whole.method};
  };
  d.tail_form = [base, count](std::int64_t N, Complex s, double target, const EvalConfig& cfg) {
    return base.tail(std::max(N, count), s, target, cfg);
  };
  return d;
}

DirichletSpec from_name(const std::string& name) {
  if (name == "ones") return ones();
  if (name == "mobius") return mobius();
  if (name == "von-mangoldt") return von_mangoldt();
  if (name == "totient") return totient();
  if (name == "beta") return beta();
  if (name.rfind("char:", 0) == 0) {
    const auto colon = name.find(':', 5);
    if (colon != std::string::npos) {
      try {
        std::size_t used_q = 0, used_i = 0;
        const std::string qs = name.substr(5, colon - 5), is = name.substr(colon + 1);
        const long long q = std::stoll(qs, &used_q);
        const long long idx = std::stoll(is, &used_i);
        if (used_q == qs.size() && used_i == is.size()) return dirichlet_character(q, idx);
      } catch (const std::logic_error&) {
      }
    }
    throw ConfigError("malformed character spec '" + name + "', expected char:q:idx");
  }
  throw ConfigError("unknown spec '" + name + "'");
}

std::vector<std::string> registry_names() { return {"ones", "mobius", "von-mangoldt", "totient", "char:q:idx", "beta"}; }

}  // namespace specs

// ---------------------------------------------------------------------------
// Power series

namespace power_series {

PowerSeriesSpec exp_minus_one() {
  PowerSeriesSpec f;
  f.name = "exp-1";
  f.coeff = [](int k) { return k < 1 ? Complex(0.0) : Complex(std::exp(-std::lgamma(k + 1.0))); };
  f.radius = std::numeric_limits<double>::infinity();
  f.abs_tail = exp_tail;
  f.eval = [coeff = f.coeff, tail = f.abs_tail](Complex z) {
    return std::abs(z) < 0.5 ? sum_power_series(z, coeff, tail) : std::exp(z) - 1.0;
  };
  return f;
}

PowerSeriesSpec log1p() {
  PowerSeriesSpec f;
  f.name = "log1p";
  f.coeff = [](int k) { return k < 1 ? Complex(0.0) : Complex((k % 2 == 1 ? 1.0 : -1.0) / k); };
  f.radius = 1.0;
  f.abs_tail = [](int K, double x) {
    K = std::max(K, 1);
    if (x >= 1.0) return std::numeric_limits<double>::infinity();
    return std::pow(x, K) / (K * (1.0 - x));
  };
  f.eval = [coeff = f.coeff, tail = f.abs_tail](Complex z) {
    return std::abs(z) < 0.5 ? sum_power_series(z, coeff, tail) : std::log(1.0 + z);
  };
  return f;
}

PowerSeriesSpec sine() {
  PowerSeriesSpec f;
  f.name = "sin";
  f.coeff = [](int k) {
    if (k % 2 == 0) return Complex(0.0);
    return Complex((k % 4 == 1 ? 1.0 : -1.0) * std::exp(-std::lgamma(k + 1.0)));
  };
  f.radius = std::numeric_limits<double>::infinity();
  f.abs_tail = exp_tail;
  f.eval = [](Complex z) { return std::sin(z); };
  return f;
}

PowerSeriesSpec identity() {
  PowerSeriesSpec f;
  f.name = "identity";
  f.coeff = [](int k) { return Complex(k == 1 ? 1.0 : 0.0); };
  f.radius = std::numeric_limits<double>::infinity();
  f.abs_tail = [](int K, double x) { return K <= 1 ? x : 0.0; };
  f.eval = [](Complex z) { return z; };
  return f;
}

PowerSeriesSpec geometric() {
  PowerSeriesSpec f;
  f.name = "geometric";
  f.coeff = [](int k) { return Complex(k < 1 ? 0.0 : 1.0); };
  f.radius = 1.0;
  f.abs_tail = [](int K, double x) {
    K = std::max(K, 1);
    if (x >= 1.0) return std::numeric_limits<double>::infinity();
    return std::pow(x, K) / (1.0 - x);
  };
  f.eval = [](Complex z) { return z / (1.0 - z); };
  return f;
}

}  // namespace power_series

// ---------------------------------------------------------------------------
// General Dirichlet series

void GeneralDirichletSpec::require_domain(Complex s) const {
  if (!is_finite(s)) throw DomainError(name + ": argument must be finite");
  if (!(s.real() > sigma_a + kDomainEpsilon))
    throw DomainError(name + ": requires Re(s) > " + std::to_string(sigma_a) + ", got " + std::to_string(s.real()));
}

namespace general_dirichlet {

GeneralDirichletSpec logarithmic() {
  GeneralDirichletSpec g;
  g.name = "log";
  g.lambda = [](std::int64_t n) { return std::log(static_cast<double>(n)); };
  g.sigma_a = 1.0;
  g.value = [](Complex s, const EvalConfig& cfg) { return zeta(s, cfg); };
  g.tail = [](std::int64_t N, Complex s, double target, const EvalConfig& cfg) {
    return specs::ones().tail(N, s, target, cfg);
  };
  g.abs_tail = [](std::int64_t N, double sigma) { return power_log_tail_bound(N, sigma, 0); };
  return g;
}

GeneralDirichletSpec linear(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw ConfigError("linear general Dirichlet spec needs c > 0");
  GeneralDirichletSpec g;
  g.name = "linear(" + std::to_string(c) + ")";
  g.lambda = [c](std::int64_t n) { return c * static_cast<double>(n); };
  g.sigma_a = 0.0;
  // Σ_{n>N} e^{-cns} = e^{-c(N+1)s} / (1 - e^{-cs})
  auto tail = [c](std::int64_t N, Complex s, double, const EvalConfig&) {
    const Complex q = std::exp(-c * s);
    const Complex v = std::exp(-c * static_cast<double>(N + 1) * s) / (1.0 - q);
    return SumResult{v, 8.0 * kEps * std::abs(v), 0, Method::closed_form()};
  };
  g.value = [tail](Complex s, const EvalConfig& cfg) { return tail(0, s, 0.0, cfg); };
  g.tail = tail;
  g.abs_tail = [c](std::int64_t N, double sigma) {
    return std::exp(-c * static_cast<double>(N + 1) * sigma) / (1.0 - std::exp(-c * sigma));
  };
  return g;
}

}  // namespace general_dirichlet

// ---------------------------------------------------------------------------
// Sequences

SumResult SequenceSpec::coefficient(int k, double abs_target, const EvalConfig& cfg) const {
  cfg.validate();
  const double target = std::min(abs_target, cfg.target_abs_error);
  auto head = [&](std::int64_t N) {
    const auto sum = kernels::sum_range<Complex>(1, N, [&](std::int64_t n) { return a(n) / std::pow(b(n), k + 1); });
    return SumResult{sum.value, 8.0 * kEps * sum.abs_sum, N, Method::direct()};
  };
  for (std::int64_t N = 1; N <= kShortSumLimit; N *= 2) {
    const double rest = abs_tail(N, k);
    if (rest <= 0.25 * target) {
      SumResult r = head(N);
      r.abs_error_estimate += rest;
      return r;
    }
  }
  const SumResult h = head(32);
  const SumResult t = coeff_tail(32, k, 0.5 * target, cfg);
  return {h.value + t.value, h.abs_error_estimate + t.abs_error_estimate, h.terms_used + t.terms_used, t.method};
}

namespace sequences {

SequenceSpec from_dirichlet(const DirichletSpec& spec, Complex s) {
  spec.require_domain(s);
  SequenceSpec q;
  q.name = spec.name + "@n^s";
  q.a = spec.coeff;
  q.b = [s](std::int64_t n) { return std::exp(s * std::log(static_cast<double>(n))); };
  q.coeff_tail = [spec, s](std::int64_t N, int k, double target, const EvalConfig& cfg) {
    return spec.tail(N, static_cast<double>(k + 1) * s, target, cfg);
  };
  q.abs_tail = [spec, s](std::int64_t N, int k) { return spec.abs_tail(N, (k + 1) * s.real()); };
  return q;
}

SequenceSpec monic_polynomial(int degree, const std::vector<double>& lower) {
  if (degree < 2) throw ConfigError("monic_polynomial: degree must be >= 2 for Σ 1/bₙ to converge");
  if (static_cast<int>(lower.size()) != degree) throw ConfigError("monic_polynomial: need exactly `degree` lower coefficients");
  for (double c : lower)
    if (!std::isfinite(c)) throw ConfigError("monic_polynomial: coefficients must be finite");

  auto poly = [degree, lower](double n) {
    double v = 1.0;
    for (int j = 0; j < degree; ++j) v = v * n + lower[static_cast<std::size_t>(j)];
    return v;
  };
  // U(r) = Σ |c_j| r^j; on 1/n ≤ rho we have U ≤ 1/2 and |bₙ| ≥ nᵈ/2
  auto U = [degree, lower](double r) {
    double u = 0.0, p = 1.0;
    for (int j = 0; j < degree; ++j) {
      p *= r;
      u += std::fabs(lower[static_cast<std::size_t>(j)]) * p;
    }
    return u;
  };
  double rho = 1.0;
  if (U(1.0) > 0.5) {
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (U(mid) > 0.5 ? hi : lo) = mid;
    }
    rho = lo;
  }
  const auto n_min = static_cast<std::int64_t>(std::ceil(1.0 / rho));

  const std::int64_t check = std::max<std::int64_t>(1000, 4 * n_min);
  double prev = 0.0;
  for (std::int64_t n = 1; n <= check; ++n) {
    const double m = std::fabs(poly(static_cast<double>(n)));
    if (m == 0.0) throw ConfigError("monic_polynomial: bₙ vanishes at n = " + std::to_string(n));
    if (m < prev) throw ConfigError("monic_polynomial: |bₙ| decreases at n = " + std::to_string(n));
    prev = m;
  }

  SequenceSpec q;
  q.name = "poly";
  q.a = [](std::int64_t) { return Complex(1.0); };
  q.b = [poly](std::int64_t n) { return Complex(poly(static_cast<double>(n))); };

  q.abs_tail = [poly, degree, n_min](std::int64_t N, int k) {
    const int t = k + 1;
    double total = 0.0;
    for (std::int64_t n = N + 1; n < n_min; ++n) total += std::pow(std::fabs(poly(static_cast<double>(n))), -t);
    const std::int64_t from = std::max(N, n_min - 1);
    const double far = power_log_tail_bound(from, static_cast<double>(degree) * t, 0);
    if (far > 0.0) total += std::exp(t * std::numbers::ln2 + std::log(far));
    return total;
  };

  q.coeff_tail = [poly, degree, lower, rho](std::int64_t N, int k, double target, const EvalConfig& cfg) {
    const int t = k + 1;
    const auto M = std::max<std::int64_t>(N, static_cast<std::int64_t>(std::ceil(2.0 / rho)));
    kernels::CompensatedSum<Complex> acc;
    double err = 0.0;
    std::int64_t terms = 0;
    for (std::int64_t n = N + 1; n <= M; ++n) {
      const double v = std::pow(poly(static_cast<double>(n)), -t);
      acc.add(v);
      err += 4.0 * kEps * std::fabs(v);
      ++terms;
    }
    // P(n)^{-t} = n^{-dt} Σ_i e_i n^{-i}, e from (1 + Σ c_j x^j)^{-t}
    const double alpha = -static_cast<double>(t);
    std::vector<double> e{1.0};
    const double log_lead = t * std::numbers::ln2;  // (1-U)^{-t}
    const double ratio = 1.0 / (rho * static_cast<double>(M + 1));
    for (int i = 0;; ++i) {
      if (i > 0) {
        double g = 0.0;
        for (int j = 1; j <= std::min(i, degree); ++j)
          g += ((alpha + 1.0) * j - i) * lower[static_cast<std::size_t>(j - 1)] * e[static_cast<std::size_t>(i - j)];
        e.push_back(g / i);
      }
      const double tau = static_cast<double>(degree) * t + i;
      const double ei = e[static_cast<std::size_t>(i)];
      if (ei != 0.0) {
        const double each = 0.25 * target / std::max(1.0, std::fabs(ei) * (i + 1) * (i + 1));
        const SumResult h = hurwitz_tail(0, tau, static_cast<double>(M) + 1.0, each, cfg);
        acc.add(ei * h.value);
        err += std::fabs(ei) * h.abs_error_estimate;
        terms += h.terms_used;
      }
      const double far = power_log_tail_bound(M, tau + 1.0, 0);
      const double rest =
          far > 0.0 ? std::exp(log_lead - (i + 1) * std::log(rho) + std::log(far)) / (1.0 - ratio) : 0.0;
      if (rest <= 0.25 * target) {
        err += rest;
        break;
      }
      if (i > 2000) throw ConvergenceError("monic_polynomial: coefficient tail expansion did not converge");
    }
    return SumResult{acc.value(), err, terms, Method::euler_maclaurin_tail()};
  };
  return q;
}

}  // namespace sequences

bool lambda_strictly_increasing(const GeneralDirichletSpec& gd, std::int64_t count) {
  for (std::int64_t n = 1; n < count; ++n)
    if (!(gd.lambda(n + 1) > gd.lambda(n))) return false;
  return true;
}

bool moduli_nondecreasing(const SequenceSpec& seq, std::int64_t count) {
  for (std::int64_t n = 1; n < count; ++n)
    if (std::abs(seq.b(n + 1)) < std::abs(seq.b(n))) return false;
  return true;
}

bool cauchy_stabilizes(const std::function<double(std::int64_t)>& abs_term, std::int64_t limit, double tol) {
  double sum = 0.0, prev_block = std::numeric_limits<double>::infinity();
  std::int64_t n = 1;
  for (std::int64_t cap = 2; cap <= limit; cap *= 2) {
    double block = 0.0;
    for (; n <= cap; ++n) block += abs_term(n);
    sum += block;
    // dyadic blocks of a convergent series shrink; stop once one is negligible
    if (block <= tol * sum && block <= prev_block) return true;
    prev_block = block;
  }
  return false;
}

}  // namespace zs
