#include "zs/specialfns.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zs/kernels.hpp"

namespace zs {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kJetSize = kMaxZetaDerivative + 1;
using Jet = std::array<Complex, kJetSize>;

// B_2, B_4, ..., B_24
constexpr std::array<double, 12> kBernoulli = {
    1.0 / 6.0,     -1.0 / 30.0,        1.0 / 42.0,  -1.0 / 30.0,         5.0 / 66.0,    -691.0 / 2730.0,
    7.0 / 6.0,     -3617.0 / 510.0,    43867.0 / 798.0, -174611.0 / 330.0, 854513.0 / 138.0,
    -236364091.0 / 2730.0};
constexpr int kMaxCorrections = static_cast<int>(kBernoulli.size());

constexpr std::array<double, 6> kCauchyRadii = {0.125, 0.25, 0.5, 1.0, 2.0, 4.0};

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Jet jet_mul(const Jet& a, const Jet& b, int m) {
  Jet out{};
  for (int i = 0; i <= m; ++i)
    for (int j = 0; i + j <= m; ++j) out[i + j] += a[i] * b[j];
  return out;
}

// base · x^{-ε} = base · e^{-εL}
Jet power_jet(Complex base, double log_x, int m) {
  Jet out{};
  Complex c = base;
  for (int r = 0; r <= m; ++r) {
    out[r] = c;
    c *= -log_x / (r + 1);
  }
  return out;
}

// 1 / (c + ε)
Jet reciprocal_jet(Complex c, int m) {
  Jet out{};
  Complex inv = 1.0 / c;
  Complex p = inv;
  for (int r = 0; r <= m; ++r) {
    out[r] = (r % 2 == 0 ? 1.0 : -1.0) * p;
    p *= inv;
  }
  return out;
}

double jet_abs_sum(const Jet& j, int m) {
  double s = 0.0;
  for (int r = 0; r <= m; ++r) s += std::abs(j[r]);
  return s;
}

struct Plan {
  std::int64_t direct_terms = 0;
  int corrections = 0;
  double truncation = 0.0;
  double rounding = 0.0;
  Jet tail{};  // integral + half term + Bernoulli corrections, as a jet in s

  double error() const { return truncation + rounding; }
};

// ln K and exponent p of the remainder bound K (N+a)^{-p} for derivative
// order m, Cauchy radius rho (ignored when m == 0).
struct BoundShape {
  double log_k;
  double power;
};

BoundShape remainder_shape(Complex s, int corrections, int m, double rho) {
  const int two_m = 2 * corrections;
  const double sigma = s.real() - (m > 0 ? rho : 0.0);
  double log_k = std::log(4.0) - two_m * std::log(2.0 * std::numbers::pi);
  for (int i = 0; i < two_m; ++i) log_k += std::log(std::abs(s + static_cast<double>(i)) + (m > 0 ? rho : 0.0));
  if (m > 0) log_k += std::log(factorial(m)) - m * std::log(rho);
  const double power = sigma + two_m - 1.0;
  log_k -= std::log(power);
  return {log_k, power};
}

std::vector<BoundShape> candidate_shapes(Complex s, int corrections, int m) {
  std::vector<BoundShape> out;
  if (m == 0) {
    out.push_back(remainder_shape(s, corrections, 0, 0.0));
    return out;
  }
  for (double rho : kCauchyRadii) {
    if (s.real() - rho + 2 * corrections - 1.0 < 0.5) continue;
    out.push_back(remainder_shape(s, corrections, m, rho));
  }
  return out;
}

// Σ_{n=0}^{N-1} |(n+a)^{-σ}|, bounded above by the first term plus an integral.
double direct_abs_bound(double sigma, double a, std::int64_t n_terms) {
  double total = std::pow(a, -sigma);
  if (n_terms >= 2) {
    const double far = static_cast<double>(n_terms - 1) + a;
    total += (std::pow(a, 1.0 - sigma) - std::pow(far, 1.0 - sigma)) / (sigma - 1.0);
  }
  return total;
}

bool make_plan(int m, Complex s, double a, int corrections, const EvalConfig& cfg, Plan& plan) {
  const auto shapes = candidate_shapes(s, corrections, m);
  if (shapes.empty()) return false;
  const double log_goal = std::log(0.5 * cfg.target_abs_error);
  const double log_cap = std::log(static_cast<double>(cfg.max_terms) + a);

  double best_log_x = std::numeric_limits<double>::infinity();
  for (const auto& sh : shapes) best_log_x = std::min(best_log_x, (sh.log_k - log_goal) / sh.power);
  if (best_log_x > log_cap) return false;

  const double x_needed = std::exp(best_log_x);
  const auto n_terms = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(x_needed - a)));
  if (n_terms > cfg.max_terms) return false;
  const double x = static_cast<double>(n_terms) + a;
  const double log_x = std::log(x);

  double log_bound = std::numeric_limits<double>::infinity();
  for (const auto& sh : shapes) log_bound = std::min(log_bound, sh.log_k - sh.power * log_x);

  // x^{1-s-ε} / (s-1+ε) + x^{-s-ε}/2 + Σ_j B_2j/(2j)! (s+ε)_{2j-1} x^{-s-ε-2j+1}
  const Complex x_pow = std::exp(-s * log_x);  // x^{-s}
  Jet tail = jet_mul(power_jet(x_pow * x, log_x, m), reciprocal_jet(s - 1.0, m), m);
  const Jet half = power_jet(0.5 * x_pow, log_x, m);
  for (int r = 0; r <= m; ++r) tail[r] += half[r];
  double tail_abs = jet_abs_sum(tail, m);

  Jet rising{};  // (s+ε)_{2j-1}, grown two factors per correction
  rising[0] = s;
  rising[1] = 1.0;
  Complex x_shift = x_pow / x;  // x^{-s-1}
  for (int j = 1; j <= corrections; ++j) {
    if (j > 1) {
      for (int extra : {2 * j - 3, 2 * j - 2}) {
        Jet lin{};
        lin[0] = s + static_cast<double>(extra);
        lin[1] = 1.0;
        rising = jet_mul(rising, lin, m);
      }
      x_shift /= x * x;
    }
    const double coeff = kBernoulli[static_cast<std::size_t>(j - 1)] / factorial(2 * j);
    Jet term = jet_mul(rising, power_jet(coeff * x_shift, log_x, m), m);
    for (int r = 0; r <= m; ++r) tail[r] += term[r];
    tail_abs += jet_abs_sum(term, m);
  }

  const double log_span = std::max(std::fabs(std::log(a)), std::log(std::max(1.0, x - 1.0)));
  const double log_factor = m == 0 ? 1.0 : std::pow(std::max(1.0, log_span), m);
  plan.direct_terms = n_terms;
  plan.corrections = corrections;
  plan.truncation = std::exp(log_bound);
  plan.rounding = 8.0 * kEps * (direct_abs_bound(s.real(), a, n_terms) * log_factor + factorial(m) * tail_abs);
  plan.tail = tail;
  return true;
}

void require_half_plane(Complex s, const char* who) {
  if (!is_finite(s)) throw DomainError(std::string(who) + ": argument must be finite");
  if (!(s.real() > 1.0 + kDomainEpsilon))
    throw DomainError(std::string(who) + ": requires Re(s) > 1, got Re(s) = " + std::to_string(s.real()));
}

SumResult finish(Complex value, double err, std::int64_t terms, Method method, const char* who) {
  if (!is_finite(value) || !std::isfinite(err))
    throw DomainError(std::string(who) + ": result not representable in double precision");
  return {value, err, terms, method};
}

// Σ_{n=1}^{N} c(n) n^{-s} for coefficients bounded by one in modulus, when a
// short direct sum already meets the target. Returns false otherwise.
template <class Coeff>
bool short_dirichlet_sum(Complex s, const EvalConfig& cfg, std::int64_t limit, Coeff&& coeff, SumResult& out) {
  const double sigma = s.real();
  // Σ_{n>N} n^{-σ} ≤ N^{1-σ}/(σ-1)
  const double log_needed = std::log(0.5 * cfg.target_abs_error * (sigma - 1.0)) / (1.0 - sigma);
  if (log_needed > std::log(static_cast<double>(limit))) return false;
  const auto n_terms = std::max<std::int64_t>(2, static_cast<std::int64_t>(std::ceil(std::exp(log_needed))));
  const auto sum = kernels::sum_range<Complex>(1, n_terms, [&](std::int64_t n) {
    return coeff(n) * std::exp(-s * std::log(static_cast<double>(n)));
  });
  const double tail = std::pow(static_cast<double>(n_terms), 1.0 - sigma) / (sigma - 1.0);
  out = {sum.value, tail + 8.0 * kEps * sum.abs_sum, n_terms, Method::direct()};
  return true;
}

}  // namespace

namespace {

SumResult hurwitz_impl(int m, Complex s, double a, const EvalConfig& cfg) {
  require_half_plane(s, "hurwitz_deriv");
  if (m < 0 || m > kMaxZetaDerivative) throw DomainError("derivative order must lie in [0, 8]");
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("Hurwitz shift a must be positive and finite");

  const int max_corrections = std::min(kMaxCorrections, cfg.euler_maclaurin_order / 2);
  Plan best;
  bool found = false;
  for (int corrections = 1; corrections <= max_corrections; ++corrections) {
    Plan candidate;
    if (!make_plan(m, s, a, corrections, cfg, candidate)) continue;
    if (!found || candidate.error() < best.error() ||
        (candidate.error() == best.error() && candidate.direct_terms < best.direct_terms)) {
      best = candidate;
      found = true;
    }
  }
  if (!found)
    throw ConvergenceError("Euler-Maclaurin bound cannot reach target " + std::to_string(cfg.target_abs_error) +
                           " within " + std::to_string(cfg.max_terms) + " terms");

  Complex value;
  if (m == 0) {
    const auto direct = kernels::sum_range<Complex>(0, best.direct_terms - 1, [&](std::int64_t n) {
      return std::exp(-s * std::log(static_cast<double>(n) + a));
    });
    value = direct.value + best.tail[0];
  } else {
    const auto direct = kernels::sum_range<Jet>(0, best.direct_terms - 1, [&](std::int64_t n) {
      const double log_n = std::log(static_cast<double>(n) + a);
      return power_jet(std::exp(-s * log_n), log_n, m);
    });
    value = factorial(m) * (direct.value[m] + best.tail[m]);
  }
  return finish(value, best.error(), best.direct_terms, Method::euler_maclaurin_tail(), "hurwitz_deriv");
}

}  // namespace

SumResult hurwitz_deriv(int m, Complex s, double a, const EvalConfig& cfg) {
  cfg.validate();
  return hurwitz_impl(m, s, a, cfg);
}

SumResult hurwitz_tail(int m, Complex s, double a, double abs_target, const EvalConfig& cfg) {
  cfg.validate();
  if (!(abs_target > 0.0) || !std::isfinite(abs_target)) throw ConfigError("hurwitz_tail: target must be positive");
  EvalConfig inner = cfg;
  inner.target_abs_error = std::min(cfg.target_abs_error, abs_target);
  return hurwitz_impl(m, s, a, inner);
}

SumResult zeta(Complex s, const EvalConfig& cfg) {
  require_half_plane(s, "zeta");
  return hurwitz_deriv(0, s, 1.0, cfg);
}

SumResult zeta_deriv(int m, Complex s, const EvalConfig& cfg) {
  require_half_plane(s, "zeta_deriv");
  return hurwitz_deriv(m, s, 1.0, cfg);
}

SumResult hurwitz_zeta(Complex s, double a, const EvalConfig& cfg) {
  require_half_plane(s, "hurwitz_zeta");
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_zeta: requires 0 < a <= 1");
  return hurwitz_deriv(0, s, a, cfg);
}

SumResult l_function(Complex s, const CharacterTable& chi, const EvalConfig& cfg) {
  cfg.validate();
  require_half_plane(s, "l_function");
  const std::int64_t q = chi.modulus;
  if (q < 1 || static_cast<std::int64_t>(chi.values.size()) != q)
    throw DomainError("l_function: character table size does not match its modulus");
  if (q <= 2000 && !is_valid_character(chi)) throw DomainError("l_function: table is not a Dirichlet character");
  if (q == 1) return zeta(s, cfg);

  SumResult quick;
  if (short_dirichlet_sum(s, cfg, std::max<std::int64_t>(64, 4 * q), chi, quick))
    return finish(quick.value, quick.abs_error_estimate, quick.terms_used, quick.method, "l_function");

  // q^{-s} Σ_r χ(r) ζ(s, r/q)
  const EvalConfig inner = cfg.tightened(1.0 / static_cast<double>(q));
  const Complex scale = std::exp(-s * std::log(static_cast<double>(q)));
  kernels::CompensatedSum<Complex> acc;
  double err = 0.0;
  double mag = 0.0;
  std::int64_t terms = 0;
  for (std::int64_t r = 1; r <= q; ++r) {
    const Complex c = chi(r);
    if (c == Complex(0.0)) continue;
    const auto h = hurwitz_deriv(0, s, static_cast<double>(r) / static_cast<double>(q), inner);
    acc.add(c * h.value);
    err += h.abs_error_estimate;
    mag += std::abs(h.value);
    terms += h.terms_used;
  }
  const double scale_abs = std::abs(scale);
  return finish(scale * acc.value(), scale_abs * (err + 4.0 * kEps * mag), terms, Method::euler_maclaurin_tail(),
                "l_function");
}

SumResult dirichlet_beta(Complex s, const EvalConfig& cfg) {
  cfg.validate();
  require_half_plane(s, "dirichlet_beta");
  static const CharacterTable chi4 = character(4, 1);
  SumResult quick;
  if (short_dirichlet_sum(s, cfg, 64, chi4, quick))
    return finish(quick.value, quick.abs_error_estimate, quick.terms_used, quick.method, "dirichlet_beta");

  // 4^{-s} [ζ(s, 1/4) - ζ(s, 3/4)]
  const EvalConfig inner = cfg.tightened(0.25);
  const auto h1 = hurwitz_deriv(0, s, 0.25, inner);
  const auto h3 = hurwitz_deriv(0, s, 0.75, inner);
  const Complex scale = std::exp(-s * std::log(4.0));
  const double scale_abs = std::abs(scale);
  const double err =
      scale_abs * (h1.abs_error_estimate + h3.abs_error_estimate + 4.0 * kEps * (std::abs(h1.value) + std::abs(h3.value)));
  return finish(scale * (h1.value - h3.value), err, h1.terms_used + h3.terms_used, Method::euler_maclaurin_tail(),
                "dirichlet_beta");
}

}  // namespace zs
