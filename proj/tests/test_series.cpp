#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zs/series.hpp"
#include "zs/specialfns.hpp"

using namespace zs;

namespace {

const DirichletSpec& ones() {
  static const DirichletSpec d = specs::ones();
  return d;
}

bool agree(const SumResult& a, const SumResult& b, double slack = 1e-10) {
  return std::abs(a.value - b.value) <= a.abs_error_estimate + b.abs_error_estimate + slack;
}

bool agree(const IdentityPair& p, double slack = 1e-10) { return agree(p.lhs, p.rhs, slack); }

// Σ aₙ/(nˢ+z) over 10⁶ terms, tail Σ_{n>N} n^-s from the zeta oracle.
Complex brute_partial_fraction(Complex s, Complex z) {
  const std::int64_t N = 1'000'000;
  const Complex tail = oracle::zeta(s, 4'000'000) - oracle::kahan_sum(1, N, [&](std::int64_t n) { return oracle::npow(n, s); });
  return oracle::partial_fraction([](std::int64_t) { return Complex(1.0); }, s, z, N, tail);
}

}  // namespace

TEST_CASE("order-p examples") {
  CHECK(std::abs(lhs_partial_fraction(ones(), 2.0, 0.0).value - ref::zeta2) < 1e-13);
  CHECK(std::abs(lhs_partial_fraction(ones(), 2.0, 0.25).value - ref::sum_n2_plus_quarter) < 1e-12);
  CHECK(std::abs(lhs_partial_fraction(ones(), 4.0, 1.0).value - ref::sum_n4_plus_1) < 1e-12);
  CHECK(std::abs(rhs_zeta_series(ones(), 2.0, -0.25).value - 2.0) < 1e-12);
  CHECK(std::abs(rhs_zeta_series(ones(), 2.0, -1.0 / 16).value - (8.0 - 2.0 * ref::pi)) < 1e-12);
  CHECK(std::abs(rhs_zeta_series(ones(), 2.0, 0.0).value - ref::zeta2) < 1e-13);
  const SumResult c1 = rhs_zeta_series(ones(), 2.0, 1.0, SummationMethod::cesaro(1));
  CHECK(std::abs(c1.value - ref::sum_n2_plus_1) < 1e-10);
  CHECK(c1.method == Method::cesaro(1));
}

TEST_CASE("left-hand side against brute force") {
  for (const Complex z : {Complex(0.3, 0.4), Complex(-0.7, 0.1), Complex(5.0, -3.0), Complex(-50.5, 0.0)}) {
    const SumResult r = lhs_partial_fraction(ones(), Complex(2.2, 0.5), z);
    CHECK(std::abs(r.value - brute_partial_fraction(Complex(2.2, 0.5), z)) < 1e-10);
    CHECK(r.method == Method::euler_maclaurin_tail());
  }
}

TEST_CASE("weighted series") {
  CHECK(agree(lhs_weighted_series(0, 0.0, 2.0, 0.5), rhs_zeta_series(ones(), 2.0, 0.5)));
  CHECK(std::abs(lhs_weighted_series(0, 1.0, 3.0, 0.5).value - ref::sum_n_over_n3_half) < 1e-12);
  CHECK(std::abs(rhs_weighted_series(0, 1.0, 3.0, 0.5).value - ref::sum_n_over_n3_half) < 1e-11);
  CHECK(std::abs(lhs_weighted_series(1, 0.0, 2.0, 0.5).value - ref::sum_log_over_n2_half) < 1e-12);
  CHECK(std::abs(rhs_weighted_series(1, 0.0, 2.0, 0.5).value - ref::sum_log_over_n2_half) < 1e-11);
  CHECK_THROWS_AS(lhs_weighted_series(0, 1.0, 2.0, 0.5), DomainError);
  CHECK_THROWS_AS(rhs_weighted_series(0, 1.5, 2.0, 0.5), DomainError);
}

TEST_CASE("derivatives") {
  CHECK(lhs_derivative(ones(), 2.0, 0.3, 0).value == lhs_partial_fraction(ones(), 2.0, 0.3).value);
  CHECK(rhs_derivative(ones(), 2.0, 0.3, 0).value == rhs_zeta_series(ones(), 2.0, 0.3).value);
  CHECK(std::abs(lhs_derivative(ones(), 2.0, 1.0, 1).value - ref::sum_n2_plus_1_squared) < 1e-12);
  const SumResult c2 = rhs_derivative(ones(), 2.0, 1.0, 1, SummationMethod::cesaro(2));
  CHECK(std::abs(c2.value - ref::sum_n2_plus_1_squared) < 1e-10);
  CHECK(agree(lhs_derivative(ones(), 2.0, 0.3, 2), rhs_derivative(ones(), 2.0, 0.3, 2)));
  // d/dz of the left side, by central differences
  auto g = [](Complex z) { return lhs_partial_fraction(ones(), 2.5, z).value; };
  CHECK(std::abs(-oracle::central_difference(g, 0.4, 1e-4) - lhs_derivative(ones(), 2.5, 0.4, 1).value) < 1e-7);
  CHECK_THROWS_AS(lhs_derivative(ones(), 2.0, 0.3, 7), DomainError);
}

TEST_CASE("multi-factor products") {
  const std::vector<Factor> one{{2.0, 1.0}};
  CHECK(std::abs(multi_factor_lhs(one, ones(), 0.4).value - lhs_partial_fraction(ones(), 2.0, 0.4).value) < 1e-13);
  CHECK(std::abs(multi_factor_rhs(one, ones(), 0.4).value - rhs_zeta_series(ones(), 2.0, 0.4).value) < 1e-12);
  const std::vector<Factor> twice{{2.0, 1.0}, {2.0, 1.0}};
  CHECK(agree(multi_factor_lhs(twice, ones(), 0.3), lhs_derivative(ones(), 2.0, 0.3, 1)));
  CHECK(agree(multi_factor_rhs(twice, ones(), 0.3), lhs_derivative(ones(), 2.0, 0.3, 1)));
  const IdentityPair mixed = multi_factor_series({{2.0, 1.0}, {3.0, -1.0}}, ones(), 0.4);
  CHECK(std::abs(mixed.lhs.value - mixed.rhs.value) < 1e-9);
  // a fixed factor contributes its exponent only
  const IdentityPair fixed = multi_factor_series({{2.0, 1.0}, {1.5, 0.0}}, ones(), 0.5);
  CHECK(agree(fixed));
  CHECK(agree(fixed.lhs, lhs_partial_fraction(specs::weighted(-1.5, 0), 2.0, 0.5)));
  CHECK_THROWS_AS(multi_factor_series({{2.0, 2.0}}, ones(), 0.5), RadiusError);
  CHECK_THROWS_AS(multi_factor_series({{1.0, 1.0}}, ones(), 0.1), DomainError);
  CHECK_NOTHROW(multi_factor_lhs({{2.0, 2.0}}, ones(), 0.5));
}

TEST_CASE("composition") {
  const IdentityPair e = compose_series(power_series::exp_minus_one(), 2.0, 1.0);
  CHECK(std::abs(e.lhs.value - ref::sum_exp_n2) < 1e-12);
  CHECK(std::abs(e.rhs.value - ref::sum_exp_n2) < 1e-12);
  const IdentityPair s = compose_series(power_series::sine(), 2.0, 0.5);
  CHECK(std::abs(s.lhs.value - ref::sum_sin_half_n2) < 1e-12);
  CHECK(std::abs(s.rhs.value - ref::sum_sin_half_n2) < 1e-12);
  const IdentityPair zero = compose_series(power_series::identity(), {3.0, 2.0}, 0.0);
  CHECK(zero.lhs.value == Complex(0.0));
  CHECK(zero.rhs.value == Complex(0.0));
  // boundary of log1p: Abel on the right
  const SumResult ab = compose_rhs(power_series::log1p(), 2.0, 1.0, SummationMethod::abel());
  CHECK(std::abs(ab.value - ref::log_sinh_pi_over_pi) < 1e-9);
  CHECK(std::abs(compose_lhs(power_series::log1p(), 2.0, 1.0).value - ref::log_sinh_pi_over_pi) < 1e-12);
  CHECK_THROWS_AS(compose_rhs(power_series::log1p(), 2.0, 1.0), BoundaryError);
  CHECK_THROWS_AS(compose_rhs(power_series::log1p(), 2.0, 1.5), RadiusError);
  CHECK_THROWS_AS(compose_lhs(power_series::log1p(), 2.0, 1.5), RadiusError);
  // relaxed half-plane when a₁ = 0
  CHECK_THROWS_AS(compose_series(power_series::exp_minus_one(), 0.8, 0.5), DomainError);
  PowerSeriesSpec cosh_minus_one{"cosh-1", [](int k) { return Complex(k % 2 == 0 ? std::exp(-std::lgamma(k + 1.0)) : 0.0); },
                                 std::numeric_limits<double>::infinity(), [](Complex z) { return std::cosh(z) - 1.0; },
                                 power_series::exp_minus_one().abs_tail};
  const IdentityPair relaxed = compose_series(cosh_minus_one, 0.8, 0.5);
  CHECK(agree(relaxed, 1e-9));
}

TEST_CASE("Dirichlet composition") {
  const IdentityPair same = dirichlet_compose(power_series::exp_minus_one(), ones(), 2.0, 0.0, 0.7);
  const IdentityPair base = compose_series(power_series::exp_minus_one(), 2.0, 0.7);
  CHECK(agree(same.lhs, base.lhs));
  CHECK(agree(same.rhs, base.rhs));
  const IdentityPair lin = dirichlet_compose(power_series::identity(), specs::beta(), 2.0, 1.0, 0.5);
  CHECK(std::abs(lin.lhs.value - 0.5 * ref::beta3) < 1e-12);
  CHECK(std::abs(lin.rhs.value - 0.5 * ref::beta3) < 1e-12);
  const IdentityPair mu = dirichlet_compose(power_series::exp_minus_one(), specs::mobius(), 2.0, 2.0, 1.0);
  CHECK(std::abs(mu.lhs.value - ref::sum_mu_exp) < 1e-12);
  CHECK(std::abs(mu.rhs.value - ref::sum_mu_exp) < 1e-12);
  CHECK_THROWS_AS(dirichlet_compose(power_series::exp_minus_one(), ones(), 1.0, 1.0, 0.5), DomainError);
  CHECK_THROWS_AS(dirichlet_compose(power_series::exp_minus_one(), specs::totient(), 1.5, 0.2, 0.5), DomainError);
}

TEST_CASE("general Dirichlet composition") {
  const auto lg = general_dirichlet::logarithmic();
  const IdentityPair a = general_dirichlet_compose(power_series::sine(), lg, 2.0, 0.6);
  const IdentityPair b = compose_series(power_series::sine(), 2.0, 0.6);
  CHECK(std::abs(a.lhs.value - b.lhs.value) < 1e-13);
  CHECK(std::abs(a.rhs.value - b.rhs.value) < 1e-13);
  const auto lin = general_dirichlet::linear(1.0);
  const IdentityPair g = general_dirichlet_compose(power_series::identity(), lin, 1.0, 0.5);
  CHECK(std::abs(g.lhs.value - 0.5 / (std::exp(1.0) - 1.0)) < 1e-14);
  CHECK(std::abs(g.rhs.value - 0.5 / (std::exp(1.0) - 1.0)) < 1e-14);
  const IdentityPair e = general_dirichlet_compose(power_series::exp_minus_one(), lin, 1.0, 1.0);
  CHECK(std::abs(e.lhs.value - ref::sum_exp_exp) < 1e-13);
  CHECK(std::abs(e.rhs.value - ref::sum_exp_exp) < 1e-12);
  CHECK_THROWS_AS(general_dirichlet_compose(power_series::sine(), lg, 1.0, 0.5), DomainError);
}

TEST_CASE("sequences") {
  const SequenceSpec poly = sequences::monic_polynomial(2, {1.0, 0.0});
  const IdentityPair p = sequence_series(poly, 1.0);
  const double expected = 1.0 + std::sqrt(5.0) / 5.0 * ref::pi * std::tan(ref::pi * std::sqrt(5.0) / 2.0);
  CHECK(std::abs(p.lhs.value - expected) < 1e-11);
  CHECK(std::abs(p.rhs.value - expected) < 1e-11);
  CHECK(std::abs(sequence_lhs(poly, 0.0).value - sequence_rhs(poly, 0.0).value) < 1e-13);
  // bₙ = n², z → -z reproduces Σ 1/(n²+1)
  const SequenceSpec sq = sequences::from_dirichlet(ones(), 2.0);
  const SumResult c = sequence_rhs(sq, -1.0, 0, SummationMethod::cesaro(1));
  CHECK(std::abs(c.value - ref::sum_n2_plus_1) < 1e-10);
  CHECK_THROWS_AS(sequence_rhs(sq, -1.0), BoundaryError);
  CHECK_THROWS_AS(sequence_rhs(sq, 1.0, 0, SummationMethod::cesaro(1)), PoleError);
  CHECK_THROWS_AS(sequence_rhs(sq, 1.2), RadiusError);
  CHECK_THROWS_AS(sequence_lhs(sq, 4.0), PoleError);
}

TEST_CASE("sign convention between the sequence and partial-fraction forms") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (const auto& name : {"ones", "mobius", "beta"}) {
    const DirichletSpec d = specs::from_name(name);
    for (int i = 0; i < 5; ++i) {
      const Complex s{2.0 + std::fabs(u(rng)), u(rng)};
      const Complex z{3.0 * u(rng), 3.0 * u(rng)};
      const SumResult a = sequence_lhs(sequences::from_dirichlet(d, s), -z);
      const SumResult b = lhs_partial_fraction(d, s, z);
      CHECK(std::abs(a.value - b.value) < 1e-10);
    }
  }
}

TEST_CASE("randomized identity equivalence") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::vector<std::string> names{"ones", "mobius", "von-mangoldt", "beta", "char:7:3"};
  for (int i = 0; i < 50; ++i) {
    const DirichletSpec d = specs::from_name(names[static_cast<std::size_t>(i) % names.size()]);
    const Complex s{1.3 + 3.0 * u(rng), 6.0 * u(rng) - 3.0};
    const Complex z = std::polar(0.9 * u(rng), 2.0 * ref::pi * u(rng));
    const SumResult l = lhs_partial_fraction(d, s, z), r = rhs_zeta_series(d, s, z);
    INFO(d.name, " s=", s.real(), "+", s.imag(), "i z=", z.real(), "+", z.imag(), "i");
    CHECK(agree(l, r));
  }
}

TEST_CASE("truncation monotonicity") {
  EvalConfig small, large;
  small.max_terms = 4096;
  large.max_terms = 8192;
  for (const Complex z : {Complex(0.5), Complex(0.2, 0.7), Complex(-0.8)}) {
    CHECK(lhs_partial_fraction(ones(), 2.0, z, large).abs_error_estimate <=
          lhs_partial_fraction(ones(), 2.0, z, small).abs_error_estimate);
    CHECK(rhs_zeta_series(ones(), 2.0, z, {}, large).abs_error_estimate <=
          rhs_zeta_series(ones(), 2.0, z, {}, small).abs_error_estimate);
  }
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(rhs_zeta_series(ones(), 2.0, 1.01), RadiusError);
  CHECK_THROWS_AS(rhs_zeta_series(ones(), 2.0, Complex(0.0, 1.0)), BoundaryError);
  CHECK_THROWS_AS(rhs_zeta_series(ones(), 2.0, -1.0, SummationMethod::cesaro(1)), PoleError);
  CHECK_THROWS_AS(lhs_partial_fraction(ones(), 2.0, -4.0), PoleError);
  CHECK_THROWS_AS(lhs_partial_fraction(ones(), 2.0, -4.0 * (1.0 + 1e-11)), PoleError);
  CHECK_NOTHROW(lhs_partial_fraction(ones(), 2.0, -4.0 * (1.0 + 1e-6)));
  CHECK_THROWS_AS(lhs_partial_fraction(ones(), 1.0, 0.5), DomainError);
  // μ(4) = 0: no pole at -16
  CHECK_NOTHROW(lhs_partial_fraction(specs::mobius(), 2.0, -16.0));
  CHECK_THROWS_AS(lhs_partial_fraction(ones(), 2.0, Complex(std::nan(""), 0.0)), DomainError);
}

TEST_CASE("pure evaluators are safe to call concurrently") {
  std::vector<Complex> values(64);
#pragma omp parallel for
  for (int i = 0; i < 64; ++i) values[static_cast<std::size_t>(i)] = lhs_partial_fraction(specs::mobius(), 2.0, 0.01 * i).value;
  for (int i = 0; i < 64; ++i)
    CHECK(values[static_cast<std::size_t>(i)] == lhs_partial_fraction(specs::mobius(), 2.0, 0.01 * i).value);
}
