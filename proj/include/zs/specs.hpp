#pragma once

// Coefficient data for the identities: ordinary and general Dirichlet
// series, power series vanishing at zero, and (aₙ, bₙ) sequence pairs.
//
// Every spec carries an absolute tail bound next to its values. The series
// engines lean on those bounds for their truncation estimates, so a factory
// that overstates convergence breaks every error estimate downstream.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "zs/arith.hpp"
#include "zs/core.hpp"

namespace zs {

/// Bound on Σ_{n>N} n^(-tau) ln^m(n), tau > 1.
double power_log_tail_bound(std::int64_t N, double tau, int m = 0);

/// f(s) = Σ aₙ n^(-s), absolutely convergent for Re(s) > sigma_a.
struct DirichletSpec {
  std::string name;
  std::function<Complex(std::int64_t)> coeff;
  double sigma_a = 1.0;
  /// Σ_{n>N} |aₙ| n^(-σ) ≤ abs_tail(N, σ) for σ > sigma_a. Required.
  std::function<double(std::int64_t, double)> abs_tail;
  /// Closed form of f; when empty, value() sums directly.
  std::function<SumResult(Complex, const EvalConfig&)> closed_form;
  /// Σ_{n>N} aₙ n^(-s) to an absolute target that may sit below the config
  /// floor. When empty, tail() subtracts a partial sum from value().
  std::function<SumResult(std::int64_t, Complex, double, const EvalConfig&)> tail_form;

  /// Throws DomainError unless Re(s) > sigma_a + ε.
  void require_domain(Complex s) const;
  SumResult value(Complex s, const EvalConfig& cfg = {}) const;
  SumResult partial(std::int64_t N, Complex s) const;
  SumResult tail(std::int64_t N, Complex s, const EvalConfig& cfg = {}) const {
    return tail(N, s, cfg.target_abs_error, cfg);
  }
  /// Tail to an explicit absolute target. Short direct sums are used when
  /// they reach it; otherwise tail_form or value() minus a partial sum.
  SumResult tail(std::int64_t N, Complex s, double abs_target, const EvalConfig& cfg) const;
  /// Σ |aₙ| n^(-σ).
  double abs_value_bound(double sigma) const;
};

namespace specs {

DirichletSpec ones();
DirichletSpec mobius();
DirichletSpec von_mangoldt();
DirichletSpec totient();
DirichletSpec dirichlet_character(std::int64_t q, std::int64_t index);
DirichletSpec beta();
/// aₙ = n^q lnᵐ(n), so f(s) = (-1)^m ζ^(m)(s - q).
DirichletSpec weighted(Complex q, int m);
/// Same series with aₙ = 0 for n ≤ count.
DirichletSpec drop_leading(const DirichletSpec& base, std::int64_t count);

/// Registry names: ones, mobius, von-mangoldt, totient, beta, char:q:idx.
/// Throws ConfigError for anything else.
DirichletSpec from_name(const std::string& name);
std::vector<std::string> registry_names();

}  // namespace specs

/// Shared sieve behind the arithmetic specs; built on first use.
const ArithSieve& shared_sieve();

/// f(z) = Σ_{k≥1} a_k z^k with radius R.
struct PowerSeriesSpec {
  std::string name;
  std::function<Complex(int)> coeff;
  double radius = 0.0;
  /// f(z) for |z| ≤ R where defined.
  std::function<Complex(Complex)> eval;
  /// Σ_{k≥K} |a_k| x^k for 0 ≤ x < R.
  std::function<double(int, double)> abs_tail;
};

namespace power_series {

PowerSeriesSpec exp_minus_one();
PowerSeriesSpec log1p();
PowerSeriesSpec sine();
PowerSeriesSpec identity();
/// z/(1-z), all coefficients one.
PowerSeriesSpec geometric();

}  // namespace power_series

/// D(s) = Σ exp(-λₙ s) with λₙ strictly increasing to infinity.
struct GeneralDirichletSpec {
  std::string name;
  std::function<double(std::int64_t)> lambda;
  double sigma_a = 0.0;
  std::function<SumResult(Complex, const EvalConfig&)> value;
  /// Σ_{n>N} exp(-λₙ s) to an absolute target.
  std::function<SumResult(std::int64_t, Complex, double, const EvalConfig&)> tail;
  std::function<double(std::int64_t, double)> abs_tail;

  void require_domain(Complex s) const;
};

namespace general_dirichlet {

/// λₙ = ln n, D = ζ.
GeneralDirichletSpec logarithmic();
/// λₙ = c n, D(s) = 1/(e^{cs} - 1).
GeneralDirichletSpec linear(double c);

}  // namespace general_dirichlet

/// Pairs (aₙ, bₙ) with |bₙ| nondecreasing to infinity and Σ |aₙ/bₙ| < ∞.
struct SequenceSpec {
  std::string name;
  std::function<Complex(std::int64_t)> a;
  std::function<Complex(std::int64_t)> b;
  /// Σ_{n>N} aₙ bₙ^(-(k+1)) to an absolute target.
  std::function<SumResult(std::int64_t, int, double, const EvalConfig&)> coeff_tail;
  /// Σ_{n>N} |aₙ| |bₙ|^(-(k+1)), nonincreasing in k.
  std::function<double(std::int64_t, int)> abs_tail;

  /// Σ_n aₙ bₙ^(-(k+1)).
  SumResult coefficient(int k, const EvalConfig& cfg = {}) const { return coefficient(k, cfg.target_abs_error, cfg); }
  /// Same to an explicit absolute target, which may sit below the config floor.
  SumResult coefficient(int k, double abs_target, const EvalConfig& cfg) const;
};

namespace sequences {

/// aₙ from the spec, bₙ = nˢ.
SequenceSpec from_dirichlet(const DirichletSpec& spec, Complex s);

/// aₙ = 1, bₙ = n^d + c₁ n^{d-1} + ... + c_d with real c and d ≥ 2.
/// `lower` holds c₁..c_d. Throws ConfigError when some bₙ vanishes or
/// |bₙ| is not nondecreasing on the checked range.
SequenceSpec monic_polynomial(int degree, const std::vector<double>& lower);

}  // namespace sequences

// Empirical checks of the spec invariants over n = 1..count.
bool lambda_strictly_increasing(const GeneralDirichletSpec& gd, std::int64_t count);
bool moduli_nondecreasing(const SequenceSpec& seq, std::int64_t count);
/// Partial sums of |terms| over n ≤ 2^j stabilise to `tol` relative.
bool cauchy_stabilizes(const std::function<double(std::int64_t)>& abs_term, std::int64_t limit, double tol);

}  // namespace zs
