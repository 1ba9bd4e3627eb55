#pragma once

// Both sides of the partial-fraction identities.
//
// Left-hand sides sum N terms directly, N chosen so that |z| is small against
// the first omitted denominator, and expand the rest as a power series in z
// whose coefficients are tails of the underlying Dirichlet (or general
// Dirichlet, or sequence) series. Right-hand sides sum the power series in z
// with series values as coefficients; at |z| = 1 (or R) they need an explicit
// Cesàro or Abel method and never pick one on their own.

#include <vector>

#include "zs/core.hpp"
#include "zs/specs.hpp"
#include "zs/summation.hpp"

namespace zs {

inline constexpr int kMaxSeriesDerivative = 6;

struct IdentityPair {
  SumResult lhs;
  SumResult rhs;
};

// --- Σ aₙ/(nˢ+z)^{m+1} = Σ_j (-1)^j C(j+m,m) f((j+m+1)s) z^j ---------------

SumResult lhs_partial_fraction(const DirichletSpec& spec, Complex s, Complex z, const EvalConfig& cfg = {});
SumResult lhs_derivative(const DirichletSpec& spec, Complex s, Complex z, int m, const EvalConfig& cfg = {});

SumResult rhs_zeta_series(const DirichletSpec& spec, Complex s, Complex z,
                          const SummationMethod& method = SummationMethod::direct(), const EvalConfig& cfg = {});
SumResult rhs_derivative(const DirichletSpec& spec, Complex s, Complex z, int m,
                         const SummationMethod& method = SummationMethod::direct(), const EvalConfig& cfg = {});

/// Σ n^q lnᵐ(n)/(nᵖ+z). Throws DomainError unless Re(q) < Re(p) - 1.
SumResult lhs_weighted_series(int m, Complex q, Complex p, Complex z, const EvalConfig& cfg = {});
/// (-1)^m Σ_k (-1)^k ζ^(m)(pk+p-q) z^k.
SumResult rhs_weighted_series(int m, Complex q, Complex p, Complex z,
                              const SummationMethod& method = SummationMethod::direct(), const EvalConfig& cfg = {});

// --- Σ aₙ Π_i 1/(n^{βᵢ} + αᵢ z) ------------------------------------------------

struct Factor {
  Complex beta;
  Complex alpha;
};

SumResult multi_factor_lhs(const std::vector<Factor>& factors, const DirichletSpec& spec, Complex z,
                           const EvalConfig& cfg = {});
SumResult multi_factor_rhs(const std::vector<Factor>& factors, const DirichletSpec& spec, Complex z,
                           const EvalConfig& cfg = {});
IdentityPair multi_factor_series(const std::vector<Factor>& factors, const DirichletSpec& spec, Complex z,
                                 const EvalConfig& cfg = {});

// --- Σₙ f(z/nˢ) = Σₖ a_k ζ(ks) zᵏ ------------------------------------------------

SumResult compose_lhs(const PowerSeriesSpec& f, Complex s, Complex z, const EvalConfig& cfg = {});
SumResult compose_rhs(const PowerSeriesSpec& f, Complex s, Complex z,
                      const SummationMethod& method = SummationMethod::direct(), const EvalConfig& cfg = {});
IdentityPair compose_series(const PowerSeriesSpec& f, Complex s, Complex z,
                            const SummationMethod& method = SummationMethod::direct(), const EvalConfig& cfg = {});

// --- Σ bₙ n^{-s'} f(z/nˢ) = Σ a_k g(ks+s') zᵏ --------------------------------------

SumResult dirichlet_compose_lhs(const PowerSeriesSpec& f, const DirichletSpec& g, Complex s, Complex s_prime, Complex z,
                                const EvalConfig& cfg = {});
SumResult dirichlet_compose_rhs(const PowerSeriesSpec& f, const DirichletSpec& g, Complex s, Complex s_prime, Complex z,
                                const EvalConfig& cfg = {});
IdentityPair dirichlet_compose(const PowerSeriesSpec& f, const DirichletSpec& g, Complex s, Complex s_prime, Complex z,
                               const EvalConfig& cfg = {});

// --- Σ f(z e^{-λₙ s}) = Σ a_k D(ks) zᵏ ---------------------------------------------

SumResult general_dirichlet_lhs(const PowerSeriesSpec& f, const GeneralDirichletSpec& gd, Complex s, Complex z,
                                const EvalConfig& cfg = {});
SumResult general_dirichlet_rhs(const PowerSeriesSpec& f, const GeneralDirichletSpec& gd, Complex s, Complex z,
                                const EvalConfig& cfg = {});
IdentityPair general_dirichlet_compose(const PowerSeriesSpec& f, const GeneralDirichletSpec& gd, Complex s, Complex z,
                                       const EvalConfig& cfg = {});

// --- Σ aₙ/(bₙ-z)^{m+1} = Σ_{k≥m} C(k,m) (Σ aₙ/bₙ^{k+1}) z^{k-m} -------------------

SumResult sequence_lhs(const SequenceSpec& seq, Complex z, int m = 0, const EvalConfig& cfg = {});
SumResult sequence_rhs(const SequenceSpec& seq, Complex z, int m = 0,
                       const SummationMethod& method = SummationMethod::direct(), const EvalConfig& cfg = {});
IdentityPair sequence_series(const SequenceSpec& seq, Complex z, int m = 0,
                             const SummationMethod& method = SummationMethod::direct(), const EvalConfig& cfg = {});

}  // namespace zs
