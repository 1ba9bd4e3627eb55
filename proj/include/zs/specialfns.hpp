#pragma once

// Zeta-type special functions on the half-plane Re(s) > 1.
//
// Everything funnels into hurwitz_deriv(): Euler–Maclaurin summation of
// Σ_{n≥0} (n+a)^(-s) with N direct terms and 2M Bernoulli corrections,
// differentiated term by term in s. The truncation error uses the bound
//   |R| ≤ 4 |(s)_{2M}| / (2π)^{2M} · (N+a)^{1-σ-2M} / (σ+2M-1)
// and, for derivatives, a Cauchy estimate of that bound on a circle around s.
// N is solved for directly from the bound, so no evaluation is wasted.

#include "zs/arith.hpp"
#include "zs/core.hpp"

namespace zs {

inline constexpr int kMaxZetaDerivative = 8;

/// Riemann ζ(s), Re(s) > 1.
SumResult zeta(Complex s, const EvalConfig& cfg = {});

/// ζ^(m)(s) = Σ (-ln n)^m n^(-s), 0 ≤ m ≤ 8.
SumResult zeta_deriv(int m, Complex s, const EvalConfig& cfg = {});

/// Hurwitz ζ(s, a) for 0 < a ≤ 1.
SumResult hurwitz_zeta(Complex s, double a, const EvalConfig& cfg = {});

/// β(s) = Σ_{n≥0} (-1)^n (2n+1)^(-s).
SumResult dirichlet_beta(Complex s, const EvalConfig& cfg = {});

/// L(s, χ) = Σ χ(n) n^(-s).
SumResult l_function(Complex s, const CharacterTable& chi, const EvalConfig& cfg = {});

/// ∂^m/∂s^m Σ_{n≥0} (n+a)^(-s) for any shift a > 0. Library-internal
/// building block for Dirichlet-series tails; the public Hurwitz entry point
/// restricts a to (0, 1].
SumResult hurwitz_deriv(int m, Complex s, double a, const EvalConfig& cfg = {});

/// hurwitz_deriv with an absolute target that may go below the config
/// floor. Meant for tails Σ_{n≥a} with a large, whose magnitude is far below
/// one, so that the floor would swamp the value.
SumResult hurwitz_tail(int m, Complex s, double a, double abs_target, const EvalConfig& cfg = {});

}  // namespace zs
