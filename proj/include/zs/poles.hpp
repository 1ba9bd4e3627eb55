#pragma once

// Poles of g(z) = Σ aₙ/(nˢ+z) at z = -nˢ and their residues, measured from
// the left-hand side, which is valid off the poles everywhere.

#include <cstdint>
#include <vector>

#include "zs/core.hpp"
#include "zs/specs.hpp"

namespace zs {

struct PoleRecord {
  std::int64_t n = 0;
  Complex location{};  // -exp(s ln n)
  Complex expected_residue{};
  Complex measured_residue{};
  double abs_error = 0.0;
};

struct ResidueVariant {
  enum class Kind { plain, weighted };
  Kind kind = Kind::plain;
  Complex q = 0.0;
  int m = 0;

  static ResidueVariant plain() { return {}; }
  /// Residue of Σ(-1)^k ζ^(m)(sk+s-q) z^k at -nˢ, expected (-1)^m n^q lnᵐ n.
  static ResidueVariant weighted(Complex q, int m) { return {Kind::weighted, q, m}; }
};

/// Locations -nˢ for n = 1..count. Throws DomainError unless Re(s) > 1 and count ≥ 1.
std::vector<PoleRecord> pole_locations(Complex s, std::int64_t count);

/// Measures lim (z+nˢ) g(z) along z = -nˢ + ρⱼ·d, ρⱼ = 10^-j |nˢ|, j = 2..6,
/// with Richardson extrapolation in ρ. The default direction points from the
/// pole to the origin. Weighted variants need the all-ones spec.
PoleRecord residue(const DirichletSpec& spec, Complex s, std::int64_t n,
                   const ResidueVariant& variant = ResidueVariant::plain(), const EvalConfig& cfg = {},
                   Complex direction = 0.0);

struct SpiralRow {
  std::int64_t n = 0;
  double re = 0.0;
  double im = 0.0;
  double abs = 0.0;
  double arg = 0.0;  // unwrapped, continuous in n
};

std::vector<SpiralRow> spiral_export(Complex s, std::int64_t count);

/// Least-squares slopes of ln|location| and arg(location) - π against ln n.
struct SpiralFit {
  double modulus_slope = 0.0;
  double arg_slope = 0.0;
};

SpiralFit fit_spiral(const std::vector<SpiralRow>& rows);

}  // namespace zs
