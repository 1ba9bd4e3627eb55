#include "zs/poles.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "zs/series.hpp"

namespace zs {

namespace {

constexpr int kFirstExponent = 2;
constexpr int kLastExponent = 6;

void require_spiral_domain(Complex s, std::int64_t count) {
  if (!is_finite(s) || !(s.real() > 1.0)) throw DomainError("poles: requires finite s with Re(s) > 1");
  if (count < 1) throw DomainError("poles: count must be at least 1");
}

Complex n_pow(std::int64_t n, Complex s) { return std::exp(s * std::log(static_cast<double>(n))); }

}  // namespace

std::vector<PoleRecord> pole_locations(Complex s, std::int64_t count) {
  require_spiral_domain(s, count);
  std::vector<PoleRecord> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t n = 1; n <= count; ++n) {
    PoleRecord r;
    r.n = n;
    r.location = -n_pow(n, s);
    out.push_back(r);
  }
  return out;
}

PoleRecord residue(const DirichletSpec& spec, Complex s, std::int64_t n, const ResidueVariant& variant,
                   const EvalConfig& cfg, Complex direction) {
  cfg.validate();
  if (n < 1) throw DomainError("residue: n must be at least 1");
  if (!is_finite(direction)) throw DomainError("residue: direction must be finite");

  DirichletSpec effective = spec;
  double sign = 1.0;
  if (variant.kind == ResidueVariant::Kind::weighted) {
    if (spec.name != "ones") throw ConfigError("residue: weighted variants are defined for the ones spec only");
    if (variant.m < 0 || variant.m > kMaxSeriesDerivative) throw ConfigError("residue: log power must lie in [0, 6]");
    effective = specs::weighted(variant.q, variant.m);
    sign = variant.m % 2 == 0 ? 1.0 : -1.0;
  }
  effective.require_domain(s);

  const Complex a = effective.coeff(n);
  if (a == Complex(0.0))
    throw NotAPoleError("residue: a_" + std::to_string(n) + " = 0, so -n^s is not a pole");

  const Complex ns = n_pow(n, s);
  const double scale = std::abs(ns);
  const Complex dir = direction == Complex(0.0) ? ns / scale : direction / std::abs(direction);

  // neighbours close enough to bend the sampled values get removed exactly
  std::vector<std::int64_t> subtract;
  for (std::int64_t k : {n - 1, n + 1}) {
    if (k < 1) continue;
    const double d = std::abs(n_pow(k, s) - ns);
    if (std::pow(10.0, -kFirstExponent) * scale >= 0.1 * d && effective.coeff(k) != Complex(0.0))
      subtract.push_back(k);
  }

  std::vector<std::vector<Complex>> table;
  for (int j = kFirstExponent; j <= kLastExponent; ++j) {
    const double rho = std::pow(10.0, -j) * scale;
    const Complex z = -ns + rho * dir;
    Complex g = lhs_partial_fraction(effective, s, z, cfg).value;
    for (std::int64_t k : subtract) g -= effective.coeff(k) / (n_pow(k, s) + z);
    std::vector<Complex> row{(ns + z) * g};
    for (std::size_t i = 1; i <= table.size(); ++i) {
      const double factor = std::pow(10.0, static_cast<double>(i)) - 1.0;
      row.push_back(row[i - 1] + (row[i - 1] - table.back()[i - 1]) / factor);
    }
    table.push_back(std::move(row));
  }

  PoleRecord r;
  r.n = n;
  r.location = -ns;
  r.expected_residue = sign * a;
  r.measured_residue = sign * table.back().back();
  if (!is_finite(r.measured_residue)) throw ConvergenceError("residue: extrapolation produced a non-finite value");
  r.abs_error = std::abs(r.expected_residue - r.measured_residue);
  return r;
}

std::vector<SpiralRow> spiral_export(Complex s, std::int64_t count) {
  require_spiral_domain(s, count);
  std::vector<SpiralRow> rows;
  rows.reserve(static_cast<std::size_t>(count));
  for (std::int64_t n = 1; n <= count; ++n) {
    const Complex loc = -n_pow(n, s);
    const double nominal = std::numbers::pi + s.imag() * std::log(static_cast<double>(n));
    const double raw = std::arg(loc);
    const double arg = raw + 2.0 * std::numbers::pi * std::round((nominal - raw) / (2.0 * std::numbers::pi));
    rows.push_back({n, loc.real(), loc.imag(), std::abs(loc), arg});
  }
  return rows;
}

SpiralFit fit_spiral(const std::vector<SpiralRow>& rows) {
  if (rows.size() < 2) throw DomainError("fit_spiral: need at least two rows");
  auto slope = [&](auto y_of) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : rows) {
      const double x = std::log(static_cast<double>(r.n));
      const double y = y_of(r);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double k = static_cast<double>(rows.size());
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
  };
  return {slope([](const SpiralRow& r) { return std::log(r.abs); }),
          slope([](const SpiralRow& r) { return r.arg - std::numbers::pi; })};
}

}  // namespace zs
