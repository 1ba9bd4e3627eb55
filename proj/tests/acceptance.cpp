// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "zs/identities.hpp"
#include "zs/poles.hpp"
#include "zs/series.hpp"
#include "zs/specialfns.hpp"
#include "zs/summation.hpp"

using namespace zs;

namespace {

// Accumulates the worst observed error for one criterion.
struct Check {
  bool ok = true;
  double worst = 0.0;
  std::ostringstream notes;

  void close(const char* what, Complex got, Complex want, double tol) {
    const double d = std::abs(got - want);
    worst = std::max(worst, d);
    if (!(d <= tol)) {
      ok = false;
      notes << " [" << what << ": |diff| = " << d << " > " << tol << "]";
    }
  }
  void expect(const char* what, bool cond) {
    if (!cond) {
      ok = false;
      notes << " [" << what << " failed]";
    }
  }
  template <class E, class F>
  void throws(const char* what, F&& f) {
    try {
      f();
    } catch (const E&) {
      return;
    } catch (const std::exception& e) {
      ok = false;
      notes << " [" << what << ": wrong error " << e.what() << "]";
      return;
    }
    ok = false;
    notes << " [" << what << ": no error]";
  }
};

struct Criterion {
  int number;
  std::string title;
  std::function<void(Check&)> body;
};

const DirichletSpec& ones() {
  static const DirichletSpec d = specs::ones();
  return d;
}

Complex coth_formula(double z) {
  return ref::pi / (2.0 * z) / std::tanh(ref::pi * z) - 1.0 / (2.0 * z * z);
}

double n4_plus_1_formula() {
  const double a = ref::pi * std::sqrt(2.0);
  return -0.5 + ref::pi * std::sqrt(2.0) / 4.0 * (std::sinh(a) + std::sin(a)) / (std::cosh(a) - std::cos(a));
}

PartialSumStream zeta_stream(double step, int k_weight) {
  // term(k) = (-1)^k (k+1)^w ζ(step·(k+1))
  return {[=](std::int64_t k) {
            const double sign = k % 2 == 0 ? 1.0 : -1.0;
            const double w = k_weight == 0 ? 1.0 : static_cast<double>(k + 1);
            return sign * w * zeta(step * static_cast<double>(k + 1)).value;
          },
          nullptr};
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> out;

  out.push_back({1, "coth partial fraction", [](Check& c) {
                   for (const double z : {0.3, 0.5, 0.9})
                     c.close("z", lhs_partial_fraction(ones(), 2.0, z * z).value, coth_formula(z), 1e-10);
                 }});

  out.push_back({2, "sum zeta(2n)/4^n = 1/2", [](Check& c) {
                   c.close("rhs/4", rhs_zeta_series(ones(), 2.0, -0.25).value / 4.0, 0.5, 1e-12);
                   c.close("lhs", lhs_partial_fraction(ones(), 2.0, -0.25).value, 2.0, 1e-12);
                 }});

  out.push_back({3, "sum zeta(2n)/16^n = 1/2 - pi/8", [](Check& c) {
                   c.close("rhs/16", rhs_zeta_series(ones(), 2.0, -1.0 / 16).value / 16.0, 0.5 - ref::pi / 8.0, 1e-12);
                 }});

  out.push_back({4, "sum 1/(n^4+1) closed form", [](Check& c) {
                   const double want = n4_plus_1_formula();
                   c.close("lhs", lhs_partial_fraction(ones(), 4.0, 1.0).value, want, 1e-10);
                   c.close("oracle", want, ref::sum_n4_plus_1, 1e-12);
                 }});

  out.push_back({5, "sum 1/(n^2+n-1) via sequence series", [](Check& c) {
                   const double want = 1.0 + std::sqrt(5.0) / 5.0 * ref::pi * std::tan(ref::pi * std::sqrt(5.0) / 2.0);
                   const IdentityPair p = sequence_series(sequences::monic_polynomial(2, {1.0, 0.0}), 1.0);
                   c.close("lhs", p.lhs.value, want, 1e-10);
                   c.close("rhs", p.rhs.value, want, 1e-10);
                 }});

  out.push_back({6, "Cesaro (C,1) at z = 1", [](Check& c) {
                   const double want2 = (ref::pi / std::tanh(ref::pi) - 1.0) / 2.0;
                   c.close("zeta(2k)", cesaro_sum(zeta_stream(2.0, 0), 1).value, want2, 1e-6);
                   c.close("rhs_zeta_series", rhs_zeta_series(ones(), 2.0, 1.0, SummationMethod::cesaro(1)).value, want2, 1e-6);
                   const Complex direct3 = lhs_partial_fraction(ones(), 3.0, 1.0).value;
                   c.close("zeta(3k)", cesaro_sum(zeta_stream(3.0, 0), 1).value, direct3, 1e-6);
                   c.close("oracle", direct3, ref::sum_n3_plus_1, 1e-12);
                 }});

  out.push_back({7, "Cesaro (C,2) of sum (-1)^(k+1) k zeta(2k) against sum 1/(n^2+1)^2", [](Check& c) {
                   const Complex direct = lhs_derivative(ones(), 2.0, 1.0, 1).value;
                   c.close("direct", direct, ref::sum_n2_plus_1_squared, 1e-12);
                   const Complex literal = cesaro_sum(zeta_stream(2.0, 1), 2).value;
                   c.close("stream as stated", literal, direct, 1e-5);
                   const SumResult c2 = rhs_derivative(ones(), 2.0, 1.0, 1, SummationMethod::cesaro(2));
                   c.notes << " ANALYSIS: the stated stream sums to " << literal.real()
                           << " = sum n^2/(n^2+1)^2 (termwise x/(1+x)^2, x = n^-2); the derivative series"
                           << " sum (-1)^(k+1) k zeta(2k+2) gives " << c2.value.real() << " (|diff| "
                           << std::abs(c2.value - direct) << ")";
                 }});

  out.push_back({8, "composition identities", [](Check& c) {
                   const IdentityPair e = compose_series(power_series::exp_minus_one(), 2.0, 1.0);
                   c.close("exp lhs", e.lhs.value, ref::sum_exp_n2, 1e-9);
                   c.close("exp rhs", e.rhs.value, ref::sum_exp_n2, 1e-9);
                   const IdentityPair s = compose_series(power_series::sine(), 2.0, 0.5);
                   c.close("sin lhs", s.lhs.value, ref::sum_sin_half_n2, 1e-9);
                   c.close("sin rhs", s.rhs.value, ref::sum_sin_half_n2, 1e-9);
                   const Complex l = compose_lhs(power_series::log1p(), 2.0, 1.0).value;
                   const Complex a = compose_rhs(power_series::log1p(), 2.0, 1.0, SummationMethod::abel()).value;
                   const double closed = std::log(std::sinh(ref::pi) / ref::pi);
                   c.close("log1p lhs", l, closed, 1e-9);
                   c.close("log1p abel", a, l, 1e-6);
                   c.close("log1p abel vs ln(sinh pi/pi)", a, closed, 1e-6);
                 }});

  out.push_back({9, "mu, Lambda, phi identities", [](Check& c) {
                   const std::vector<std::pair<DirichletSpec, double>> cases{
                       {specs::mobius(), 2.0}, {specs::von_mangoldt(), 2.0}, {specs::totient(), 3.0}};
                   for (const auto& [spec, s] : cases)
                     for (const Complex z : {Complex(0.5), Complex(-0.5), Complex(0.0, 0.9)})
                       c.close(spec.name.c_str(), lhs_partial_fraction(spec, s, z).value, rhs_zeta_series(spec, s, z).value,
                               1e-8);
                 }});

  out.push_back({10, "character mod 4", [](Check& c) {
                    const DirichletSpec chi = specs::from_name("char:4:1");
                    for (const double s : {2.0, 3.0}) {
                      for (int k = 0; k < 4; ++k) {
                        const double arg = (k + 1) * s;
                        c.close("beta(ks+s)", chi.value(arg).value, dirichlet_beta(arg).value, 1e-13);
                      }
                      c.close("chi", lhs_partial_fraction(chi, s, 0.5).value, rhs_zeta_series(chi, s, 0.5).value, 1e-9);
                      const DirichletSpec shifted = specs::drop_leading(chi, 1);
                      c.close("shifted coefficient", shifted.value(2.0 * s).value, dirichlet_beta(2.0 * s).value - 1.0, 1e-13);
                      c.close("shifted", lhs_partial_fraction(shifted, s, 0.5).value,
                              rhs_zeta_series(shifted, s, 0.5).value, 1e-9);
                    }
                  }});

  out.push_back({11, "residues", [](Check& c) {
                    auto rel = [&](const char* what, const PoleRecord& r) {
                      c.close(what, r.measured_residue / r.expected_residue, 1.0, 1e-5);
                    };
                    for (const double s : {2.0, 3.0, 2.5})
                      for (std::int64_t n = 1; n <= 3; ++n) rel("plain", residue(ones(), s, n));
                    for (std::int64_t n = 2; n <= 3; ++n)
                      for (const auto& [q, m] : std::vector<std::pair<double, int>>{{1.0, 0}, {0.0, 1}, {1.0, 1}})
                        rel("weighted", residue(ones(), 4.0, n, ResidueVariant::weighted(q, m)));
                    const PoleRecord two = residue(ones(), 3.0, 2, ResidueVariant::weighted(1.0, 0));
                    c.close("n^q example", two.expected_residue, 2.0, 0.0);
                    rel("mobius", residue(specs::mobius(), 2.0, 2));
                    c.close("mobius value", residue(specs::mobius(), 2.0, 2).expected_residue, -1.0, 0.0);
                    c.throws<NotAPoleError>("mu(4) = 0", [] { residue(specs::mobius(), 2.0, 4); });
                  }});

  out.push_back({12, "property suite and guards", [](Check& c) {
                    const SuiteReport suite = run_suite(1e-8, {});
                    int props = 0, passed = 0;
                    for (const auto& r : suite.reports) {
                      if (r.identity_id.rfind("prop-", 0) != 0) continue;
                      ++props;
                      if (r.status == Status::pass) ++passed;
                      else c.notes << " [" << r.identity_id << " " << to_string(r.status) << "]";
                    }
                    c.expect("50 property checks", props == kPropertyCount);
                    c.expect("all property checks pass", passed == props);
                    c.notes << " " << passed << "/" << props << " properties;";
                    c.throws<RadiusError>("radius", [] { rhs_zeta_series(ones(), 2.0, 1.5); });
                    c.throws<BoundaryError>("boundary", [] { rhs_zeta_series(ones(), 2.0, Complex(0.0, 1.0)); });
                    c.throws<PoleError>("pole", [] { lhs_partial_fraction(ones(), 2.0, -4.0); });
                    c.throws<PoleError>("pole under Cesaro", [] {
                      rhs_zeta_series(ones(), 2.0, -1.0, SummationMethod::cesaro(1));
                    });
                    c.throws<DomainError>("domain", [] { lhs_partial_fraction(ones(), 1.0, 0.5); });
                  }});

  out.push_back({13, "spiral slopes for s = 2+i", [](Check& c) {
                    const SpiralFit fit = fit_spiral(spiral_export(Complex(2.0, 1.0), 100));
                    c.close("modulus slope", fit.modulus_slope, 2.0, 1e-9);
                    c.close("arg slope", fit.arg_slope, 1.0, 1e-9);
                  }});

  return out;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  for (const Criterion& cr : criteria()) {
    Check c;
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes << " [unexpected error: " << e.what() << "]";
    }
    if (!c.ok) ++failures;
    std::printf("%s criterion %2d: %s (worst |diff| %.3g)%s\n", c.ok ? "PASS" : "FAIL", cr.number, cr.title.c_str(),
                c.worst, c.notes.str().c_str());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/13 criteria passed in %.2f s\n", 13 - failures, secs);
  return failures == 0 ? 0 : 1;
}
