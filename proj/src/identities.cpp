#include "zs/identities.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <random>
#include <sstream>

#include "zs/specialfns.hpp"

namespace zs {

namespace {

constexpr double kPi = std::numbers::pi;

double parse_real(const std::string& text, const std::string& whole) {
  if (text.empty()) throw ConfigError("cannot parse number from '" + whole + "'");
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || !std::isfinite(v))
    throw ConfigError("cannot parse number from '" + whole + "'");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

SumResult closed_form(Complex v) {
  return {v, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(v), 0, Method::closed_form()};
}

SumResult scaled(SumResult r, double factor) {
  r.value *= factor;
  r.abs_error_estimate *= std::abs(factor);
  return r;
}

IdentityReport guarded(const std::string& id, double tol, const std::function<IdentityReport()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return skipped_report(id, tol, e);
  }
}

}  // namespace

Complex parse_complex(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw ConfigError("empty complex number");
  const char last = text.back();
  if (last != 'i' && last != 'j') return {parse_real(text, raw), 0.0};
  const std::string body = text.substr(0, text.size() - 1);
  std::size_t split_at = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  const std::string re = split_at == std::string::npos ? "" : body.substr(0, split_at);
  std::string im = split_at == std::string::npos ? body : body.substr(split_at);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real(re, raw), parse_real(im, raw)};
}

std::string format_complex(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

Side parse_side(const std::string& text) {
  if (text == "lhs") return Side::lhs;
  if (text == "rhs") return Side::rhs;
  throw ConfigError("side must be lhs or rhs, got '" + text + "'");
}

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids{"order-p",  "weighted",          "derivative",
                                            "multi-factor", "dirichlet",     "compose",
                                            "dirichlet-compose", "general-dirichlet", "sequence"};
  return ids;
}

PowerSeriesSpec power_series_from_name(const std::string& name) {
  if (name == "exp") return power_series::exp_minus_one();
  if (name == "log1p") return power_series::log1p();
  if (name == "sin") return power_series::sine();
  if (name == "identity") return power_series::identity();
  if (name == "geometric") return power_series::geometric();
  throw ConfigError("unknown power series '" + name + "' (exp, log1p, sin, identity, geometric)");
}

GeneralDirichletSpec general_dirichlet_from_name(const std::string& name) {
  if (name == "log") return general_dirichlet::logarithmic();
  if (name.rfind("linear:", 0) == 0) {
    const double c = parse_real(name.substr(7), name);
    if (!(c > 0.0)) throw ConfigError("linear lambda needs c > 0");
    return general_dirichlet::linear(c);
  }
  throw ConfigError("unknown lambda sequence '" + name + "' (log, linear:c)");
}

std::vector<Factor> parse_factors(const std::string& text) {
  std::vector<Factor> out;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 2) throw ConfigError("factor '" + item + "' must look like beta:alpha");
    out.push_back({parse_complex(parts[0]), parse_complex(parts[1])});
  }
  if (out.empty()) throw ConfigError("no factors given");
  return out;
}

SequenceSpec sequence_from_params(const IdentityParams& p) {
  if (p.seq == "dirichlet") return sequences::from_dirichlet(specs::from_name(p.spec), p.s);
  if (p.seq.rfind("poly:", 0) == 0) {
    std::vector<double> lower;
    for (const auto& c : split(p.seq.substr(5), ',')) lower.push_back(parse_real(c, p.seq));
    return sequences::monic_polynomial(static_cast<int>(lower.size()), lower);
  }
  throw ConfigError("unknown sequence '" + p.seq + "' (dirichlet, poly:c1,...,cd)");
}

namespace {

void require_direct(const IdentityParams& p, const std::string& id) {
  if (p.method.kind != SummationMethod::Kind::direct)
    throw ConfigError(id + ": only the direct method is available for this identity");
}

}  // namespace

SumResult evaluate_side(const std::string& id, Side side, const IdentityParams& p) {
  const bool lhs = side == Side::lhs;
  const EvalConfig& cfg = p.cfg;
  if (id == "order-p") {
    const auto ones = specs::ones();
    return lhs ? lhs_partial_fraction(ones, p.s, p.z, cfg) : rhs_zeta_series(ones, p.s, p.z, p.method, cfg);
  }
  if (id == "dirichlet") {
    const auto spec = specs::from_name(p.spec);
    return lhs ? lhs_partial_fraction(spec, p.s, p.z, cfg) : rhs_zeta_series(spec, p.s, p.z, p.method, cfg);
  }
  if (id == "derivative") {
    const auto spec = specs::from_name(p.spec);
    return lhs ? lhs_derivative(spec, p.s, p.z, p.m, cfg) : rhs_derivative(spec, p.s, p.z, p.m, p.method, cfg);
  }
  if (id == "weighted")
    return lhs ? lhs_weighted_series(p.m, p.q, p.s, p.z, cfg) : rhs_weighted_series(p.m, p.q, p.s, p.z, p.method, cfg);
  if (id == "multi-factor") {
    require_direct(p, id);
    const auto spec = specs::from_name(p.spec);
    const auto factors = parse_factors(p.factors);
    return lhs ? multi_factor_lhs(factors, spec, p.z, cfg) : multi_factor_rhs(factors, spec, p.z, cfg);
  }
  if (id == "compose") {
    const auto f = power_series_from_name(p.f);
    return lhs ? compose_lhs(f, p.s, p.z, cfg) : compose_rhs(f, p.s, p.z, p.method, cfg);
  }
  if (id == "dirichlet-compose") {
    require_direct(p, id);
    const auto f = power_series_from_name(p.f);
    const auto g = specs::from_name(p.spec);
    return lhs ? dirichlet_compose_lhs(f, g, p.s, p.s_prime, p.z, cfg)
               : dirichlet_compose_rhs(f, g, p.s, p.s_prime, p.z, cfg);
  }
  if (id == "general-dirichlet") {
    require_direct(p, id);
    const auto f = power_series_from_name(p.f);
    const auto gd = general_dirichlet_from_name(p.lambda);
    return lhs ? general_dirichlet_lhs(f, gd, p.s, p.z, cfg) : general_dirichlet_rhs(f, gd, p.s, p.z, cfg);
  }
  if (id == "sequence") {
    const auto seq = sequence_from_params(p);
    return lhs ? sequence_lhs(seq, p.z, p.m, cfg) : sequence_rhs(seq, p.z, p.m, p.method, cfg);
  }
  throw ConfigError("unknown identity '" + id + "'");
}

IdentityReport verify_identity(const std::string& id, const IdentityParams& p, double tolerance) {
  if (std::find(identity_ids().begin(), identity_ids().end(), id) == identity_ids().end())
    throw ConfigError("unknown identity '" + id + "'");
  try {
    const SumResult l = evaluate_side(id, Side::lhs, p);
    const SumResult r = evaluate_side(id, Side::rhs, p);
    return make_report(id, l, r, tolerance);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    return skipped_report(id, tolerance, e);
  }
}

// ---------------------------------------------------------------------------

namespace {


void add(std::vector<CorpusEntry>& out, std::string id, std::function<IdentityPair(const EvalConfig&)> sides) {
  out.push_back({id, [id, sides](double tol, const EvalConfig& cfg) {
                   return guarded(id, tol, [&] {
                     const IdentityPair pr = sides(cfg);
                     return make_report(id, pr.lhs, pr.rhs, tol);
                   });
                 }});
}

double coth(double x) { return 1.0 / std::tanh(x); }

void add_closed_forms(std::vector<CorpusEntry>& out) {
  for (const char* label : {"0.3", "0.5", "0.9"}) {
    const double z = std::strtod(label, nullptr);
    add(out, std::string("1-coth-") + label, [z](const EvalConfig& cfg) {
      const double expected = kPi / (2.0 * z) * coth(kPi * z) - 1.0 / (2.0 * z * z);
      return IdentityPair{lhs_partial_fraction(specs::ones(), 2.0, z * z, cfg), closed_form(expected)};
    });
  }
}

void add_worked_examples(std::vector<CorpusEntry>& out) {
  const auto ones = specs::ones();
  add(out, "7.1", [ones](const EvalConfig& cfg) {
    return IdentityPair{lhs_partial_fraction(ones, 2.0, 1.0, cfg),
                        rhs_zeta_series(ones, 2.0, 1.0, SummationMethod::cesaro(1), cfg)};
  });
  add(out, "7.2", [ones](const EvalConfig& cfg) {
    return IdentityPair{lhs_partial_fraction(ones, 3.0, 1.0, cfg),
                        rhs_zeta_series(ones, 3.0, 1.0, SummationMethod::cesaro(1), cfg)};
  });
  add(out, "7.3", [ones](const EvalConfig& cfg) {
    return IdentityPair{lhs_derivative(ones, 2.0, 1.0, 1, cfg),
                        rhs_derivative(ones, 2.0, 1.0, 1, SummationMethod::cesaro(2), cfg)};
  });
  add(out, "7.4", [](const EvalConfig& cfg) {
    const auto f = power_series::log1p();
    return IdentityPair{compose_lhs(f, 2.0, 1.0, cfg), compose_rhs(f, 2.0, 1.0, SummationMethod::abel(), cfg)};
  });
  add(out, "7.5", [](const EvalConfig& cfg) { return compose_series(power_series::exp_minus_one(), 2.0, 1.0,
                                                                     SummationMethod::direct(), cfg); });
  add(out, "7.6",
      [](const EvalConfig& cfg) { return compose_series(power_series::sine(), 2.0, 0.5, SummationMethod::direct(), cfg); });
  const std::vector<std::pair<std::string, std::pair<std::string, double>>> arithmetic{
      {"7.7", {"mobius", 2.0}}, {"7.8", {"von-mangoldt", 2.0}}, {"7.9", {"totient", 3.0}}, {"7.10", {"beta", 2.0}}};
  for (const auto& [id, what] : arithmetic) {
    const auto spec = specs::from_name(what.first);
    const double s = what.second;
    add(out, id, [spec, s](const EvalConfig& cfg) {
      return IdentityPair{lhs_partial_fraction(spec, s, 0.5, cfg), rhs_zeta_series(spec, s, 0.5, {}, cfg)};
    });
  }
  add(out, "7.10-shifted", [](const EvalConfig& cfg) {
    const auto spec = specs::drop_leading(specs::beta(), 1);
    return IdentityPair{lhs_partial_fraction(spec, 2.0, 0.5, cfg), rhs_zeta_series(spec, 2.0, 0.5, {}, cfg)};
  });
  add(out, "7.11", [ones](const EvalConfig& cfg) {
    return IdentityPair{scaled(rhs_zeta_series(ones, 2.0, -0.25, {}, cfg), 0.25), closed_form(0.5)};
  });
  add(out, "7.12", [ones](const EvalConfig& cfg) {
    return IdentityPair{scaled(rhs_zeta_series(ones, 2.0, -1.0 / 16.0, {}, cfg), 1.0 / 16.0),
                        closed_form(0.5 - kPi / 8.0)};
  });
  add(out, "7.13", [ones](const EvalConfig& cfg) {
    const double x = kPi * std::numbers::sqrt2;
    const double expected =
        -0.5 + (kPi * std::numbers::sqrt2 / 4.0) * (std::sinh(x) + std::sin(x)) / (std::cosh(x) - std::cos(x));
    return IdentityPair{lhs_partial_fraction(ones, 4.0, 1.0, cfg), closed_form(expected)};
  });
  add(out, "7.14", [](const EvalConfig& cfg) {
    return sequence_series(sequences::monic_polynomial(2, {1.0, 0.0}), 1.0, 0, SummationMethod::direct(), cfg);
  });
}

// Randomized admissible inputs for each identity family, drawn up front so
// the corpus is fixed by the seed.
void add_properties(std::vector<CorpusEntry>& out, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uni = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  auto pick = [&](int n) { return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng)); };
  auto disc = [&](double radius) { return std::polar(radius * std::sqrt(uni(0.0, 1.0)), uni(-kPi, kPi)); };
  const std::vector<std::string> dirichlet_names{"ones", "mobius", "von-mangoldt", "beta", "char:5:1", "char:3:1",
                                                 "totient"};

  for (int i = 1; i <= kPropertyCount; ++i) {
    const std::string id = "prop-" + std::to_string(i);
    const std::string name = dirichlet_names[static_cast<std::size_t>(pick(static_cast<int>(dirichlet_names.size())))];
    const double sigma_a = name == "totient" ? 2.0 : 1.0;
    const Complex s{sigma_a + uni(0.5, 2.5), uni(-3.0, 3.0)};
    const Complex z = disc(0.9);
    switch ((i - 1) % 9) {
      case 0:
        add(out, id, [s, z](const EvalConfig& cfg) {
          const auto ones = specs::ones();
          return IdentityPair{lhs_partial_fraction(ones, s, z, cfg), rhs_zeta_series(ones, s, z, {}, cfg)};
        });
        break;
      case 1:
        add(out, id, [name, s, z](const EvalConfig& cfg) {
          const auto spec = specs::from_name(name);
          return IdentityPair{lhs_partial_fraction(spec, s, z, cfg), rhs_zeta_series(spec, s, z, {}, cfg)};
        });
        break;
      case 2: {
        const int m = 1 + pick(3);
        add(out, id, [name, s, z, m](const EvalConfig& cfg) {
          const auto spec = specs::from_name(name);
          return IdentityPair{lhs_derivative(spec, s, z, m, cfg), rhs_derivative(spec, s, z, m, {}, cfg)};
        });
        break;
      }
      case 3: {
        const int m = pick(3);
        const Complex q{uni(0.0, 1.0), uni(-1.0, 1.0)};
        const Complex p{q.real() + 1.0 + uni(0.5, 2.0), uni(-2.0, 2.0)};
        add(out, id, [m, q, p, z](const EvalConfig& cfg) {
          return IdentityPair{lhs_weighted_series(m, q, p, z, cfg), rhs_weighted_series(m, q, p, z, {}, cfg)};
        });
        break;
      }
      case 4: {
        std::vector<Factor> factors{{{uni(1.5, 3.0), uni(-1.0, 1.0)}, disc(1.0)},
                                    {{uni(1.5, 3.0), uni(-1.0, 1.0)}, disc(1.0)}};
        const double amax = std::max(std::abs(factors[0].alpha), std::abs(factors[1].alpha));
        const Complex zz = z * std::min(1.0, 1.0 / amax);
        add(out, id, [factors, name, zz](const EvalConfig& cfg) {
          return multi_factor_series(factors, specs::from_name(name), zz, cfg);
        });
        break;
      }
      case 5: {
        const std::string f = std::vector<std::string>{"exp", "sin", "log1p", "geometric"}[static_cast<std::size_t>(pick(4))];
        add(out, id, [f, s, z](const EvalConfig& cfg) {
          return compose_series(power_series_from_name(f), s, z, SummationMethod::direct(), cfg);
        });
        break;
      }
      case 6: {
        const std::string f = std::vector<std::string>{"exp", "sin", "identity"}[static_cast<std::size_t>(pick(3))];
        const Complex sp{uni(0.0, 1.0), uni(-1.0, 1.0)};
        const Complex s1{1.0 + uni(0.5, 2.0), uni(-2.0, 2.0)};
        add(out, id, [f, name, s1, sp, z](const EvalConfig& cfg) {
          return dirichlet_compose(power_series_from_name(f), specs::from_name(name), s1, sp, z, cfg);
        });
        break;
      }
      case 7: {
        const double c = uni(0.5, 2.0);
        const Complex s1{uni(0.5, 2.0), uni(-2.0, 2.0)};
        add(out, id, [c, s1, z](const EvalConfig& cfg) {
          return general_dirichlet_compose(power_series::exp_minus_one(), general_dirichlet::linear(c), s1, z, cfg);
        });
        break;
      }
      case 8: {
        const int m = pick(3);
        const bool poly = pick(2) == 1;
        const std::vector<double> lower{uni(0.0, 2.0), uni(0.5, 2.0)};
        add(out, id, [poly, lower, name, s, z, m](const EvalConfig& cfg) {
          const SequenceSpec seq = poly ? sequences::monic_polynomial(2, lower)
                                        : sequences::from_dirichlet(specs::from_name(name), s);
          return sequence_series(seq, z * std::abs(seq.b(1)), m, SummationMethod::direct(), cfg);
        });
        break;
      }
    }
  }
}

}  // namespace

std::vector<CorpusEntry> acceptance_corpus(std::uint64_t seed) {
  std::vector<CorpusEntry> out;
  add_closed_forms(out);
  add_worked_examples(out);
  add_properties(out, seed);
  return out;
}

SuiteReport run_suite(double tolerance, const EvalConfig& cfg, const std::string& only, std::uint64_t seed) {
  cfg.validate();
  std::vector<CorpusEntry> corpus = acceptance_corpus(seed);
  if (!only.empty()) {
    std::erase_if(corpus, [&](const CorpusEntry& e) { return e.id != only; });
    if (corpus.empty()) throw ConfigError("no corpus entry with id '" + only + "'");
  }
  std::vector<IdentityReport> reports(corpus.size());
  const auto count = static_cast<std::int64_t>(corpus.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      reports[k] = corpus[k].run(tolerance, cfg);
    } catch (const std::exception& e) {
      IdentityReport r;
      r.identity_id = corpus[k].id;
      r.tolerance = tolerance;
      r.status = Status::fail;
      r.reason = std::string("unexpected exception: ") + e.what();
      reports[k] = r;
    }
  }
  return summarize(std::move(reports));
}

}  // namespace zs
