#include "zs/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zs/identities.hpp"
#include "zs/poles.hpp"
#include "zs/report.hpp"

namespace zs {

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RawParams {
  std::string s = "2";
  std::string z = "0";
  std::string q = "0";
  std::string s_prime = "0";
  std::string method = "direct";
  double target = EvalConfig{}.target_abs_error;
  std::int64_t max_terms = EvalConfig{}.max_terms;
  int em_order = EvalConfig{}.euler_maclaurin_order;
};

std::int64_t env_max_terms() {
  const char* raw = std::getenv("ZS_MAX_TERMS");
  if (raw == nullptr || *raw == '\0') return EvalConfig{}.max_terms;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (*end != '\0' || v <= 0) throw ConfigError(std::string("ZS_MAX_TERMS is not a positive integer: ") + raw);
  return v;
}

void add_config_options(CLI::App* sub, RawParams& raw) {
  sub->add_option("--target", raw.target, "Absolute error target");
  sub->add_option("--max-terms", raw.max_terms, "Term cap (default from ZS_MAX_TERMS or 1000000)");
  sub->add_option("--em-order", raw.em_order, "Euler-Maclaurin correction order");
}

void add_identity_options(CLI::App* sub, RawParams& raw, IdentityParams& p) {
  sub->add_option("--s", raw.s, "Exponent s (a+bi)");
  sub->add_option("--z", raw.z, "Argument z (a+bi)");
  sub->add_option("--spec", p.spec, "Dirichlet spec: ones, mobius, von-mangoldt, totient, beta, char:q:idx");
  sub->add_option("--method", raw.method, "RHS summation: direct, cesaro:k, abel");
  sub->add_option("--m", p.m, "Derivative order or log power");
  sub->add_option("--q", raw.q, "Power weight q (a+bi)");
  sub->add_option("--s-prime", raw.s_prime, "Shift s' for dirichlet-compose (a+bi)");
  sub->add_option("--f", p.f, "Power series: exp, log1p, sin, identity, geometric");
  sub->add_option("--lambda", p.lambda, "Frequencies: log, linear:c");
  sub->add_option("--factors", p.factors, "Factors beta:alpha[,beta:alpha...]");
  sub->add_option("--seq", p.seq, "Sequence: dirichlet or poly:c1,...,cd");
  add_config_options(sub, raw);
}

EvalConfig finish_config(const RawParams& raw) {
  EvalConfig cfg;
  cfg.target_abs_error = raw.target;
  cfg.max_terms = raw.max_terms;
  cfg.euler_maclaurin_order = raw.em_order;
  cfg.validate();
  return cfg;
}

void finish_params(const RawParams& raw, IdentityParams& p) {
  p.s = parse_complex(raw.s);
  p.z = parse_complex(raw.z);
  p.q = parse_complex(raw.q);
  p.s_prime = parse_complex(raw.s_prime);
  p.method = SummationMethod::parse(raw.method);
  p.cfg = finish_config(raw);
}

json complex_json(Complex z) { return {round15(z.real()), round15(z.imag())}; }

json pole_json(const PoleRecord& r) {
  return {{"n", r.n},
          {"location", complex_json(r.location)},
          {"expected_residue", complex_json(r.expected_residue)},
          {"measured_residue", complex_json(r.measured_residue)},
          {"abs_error", round15(r.abs_error)}};
}

void write_csv(std::ostream& os, const std::vector<SpiralRow>& rows) {
  os << "n,re,im,abs,arg\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%lld,%.17g,%.17g,%.17g,%.17g\n", static_cast<long long>(r.n), r.re, r.im, r.abs,
                  r.arg);
    os << buf;
  }
}

void print_error(std::ostream& err, const char* kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partial-fraction sums and their zeta power series"};
  app.name("zs");
  app.require_subcommand(1);

  RawParams raw;
  IdentityParams params;
  std::string side, identity;
  double tol = 1e-8;
  std::string report_path, only, out_path, variant = "plain";
  std::int64_t count = 10, n = 1;
  std::uint64_t seed = kDefaultSeed;

  try {
    raw.max_terms = env_max_terms();
  } catch (const Error& e) {
    print_error(err, e.kind(), e.what());
    return kExitUsage;
  }

  auto* eval = app.add_subcommand("eval", "Evaluate one side of an identity");
  eval->add_option("side", side, "lhs or rhs")->required();
  eval->add_option("identity", identity, "Identity id")->required();
  add_identity_options(eval, raw, params);

  auto* verify = app.add_subcommand("verify", "Evaluate both sides and report as JSON");
  verify->add_option("identity", identity, "Identity id")->required();
  verify->add_option("--tol", tol, "Tolerance added to the error estimates");
  add_identity_options(verify, raw, params);

  auto* suite = app.add_subcommand("suite", "Run the acceptance corpus");
  suite->add_option("--tol", tol, "Tolerance added to the error estimates");
  suite->add_option("--report", report_path, "Also write the JSON report here");
  suite->add_option("--only", only, "Run a single corpus entry by exact id");
  suite->add_option("--seed", seed, "Seed for the randomized property entries");
  add_config_options(suite, raw);

  auto* poles = app.add_subcommand("poles", "Export pole locations -n^s as CSV");
  poles->add_option("--s", raw.s, "Exponent s (a+bi)");
  poles->add_option("--count", count, "Number of poles");
  poles->add_option("--out", out_path, "CSV path (stdout when absent)");

  auto* residue_cmd = app.add_subcommand("residue", "Measure the residue at -n^s");
  residue_cmd->add_option("--spec", params.spec, "Dirichlet spec");
  residue_cmd->add_option("--s", raw.s, "Exponent s (a+bi)");
  residue_cmd->add_option("--n", n, "Pole index");
  residue_cmd->add_option("--variant", variant, "plain or weighted")->check(CLI::IsMember({"plain", "weighted"}));
  residue_cmd->add_option("--q", raw.q, "Weight exponent for the weighted variant");
  residue_cmd->add_option("--m", params.m, "Log power for the weighted variant");
  add_config_options(residue_cmd, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*eval) {
      finish_params(raw, params);
      const SumResult r = evaluate_side(identity, parse_side(side), params);
      json j = to_json(r);
      j["identity_id"] = identity;
      j["side"] = side;
      out << j.dump() << '\n';
      return kExitPass;
    }
    if (*verify) {
      finish_params(raw, params);
      const IdentityReport r = verify_identity(identity, params, tol);
      out << to_json(r).dump() << '\n';
      switch (r.status) {
        case Status::pass: return kExitPass;
        case Status::fail: return kExitFail;
        case Status::skipped: return kExitUsage;
      }
    }
    if (*suite) {
      const SuiteReport r = run_suite(tol, finish_config(raw), only, seed);
      const std::string text = to_json(r).dump(2);
      if (!report_path.empty()) {
        std::ofstream file(report_path);
        if (!file) throw ConfigError("cannot write report to " + report_path);
        file << text << '\n';
      }
      out << text << '\n';
      return r.all_passed() ? kExitPass : kExitFail;
    }
    if (*poles) {
      const auto rows = spiral_export(parse_complex(raw.s), count);
      if (out_path.empty()) {
        write_csv(out, rows);
      } else {
        std::ofstream file(out_path);
        if (!file) throw ConfigError("cannot write CSV to " + out_path);
        write_csv(file, rows);
      }
      return kExitPass;
    }
    if (*residue_cmd) {
      const EvalConfig cfg = finish_config(raw);
      const ResidueVariant v =
          variant == "weighted" ? ResidueVariant::weighted(parse_complex(raw.q), params.m) : ResidueVariant::plain();
      const PoleRecord r = residue(specs::from_name(params.spec), parse_complex(raw.s), n, v, cfg);
      out << pole_json(r).dump() << '\n';
      return kExitPass;
    }
  } catch (const Error& e) {
    print_error(err, e.kind(), e.what());
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace zs
