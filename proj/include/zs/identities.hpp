#pragma once

// Named identities for the CLI, and the acceptance corpus behind `suite`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "zs/core.hpp"
#include "zs/report.hpp"
#include "zs/series.hpp"
#include "zs/specs.hpp"
#include "zs/summation.hpp"

namespace zs {

/// Parses "a", "bi", "a+bi", "a-bi" (also "i", "-i"). Throws ConfigError.
Complex parse_complex(const std::string& text);
std::string format_complex(Complex z);

enum class Side { lhs, rhs };
Side parse_side(const std::string& text);

struct IdentityParams {
  Complex s{2.0};
  Complex z{0.0};
  std::string spec = "ones";
  SummationMethod method = SummationMethod::direct();
  int m = 0;
  Complex q{0.0};
  Complex s_prime{0.0};
  std::string f = "exp";          // exp, log1p, sin, identity, geometric
  std::string lambda = "log";     // log, linear:c
  std::string factors = "2:1";    // beta:alpha[,beta:alpha...]
  std::string seq = "dirichlet";  // dirichlet (aₙ from spec, bₙ = nˢ) or poly:c1,...,cd
  EvalConfig cfg;
};

/// order-p, weighted, derivative, multi-factor, dirichlet, compose,
/// dirichlet-compose, general-dirichlet, sequence.
const std::vector<std::string>& identity_ids();

PowerSeriesSpec power_series_from_name(const std::string& name);
GeneralDirichletSpec general_dirichlet_from_name(const std::string& name);
std::vector<Factor> parse_factors(const std::string& text);
SequenceSpec sequence_from_params(const IdentityParams& p);

/// Throws ConfigError for an unknown id, and the evaluator's errors otherwise.
SumResult evaluate_side(const std::string& id, Side side, const IdentityParams& p);

/// Both sides; evaluator errors other than ConfigError become a skipped report.
IdentityReport verify_identity(const std::string& id, const IdentityParams& p, double tolerance);

struct CorpusEntry {
  std::string id;
  std::function<IdentityReport(double tolerance, const EvalConfig& cfg)> run;
};

inline constexpr std::uint64_t kDefaultSeed = 20061013;
inline constexpr int kPropertyCount = 50;

/// Closed-form checks (1-coth-*), the worked examples 7.1-7.14 and
/// kPropertyCount randomized identity checks (prop-*).
std::vector<CorpusEntry> acceptance_corpus(std::uint64_t seed = kDefaultSeed);

/// Runs the corpus concurrently. `only` selects one exact id (ConfigError if absent).
SuiteReport run_suite(double tolerance, const EvalConfig& cfg, const std::string& only = "",
                      std::uint64_t seed = kDefaultSeed);

}  // namespace zs
