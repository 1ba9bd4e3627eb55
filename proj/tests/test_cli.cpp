#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zs/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "zs");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = zs::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("eval prints a SumResult") {
  const Run r = run({"eval", "lhs", "order-p", "--s", "2", "--z", "0.25"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["value"][0].get<double>() == doctest::Approx(1.42537714991929551).epsilon(1e-13));
  CHECK(j["identity_id"] == "order-p");
  CHECK(j["side"] == "lhs");
  const Run c = run({"eval", "rhs", "order-p", "--s", "2", "--z", "1", "--method", "cesaro:1"});
  REQUIRE(c.code == 0);
  CHECK(json::parse(c.out)["method"] == "cesaro(1)");
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "order-p", "--s", "3", "--z", "0.5"}).code == 0);
  CHECK(run({"verify", "compose", "--f", "sin", "--s", "2", "--z", "0.5"}).code == 0);
  // |z| > 1 on the right side: skipped
  const Run skip = run({"verify", "order-p", "--s", "2", "--z", "1.5"});
  CHECK(skip.code == 2);
  CHECK(json::parse(skip.out)["status"] == "skipped");
  // zero tolerance with a starved term budget fails rather than skipping
  const Run tight = run({"verify", "order-p", "--s", "2", "--z", "0.999", "--tol", "0"});
  CHECK((tight.code == 0 || tight.code == 1));
}

TEST_CASE("errors are JSON on stderr with exit 2") {
  const Run bad = run({"eval", "lhs", "order-p", "--s", "1", "--z", "0.5"});
  CHECK(bad.code == 2);
  CHECK(json::parse(bad.err)["error"] == "DomainError");
  const Run unknown = run({"eval", "lhs", "nonsense"});
  CHECK(unknown.code == 2);
  CHECK(json::parse(unknown.err)["error"] == "ConfigError");
  CHECK(run({"eval", "lhs", "order-p", "--z", "1+"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"eval", "rhs", "order-p", "--z", "1"}).code == 2);
}

TEST_CASE("suite") {
  const auto path = temp_path("zs_suite_report.json");
  const Run r = run({"suite", "--only", "7.1", "--report", path.string()});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["summary"]["total"] == 1);
  CHECK(j["reports"][0]["identity_id"] == "7.1");
  CHECK(json::parse(slurp(path)) == j);
  std::filesystem::remove(path);
  CHECK(run({"suite", "--only", "no-such-entry"}).code == 2);
}

TEST_CASE("poles CSV") {
  const Run r = run({"poles", "--s", "2+1i", "--count", "3"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,re,im,abs,arg");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 3);
  const auto path = temp_path("zs_poles.csv");
  CHECK(run({"poles", "--s", "2", "--count", "5", "--out", path.string()}).code == 0);
  CHECK(slurp(path).rfind("n,re,im,abs,arg\n1,-1,-0,1,", 0) == 0);
  std::filesystem::remove(path);
  CHECK(run({"poles", "--s", "0.5"}).code == 2);
}

TEST_CASE("residue") {
  const Run r = run({"residue", "--spec", "mobius", "--s", "2", "--n", "3"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["measured_residue"][0].get<double>() == doctest::Approx(-1.0).epsilon(1e-9));
  const Run w = run({"residue", "--s", "3", "--n", "2", "--variant", "weighted", "--q", "0", "--m", "1"});
  REQUIRE(w.code == 0);
  CHECK(json::parse(w.out)["measured_residue"][0].get<double>() == doctest::Approx(-std::log(2.0)).epsilon(1e-8));
  const Run zero = run({"residue", "--spec", "mobius", "--s", "2", "--n", "4"});
  CHECK(zero.code == 2);
  CHECK(json::parse(zero.err)["error"] == "NotAPoleError");
}

TEST_CASE("ZS_MAX_TERMS") {
  ::setenv("ZS_MAX_TERMS", "nope", 1);
  CHECK(run({"eval", "lhs", "order-p"}).code == 2);
  ::setenv("ZS_MAX_TERMS", "100000", 1);
  CHECK(run({"eval", "lhs", "order-p"}).code == 0);
  ::unsetenv("ZS_MAX_TERMS");
}

#ifdef ZS_CLI_PATH
TEST_CASE("installed binary end to end") {
  const auto out = temp_path("zs_e2e.json");
  const std::string cmd = std::string("\"") + ZS_CLI_PATH + "\" verify compose --f exp --s 2 --z 1 > \"" + out.string() + "\"";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(json::parse(slurp(out))["status"] == "pass");
  const std::string bad = std::string("\"") + ZS_CLI_PATH + "\" eval lhs order-p --s 0.5 2> \"" + out.string() + "\"";
  const int status = std::system(bad.c_str());
  CHECK(WEXITSTATUS(status) == 2);
  CHECK(json::parse(slurp(out))["error"] == "DomainError");
  std::filesystem::remove(out);
}
#endif
