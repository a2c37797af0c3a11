#include "doctest.h"

#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace xxff::cli;

#ifndef XXFF_CLI_PATH
#error "XXFF_CLI_PATH must name the xxff executable"
#endif

namespace {

RunConfig config(const std::string& command) {
  RunConfig c;
  c.command = command;
  return c;
}

std::string csv(const Report& r) {
  std::ostringstream os;
  write_csv(os, r);
  return os.str();
}

int exit_code(const std::string& args) {
  const std::string cmd = std::string(XXFF_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("float and rational formatting") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(-0.125) == "-0.125");
  CHECK(format_double(1e300) == "1.0000000000000001e+300");
  const auto r = run(config("series"));
  CHECK(csv(r).find("-363/1024") != std::string::npos);
}

TEST_CASE("every record carries a provenance tag and round-trips through JSON") {
  const std::set<std::string> tags{"PAPER", "TRIVIAL", "DERIVED"};
  for (const char* cmd : {"constants", "prefactors", "formfactor", "series", "exact", "sum-identity", "compare"}) {
    CAPTURE(cmd);
    const auto r = run(config(cmd));
    CHECK_FALSE(r.records.empty());
    const auto j = to_json(r);
    for (const auto& rec : j.at("records")) CHECK(tags.count(rec.at("provenance").get<std::string>()) == 1);
    CHECK(report_from_json(j) == r);
    CHECK(report_from_json(nlohmann::json::parse(j.dump(2))) == r);
    CHECK(j.at("summary").at("total").get<int>() == static_cast<int>(r.records.size()));
  }
}

TEST_CASE("coefficient table layout") {
  const auto j = to_json(run(config("series")));
  REQUIRE(j.at("coefficients").size() > 0);
  for (const auto& c : j.at("coefficients")) {
    CHECK(c.contains("parity"));
    CHECK(c.contains("power"));
    CHECK(c.contains("numerator"));
    CHECK(c.contains("denominator"));
  }
}

TEST_CASE("output is deterministic") {
  for (const char* cmd : {"constants", "series", "compare", "sum-identity"}) {
    CHECK(csv(run(config(cmd))) == csv(run(config(cmd))));
    CHECK(to_json(run(config(cmd))).dump() == to_json(run(config(cmd))).dump());
  }
}

TEST_CASE("passing commands") {
  for (const char* cmd : {"constants", "prefactors", "formfactor", "series", "exact", "compare"}) {
    CAPTURE(cmd);
    CHECK(run(config(cmd)).ok());
  }
  auto ff = config("formfactor");
  ff.L = 64;
  CHECK(run(ff).ok());
  auto golden = config("formfactor");
  golden.golden = true;
  CHECK(run(golden).ok());
}

TEST_CASE("sum-identity fails exactly on the unit-circle partial sums") {
  const auto r = run(config("sum-identity"));
  for (const auto& rec : r.records) {
    CAPTURE(rec.name);
    CHECK(rec.passed == (rec.name.find("unit circle") == std::string::npos));
  }
}

TEST_CASE("usage errors") {
  auto c = config("formfactor");
  c.L = 7;
  CHECK_THROWS_AS(run(c), UsageError);
  c = config("series");
  c.order = 9;
  CHECK_THROWS_AS(run(c), UsageError);
  c = config("prefactors");
  c.m_max = 21;
  CHECK_THROWS_AS(run(c), UsageError);
  c = config("compare");
  c.x_max = 16;
  CHECK_THROWS_AS(run(c), UsageError);
  c = config("constants");
  c.format = "xml";
  CHECK_THROWS_AS(run(c), UsageError);
  CHECK_THROWS_AS(run(config("nope")), UsageError);
}

TEST_CASE("exit codes of the executable") {
  CHECK(exit_code("constants") == 0);
  CHECK(exit_code("series --order 10 --format json") == 0);
  CHECK(exit_code("sum-identity") == 1);
  CHECK(exit_code("formfactor --L 7") == 2);
  CHECK(exit_code("series --order 5") == 2);
  CHECK(exit_code("--format xml constants") == 2);
  CHECK(exit_code("") == 2);
  CHECK(exit_code("verify sideways") == 2);
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = "xxff_cli_test_out.json";
  REQUIRE(exit_code("constants --format json --out " + path) == 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(report_from_json(j).records.size() == run(config("constants")).records.size());
  std::remove(path.c_str());
}
