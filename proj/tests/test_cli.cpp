#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "rankone/cli.hpp"
#include "rankone/errors.hpp"

using namespace rankone;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(cli::RunConfig c) {
  std::ostringstream out, err;
  const int code = cli::run(c, out, err);
  return {code, out.str(), err.str()};
}

cli::RunConfig config(const std::string& sub) {
  cli::RunConfig c;
  c.subcommand = sub;
  return c;
}

}  // namespace

TEST_CASE("grid parsing") {
  const auto g = cli::parse_grid("-2.5:2.5:11");
  CHECK(g.min == -2.5);
  CHECK(g.max == 2.5);
  CHECK(g.count == 11);
  CHECK_THROWS_AS(cli::parse_grid("1:2"), ValidationError);
  CHECK_THROWS_AS(cli::parse_grid("1:2:3x"), ValidationError);
}

TEST_CASE("strict configuration parsing") {
  const auto c = cli::config_from_json(json::parse(
      R"({"preset":"H4","subcommand":"phi","grid":{"min":0,"max":2,"count":5},
          "quadrature":{"rel_tol":1e-10,"truncation":{"t_cap":50}},"output":{"format":"json"}})"));
  CHECK(c.preset == "H4");
  CHECK(c.grid->count == 5);
  CHECK(c.quadrature.rel_tol == 1e-10);
  CHECK(c.quadrature.truncation.t_cap == 50.0);
  CHECK(c.format == "json");
  try {
    cli::config_from_json(json::parse(R"({"quadrature":{"reltol":1e-10}})"));
    FAIL("accepted unknown key");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("config.quadrature.reltol") != std::string::npos);
  }
  CHECK_THROWS_AS(cli::config_from_json(json::parse(R"({"grid":{"min":0,"max":1}})")), ValidationError);
  CHECK_THROWS_AS(cli::config_from_json(json::parse(R"({"grid":{"min":0,"max":1,"count":2.5}})")),
                  ValidationError);
  CHECK_THROWS_AS(cli::config_from_json(json::parse(R"({"lambda":"1"})")), ValidationError);
}

TEST_CASE("config survives a JSON round trip") {
  auto c = config("expansion");
  c.preset = "CH2";
  c.eps = {0.3, 0.15};
  c.grid = cli::GridSpec{-3.0, 3.0, 13};
  const auto back = cli::config_from_json(json::parse(cli::config_to_json(c).dump()));
  CHECK(cli::config_to_json(back) == cli::config_to_json(c));
}

TEST_CASE("validation failures exit with status 2 and name the field") {
  auto c = config("transform");
  c.grid = cli::GridSpec{-1.0, 1.0, 10};
  const auto r = run(c);
  CHECK(r.code == 2);
  CHECK(r.err.find("config.grid.count") != std::string::npos);
  CHECK(run(config("nonsense")).code == 2);
  auto bad_preset = config("phi");
  bad_preset.preset = "SU3";
  CHECK(run(bad_preset).code == 2);
  auto bad_format = config("phi");
  bad_format.format = "xml";
  CHECK(run(bad_format).code == 2);
}

TEST_CASE("contract errors inside a module exit with status 2 and name the operation") {
  auto c = config("transform");
  c.profile = "xi_weighted";
  c.profile_power = 1.0;
  const auto r = run(c);
  CHECK(r.code == 2);
  CHECK(r.err.find("transform.hc_transform") != std::string::npos);
}

TEST_CASE("CSV output is deterministic and round-trips numbers") {
  auto c = config("phi");
  c.preset = "CH2";
  c.lambda = {0.5, 3.5};
  c.grid = cli::GridSpec{0.0, 5.0, 11};
  const auto a = run(c), b = run(c);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("lambda_re,lambda_im,t,phi_re,phi_im\n", 0) == 0);
  CHECK(a.out.find('\r') == std::string::npos);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 23);
  // 3.5 at t = 2.5 is on the grid.
  CHECK(a.out.find("3.5,0,2.5,") != std::string::npos);
}

TEST_CASE("JSON report schema") {
  auto c = config("cfun");
  c.preset = "H3";
  c.format = "json";
  c.grid = cli::GridSpec{0.5, 2.0, 4};
  const auto r = run(c);
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["preset"] == "H3");
  CHECK(j["operation"] == "cfun");
  CHECK(j.contains("inputs"));
  CHECK(j.contains("max_error"));
  REQUIRE(j["per_sample"].size() == 4);
  CHECK(j["per_sample"][0]["density"].get<double>() == doctest::Approx(0.25));
}

TEST_CASE("output is written to the requested path") {
  const auto path = std::filesystem::temp_directory_path() / "rankone_cli_test.csv";
  std::filesystem::remove(path);
  auto c = config("phi");
  c.out = path.string();
  const auto r = run(c);
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  CHECK(header == "lambda_re,lambda_im,t,phi_re,phi_im");
  std::filesystem::remove(path);
  auto bad = config("phi");
  bad.out = "/nonexistent-dir/x.csv";
  CHECK(run(bad).code == 2);
}

TEST_CASE("roundtrip meets its budget, and a budget it cannot meet exits with 3") {
  auto c = config("roundtrip");
  c.format = "json";
  c.grid = cli::GridSpec{-6.0, 6.0, 25};
  const auto ok = run(c);
  REQUIRE(ok.code == 0);
  const auto j = json::parse(ok.out);
  CHECK(j["max_error"].get<double>() <= 1e-6);
  c.threshold = 1e-300;
  CHECK(run(c).code == 3);
}

TEST_CASE("membership report") {
  auto c = config("membership");
  c.symbol = "rough";
  c.format = "json";
  const auto r = run(c);
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["member"] == false);
}
