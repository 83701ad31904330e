#include "octo/cli.hpp"
#include "octo/verify.hpp"

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using namespace octo;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_with(const std::string& text, const std::string& needle) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.find(needle) != std::string::npos) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("verify exit codes") {
  const Run plain = run({"verify"});
  CHECK(plain.code == 0);
  CHECK(plain.out.find("confirmed: 16, refuted: 6, degenerate: 1") != std::string::npos);
  CHECK(run({"verify", "--strict"}).code == 1);
  const Run missing = run({"--fixtures", "/nonexistent/octo-so8", "verify"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("fixture directory does not exist") != std::string::npos);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "--format", "yaml"}).code == 2);
}

TEST_CASE("environment variable selects the fixture directory") {
  setenv("OCTO_SO8_FIXTURES", "/nonexistent/octo-so8-env", 1);
  CHECK(run({"gram"}).code == 2);
  CHECK(run({"--fixtures", OCTO_SO8_TEST_FIXTURES, "gram"}).code == 0);
  unsetenv("OCTO_SO8_FIXTURES");
}

TEST_CASE("verify JSON is byte-identical across runs and round-trips") {
  const Run a = run({"verify", "--format", "json"});
  const Run b = run({"verify", "--format", "json"});
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(to_json(report_from_json(j)) == j);
}

TEST_CASE("tables") {
  const Run md = run({"tables"});
  CHECK(md.code == 0);
  CHECK(md.out.find("| e1 | e1 | -e0 | e3 |") != std::string::npos);
  CHECK(md.out.find("identical: 44, sign-flipped: 20, different: 0") != std::string::npos);
  CHECK(md.out.find("- E6·E5: derived E1, fixture -E1") != std::string::npos);

  const auto j = nlohmann::json::parse(run({"tables", "--format", "json"}).out);
  const auto& d = j["diff"];
  CHECK(d["identical"].get<int>() + d["sign_flipped"].get<int>() + d["different"].get<int>() == 64);
  CHECK(d["cells"].size() == 20);
  CHECK(j["table2"][1][2] == "e3");
}

TEST_CASE("rotate symbolic") {
  const Run r12 = run({"rotate", "1", "2"});
  CHECK(r12.code == 0);
  CHECK(lines_with(r12.out, "' = ").size() == 8);
  CHECK(lines_with(r12.out, "differs from fixture").size() == 3);
  CHECK(r12.out.find("f3' = f3    [differs from fixture: f3' = f3 + θ·(2*i*f6), fixture coefficient is imaginary]") !=
        std::string::npos);

  const Run r56 = run({"rotate", "5", "6"});
  CHECK(lines_with(r56.out, "' = ") == lines_with(r12.out, "' = "));

  const auto j = nlohmann::json::parse(run({"rotate", "1", "2", "--format", "json"}).out);
  CHECK(j["lines"].size() == 8);
  CHECK(j["discrepancies"].size() == 3);
  CHECK(run({"rotate", "3", "3"}).code == 2);
  CHECK(run({"rotate", "1", "9"}).code == 2);
}

TEST_CASE("rotate numeric") {
  const auto j = nlohmann::json::parse(
      run({"rotate", "1", "2", "--theta", "0", "--f", "1,0,0,0,0,0,0,0", "--format", "json"}).out);
  const std::vector<std::string> unchanged = {"1", "0", "0", "0", "0", "0", "0", "0"};
  CHECK(j["first_order"] == unchanged);
  CHECK(j["conjugation"] == unchanged);
  CHECK(j["conjugation_residual"] == 0.0);

  const auto k = nlohmann::json::parse(
      run({"rotate", "1", "2", "--theta", "1/2", "--f", "1,0,0,0,0,0,0,0", "--format", "json"}).out);
  CHECK(k["first_order"][1] == "-1");
  CHECK(run({"rotate", "1", "2", "--theta", "0.1", "--f", "1,0,0,0,0,0,0,0"}).code == 2);
  CHECK(run({"rotate", "1", "2", "--theta", "1/2"}).code == 2);
  CHECK(run({"rotate", "1", "2", "--theta", "1/2", "--f", "1,2"}).code == 2);
}

TEST_CASE("spinor") {
  const Run zero = run({"spinor", "--f", "0,0,0,0,0,0,0,0"});
  CHECK(zero.code == 0);
  CHECK(zero.out.find("ψ'[1] = e0 ") != std::string::npos);
  CHECK(zero.out.find("ψ'[8] = e7 ") != std::string::npos);

  const auto split = nlohmann::json::parse(run({"spinor", "--split", "--f", "0,0,0,0,0,0,0,0", "--format", "json"}).out);
  CHECK(split["y_source"] == "fixture");
  CHECK(split["components"][0]["re"][0] == 0.5);
  CHECK(split["components"][0]["im"][7] == 0.5);
  CHECK(split["components"][4]["im"][7] == -0.5);

  const auto f8 = nlohmann::json::parse(run({"spinor", "--f", "0,0,0,0,0,0,0,0.5", "--format", "json"}).out);
  CHECK(f8["components"][0]["re"][0].get<double>() == doctest::Approx(1.6487212707001282));
  CHECK(f8["components"][2]["re"][2].get<double>() == doctest::Approx(0.6065306597126334));

  const Run rec = run({"spinor", "--split", "--y-source", "reconstructed", "--f", "0.1,0,0,0,0,0,0,0"});
  CHECK(rec.out.find("Y source: reconstructed") != std::string::npos);
  CHECK(run({"spinor"}).code == 2);
  CHECK(run({"spinor", "--f", "a,0,0,0,0,0,0,0"}).code == 2);
}

TEST_CASE("gram and dump-beta") {
  const auto g = nlohmann::json::parse(run({"gram", "--format", "json"}).out);
  CHECK(g["singular"] == false);
  CHECK(g["gram"][0][0] == "8");
  const auto t = nlohmann::json::parse(run({"gram", "--beta-variant", "tensor", "--format", "json"}).out);
  CHECK(t["singular"] == true);
  CHECK(t["gram"][0][7] == "8");

  const auto b = nlohmann::json::parse(run({"dump-beta", "8", "--format", "json"}).out);
  CHECK(b["matrix"][0][0] == "1");
  CHECK(b["matrix"][2][2] == "-1");
  CHECK(run({"dump-beta", "9"}).code == 2);
  CHECK(run({"dump-beta", "1"}).out.find("β1") != std::string::npos);
}
