#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "morsesusy/cli.hpp"

using namespace morsesusy;
using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "morsesusy");
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("format_number") {
  CHECK(format_number(0.05) == "0.05");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333333");
  CHECK(format_number(-2.1213203435596424) == "-2.12132034355964");
}

TEST_CASE("spectrum") {
  const Run r = run({"spectrum", "--V0", "8", "--alpha", "1", "--gamma", "0"});
  CHECK(r.code == kExitOk);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 5);
  CHECK(l[0] == "m,energy,unshifted_energy,weight,partner_energy,partner_weight");
  CHECK(l[1].rfind("0,0,-6.125,0.05,3,", 0) == 0);
  CHECK(l[2].rfind("1,3,", 0) == 0);
  CHECK(l[3].rfind("2,5,", 0) == 0);
  CHECK(l[4] == "3,6,-0.125,0.25,,");
}

TEST_CASE("spectrum as JSON") {
  const Run r = run({"spectrum", "--format", "json"});
  CHECK(r.code == kExitOk);
  const json doc = json::parse(r.out);
  REQUIRE(doc.contains("bound_states"));
  REQUIRE(doc.contains("partner"));
  CHECK(doc["bound_states"].size() == 4);
  CHECK(doc["partner"].size() == 3);
  CHECK(doc["bound_states"][3]["energy"].get<double>() == 6.0);
  CHECK(doc["partner"][0]["energy"].get<double>() == 3.0);
  // re-serializing the parsed document reproduces the output byte for byte
  CHECK(doc.dump(2) + "\n" == r.out);
}

TEST_CASE("every command round-trips through JSON and is deterministic") {
  for (const char* cmd : {"spectrum", "coefficients", "poly", "factor", "measure", "verify"}) {
    CAPTURE(cmd);
    const Run a = run({cmd, "--format", "json", "--V0", "2", "--gamma", "0.25", "--nmax", "6"});
    const Run b = run({cmd, "--format", "json", "--V0", "2", "--gamma", "0.25", "--nmax", "6"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(json::parse(a.out).dump(2) + "\n" == a.out);
  }
}

TEST_CASE("coefficients") {
  const Run r = run({"coefficients", "--nmax", "5"});
  CHECK(r.code == kExitOk);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 7);
  CHECK(l[0] == "n,a_tilde,a,b,c,d_next,a_plus,b_plus,truncation");
  CHECK(l[1] == "0,-1.625,4.5,1.5,-2.12132034355964,-0.707106781186547,5,1,no");
  CHECK(l[4].rfind("3,", 0) == 0);
  CHECK(l[4].substr(l[4].size() - 3) == "yes");
  const Run again = run({"coefficients", "--nmax", "5"});
  CHECK(again.out == r.out);
}

TEST_CASE("poly reports zero discrepancy columns") {
  const Run r = run({"poly", "--V0", "2", "--gamma", "0.25", "--nmax", "8", "--esteps", "7"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("energy,n,P_recursion,P_closed,P_plus_recursion,P_plus_closed,K_recursion,K_closed", 0) == 0);
  CHECK(r.out.find("# max_discrepancy_P=") != std::string::npos);
}

TEST_CASE("measure total mass") {
  const Run r = run({"measure", "--format", "json"});
  CHECK(r.code == kExitOk);
  const json doc = json::parse(r.out);
  CHECK(doc["total_mass"].get<double>() == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(doc["partner_total_mass"].get<double>() == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("verify") {
  const Run r = run({"verify"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);

  const Run j = run({"verify", "--format", "json", "--V0", "12.5", "--alpha", "2", "--gamma", "-0.25"});
  CHECK(j.code == kExitOk);
  const std::size_t base = json::parse(j.out)["checks"].size();

  const Run o = run({"verify", "--oracle", "--format", "json"});
  CHECK(o.code == kExitOk);
  CHECK(json::parse(o.out)["checks"].size() == base + 2);

  const Run bad = run({"verify", "--corrupt-b", "1"});
  CHECK(bad.code == kExitVerifyFailed);
  CHECK(bad.out.find("factorization,FAIL") != std::string::npos);
}

TEST_CASE("invalid parameters exit with code 2") {
  const Run r = run({"spectrum", "--V0", "0.125"});
  CHECK(r.code == kExitBadParams);
  CHECK(r.err.find("no bound states") != std::string::npos);
  CHECK(run({"spectrum", "--alpha", "-1"}).code == kExitBadParams);
  CHECK(run({"spectrum", "--format", "xml"}).code == kExitBadParams);
  CHECK(run({"nonsense"}).code == kExitBadParams);
  CHECK(run({}).code == kExitBadParams);
}

TEST_CASE("config file with flag precedence") {
  const std::string path = "test_cli_config.ini";
  {
    std::ofstream f(path);
    f << "V0=2\ngamma=0.25\nalpha=1\n";
  }
  const Run from_file = run({"spectrum", "--config", path});
  const Run from_flags = run({"spectrum", "--V0", "2", "--gamma", "0.25"});
  CHECK(from_file.code == kExitOk);
  CHECK(from_file.out == from_flags.out);
  const Run overridden = run({"spectrum", "--config", path, "--V0", "8", "--gamma", "0"});
  CHECK(overridden.out == run({"spectrum"}).out);
  std::remove(path.c_str());
}
