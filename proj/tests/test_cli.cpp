#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "srq/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = srq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("star and eval") {
  auto r = run({"star", "--f", "q - i", "--g", "q - j"});
  CHECK(r.code == 0);
  CHECK(r.out == "q^2 + q*(-i-j) + k\n");

  r = run({"eval", "--f", "q^2", "i"});
  CHECK(r.code == 0);
  CHECK(r.out == "-1\n");

  r = run({"eval", "--f", "q", "--den", "1 - q/2", "0.5"});
  CHECK(r.out == "0.6666666666666666\n");

  r = run({"--json", "eval", "--f", "q + j", "i"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"] == nlohmann::json::array({0.0, 1.0, 1.0, 0.0}));

  r = run({"--csv", "star", "--f", "q", "--g", "2"});
  CHECK(r.out == "power,w,x,y,z\n0,0,0,0,0\n1,2,0,0,0\n");
}

TEST_CASE("quotient") {
  auto r = run({"quotient", "--den", "1 - q i/2", "--num", "q - i/2", "--at", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "-0.5i\n");
  r = run({"quotient", "--den", "q - i", "--num", "1", "--at", "i"});
  CHECK(r.code == 1);
  CHECK(r.err.find("error:") == 0);
}

TEST_CASE("geometry commands") {
  auto r = run({"distance", "0", "0.5"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("0.5493061443", 0) == 0);
  CHECK(run({"distance", "0", "1"}).code == 1);

  r = run({"--json", "mobius", "i/2", "j/2"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["twist"][1].get<double>() == doctest::Approx(8.0 / 34));
  CHECK(j["twist"][2].get<double>() == doctest::Approx(15.0 / 34));
  double n2 = 0.0;
  for (const auto& x : j["value"]) n2 += x.get<double>() * x.get<double>();
  CHECK(n2 == doctest::Approx(8.0 / 25.0).epsilon(1e-12));

  r = run({"--json", "mobius", "--classical", "i/2", "j/2"});
  const auto classical = nlohmann::json::parse(r.out);
  n2 = 0.0;
  for (const auto& x : classical["value"]) n2 += x.get<double>() * x.get<double>();
  CHECK(n2 == doctest::Approx(8.0 / 17.0).epsilon(1e-12));

  CHECK(run({"mobius", "i", "0"}).code == 1);
  CHECK(run({"mobius", "--u", "2", "0", "0"}).code == 1);

  r = run({"expand", "--mobius", "--q0", "i/2", "--n", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "A_0 = 0\nA_1 = 0.8\n");
  CHECK(run({"expand", "--q0", "i/2"}).code == 2);
  CHECK(run({"expand", "--f", "q^2", "--q0", "0.5"}).code == 1);

  r = run({"normal-form", "--a", "1", "--c", "0", "--b", "0", "--d", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "q0 = 0\nu = 1\n");
  CHECK(run({"normal-form", "--a", "2"}).code == 1);
  CHECK(run({"normal-form", "--matrix", "{not json"}).code == 2);
}

TEST_CASE("verify") {
  auto r = run({"--samples", "200", "--json", "verify", "schwarz-pick"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["suite"] == "schwarz-pick");
  CHECK(j["seed"] == 42);

  r = run({"verify", "--samples", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("geometry: PASS") != std::string::npos);

  r = run({"--samples", "10", "--csv", "verify", "algebra"});
  CHECK(r.out.rfind("suite,property,samples,violations,worst_margin\n", 0) == 0);

  CHECK(run({"verify", "nope"}).code == 2);
  CHECK(run({"--tol", "-1", "verify"}).code == 2);
  CHECK(run({"--samples", "0", "verify"}).code == 2);
  CHECK(run({"--json", "--csv", "verify"}).code == 2);

  const auto first = run({"--seed", "7", "--samples", "50", "--json", "verify", "zero-case"});
  const auto second = run({"--seed", "7", "--samples", "50", "--json", "verify", "zero-case"});
  CHECK(first.out == second.out);

  ::setenv("SRQ_SEED", "7", 1);
  const auto from_env = run({"--samples", "50", "--json", "verify", "zero-case"});
  ::unsetenv("SRQ_SEED");
  CHECK(from_env.out == first.out);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"star", "--f", "q +", "--g", "1"}).code == 2);
  CHECK(run({"eval", "--f", "q"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
}
