#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <sstream>

#include "wysiwyg/cli.hpp"

using namespace wysiwyg;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("group operations") {
  CHECK(run({"mul", "--g", "A", "--h", "A^-1"}).out == "./.\n");
  CHECK(run({"mul", "--g", "A", "--h", "A", "--algo", "rewrite"}).out == run({"mul", "--g", "A^2", "--h", "id"}).out);
  CHECK(run({"inv", "--elem", "A"}).out == "(.,(.,.))/((.,.),.)\n");
  const auto j = nlohmann::json::parse(run({"inv", "--elem", "D", "--out", "json"}).out);
  CHECK(j["leaves"] == 4);
}

TEST_CASE("coefficients") {
  CHECK(run({"coeff", "--mode", "psi", "--elem", "A"}).out == "1\n");
  CHECK(run({"coeff", "--mode", "psi", "--elem", "D", "--delta-exact"}).out == "(δ^2-3)/(δ^2-2)\n");
  CHECK(run({"coeff", "--mode", "omega", "--elem", "A", "--delta", "2"}).out == "0.5\n");
  // d = 2 at delta = 2cos(pi/6), where t vanishes
  CHECK(std::abs(std::stod(run({"coeff", "--mode", "psi", "--elem", "D", "--delta-root", "6"}).out)) < 1e-12);
  const Run two = run({"coeff", "--elem", "A", "--elem", "B", "--delta", "2"});
  CHECK(two.out == "A\t1\nB\t0.5\n");
}

TEST_CASE("csv output is stable across job counts") {
  const std::vector<std::string> base{"coeff", "--mode", "omega", "--elem", "A", "--elem", "D", "--elem", "A^3 B",
                                      "--delta", "2",   "--out",  "csv",    "--no-timing"};
  const Run one = run(base);
  auto par = base;
  par.insert(par.end(), {"--jobs", "3"});
  const Run three = run(par);
  CHECK(one.code == 0);
  CHECK(one.out == three.out);
  CHECK(one.out.rfind("n,mode,exact,numeric,terms,millis\nA,omega,,0.5,", 0) == 0);
  CHECK(one.out.find("0.000\n") != std::string::npos);
}

TEST_CASE("experiments") {
  const Run lm = run({"lemma43", "--g", "D", "--h", "D", "--n-max", "4"});
  CHECK(lm.code == 0);
  CHECK(lm.out.find("N = 1\n") != std::string::npos);
  const Run sg = run({"sigma-limit", "--g", "D", "--n-max", "3"});
  CHECK(sg.out.find("N = 1\n") != std::string::npos);
  const Run dc = run({"an-decay", "--n-max", "5", "--delta", "2"});
  CHECK(dc.code == 0);
  CHECK(dc.out.find("5\t0.03125\n") != std::string::npos);
  CHECK(dc.out.find("ratio at n=5 0.5\n") != std::string::npos);
  const Run gr = run({"gram", "--mode", "omega", "--elem", "id,A", "--delta", "2"});
  CHECK(gr.out == "1\t0.5\n0.5\t1\nmin eigenvalue 0.5\n");
  const auto j = nlohmann::json::parse(run({"gram", "--elem", "id,A", "--delta", "2", "--out", "json"}).out);
  CHECK(j["min_eigenvalue"].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("exit codes") {
  // domain errors
  Run r = run({"coeff", "--elem", "A^2 C"});
  CHECK(r.code == kExitDomain);
  CHECK(r.err.find("at position 4") != std::string::npos);
  CHECK(run({"coeff", "--elem", "A", "--delta", "2", "--delta-exact"}).code == kExitDomain);
  CHECK(run({"coeff", "--elem", "A", "--delta-root", "2"}).code == kExitDomain);
  // lambda = 0 at delta = 2cos(pi/4)
  CHECK(run({"coeff", "--elem", "D", "--delta-root", "4"}).code == kExitDomain);
  CHECK(run({"coeff", "--elem", "D", "--delta", "1.3"}).code == kExitDomain);
  CHECK(run({"coeff", "--mode", "sideways", "--elem", "A"}).code == kExitDomain);
  CHECK(run({"frobnicate"}).code == kExitDomain);
  // caps
  r = run({"coeff", "--elem", "D", "--max-width", "2"});
  CHECK(r.code == kExitCap);
  CHECK(r.err.find("reached") != std::string::npos);
  CHECK(run({"an-decay", "--n-max", "20", "--max-leaves", "10", "--delta", "2"}).code == kExitCap);
  // warnings do not fail
  r = run({"coeff", "--elem", "A", "--delta", "1.7"});
  CHECK(r.code == kExitOk);
  CHECK(r.err.find("warning") != std::string::npos);
  CHECK(run({"--help"}).code == kExitOk);
}
