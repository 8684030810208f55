#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dyndeg/cli.hpp"

using namespace dyndeg;
using dyndeg::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("zeta parsing") {
  CHECK(cli::parse_zeta("1+2i") == GaussianInt{1, 2});
  CHECK(cli::parse_zeta(" -3 + 4i ") == GaussianInt{-3, 4});
  CHECK(cli::parse_zeta("2") == GaussianInt{2, 0});
  CHECK(cli::parse_zeta("i") == GaussianInt{0, 1});
  CHECK(cli::parse_zeta("-i") == GaussianInt{0, -1});
  CHECK(cli::parse_zeta("5i") == GaussianInt{0, 5});
  CHECK(cli::parse_zeta("1-i") == GaussianInt{1, -1});
  CHECK(cli::parse_zeta("+7-12i") == GaussianInt{7, -12});
  for (const char* bad : {"", "i2", "1+2", "1.5+i", "1+2j", "++1", "2i+1", "abc"}) {
    CHECK_THROWS_AS(cli::parse_zeta(bad), std::invalid_argument);
  }
}

TEST_CASE("degrees command") {
  Result r = invoke({"degrees", "--zeta", "1+2i", "--count", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "j d_j gamma(j) e_j\n1 5 1-2i 10\n2 8 -2i 66\n3 22 -2 454\n");
  Result empty = invoke({"degrees", "--count", "0"});
  CHECK(empty.code == 0);
  CHECK(empty.out == "j d_j gamma(j) e_j\n");
  Result bad = invoke({"degrees", "--zeta", "1+1i"});
  CHECK(bad.code == cli::kInadmissible);
  CHECK(bad.err.find("inadmissible") != std::string::npos);
  Result csv = invoke({"degrees", "--count", "2", "--format", "csv"});
  CHECK(csv.out == "j,d,gamma,e\n1,5,1-2i,10\n2,8,-2i,66\n");
}

TEST_CASE("lambda command") {
  Result r = invoke({"lambda", "--zeta", "1+2i", "--digits", "10", "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (auto& [k, v] : doc.items()) {
    keys.push_back(k);
    CHECK(v.is_string());
  }
  CHECK(keys == std::vector<std::string>{"zeta", "lambda_lo", "lambda_hi", "width", "N_used", "precision_bits"});
  CHECK(doc["lambda_lo"].get<std::string>().rfind("6.857557409", 0) == 0);
  CHECK(doc.dump(2) + "\n" == r.out);
  CHECK(invoke({"lambda", "--zeta", "1+2i", "--digits", "10", "--format", "json"}).out == r.out);

  Result text = invoke({"lambda", "--zeta", "-3+4i", "--digits", "10"});
  CHECK(text.code == 0);
  CHECK(text.out.find("regime large topological degree") != std::string::npos);
  CHECK(invoke({"lambda", "--zeta", "2", "--digits", "5"}).code == cli::kInadmissible);
}

TEST_CASE("precision cap maps to exit code 3") {
  ::setenv("DYNDEG_PRECISION_CAP", "64", 1);
  Result r = invoke({"lambda", "--zeta", "1+2i", "--digits", "60", "--precision-bits", "64"});
  ::unsetenv("DYNDEG_PRECISION_CAP");
  CHECK(r.code == cli::kPrecision);
}

TEST_CASE("oracle command") {
  Result ok = invoke({"oracle", "--zeta", "1+2i", "--max-iter", "2", "--line-trials", "1"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "n e_n oracle_degree line_degree match\n1 10 10 10 yes\n2 66 66 66 yes\n");
  Result none = invoke({"oracle", "--max-iter", "0"});
  CHECK(none.code == 0);
  Result fault = invoke({"oracle", "--zeta", "1+2i", "--fault", "skip-reduce"});
  CHECK(fault.code == cli::kMismatch);
  Result budget = invoke({"oracle", "--zeta", "-3+4i", "--max-iter", "3"});
  CHECK(budget.code == cli::kResource);
  Result json = invoke({"oracle", "--zeta", "2+i", "--max-iter", "2", "--format", "json"});
  CHECK(json.code == 0);
  auto doc = nlohmann::ordered_json::parse(json.out);
  CHECK(doc["all_match"] == true);
  CHECK(doc["rows"][1]["oracle_degree"] == "54");
}

TEST_CASE("cf and irregular commands") {
  Result cf = invoke({"cf", "--zeta", "1+2i", "--depth", "4"});
  CHECK(cf.code == 0);
  CHECK(cf.out.find("cf [0;5,1,2,12]\n") != std::string::npos);
  CHECK(cf.out.find("4 12 37 210 ") != std::string::npos);
  Result zero = invoke({"cf", "--depth", "0", "--format", "json"});
  CHECK(zero.code == 0);
  CHECK(nlohmann::ordered_json::parse(zero.out)["coefficients"] == nlohmann::ordered_json::array({"0"}));

  Result irr = invoke({"irregular", "--zeta", "1+2i", "--n", "210", "--window", "5"});
  CHECK(irr.code == 0);
  CHECK(irr.out.find("irregular 271 354 437") != std::string::npos);
  CHECK(irr.out.find("min_offset 61\n") != std::string::npos);
  Result csv = invoke({"irregular", "--n", "210", "--window", "5", "--format", "csv"});
  CHECK(csv.out.rfind("n,i,j,beta_re,beta_im\n210,0,271,1,0\n", 0) == 0);
  Result js = invoke({"irregular", "--n", "210", "--window", "5/2", "--format", "json"});
  CHECK(js.code == 0);
  auto doc = nlohmann::ordered_json::parse(js.out);
  CHECK(doc["window_end"] == "525");
  CHECK(doc.dump(2) + "\n" == js.out);
  CHECK(invoke({"irregular", "--n", "0"}).code == cli::kUsage);
  CHECK(invoke({"irregular", "--n", "10", "--window", "x"}).code == cli::kUsage);
}

TEST_CASE("report command is reproducible") {
  Result a = invoke({"report", "--zeta", "1+2i", "--format", "json", "--n", "50"});
  Result b = invoke({"report", "--zeta", "1+2i", "--format", "json", "--n", "50"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto doc = nlohmann::ordered_json::parse(a.out);
  CHECK(doc["lambda2"] == "5");
  CHECK(doc["regime"] == "small topological degree");
  CHECK(doc["lemmas"][0]["certified"] == true);
}

TEST_CASE("usage errors and output files") {
  CHECK(invoke({}).code == cli::kUsage);
  CHECK(invoke({"frobnicate"}).code == cli::kUsage);
  CHECK(invoke({"degrees", "--format", "xml"}).code == cli::kUsage);
  CHECK(invoke({"degrees", "--zeta", "one"}).code == cli::kUsage);
  CHECK(invoke({"lambda", "--digits", "0"}).code == cli::kUsage);
  CHECK(invoke({"--help"}).code == 0);

  const std::string path = "cli_test_output.json";
  Result r = invoke({"degrees", "--count", "2", "--format", "json", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  auto doc = nlohmann::ordered_json::parse(ss.str());
  CHECK(doc["rows"][1]["e"] == "66");
  std::remove(path.c_str());
}
