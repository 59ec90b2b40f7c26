#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "polyaut/serialize.hpp"

using namespace polyaut;
using polyaut::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json call_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--format");
  args.push_back("json");
  const Result r = call(args);
  CHECK(r.code == expected_code);
  return Json::parse(r.out);
}

class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    path_ = std::filesystem::temp_directory_path() /
            ("polyaut_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".json");
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("compose") {
  const Result r = call({"compose", "--n", "2", "--map", "X+Y^2, Y", "--map", "X, Y+1"});
  CHECK(r.code == 0);
  CHECK(r.out == "x1 + x2^2 + 2*x2 + 1, x2 + 1\n");

  const Json inverse = call_json({"compose", "--n", "2", "--map", "X+Y^2, Y", "--map", "X-Y^2, Y", "--expect-identity"});
  CHECK(inverse["is_identity"] == true);
  CHECK(inverse["result"]["coords"] == Json::parse(R"(["x1","x2"])"));

  CHECK(call({"compose", "--n", "2", "--map", "X+Y^2, Y", "--map", "X+Y^2, Y", "--expect-identity"}).code == 1);
}

TEST_CASE("compose of a tame word with its inverse") {
  const Result w = call({"normal-form", "--format", "json", "--word",
                         R"({"n":2,"word":[{"kind":"affine","A":[["1","2"],["0","1"]],"b":["1","0"]},)"
                         R"({"kind":"elementary","i":2,"g":"X^2"}]})"});
  REQUIRE(w.code == 0);
  const std::string map = Json::parse(w.out)["map"]["coords"][0].get<std::string>() + ", " +
                          Json::parse(w.out)["map"]["coords"][1].get<std::string>();
  // F = (A x + b) o (X, Y + X^2), so F^-1 = (X, Y - X^2) o (X - 2Y - 1, Y).
  const Result id = call({"compose", "--n", "2", "--map", "X, Y - X^2", "--map", "X - 1 - 2*Y, Y", "--map", map,
                          "--expect-identity"});
  CHECK(id.code == 0);
}

TEST_CASE("iterate and jacobian") {
  const Json it = call_json({"iterate", "--n", "2", "--map", "Y, X+Y^2", "--m", "2"});
  CHECK(it["iterate_degrees"] == Json::parse("[1,2,4]"));
  const Json jac = call_json({"jacobian", "--n", "3", "--map", "X - 2*(Y^2+X*Z)*Y - (Y^2+X*Z)^2*Z, Y + (Y^2+X*Z)*Z, Z"});
  CHECK(jac["determinant"] == "1");
}

TEST_CASE("lf-certify verdicts and exit codes") {
  const Json ok = call_json({"lf-certify", "--n", "2", "--map", "2*X, 3*Y"});
  CHECK(ok["verdict"] == "CertifiedLF");
  CHECK(ok["minimal_polynomial"] == Json::parse(R"(["6","-5","1"])"));

  const Result henon = call({"lf-certify", "--map", "Y, X+Y^2", "--n", "2"});
  CHECK(henon.code == 2);
  CHECK(henon.out.find("verdict: Unknown") != std::string::npos);
  CHECK(henon.out.find("iterate degrees: 1 2 4 8 16") != std::string::npos);

  CHECK(call({"lf-certify", "--n", "3", "--map", "X+Y^2, Y, Z", "--budget-iter", "1"}).code == 2);
  CHECK(call({"lf-certify", "--n", "2", "--map", "X, Y", "--budget-deg", "0"}).code == 3);
}

TEST_CASE("lf-certify batch files keep input order") {
  const TempFile batch(R"([{"n":2,"coords":["2*X","3*Y"]},{"n":1,"coords":["-x1"]},{"n":2,"coords":["X+Y^2","Y"]}])");
  const Json reports = call_json({"lf-certify", "--file", batch.path()});
  REQUIRE(reports.size() == 3);
  CHECK(reports[0]["minimal_polynomial_text"] == "T^2 - 5*T + 6");
  CHECK(reports[1]["minimal_polynomial_text"] == "T + 1");
  CHECK(reports[2]["minimal_polynomial_text"] == "T^2 - 2*T + 1");

  const TempFile mixed(R"([{"n":2,"coords":["2*X","3*Y"]},{"n":2,"coords":["Y","X+Y^2"]}])");
  CHECK(call({"lf-certify", "--file", mixed.path()}).code == 2);
}

TEST_CASE("minpoly-invert") {
  const Json inv = call_json({"minpoly-invert", "--n", "2", "--map", "X+Y^2, Y", "--mu", "1,-2,1"});
  CHECK(inv["inverse"]["coords"] == Json::parse(R"(["x1 - x2^2","x2"])"));
  const Json certified = call_json({"minpoly-invert", "--n", "1", "--map", "2*X"});
  CHECK(certified["inverse"]["coords"] == Json::parse(R"(["1/2*x1"])"));

  CHECK(call({"minpoly-invert", "--n", "2", "--map", "X+Y^2, Y", "--mu", "-2,1"}).code == 1);
  CHECK(call({"minpoly-invert", "--n", "2", "--map", "0, Y", "--mu", "0,-1,1"}).code == 1);
  CHECK(call({"minpoly-invert", "--n", "2", "--map", "Y, X+Y^2"}).code == 2);
  CHECK(call({"minpoly-invert", "--n", "2", "--map", "X, Y", "--mu", "1,x"}).code == 3);
}

TEST_CASE("normal-form") {
  const Json nf = call_json({"normal-form", "--word",
                             R"([{"kind":"diagonal","c":["2","1"]},{"kind":"elementary","i":2,"g":"X^2"}])"});
  CHECK(nf["recomposition_verified"] == true);
  CHECK(nf["normal_form"]["elementaries"][0]["g"] == "1/4*x1^2");
  CHECK(nf["normal_form"]["diagonal"]["c"] == Json::parse(R"(["2","1"])"));

  const TempFile word(R"({"n":2,"word":[{"kind":"affine","A":[["0","1"],["1","0"]],"b":["0","0"]}]})");
  CHECK(call({"normal-form", "--file", word.path()}).code == 0);
  CHECK(call({"normal-form", "--word", R"([{"kind":"elementary","i":1,"g":"X"}])", "--n", "2"}).code == 3);
  CHECK(call({"normal-form", "--word", "[{"}).code == 3);
  CHECK(call({"normal-form"}).code == 3);
}

TEST_CASE("witness subcommands") {
  const Json w2 = call_json({"witness-obs2", "--n", "2", "--map", "X+Y^2, Y"});
  CHECK(w2["kind"] == "elementary-scaling");
  CHECK(w2["verified"] == true);
  CHECK(w2["diagonal"]["coords"] == Json::parse(R"(["2*x1","x2"])"));

  const Json w3 = call_json({"witness-obs3", "--n", "2", "--map", "X+Y^3, Y", "--a", "2", "--j", "2"});
  CHECK(w3["kind"] == "elementary-unimodular");
  CHECK(w3["conjugator"]["coords"][0] == "x1 + 1/15*x2^3");

  CHECK(call({"witness-obs3", "--n", "2", "--map", "X+Y^3, Y", "--a", "-1"}).code == 3);
  CHECK(call({"witness-obs3", "--n", "2", "--map", "X+Y^3, Y", "--j", "1"}).code == 3);
  CHECK(call({"witness-obs2", "--n", "2", "--map", "X+Y, X+Y"}).code == 3);
}

TEST_CASE("nagata-verify") {
  const Result r = call({"nagata-verify"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verified: yes") != std::string::npos);
  const Json j = call_json({"nagata-verify"});
  CHECK(j["checks"].size() == 5);
  for (const auto& c : j["checks"]) CHECK(c["passed"] == true);
}

TEST_CASE("parse-check and input errors") {
  CHECK(call({"parse-check", "--n", "2", "--poly", "x2 - 2*x1^3 + 1/3"}).out == "-2*x1^3 + x2 + 1/3\n");
  const Result bad = call({"parse-check", "--n", "2", "--poly", "x1 +* x2"});
  CHECK(bad.code == 3);
  CHECK(bad.err.find("parse error") != std::string::npos);
  CHECK(call({"parse-check", "--poly", "x1"}).code == 3);
  CHECK(call({"parse-check", "--n", "2", "--map", "X"}).code == 3);
  CHECK(call({"parse-check", "--file", "/nonexistent/map.json"}).code == 3);
  CHECK(call({"bogus"}).code == 3);
  CHECK(call({}).code == 3);
  CHECK(call({"compose", "--format", "yaml", "--n", "1", "--map", "X"}).code == 3);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::vector<std::string>> commands{
      {"nagata-verify", "--format", "json"},
      {"lf-certify", "--n", "3", "--map", "X - 2*(Y^2+X*Z)*Y - (Y^2+X*Z)^2*Z, Y + (Y^2+X*Z)*Z, Z", "--format", "json"},
      {"witness-obs3", "--n", "3", "--map", "X, Y + X^2*Z - 3, Z", "--format", "json"},
  };
  for (const auto& c : commands) CHECK(call(c).out == call(c).out);
}
