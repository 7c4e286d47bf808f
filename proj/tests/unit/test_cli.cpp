#include "doctest.h"

#include <algorithm>
#include <regex>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = curvemult::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kQuartic = "y^4-4*x^2*y^3+4*x^4*y^2-2*x^3*y^2+4*x^5*y-4*x^6*y+x^6";
const char* kSextic = "y^6-6*x^2*y^5+9*x^4*y^4-2*x^5*y^3+6*x^7*y^2+x^10-9*x^11";

std::vector<std::string> strings(const json& a) {
  std::vector<std::string> out;
  for (const auto& e : a) out.push_back(e.get<std::string>());
  return out;
}

}  // namespace

TEST_CASE("analyze the cusp") {
  auto r = run({"analyze", "--poly", "y^2-x^3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(2;3)") != std::string::npos);
  CHECK(r.out.find("(2,1,1)") != std::string::npos);
  CHECK(r.out.find("lct: 5/6") != std::string::npos);

  auto j = json::parse(run({"analyze", "--poly", "y^2-x^3", "--json"}).out);
  CHECK(j["schema"] == "curvemult/1");
  CHECK(j["multiplicities"] == json::array({2, 1, 1}));
  CHECK(j["lct"] == "5/6");
  CHECK(j["proximity_matrix"] == json::parse("[[1,0,0],[-1,1,0],[-1,-1,1]]"));
}

TEST_CASE("jumping numbers of (4;6,9)") {
  auto j = json::parse(run({"jumping-numbers", "--charseq", "(4;6,9)", "--json"}).out);
  std::vector<std::string> values;
  for (const auto& e : j["jumping_numbers"]) values.push_back(e["value"]);
  CHECK(values == std::vector<std::string>{"5/12", "17/30", "19/30", "7/10", "23/30", "5/6", "9/10", "11/12", "29/30"});
}

TEST_CASE("ideal at 5/6 for the (4;6,9) germ") {
  auto r = run({"ideal", "--alpha", "5/6", "--poly", kQuartic, "--json"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  auto gens = strings(j["generators"]);
  std::sort(gens.begin(), gens.end());
  CHECK(gens == std::vector<std::string>{"F1", "x*y^2", "x^2*y", "x^4", "y^3"});
  CHECK(strings(j["polynomials"]).front() == "y^2 - 2*x^2*y - x^3 + x^4");
}

TEST_CASE("json output round-trips byte for byte") {
  for (const char* cmd : {"analyze", "factors", "lct", "jumping-numbers", "report", "verify"}) {
    for (const char* input : {"(4;6,9)", "(6;10,13)", "(2;3)", "(4;10,13)"}) {
      auto r = run({cmd, "--charseq", input, "--json"});
      REQUIRE(r.code == 0);
      CHECK(json::parse(r.out).dump(2) + "\n" == r.out);
    }
  }
  auto r = run({"ideal", "--alpha", "7/10", "--poly", kQuartic, "--json"});
  CHECK(json::parse(r.out).dump(2) + "\n" == r.out);
}

TEST_CASE("polynomial and charseq+series inputs agree") {
  struct Case {
    const char* poly;
    const char* cs;
    const char* series;
  };
  for (const auto& c : {Case{kQuartic, "(4;6,9)", "x^(3/2)+x^2+x^(9/4)"}, Case{kSextic, "(6;10,13)", "x^(5/3)+x^2+x^(13/6)"}}) {
    auto a = run({"report", "--poly", c.poly, "--json"});
    auto b = run({"report", "--charseq", c.cs, "--series", c.series, "--json"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("report intervals partition [0,1)") {
  auto j = json::parse(run({"report", "--charseq", "(6;10,13)", "--json"}).out);
  const auto& rows = j["intervals"];
  REQUIRE(rows.size() >= 2);
  CHECK(rows.front()["from"] == "0/1");
  CHECK(strings(rows.front()["generators"]) == std::vector<std::string>{"1"});
  CHECK(rows[1]["from"] == j["lct"]);
  CHECK(rows.back()["to"] == "1/1");
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i]["from"] == rows[i - 1]["to"]);
}

TEST_CASE("exit codes and error lines") {
  const std::regex line("^error: [a-z-]+: [^\n]*\n$");

  auto parse = run({"analyze", "--poly", "y^^2"});
  CHECK(parse.code == 2);
  CHECK(std::regex_match(parse.err, line));

  CHECK(run({"analyze"}).code == 2);
  CHECK(run({"ideal", "--charseq", "(2;3)"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"analyze", "--poly", "y^2-x^3", "--charseq", "(2;3)"}).code == 2);
  CHECK(run({"ideal", "--alpha", "3/2", "--charseq", "(2;3)"}).code == 2);
  CHECK(run({"analyze", "--poly", "x+y"}).code == 3);
  CHECK(run({"analyze", "--poly", "1+y^2-x^3"}).code == 2);

  auto tangent = run({"analyze", "--poly", "x^2-y^3"});
  CHECK(tangent.code == 3);
  CHECK(tangent.err.rfind("error: tangent-to-y-axis:", 0) == 0);
  CHECK(std::regex_match(tangent.err, line));

  auto reducible = run({"analyze", "--poly", "(y^2-x^3)*(y^2-2*x^3)"});
  CHECK(reducible.code == 3);
  CHECK(reducible.err.rfind("error: reducible-detected:", 0) == 0);

  auto irrational = run({"analyze", "--poly", "y^2-2*x^3"});
  CHECK(irrational.code == 3);
  CHECK(irrational.err.rfind("error: irrational-root-required:", 0) == 0);

  CHECK(run({"analyze", "--poly", "y^2-x^3", "--budget", "5"}).code == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify passes on the worked examples") {
  for (const char* poly : {kQuartic, kSextic, "y^2-x^3"}) {
    auto r = run({"verify", "--poly", poly});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS blowup-multiplicities") != std::string::npos);
  }
}
