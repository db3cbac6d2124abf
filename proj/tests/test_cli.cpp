#include <algorithm>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "doctest.h"
#include "zetaseq/cli.hpp"
#include "zetaseq/serialize.hpp"

using namespace zetaseq;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"zeta_seq"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("point and list parsing") {
  ExactPoint p = parse_point("2");
  CHECK(p.re == 2);
  CHECK(p.im == 0);
  p = parse_point("0.5,14.25");
  CHECK(p.re == ExactRational(1, 2));
  CHECK(p.im == ExactRational(57, 4));
  p = parse_point("1/2,-3");
  CHECK(p.re == ExactRational(1, 2));
  CHECK(p.im == -3);
  CHECK(parse_point("-1e-3").re == ExactRational(-1, 1000));
  CHECK(parse_point("2.5E2").re == 250);
  CHECK(parse_point(".5").re == ExactRational(1, 2));
  CHECK_THROWS_AS(parse_point("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_point("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_point("."), std::invalid_argument);
  CHECK(parse_int_list("8,16, 32") == std::vector<int>{8, 16, 32});
  CHECK_THROWS_AS(parse_int_list("8,,16"), std::invalid_argument);
  CHECK_THROWS_AS(parse_int_list("-1"), std::invalid_argument);
}

TEST_CASE("csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"x\"") == "\"say \"\"x\"\"\"");
  CHECK(csv_row({"a", "b c", "1,2"}) == "a,b c,\"1,2\"\n");
}

TEST_CASE("approximants record for m = 3") {
  Outcome o = invoke({"approximants", "--m", "3", "--format", "json"});
  REQUIRE(o.code == 0);
  auto j = nlohmann::json::parse(o.out);
  const auto& rec = j["records"][0];
  CHECK(rec["m"] == 3);
  CHECK(rec["ratio_num"] == nlohmann::json::array({"22", "31", "16", "3"}));
  CHECK(rec["h_m"]["num"] == "11");
  CHECK(rec["h_m"]["den"] == "6");
  for (const auto& c : rec["F_num"]) CHECK(c.is_string());

  Outcome csv = invoke({"approximants", "--m-list", "0,1", "--format", "csv"});
  REQUIRE(csv.code == 0);
  auto rows = parse_csv(csv.out);
  CHECK(rows.front() == std::vector<std::string>{"m", "field", "degree", "value"});
  CHECK(rows.back() == std::vector<std::string>{"1", "h_m", "0", "1"});
}

TEST_CASE("verify passes for m <= 10") {
  Outcome o = invoke({"verify", "--m-max", "10"});
  REQUIRE(o.code == 0);
  auto j = nlohmann::json::parse(o.out);
  CHECK(j["passed"] == true);
  CHECK(j["failures"] == 0);
  std::vector<std::pair<std::string, int>> keys;
  for (const auto& c : j["checks"]) {
    CHECK(c["status"] == "pass");
    keys.emplace_back(c["check"], c["m"]);
  }
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(keys.size() > 100);
}

TEST_CASE("verify is byte-identical across runs") {
  Outcome a = invoke({"verify", "--m-max", "8", "--seed", "7", "--format", "csv"});
  Outcome b = invoke({"verify", "--m-max", "8", "--seed", "7", "--format", "csv"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("coefficient corruption flips the exit code") {
  Outcome o = invoke({"verify", "--m-max", "10", "--corrupt", "3,1", "--format", "csv"});
  CHECK(o.code == 1);
  CHECK(o.out.find("recurrence_F,3,fail,differs at s=2") != std::string::npos);
  CHECK(o.out.find("determinant_forms,3,fail") != std::string::npos);
  CHECK(o.out.find("recurrence_F,2,pass") != std::string::npos);

  Outcome r = invoke({"verify", "--m-max", "6", "--corrupt", "4,0"});
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.out);
  bool residue_witness = false;
  for (const auto& c : j["checks"])
    if (c["check"] == "residues" && c["m"] == 4) residue_witness = c["status"] == "fail" && c["witness"] == "F residue 2 G residue 2";
  CHECK(residue_witness);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(invoke({"verify"}).code == 2);
  CHECK(invoke({"verify", "--m-max", "3", "--prec-bits", "32"}).code == 2);
  CHECK(invoke({"verify", "--m", "3", "--m-max", "4"}).code == 2);
  CHECK(invoke({"verify", "--m-max", "3", "--format", "xml"}).code == 2);
  CHECK(invoke({"verify", "--m-max", "3", "--corrupt", "5,1"}).code == 2);
  CHECK(invoke({"verify", "--m-max", "3", "--corrupt", "2,3"}).code == 2);
  CHECK(invoke({"verify", "--m-list", "4,2"}).code == 2);
  CHECK(invoke({"zeros", "--m", "0"}).code == 2);
  CHECK(invoke({"convergence", "--m", "4"}).code == 2);
  CHECK(invoke({"convergence", "--m", "4", "--s", "1"}).code == 2);
  CHECK(invoke({"convergence", "--m", "4", "--s", "-1"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("convergence table decreases along m") {
  Outcome o = invoke({"convergence", "--s", "2", "--m-list", "8,16,32", "--format", "csv"});
  REQUIRE(o.code == 0);
  auto rows = parse_csv(o.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"m", "s_re", "s_im", "approx_re", "approx_im", "ref_re", "ref_im", "abs_error"});
  double prev = 1.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double e = std::stod(rows[i][7]);
    CHECK(e < prev);
    prev = e;
  }
  Outcome scaled = invoke({"convergence", "--s", "0.5", "--m-list", "8,16", "--scaled"});
  REQUIRE(scaled.code == 0);
  CHECK(nlohmann::json::parse(scaled.out)["scaled"] == true);
}

TEST_CASE("table commands emit their schemas") {
  auto spectra = nlohmann::json::parse(invoke({"spectra", "--m", "3"}).out);
  CHECK(spectra["spectra"][0]["eigenvalues"].size() == 4);
  CHECK(spectra["spectra"][0].contains("epsilon_m"));

  Outcome z = invoke({"zeros", "--m", "3", "--format", "csv"});
  REQUIRE(z.code == 0);
  auto rows = parse_csv(z.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[1][1] == "trivial");
  CHECK(rows[1][2].rfind("-2", 0) == 0);
  CHECK(rows[2][1] == "nontrivial");

  auto kernel = nlohmann::json::parse(invoke({"kernel", "--m", "16", "--grid-den", "200"}).out);
  CHECK(kernel["rows"][0]["grid_points"] == 200);

  auto gamma = nlohmann::json::parse(invoke({"gamma", "--m-list", "1,2"}).out);
  CHECK(gamma["euler_constant"][0]["num"] == "1");
  CHECK(gamma["euler_constant"][0]["den"] == "2");
}

TEST_CASE("output file") {
  const std::string path = "test_cli_output.json";
  std::remove(path.c_str());
  Outcome o = invoke({"approximants", "--m", "2", "--out", path.c_str()});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(nlohmann::json::parse(ss.str())["records"][0]["m"] == 2);
  std::remove(path.c_str());
  CHECK(invoke({"approximants", "--m", "2", "--out", "/nonexistent/dir/x.json"}).code == 2);
}
