/*
   Copyright 2026 The descent-lab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "descent_lab/cli.hpp"

using namespace descent_lab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "descent-lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("ranges") {
    CHECK(parse_range("2..6") == std::pair<long, long>{2, 6});
    CHECK(parse_range("5") == std::pair<long, long>{5, 5});
    CHECK_THROWS_AS(parse_range("6..2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_range("a..2"), std::invalid_argument);
  }

  TEST_CASE("compute") {
    Run r = run({"compute", "--set", "1,2", "--basis", "m", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["basis"]["center"] == 2);
    CHECK(j["basis"]["coeffs"] == nlohmann::json({"0", "1", "1"}));

    r = run({"compute", "--set", "1,3", "--type", "B", "--n", "2..6", "--verify"});
    CHECK(r.code == 2);  // n = 2 <= max(I)
    r = run({"compute", "--set", "1,3", "--type", "B", "--n", "4..6", "--verify", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("# descent-lab v1\nn,value,brute\n", 0) == 0);
    CHECK(count(r.out, "\n") == 5);

    r = run({"compute", "--set", ""});
    CHECK(r.code == 0);
    CHECK(r.out.find("d(I;n) = 1\n") != std::string::npos);

    r = run({"compute", "--set", "0,2", "--type", "D", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["closed_form"].contains("expo"));
  }

  TEST_CASE("exit codes for invalid input") {
    CHECK(run({"compute", "--set", "1,x"}).code == 2);
    CHECK(run({"compute", "--set", "0,1"}).code == 2);
    CHECK(run({"compute", "--set", "3", "--n", "3"}).code == 2);
    CHECK(run({"compute", "--set", "1", "--format", "xml"}).code == 2);
    CHECK(run({"compute", "--set", "1", "--basis", "weird"}).code == 2);
    CHECK(run({"compute", "--set", "1", "--type", "C"}).code == 2);
    CHECK(run({"compute"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"certify", "--set", ""}).code == 2);
    CHECK(run({"scan", "--max-m", "21"}).code == 2);
    CHECK(run({"scan", "--max-m", "0"}).code == 2);
    CHECK(run({"scan", "--check", "nope"}).code == 2);
    CHECK(run({"enumerate", "--n", "12"}).code == 2);
    CHECK(run({"enumerate", "--n", "4", "--type", "B", "--stat", "peak"}).code == 2);
    CHECK(run({"patterns", "--patterns", "12,123"}).code == 2);
    CHECK(run({"--threads", "0", "compute", "--set", "1"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("certify") {
    const auto dir = std::filesystem::temp_directory_path() / "descent_lab_cli_test";
    std::filesystem::create_directories(dir);
    const auto svg = dir / "roots.svg";
    Run r = run({"certify", "--set", "1,3", "--svg", svg.string()});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["all_pass"] == true);
    CHECK(j["roots"].size() == 3);
    const std::string figure = slurp(svg);
    CHECK(count(figure, "class=\"root\"") == 3);
    CHECK(count(figure, "class=\"disc\"") == 3);
    CHECK(figure.find("<svg") == 0);

    r = run({"certify", "--set", "2"});
    CHECK(r.code == 0);
    CHECK(run({"certify", "--set", "1,2,4", "--svg", (dir / "m4.svg").string()}).code == 0);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("scan") {
    Run r = run({"scan", "--check", "log-concave", "--max-m", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("# total: 63 rows, 0 violations") != std::string::npos);
    r = run({"scan", "--check", "c-nonneg", "--max-m", "6"});
    CHECK(r.code == 0);
    r = run({"scan", "--check", "root-conjecture", "--max-m", "6"});
    CHECK(r.code == 0);
    r = run({"scan", "--check", "disc", "--max-m", "5"});
    CHECK(r.code == 0);
    r = run({"scan", "--check", "falling", "--max-m", "6"});
    CHECK(r.code == 0);
    r = run({"scan", "--check", "pattern-rec", "--max-m", "3"});
    CHECK(r.code == 0);
    // The type D vanishing claim fails for every I with #I >= 2 (see signed
    // tests), so the corollary scan reports violations.
    r = run({"scan", "--check", "corollary", "--max-m", "3"});
    CHECK(r.code == 3);
    CHECK(r.out.find("# violation {1,2}") != std::string::npos);
  }

  TEST_CASE("scan output is identical across thread counts") {
    const Run a = run({"--threads", "1", "scan", "--check", "all", "--max-m", "4"});
    const Run b = run({"--threads", "3", "scan", "--check", "all", "--max-m", "4"});
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }

  TEST_CASE("enumerate and patterns") {
    Run r = run({"enumerate", "--n", "5", "--set", "1,2"});
    CHECK(r.code == 0);
    CHECK(r.out == "6\n");
    r = run({"enumerate", "--n", "3", "--type", "D", "--set", "0"});
    CHECK(r.out == "3\n");
    r = run({"enumerate", "--n", "3"});
    CHECK(r.out == "# descent-lab v1\nset,count\n,1\n1,2\n2,2\n1 2,1\n");

    r = run({"patterns", "--patterns", "132,231", "--set", "2", "--n", "6", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["values"][0]["count"] == j["values"][0]["recursion"]);
    r = run({"patterns", "--set", "2,3", "--peaks"});
    CHECK(r.code == 0);
    CHECK(r.out.find("inadmissible") != std::string::npos);
    r = run({"patterns", "--set", "2,4", "--peaks", "--format", "json"});
    CHECK(nlohmann::json::parse(r.out)["outcome"] == "pass");
  }

  TEST_CASE("thread count from the environment") {
    setenv("DESCENT_LAB_THREADS", "3", 1);
    CHECK(default_threads() == 3);
    setenv("DESCENT_LAB_THREADS", "x", 1);
    CHECK_THROWS_AS(default_threads(), std::invalid_argument);
    CHECK(run({"compute", "--set", "1"}).code == 2);
    unsetenv("DESCENT_LAB_THREADS");
    CHECK(default_threads() == 1);
  }
}
