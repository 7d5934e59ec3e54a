#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bicyl/cli.hpp"

using namespace bicyl;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// "key   value" lines of the human-readable reduced report
std::map<std::string, std::string> key_values(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string key;
  std::string value;
  while (in >> key >> value) {
    kv[key] = value;
  }
  return kv;
}

std::string three_decimals(const std::string& value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::stod(value));
  return buf;
}

}  // namespace

TEST_CASE("reduced") {
  SUBCASE("Steinmetz") {
    const auto r = run({"reduced", "1.0"});
    CHECK(r.code == cli::kSuccess);
    const auto kv = key_values(r.out);
    CHECK(kv.at("V'") == "0.666667");
    CHECK(kv.at("A'") == "4.000000");
  }
  SUBCASE("three decimals at 0.3") {
    const auto kv = key_values(run({"reduced", "0.3"}).out);
    CHECK(three_decimals(kv.at("V'")) == "0.120");
    CHECK(three_decimals(kv.at("A'")) == "1.732");
  }
  SUBCASE("qmc columns") {
    const auto kv = key_values(run({"reduced", "0.5", "--qmc", "14", "--seed", "2"}).out);
    CHECK(std::stod(kv.at("V'_qmc")) == doctest::Approx(0.290).epsilon(0.03));
  }
  SUBCASE("machine formats") {
    const auto csv = run({"reduced", "0.5", "--csv"});
    CHECK(csv.out.rfind("delta,v_exact", 0) == 0);
    const auto json = nlohmann::json::parse(run({"reduced", "0.5", "--json"}).out);
    CHECK(json[0]["a_exact"].get<double>() == 2.68771);
    CHECK(run({"reduced", "0.5", "--csv", "--json"}).code == cli::kUsageError);
  }
  SUBCASE("usage errors") {
    CHECK(run({"reduced", "1.5"}).code == cli::kUsageError);
    CHECK(run({"reduced", "-0.1"}).code == cli::kUsageError);
    CHECK(run({"reduced", "abc"}).code == cli::kUsageError);
    CHECK(run({"reduced"}).code == cli::kUsageError);
    CHECK(run({"reduced", "0.5", "--qmc", "5"}).code == cli::kUsageError);
    CHECK(run({}).code == cli::kUsageError);
  }
}

TEST_CASE("sweep") {
  SUBCASE("published grid") {
    const auto r = run({"sweep", "--from", "0.1", "--to", "0.9", "--steps", "9"});
    REQUIRE(r.code == cli::kSuccess);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    const std::vector<std::pair<std::string, std::string>> expected = {
        {"0.015", "0.612"}, {"0.056", "1.190"}, {"0.120", "1.732"}, {"0.199", "2.232"},
        {"0.290", "2.688"}, {"0.387", "3.093"}, {"0.481", "3.440"}, {"0.567", "3.719"},
        {"0.635", "3.916"}};
    std::size_t row = 0;
    std::vector<std::string> last;
    while (std::getline(in, line)) {
      std::vector<std::string> f;
      std::istringstream fields(line);
      std::string cell;
      while (std::getline(fields, cell, ',')) {
        f.push_back(cell);
      }
      REQUIRE(row < expected.size());
      CHECK(three_decimals(f[1]) == expected[row].first);
      CHECK(three_decimals(f[2]) == expected[row].second);
      last = f;
      ++row;
    }
    CHECK(row == 9);
    CHECK(std::abs(std::stod(last[5]) - -2.4) <= 0.1);
    CHECK(std::abs(std::stod(last[6]) - -0.9) <= 0.1);
  }
  SUBCASE("degenerate and invalid ranges") {
    CHECK(run({"sweep", "--from", "0", "--to", "0", "--steps", "2"}).code == cli::kUsageError);
    CHECK(run({"sweep", "--from", "0.5", "--to", "0.2", "--steps", "3"}).code == cli::kUsageError);
    CHECK(run({"sweep", "--from", "0", "--to", "1", "--steps", "1"}).code == cli::kUsageError);
    CHECK(run({"sweep", "--from", "0", "--to", "1.5", "--steps", "3"}).code == cli::kUsageError);
  }
  SUBCASE("stable output") {
    const std::vector<std::string> args = {"sweep", "--from", "0", "--to", "1", "--steps", "5",
                                           "--qmc", "12", "--seed", "9"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == cli::kSuccess);
    CHECK(a.out == b.out);
    auto threaded = args;
    threaded.insert(threaded.end(), {"--threads", "4"});
    CHECK(run(threaded).out == a.out);
  }
  SUBCASE("BICYL_THREADS fallback") {
    const std::vector<std::string> args = {"sweep", "--from", "0.2", "--to", "0.4", "--steps", "2",
                                           "--qmc", "11", "--seed", "1"};
    const auto plain = run(args);
    ::setenv("BICYL_THREADS", "3", 1);
    CHECK(run(args).out == plain.out);
    ::setenv("BICYL_THREADS", "many", 1);
    CHECK(run(args).code == cli::kUsageError);
    ::unsetenv("BICYL_THREADS");
  }
}

TEST_CASE("estimate") {
  SUBCASE("coincident cylinders") {
    const auto r = run({"estimate", "--c1", "0,0,0,5,0,0,1", "--c2", "0,0,0,5,0,0,1", "--log2",
                        "12", "--json"});
    REQUIRE(r.code == cli::kSuccess);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["volume"].get<double>() == doctest::Approx(std::numbers::pi * 5.0));
    CHECK(j["area"].get<double>() == doctest::Approx(2.0 * 2.0 * std::numbers::pi * 5.0));
    CHECK(j["area_hit_fraction_1"].get<double>() == 1.0);
    CHECK(j["samples"].get<int>() == 4096);
  }
  SUBCASE("Steinmetz written out by hand") {
    const auto r = run({"estimate", "--c1", "-2,0,0,2,0,0,0.5", "--c2", "0,0,-2,0,0,2,0.5",
                        "--seed", "5", "--json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["volume"].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(0.01));
    CHECK(j["area"].get<double>() == doctest::Approx(4.0).epsilon(0.01));
  }
  SUBCASE("far apart") {
    const auto r = run({"estimate", "--c1", "0,0,0,1,0,0,1", "--c2", "0,100,0,1,100,0,1", "--log2",
                        "10", "--json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["volume"].get<double>() == 0.0);
    CHECK(j["area"].get<double>() == 0.0);
  }
  SUBCASE("human output") {
    const auto r = run({"estimate", "--c1", "0,0,0,1,0,0,1", "--c2", "0,0,0,1,0,0,1", "--log2",
                        "10"});
    CHECK(r.out.find("V_est") != std::string::npos);
    CHECK(r.out.find("A_est") != std::string::npos);
  }
  SUBCASE("malformed cylinders name the field") {
    auto r = run({"estimate", "--c1", "0,0,0,1,0,0,0", "--c2", "0,0,0,1,0,0,1"});
    CHECK(r.code == cli::kUsageError);
    CHECK(r.err.find("--c1") != std::string::npos);
    CHECK(r.err.find("field r") != std::string::npos);
    r = run({"estimate", "--c1", "0,0,0,1,0,0,1", "--c2", "1,1,1,1,1,1,1"});
    CHECK(r.code == cli::kUsageError);
    CHECK(r.err.find("--c2") != std::string::npos);
    CHECK(r.err.find("a and b") != std::string::npos);
    r = run({"estimate", "--c1", "0,0,0,1,0,x,1", "--c2", "0,0,0,1,0,0,1"});
    CHECK(r.err.find("field bz") != std::string::npos);
    CHECK(run({"estimate", "--c1", "0,0,0,1,0,0", "--c2", "0,0,0,1,0,0,1"}).code ==
          cli::kUsageError);
    CHECK(run({"estimate", "--c1", "0,0,0,1,0,0,1,2", "--c2", "0,0,0,1,0,0,1"}).code ==
          cli::kUsageError);
    CHECK(run({"estimate", "--c1", "0,0,0,1,0,0,1"}).code == cli::kUsageError);
    CHECK(run({"estimate", "--c1", "0,0,0,1,0,0,1", "--c2", "0,0,0,1,0,0,1", "--containment",
               "box"})
              .code == cli::kUsageError);
  }
  SUBCASE("batch file") {
    const auto path = std::filesystem::temp_directory_path() / "bicyl_batch_test.json";
    {
      std::ofstream f(path);
      f << R"([{"c1": [0,0,0,5,0,0,1], "c2": [0,0,0,5,0,0,1]},
              {"c1": [0,0,0,1,0,0,1], "c2": [0,50,0,1,50,0,1]}])";
    }
    const auto r = run({"estimate", "--file", path.string(), "--log2", "10", "--json"});
    REQUIRE(r.code == cli::kSuccess);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["volume"].get<double>() == doctest::Approx(std::numbers::pi * 5.0));
    CHECK(j[1]["volume"].get<double>() == 0.0);
    {
      std::ofstream f(path);
      f << R"([{"c1": [0,0,0,5,0,0,-1], "c2": [0,0,0,5,0,0,1]}])";
    }
    const auto bad = run({"estimate", "--file", path.string(), "--log2", "10"});
    CHECK(bad.code == cli::kUsageError);
    CHECK(bad.err.find("--file[0].c1") != std::string::npos);
    std::filesystem::remove(path);
  }
}

TEST_CASE("validate") {
  const auto ok = run({"validate"});
  CHECK(ok.code == cli::kSuccess);
  std::size_t table_rows = 0;
  std::size_t pos = 0;
  while ((pos = ok.out.find("table V'(", pos)) != std::string::npos) {
    ++table_rows;
    ++pos;
  }
  CHECK(table_rows >= 9);
  CHECK(ok.out.find("FAIL") == std::string::npos);

  const auto corrupted = run({"validate", "--log2", "12", "--tolerance-scale", "1e-9"});
  CHECK(corrupted.code == cli::kValidationFailed);
  CHECK(corrupted.out.find("FAIL") != std::string::npos);
  CHECK(run({"validate", "--log2", "4"}).code == cli::kUsageError);
}

TEST_CASE("parse_cylinder") {
  const auto c = cli::parse_cylinder("1,2,3,4,5,6,0.5", "--c1");
  CHECK(c.a() == Vec3d(1, 2, 3));
  CHECK(c.b() == Vec3d(4, 5, 6));
  CHECK(c.radius() == 0.5);
  CHECK_THROWS_AS(cli::parse_cylinder("1,2,3,4,5,6,-1", "--c1"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_cylinder("", "--c1"), cli::UsageError);
}

TEST_CASE("installed binary runs") {
  const std::string cmd = std::string(BICYL_CLI_PATH) + " reduced 1.0 > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
  const std::string bad = std::string(BICYL_CLI_PATH) + " reduced 1.5 2> /dev/null";
  const int status = std::system(bad.c_str());
  CHECK(WEXITSTATUS(status) == cli::kUsageError);
}
