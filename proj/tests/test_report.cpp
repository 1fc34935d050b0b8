#include "dv/report.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace dv::report;

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (c == '"' && quoted && i + 1 < line.size() && line[i + 1] == '"') {
      out.back() += '"';
      ++i;
    } else if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("configuration validation") {
  Config c;
  CHECK_NOTHROW(validate(c));
  c.prime = 10000;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.prime = 97;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = Config{};
  c.samples = 0;
  CHECK_THROWS_AS(validate(c), ConfigError);
  CHECK_THROWS_AS(run("nonsense", Config{}), ConfigError);
}

TEST_CASE("check primes are consecutive primes from the configured one") {
  CHECK(check_primes(Config{}) == std::vector<std::uint64_t>{10007, 10009, 10037});
  Config c;
  c.prime = 101;
  CHECK(check_primes(c) == std::vector<std::uint64_t>{101, 103, 107});
}

TEST_CASE("reports are deterministic for a fixed seed") {
  Config c;
  c.samples = 5;
  auto a = to_json(run("sl3", c)), b = to_json(run("sl3", c));
  CHECK(a["cases"] == b["cases"]);
  c.seed = 7;
  auto d = to_json(run("g2sl3", c)), e = to_json(run("g2sl3", c));
  CHECK(d["cases"] == e["cases"]);
}

TEST_CASE("JSON and CSV carry the same cases") {
  auto r = run("heegner", Config{});
  auto j = to_json(r);
  std::istringstream csv(to_csv(r));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "suite,id,paper_anchor,point,expected,actual,status");
  std::set<std::string> ids;
  while (std::getline(csv, line)) ids.insert(split_csv(line).at(1));
  CHECK(ids.size() == j["cases"].size());
  for (const auto& c : j["cases"]) CHECK(ids.count(c["id"].get<std::string>()) == 1);
  CHECK(j["summary"]["fail"] == 0);
}

TEST_CASE("table 1 renders as a table") {
  auto r = run("table1", Config{});
  auto csv = to_csv(r);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(split_csv(header) == std::vector<std::string>{"e", "(a1,b1)", "mu_e", "(a2,b2)", "movable", "nu_e", "ample", "status"});
  CHECK(csv.find("5,\"(9,4)\",20/9,\"(3,1)\",2L-3δ 6L-13δ,2,2L-3δ,pass") != std::string::npos);
  CHECK(r.failures() == 0);
  CHECK(to_json(r)["cases"][0]["row"]["nu_e"] == "2/3");
}
