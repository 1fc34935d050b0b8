#pragma once

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dv::report {

enum class Status { pass, fail, recorded };

std::string to_string(Status s);

struct Config {
  std::uint64_t seed = 0;
  std::uint64_t prime = 10007;
  int samples = 20;
  long bound = 120;
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Throws ConfigError on a composite or out-of-range prime, nonpositive counts.
void validate(const Config& c);

// The prime itself and the next two primes; rank checks run at all three.
std::vector<std::uint64_t> check_primes(const Config& c);

struct Case {
  std::string id;
  std::string anchor;  // the claim being checked, in words
  std::string point;   // sample description, empty for deterministic cases
  std::string expected;
  std::string actual;
  Status status = Status::pass;
  std::vector<std::string> fields;  // tabular rendering, when the suite has one
};

struct SuiteReport {
  std::string suite;
  Config config;
  std::vector<std::string> columns;  // header for Case::fields
  std::vector<Case> cases;
  double seconds = 0;

  int failures() const;
  int count(Status s) const;
};

const std::vector<std::string>& suite_names();

// Throws ConfigError for an unknown suite.
SuiteReport run(const std::string& suite, const Config& config);
// Every suite, executed concurrently and concatenated in suite_names() order.
std::vector<SuiteReport> run_all(const Config& config);

nlohmann::json to_json(const SuiteReport& r);
std::string to_csv(const SuiteReport& r);
std::string to_text(const SuiteReport& r);

// Suite bodies, one per name.
SuiteReport suite_table1(const Config& c);
SuiteReport suite_table2(const Config& c);
SuiteReport suite_heegner(const Config& c);
SuiteReport suite_sl3(const Config& c);
SuiteReport suite_sp4(const Config& c);
SuiteReport suite_sl2(const Config& c);
SuiteReport suite_g2sl3(const Config& c);
SuiteReport suite_segre(const Config& c);
SuiteReport suite_monomials(const Config& c);

}  // namespace dv::report
