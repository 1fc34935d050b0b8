#include "dv/report.hpp"

#include "dv/scalar.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <sstream>

namespace dv::report {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::recorded: return "recorded";
  }
  return "?";
}

void validate(const Config& c) {
  // The line scans in the sp4 suite visit every element of F_p.
  if (c.prime < 101 || c.prime >= (1u << 20))
    throw ConfigError("prime must lie in [101, 2^20): " + std::to_string(c.prime));
  if (!is_prime(c.prime)) throw ConfigError("not a prime: " + std::to_string(c.prime));
  if (c.samples < 1) throw ConfigError("samples must be positive");
  if (c.bound < 1) throw ConfigError("search bound must be positive");
}

std::vector<std::uint64_t> check_primes(const Config& c) {
  std::vector<std::uint64_t> out{c.prime};
  for (std::uint64_t q = c.prime + 1; out.size() < 3; ++q)
    if (is_prime(q)) out.push_back(q);
  return out;
}

int SuiteReport::count(Status s) const {
  int n = 0;
  for (const auto& c : cases) n += c.status == s;
  return n;
}

int SuiteReport::failures() const { return count(Status::fail); }

namespace {

using Body = std::function<SuiteReport(const Config&)>;

const std::map<std::string, Body>& bodies() {
  static const std::map<std::string, Body> m{
      {"table1", suite_table1}, {"table2", suite_table2}, {"heegner", suite_heegner},
      {"sl3", suite_sl3},       {"sp4", suite_sp4},       {"sl2", suite_sl2},
      {"g2sl3", suite_g2sl3},   {"segre", suite_segre},   {"monomials", suite_monomials},
  };
  return m;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string csv_line(const std::vector<std::string>& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + csv_field(f[i]);
  return s + "\n";
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"table1", "table2", "heegner", "sl3",      "sp4",
                                              "sl2",    "g2sl3",  "segre",   "monomials"};
  return names;
}

SuiteReport run(const std::string& suite, const Config& config) {
  validate(config);
  auto it = bodies().find(suite);
  if (it == bodies().end()) throw ConfigError("unknown suite: " + suite);
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport r = it->second(config);
  r.suite = suite;
  r.config = config;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<SuiteReport> run_all(const Config& config) {
  validate(config);
  std::vector<std::future<SuiteReport>> jobs;
  for (const auto& name : suite_names())
    jobs.push_back(std::async(std::launch::async, [&config, name] { return run(name, config); }));
  std::vector<SuiteReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : r.cases) {
    nlohmann::json j{{"id", c.id},
                     {"paper_anchor", c.anchor},
                     {"expected", c.expected},
                     {"actual", c.actual},
                     {"status", to_string(c.status)}};
    if (!c.point.empty()) j["point"] = c.point;
    if (!c.fields.empty()) {
      nlohmann::json row;
      for (std::size_t i = 0; i < c.fields.size() && i < r.columns.size(); ++i)
        row[r.columns[i]] = c.fields[i];
      j["row"] = row;
    }
    cases.push_back(j);
  }
  return {{"suite", r.suite},
          {"config",
           {{"seed", r.config.seed},
            {"prime", r.config.prime},
            {"samples", r.config.samples},
            {"bound", r.config.bound}}},
          {"cases", cases},
          {"summary",
           {{"pass", r.count(Status::pass)},
            {"fail", r.count(Status::fail)},
            {"recorded", r.count(Status::recorded)}}}};
}

std::string to_csv(const SuiteReport& r) {
  std::string out;
  if (!r.columns.empty()) {
    // Tabular suites: one row per case in the column order of the table.
    auto header = r.columns;
    header.push_back("status");
    out += csv_line(header);
    for (const auto& c : r.cases) {
      auto row = c.fields;
      row.push_back(to_string(c.status));
      out += csv_line(row);
    }
    return out;
  }
  out += csv_line({"suite", "id", "paper_anchor", "point", "expected", "actual", "status"});
  for (const auto& c : r.cases)
    out += csv_line({r.suite, c.id, c.anchor, c.point, c.expected, c.actual, to_string(c.status)});
  return out;
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << " (seed " << r.config.seed << ", prime " << r.config.prime
     << ", samples " << r.config.samples << ", bound " << r.config.bound << ")\n";
  for (const auto& c : r.cases) {
    const char* tag = c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "NOTE";
    os << "  [" << tag << "] " << c.id << ": " << c.anchor << "\n";
    if (c.status == Status::recorded)
      os << "         observed " << c.actual << "\n";
    else
      os << "         expected " << c.expected << " | actual " << c.actual << "\n";
  }
  os << "  " << r.count(Status::pass) << " pass, " << r.count(Status::fail) << " fail, "
     << r.count(Status::recorded) << " recorded in " << std::fixed;
  os.precision(2);
  os << r.seconds << " s\n";
  return os.str();
}

}  // namespace dv::report
