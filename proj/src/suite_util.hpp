#pragma once

#include "dv/report.hpp"

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace dv::report::detail {

class Recorder {
 public:
  explicit Recorder(SuiteReport& r) : r_(r) {}

  Case& check(std::string id, std::string anchor, std::string expected, std::string actual, bool ok,
              std::string point = {}) {
    r_.cases.push_back({std::move(id), std::move(anchor), std::move(point), std::move(expected),
                        std::move(actual), ok ? Status::pass : Status::fail, {}});
    return r_.cases.back();
  }

  Case& equal(std::string id, std::string anchor, const std::string& expected, const std::string& actual,
              std::string point = {}) {
    return check(std::move(id), std::move(anchor), expected, actual, expected == actual, std::move(point));
  }

  Case& record(std::string id, std::string anchor, std::string actual, std::string point = {}) {
    r_.cases.push_back({std::move(id), std::move(anchor), std::move(point), "", std::move(actual),
                        Status::recorded, {}});
    return r_.cases.back();
  }

 private:
  SuiteReport& r_;
};

// Independent stream per (seed, suite salt, stream).
inline std::mt19937_64 stream(const Config& c, std::uint64_t salt, std::uint64_t sub = 0) {
  std::seed_seq s{static_cast<std::uint32_t>(c.seed), static_cast<std::uint32_t>(c.seed >> 32),
                  static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(sub)};
  return std::mt19937_64(s);
}

inline std::string ratio(int k, int n) { return std::to_string(k) + "/" + std::to_string(n); }

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

}  // namespace dv::report::detail
