#include "dv/report.hpp"

#include <cstdio>
#include <map>
#include <string>
#include <vector>

using namespace dv::report;

namespace {

struct Criterion {
  int number;
  const char* title;
  double budget;  // seconds
  std::vector<std::pair<std::string, std::vector<std::string>>> selection;  // suite, id prefixes
};

bool selected(const std::string& id, const std::vector<std::string>& prefixes) {
  for (const auto& p : prefixes)
    if (id.rfind(p, 0) == 0) return true;
  return false;
}

}  // namespace

int main() {
  const Config cfg;
  const std::vector<Criterion> criteria{
      {1, "Table 1 rows for e in {1,3,5,9,11,15}", 1, {{"table1", {""}}}},
      {2, "minimal-norm table by discriminant class", 30, {{"table2", {"minimal-norm/a="}}}},
      {3, "Segre numbers on Gr(6,10)", 120, {{"segre", {"segre/"}}}},
      {4, "sigma0 support, det^3 oracle, monomial sweeps", 5,
       {{"sl3", {"sigma0/"}}, {"monomials", {"monomials/singular", "monomials/criterion"}}}},
      {5, "tangent ranks at model points", 120,
       {{"sp4", {"pairs/rank@"}},
        {"g2sl3", {"product/coordinate-rank", "product/random-rank"}},
        {"sl3", {"km/rank", "kl/rank-drop", "kl/functionals"}},
        {"sl2", {"k1/rank@"}}}},
      {6, "sl2 invariant trivector is unique", 60, {{"sl2", {"solve/kernel", "solve/held-out"}}}},
      {7, "excess projection against the induced cubic", 60, {{"sp4", {"excess/"}}}},
      {8, "Heegner divisors for e <= 30", 1, {{"heegner", {"heegner/"}}}},
      {9, "family 2L-(2m+1)δ at e = m^2+m+3", 1, {{"heegner", {"family/"}}}},
      {10, "auxiliary top Chern classes", 30, {{"segre", {"aux/"}}}},
  };

  // Each suite runs once, alone, so its wall time is not shared with others.
  std::map<std::string, SuiteReport> reports;
  for (const auto& c : criteria)
    for (const auto& [suite, prefixes] : c.selection)
      if (!reports.count(suite)) reports.emplace(suite, run(suite, cfg));

  int failed = 0;
  for (const auto& c : criteria) {
    double seconds = 0;
    int checked = 0, bad = 0;
    std::string first_bad;
    for (const auto& [suite, prefixes] : c.selection) {
      const auto& r = reports.at(suite);
      seconds += r.seconds;
      for (const auto& k : r.cases) {
        if (k.status == Status::recorded || !selected(k.id, prefixes)) continue;
        ++checked;
        if (k.status == Status::fail) {
          ++bad;
          if (first_bad.empty())
            first_bad = suite + ":" + k.id + " expected " + k.expected + ", got " + k.actual;
        }
      }
    }
    const bool ok = checked > 0 && bad == 0 && seconds < c.budget;
    failed += !ok;
    std::printf("%s criterion %2d: %s (%d checks, %.2f s of %.0f s)", ok ? "PASS" : "FAIL", c.number, c.title,
                checked, seconds, c.budget);
    if (!first_bad.empty()) std::printf(" [%s]", first_bad.c_str());
    else if (seconds >= c.budget) std::printf(" [over time budget]");
    std::printf("\n");
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
