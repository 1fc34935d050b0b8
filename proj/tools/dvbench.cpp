#include "dv/report.hpp"
#include "dv/trivectors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

namespace {

using dv::report::Config;
using dv::report::Status;
using dv::report::SuiteReport;

void add_config(CLI::App* app, Config& c, std::string* format) {
  app->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
  app->add_option("--prime", c.prime, "prime for finite-field sampling")->capture_default_str();
  app->add_option("--samples", c.samples, "sample count")->capture_default_str();
  app->add_option("--bound", c.bound, "lattice search bound")->capture_default_str();
  if (format)
    app->add_option("--format", *format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
}

void emit(const SuiteReport& r, const std::string& format) {
  if (format == "json")
    std::cout << dv::report::to_json(r).dump(2) << "\n";
  else if (format == "csv")
    std::cout << dv::report::to_csv(r);
  else
    std::cout << dv::report::to_text(r);
}

int emit_all(const std::vector<SuiteReport>& rs, const std::string& format) {
  int fails = 0;
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rs) arr.push_back(dv::report::to_json(r));
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& r : rs) emit(r, format);
  }
  for (const auto& r : rs) fails += r.failures();
  return fails ? 1 : 0;
}

std::string coeff_text(const dv::Rational& x) { return x.str(); }
std::string coeff_text(const dv::Fp& x) { return std::to_string(x.value()); }

template <class S>
int print_trivector(const dv::AltForm<S>& f, const std::string& format) {
  const auto tuples = dv::combinations(10, 3);
  if (format == "json") {
    nlohmann::json c = nlohmann::json::array();
    for (int t = 0; t < 120; ++t) c.push_back(coeff_text(f.coeffs()(t)));
    std::cout << nlohmann::json{{"order", "lexicographic triples of 0..9"}, {"coefficients", c}}.dump(2) << "\n";
  } else {
    for (int t = 0; t < 120; ++t)
      std::cout << tuples[t][0] << tuples[t][1] << tuples[t][2] << " " << coeff_text(f.coeffs()(t)) << "\n";
  }
  return 0;
}

int trivector(const std::string& name, bool over_fp, std::uint64_t p, const std::string& format) {
  if (over_fp) {
    dv::PrimeField F(p);
    if (name == "sl3") return print_trivector(dv::reduce(dv::sl3_sigma0<dv::Rational>(), p), format);
    if (name == "sp4") return print_trivector(dv::sp4_model_mod(p).sigma, format);
    if (name == "sl2") return print_trivector(dv::sl2_sigma0_model_mod(p).sigma, format);
    return print_trivector(dv::g2sl3_model_mod(p).sigma, format);
  }
  if (name == "sl3") return print_trivector(dv::sl3_sigma0<dv::Rational>(), format);
  if (name == "sp4") return print_trivector(dv::sp4_sigma0<dv::Rational>(), format);
  if (name == "sl2") return print_trivector(dv::sl2_sigma0_rational(), format);
  return print_trivector(dv::g2sl3_sigma0<dv::Rational>(), format);
}

// One JSON record per assertion.
int dv_check(const SuiteReport& r) {
  for (const auto& c : r.cases)
    std::cout << nlohmann::json{{"case", r.suite},
                                {"point-spec", c.point},
                                {"assertion", c.id + ": " + c.anchor},
                                {"expected", c.expected},
                                {"actual", c.actual},
                                {"status", dv::report::to_string(c.status)}}
                     .dump()
              << "\n";
  return r.failures() ? 1 : 0;
}

// {name, value, expected, status} per Segre or auxiliary entry.
int segre_json(const SuiteReport& r, const std::string& prefix) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : r.cases) {
    if (c.id.rfind(prefix, 0) != 0) continue;
    arr.push_back({{"name", c.id.substr(prefix.size())},
                   {"value", c.actual},
                   {"expected", c.expected},
                   {"status", dv::report::to_string(c.status)}});
  }
  std::cout << arr.dump(2) << "\n";
  for (const auto& c : r.cases)
    if (c.id.rfind(prefix, 0) == 0 && c.status == Status::fail) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for trivectors on a 10-dimensional space and their Debarre-Voisin loci"};
  app.require_subcommand(1);

  Config cfg;
  std::string format = "text";

  auto* run = app.add_subcommand("run", "run a suite and print its report");
  std::string suite;
  run->add_option("suite", suite, "suite name or 'all'")->required();
  add_config(run, cfg, &format);

  auto* tv = app.add_subcommand("trivector", "print the 120 coefficients of a model trivector");
  std::string tv_name;
  bool emit_flag = false, tv_fp = false;
  tv->add_option("name", tv_name)->required()->check(CLI::IsMember({"sl3", "sp4", "sl2", "g2sl3"}));
  tv->add_flag("--emit", emit_flag, "print the coefficients");
  tv->add_flag("--mod", tv_fp, "reduce modulo --prime");
  tv->add_option("--prime", cfg.prime)->capture_default_str();
  tv->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* dvc = app.add_subcommand("dv", "Debarre-Voisin locus checks");
  auto* check = dvc->add_subcommand("check", "membership, tangent and excess checks for one model");
  dvc->require_subcommand(1);
  std::string which;
  check->add_option("--case", which)->required()->check(CLI::IsMember({"sl3", "sp4", "sl2", "g2sl3"}));
  add_config(check, cfg, nullptr);

  auto* per = app.add_subcommand("periods", "lattice and Hilbert-square tables");
  per->require_subcommand(1);
  auto* t1 = per->add_subcommand("table1", "movable and ample classes for e in {1,3,5,9,11,15}");
  auto* t2 = per->add_subcommand("table2", "minimal-norm vectors by discriminant class");
  auto* hg = per->add_subcommand("heegner", "Heegner divisor nonemptiness for e <= 30");
  for (auto* s : {t1, t2, hg}) add_config(s, cfg, &format);

  auto* seg = app.add_subcommand("segre", "Schubert calculus on Gr(6,10)");
  seg->require_subcommand(1);
  auto* sdv = seg->add_subcommand("dv", "the five Segre numbers");
  auto* saux = seg->add_subcommand("aux", "auxiliary top Chern checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run) {
      if (suite == "all") return emit_all(dv::report::run_all(cfg), format);
      auto r = dv::report::run(suite, cfg);
      emit(r, format);
      return r.failures() ? 1 : 0;
    }
    if (*tv) {
      dv::report::validate(cfg);
      if (!emit_flag) {
        std::cout << tv_name << ": pass --emit to print coefficients\n";
        return 0;
      }
      return trivector(tv_name, tv_fp, cfg.prime, format == "json" ? "json" : "text");
    }
    if (*check) return dv_check(dv::report::run(which, cfg));
    for (auto [sub, name] : {std::pair{t1, "table1"}, {t2, "table2"}, {hg, "heegner"}})
      if (*sub) {
        auto r = dv::report::run(name, cfg);
        emit(r, format);
        return r.failures() ? 1 : 0;
      }
    if (*sdv || *saux) {
      auto r = dv::report::run("segre", cfg);
      return segre_json(r, *sdv ? "segre/" : "aux/");
    }
  } catch (const dv::report::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
