#include "dv/altform.hpp"
#include "dv/periods.hpp"
#include "dv/report.hpp"
#include "dv/schubert.hpp"
#include "suite_util.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace dv::report {

using detail::join;
using detail::ratio;
using detail::Recorder;

namespace {

std::string pair_str(const std::optional<IntPair>& p) {
  return p ? "(" + p->first.get_str() + "," + p->second.get_str() + ")" : "-";
}

std::string classes_str(const std::vector<NSClass>& c) {
  if (c.empty()) return "-";
  std::vector<std::string> s;
  for (const auto& x : c) s.push_back(x.str());
  return join(s, " ");
}

Rational det_of(const IMat& m) {
  Mat<Rational> q(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return determinant(q);
}

}  // namespace

SuiteReport suite_table1(const Config&) {
  SuiteReport r;
  r.columns = {"e", "(a1,b1)", "mu_e", "(a2,b2)", "movable", "nu_e", "ample"};
  const std::vector<std::vector<std::string>> expected{
      {"1", "-", "1", "(5,3)", "6L-5δ", "2/3", "-"},
      {"3", "(2,1)", "3/2", "(1,1)", "2L-δ", "3/2", "2L-δ"},
      {"5", "(9,4)", "20/9", "(3,1)", "2L-3δ 6L-13δ", "2", "2L-3δ"},
      {"9", "-", "3", "(5,1)", "2L-5δ", "3", "2L-5δ"},
      {"11", "(10,3)", "33/10", "(33,5)", "10L-33δ", "22/7", "-"},
      {"15", "(4,1)", "15/4", "(7,1)", "2L-7δ", "15/4", "2L-7δ"},
  };
  Recorder rec(r);
  for (const auto& row : expected) {
    const long e = std::stol(row[0]);
    std::vector<std::string> got{row[0],
                                 pair_str(pell_fundamental(e)),
                                 mu(e).str(),
                                 pair_str(neg11_min(e)),
                                 classes_str(movable_classes_22(e)),
                                 nu(e).str(),
                                 classes_str(ample_classes_22(e))};
    auto& c = rec.equal("e=" + row[0],
                        "Pell unit, movable slope, minimal solution of a^2-4eb^2=-11, movable and "
                        "ample classes of square 22 and divisibility 2",
                        join(row, " | "), join(got, " | "));
    c.fields = got;
  }
  return r;
}

SuiteReport suite_table2(const Config& cfg) {
  SuiteReport r;
  Recorder rec(r);
  const auto& lat = lattice_model();

  rec.equal("lattice/h-square", "q(h) = 22 for h = 2u1 + 6v1 + g", "22", std::to_string(lat.q(lat.h, lat.h)));
  rec.equal("lattice/h-divisibility", "h has divisibility 2 in the lattice", "2",
            std::to_string(lat.divisibility(lat.h)));
  rec.equal("lattice/e8-unimodular", "E8 Gram determinant", "1", det_of(e8_gram()).str());
  rec.equal("lattice/k-det", "det of the rank-2 block K = <u1+3g, v1+g>", "11", det_of(lat.k_gram).str());
  rec.equal("lattice/perp-det", "h-perp has discriminant group Z/11", "11", det_of(lat.perp_gram).str());
  rec.record("lattice/h-choice", "representative of the unique orbit of h", "2u1+6v1+g");

  const std::map<int, long> expected_min{{1, 1}, {2, 15}, {3, 9}, {4, 5}, {5, 3}};
  auto full = minimal_norm_table(cfg.bound, false);
  auto konly = minimal_norm_table(cfg.bound, true);
  for (const auto& [a, e] : expected_min) {
    const std::string id = "minimal-norm/a=+-" + std::to_string(a);
    auto it = full.find(a);
    if (it == full.end()) {
      rec.check(id, "minimal -v^2/22 over divisibility-11 vectors of class +-a", std::to_string(e), "none", false);
      continue;
    }
    const auto& m = it->second;
    std::string witness = "v_K=(" + std::to_string(m.k_coords[0]) + "," + std::to_string(m.k_coords[1]) + ")";
    if (m.adjusted) witness += " plus 11(u2+" + std::to_string(m.unimodular_norm / 242) + "v2)";
    rec.check(id, "minimal -v^2/22 over divisibility-11 vectors of class +-a", std::to_string(e),
              std::to_string(m.e), m.e == e, witness);
  }
  std::vector<std::string> ks, congruence;
  for (const auto& [a, m] : konly) ks.push_back("+-" + std::to_string(a) + "->" + std::to_string(m.e));
  for (const auto& [a, m] : full)
    congruence.push_back("a=" + std::to_string(a) + ": e=" + std::to_string(m.e) + ", e mod 11=" +
                         std::to_string(m.e % 11) + ", a^2 mod 11=" + std::to_string(a * a % 11));
  rec.record("minimal-norm/k-only", "minimum over primitive vectors of K alone", join(ks, " "));
  rec.record("minimal-norm/congruence", "observed e against a^2 modulo 11", join(congruence, "; "));
  return r;
}

SuiteReport suite_heegner(const Config&) {
  SuiteReport r;
  Recorder rec(r);
  auto residue = [](long e) {
    const long m = e % 11;
    return m == 0 || m == 1 || m == 3 || m == 4 || m == 5 || m == 9;
  };
  for (long e = 1; e <= 30; ++e) {
    char id[32];
    std::snprintf(id, sizeof id, "heegner/e=%02ld", e);
    rec.equal(id, "D_2e nonempty iff e mod 11 in {0,1,3,4,5,9}", residue(e) ? "nonempty" : "empty",
              heegner_nonempty(e) ? "nonempty" : "empty");
  }

  for (long m = 0; m <= 10; ++m) {
    const long e = m * m + m + 3;
    NSClass c{e, 2, -(2 * m + 1)};
    const auto mov = movable_classes_22(e);
    const bool listed = std::find(mov.begin(), mov.end(), c) != mov.end();
    const bool ok = bbf_square(c) == 22 && bbf_div(c) == 2 && c.slope() < nu(e) && c.slope() <= mu(e) && listed;
    std::string got = "q=" + bbf_square(c).get_str() + " div=" + std::to_string(bbf_div(c)) + " slope=" +
                      c.slope().str() + " nu=" + nu(e).str() + (listed ? " listed" : " unlisted");
    rec.check("family/m=" + std::to_string(m) + ",e=" + std::to_string(e),
              "2L-(2m+1)δ has square 22, divisibility 2 and lies in the ample cone at e=m^2+m+3",
              "q=22 div=2 slope<nu listed", got, ok);
  }

  int bad = 0, classes = 0;
  for (long e = 1; e <= 200; ++e) {
    auto a = movable_classes_22(e), b = movable_classes_closed_form(e);
    if (!(a == b)) ++bad;
    for (const auto& c : a) {
      ++classes;
      if (bbf_square(c) != 22 || bbf_div(c) != 2) ++bad;
    }
  }
  rec.check("movable/routes-agree", "solution chain and closed form give the same movable classes, e<=200",
            "0 disagreements", std::to_string(bad) + " disagreements over " + std::to_string(classes) + " classes",
            bad == 0);

  const NSClass boundary{11, 10, -33};
  rec.equal("movable/e=11-boundary", "10L-33δ sits on the boundary of the movable cone at e=11",
            mu(11).str(), boundary.slope().str());
  return r;
}

SuiteReport suite_segre(const Config&) {
  SuiteReport r;
  Recorder rec(r);
  auto s = dv_segre_numbers();
  const std::array<long, 5> expected{1452, 825, 330, 477, 105};
  for (int i = 0; i < 5; ++i)
    rec.equal(std::string("segre/") + SegreNumbers::names[i],
              "Segre number of the quotient bundle against c20 of the third exterior power on Gr(6,10)",
              std::to_string(expected[i]), s.values[i].get_str());
  rec.equal("segre/degree", "s1^4 term equals the Plucker degree 1452", "1452", s.values[0].get_str());

  Grassmannian g{6, 10};
  auto c = chern_exterior(g, 3);
  rec.equal("segre/c1", "c1 of the third exterior power is 10 sigma_1", "10*s(1)", c[1].str());

  auto aux = aux_chern_checks();
  rec.check("aux/gr37", "top Chern class on Gr(3,7) pairs nonzero with sigma_2 and sigma_11", "nonzero",
            aux.gr37_sigma2.get_str() + ", " + aux.gr37_sigma11.get_str(),
            aux.gr37_sigma2 != 0 && aux.gr37_sigma11 != 0);
  rec.check("aux/gr47", "c4 of the third exterior power on Gr(4,7)", "nonzero", aux.gr47_c4.str(),
            !aux.gr47_c4.is_zero());
  rec.equal("aux/gr57", "integral of c10 of the third exterior power on Gr(5,7)", "0",
            aux.gr57_integral.get_str());
  return r;
}

}  // namespace dv::report
