#include "dv/dvgeom.hpp"

namespace dv {

bool monomial_triple_predicted_nonzero(int a, int b, int c) {
  const auto& s = sym(3);
  Exponent sum{0, 0, 0};
  for (int i : {a, b, c})
    for (int v = 0; v < 3; ++v) sum[v] += s.monomial(i)[v];
  if (sum != Exponent{3, 3, 3}) return false;
  const int xyz = s.index_of({1, 1, 1});
  return !(a == xyz && b == xyz && c == xyz);
}

MonomialSweep monomial_sweeps() {
  MonomialSweep r;
  const auto sigma = sl3_sigma0<Rational>();

  for (const auto& t : combinations(10, 3)) {
    std::vector<Vec<Rational>> b;
    for (int i : t) b.push_back(unit<Rational>(10, i));
    if (x_singular_at(sigma, Subspace<Rational>::span(b, 10))) {
      ++r.singular_count;
      r.singular.push_back({t[0], t[1], t[2]});
    }
  }

  for (int a = 0; a < 10; ++a)
    for (int b = a; b < 10; ++b)
      for (int c = b; c < 10; ++c) {
        const bool nonzero = !is_zero(
            eval(sigma, unit<Rational>(10, a), unit<Rational>(10, b), unit<Rational>(10, c)));
        ++r.criterion_total;
        if (nonzero == monomial_triple_predicted_nonzero(a, b, c)) ++r.criterion_matches;
      }

  // Monomials free of xy: x³, y³, z³, xz², y²z, yz², x²z.
  std::vector<int> span7;
  for (int i = 0; i < 10; ++i) {
    const auto& e = sym(3).monomial(i);
    if (e[0] == 0 || e[1] == 0) span7.push_back(i);
  }
  for (int drop = 0; drop < static_cast<int>(span7.size()); ++drop) {
    std::vector<Vec<Rational>> b;
    for (int k = 0; k < static_cast<int>(span7.size()); ++k)
      if (k != drop) b.push_back(unit<Rational>(10, span7[k]));
    ++r.isotropic6_total;
    if (is_isotropic(sigma, Subspace<Rational>::span(b, 10))) ++r.isotropic6_count;
  }
  return r;
}

}  // namespace dv
