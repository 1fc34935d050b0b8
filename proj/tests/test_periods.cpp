#include "dv/altform.hpp"
#include "dv/periods.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace dv;

namespace {

long isqrt_exact(long n) {
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Smallest y ≥ 1 with n + d y² a square, searched directly.
std::optional<std::pair<long, long>> brute_norm(long d, long n, long ymax) {
  for (long y = 1; y <= ymax; ++y) {
    const long t = n + d * y * y;
    if (t < 0) continue;
    const long x = isqrt_exact(t);
    if (x * x == t) return std::make_pair(x, y);
  }
  return std::nullopt;
}

void check_against_brute(const std::optional<IntPair>& got, long d, long n, long ymax) {
  auto b = brute_norm(d, n, ymax);
  if (b) {
    REQUIRE(got.has_value());
    CHECK(got->first == b->first);
    CHECK(got->second == b->second);
  } else if (got) {
    CHECK(got->second > ymax);
    CHECK(got->first * got->first - d * got->second * got->second == n);
  }
}

Rational det_of(const IMat& m) {
  Mat<Rational> q(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return determinant(q);
}

}  // namespace

TEST_CASE("Pell fundamental units against direct search") {
  for (long d = 2; d <= 80; ++d) {
    if (is_square(d)) {
      CHECK_FALSE(pell_fundamental(d).has_value());
      continue;
    }
    check_against_brute(pell_fundamental(d), d, 1, 200000);
  }
  // d = 61 has the classic large unit.
  auto u = pell_fundamental(61);
  REQUIRE(u);
  CHECK(u->first == mpz_class("1766319049"));
  CHECK(u->second == 226153980);
}

TEST_CASE("norm forms a^2 - 4e b^2 = -11 and x^2 - 4e y^2 = 5 against direct search") {
  for (long e = 1; e <= 60; ++e) {
    check_against_brute(neg11_min(e), 4 * e, -11, 100000);
    check_against_brute(five_min(e), 4 * e, 5, 100000);
  }
  CHECK(norm_form_min(4, -11) == IntPair{5, 3});
  CHECK(norm_form_min(36, -11) == IntPair{5, 1});
}

TEST_CASE("slopes on the six table values") {
  const std::vector<std::tuple<long, const char*, const char*>> rows{
      {1, "1", "2/3"}, {3, "3/2", "3/2"}, {5, "20/9", "2"}, {9, "3", "3"}, {11, "33/10", "22/7"}, {15, "15/4", "15/4"}};
  for (const auto& [e, m, n] : rows) {
    CHECK(mu(e).str() == m);
    CHECK(nu(e).str() == n);
    CHECK(nu(e) <= mu(e));
  }
}

TEST_CASE("nef slope never exceeds the movable slope") {
  for (long e = 1; e <= 120; ++e) CHECK(nu(e) <= mu(e));
}

TEST_CASE("movable classes: both routes agree and classes have square 22, divisibility 2") {
  for (long e = 1; e <= 200; ++e) {
    auto a = movable_classes_22(e);
    CHECK(a == movable_classes_closed_form(e));
    for (const auto& c : a) {
      CHECK(bbf_square(c) == 22);
      CHECK(bbf_div(c) == 2);
      CHECK(c.slope() <= mu(e));
    }
    for (const auto& c : ample_classes_22(e)) CHECK(c.slope() < nu(e));
  }
}

TEST_CASE("BBF square and divisibility agree with the lattice embedding") {
  const auto& lat = lattice_model();
  for (long e = 1; e <= 20; ++e)
    for (long x = 1; x <= 6; ++x)
      for (long y = -15; y <= 0; ++y) {
        NSClass c{e, x, y};
        IVec v = lat.embed(c);
        CHECK(bbf_square(c) == lat.q(v, v));
        // Divisibility in Λ ∩ ⟨L, δ⟩^⊥⊥ equals divisibility in Λ here.
        CHECK(bbf_div(c) == lat.divisibility(v));
      }
}

TEST_CASE("NS class formatting") {
  CHECK(NSClass{5, 6, -13}.str() == "6L-13δ");
  CHECK(NSClass{3, 2, -1}.str() == "2L-δ");
  CHECK(NSClass::from_solution(11, {33, 5}) == NSClass{11, 10, -33});
}

TEST_CASE("lattice model invariants") {
  const auto& lat = lattice_model();
  IMat e8 = e8_gram();
  CHECK(det_of(e8) == Rational(1));
  for (int i = 0; i < 8; ++i) CHECK(e8(i, i) % 2 == 0);
  CHECK(det_of(lat.gram) == Rational(2));
  CHECK(lat.q(lat.h, lat.h) == 22);
  CHECK(lat.divisibility(lat.h) == 2);
  IVec hp = lat.perp_basis.transpose() * lat.gram * lat.h;
  CHECK(hp.isZero());
  CHECK(det_of(lat.perp_gram) == Rational(11));
  CHECK(lat.k_gram(0, 0) == -18);
  CHECK(lat.k_gram(0, 1) == -5);
  CHECK(lat.k_gram(1, 1) == -2);
}

TEST_CASE("discriminant classes: negation and scaling") {
  const auto& g = lattice_model().k_gram;
  int seen = 0;
  for (long p = -30; p <= 30; ++p)
    for (long q = -30; q <= 30; ++q) {
      if ((g(0, 0) * p + g(0, 1) * q) % 11 || (g(1, 0) * p + g(1, 1) * q) % 11) continue;
      const int a = discriminant_class(p, q);
      CHECK(discriminant_class(-p, -q) == (11 - a) % 11);
      CHECK(discriminant_class(2 * p, 2 * q) == 2 * a % 11);
      ++seen;
    }
  CHECK(seen > 10);
  CHECK_THROWS(discriminant_class(1, 0));
}

TEST_CASE("Heegner criterion agrees with quadratic residues modulo 11") {
  for (long e = 1; e <= 200; ++e) {
    const long r = e % 11;
    bool residue = r == 0;
    for (long a = 1; a < 11; ++a) residue |= a * a % 11 == r;
    CHECK(heegner_nonempty(e) == residue);
  }
  CHECK_FALSE(heegner_nonempty(0));
}

TEST_CASE("family 2L-(2m+1)δ at e = m^2+m+3") {
  for (long m = 0; m <= 10; ++m) {
    const long e = m * m + m + 3;
    NSClass c{e, 2, -(2 * m + 1)};
    CHECK(bbf_square(c) == 22);
    CHECK(bbf_div(c) == 2);
    CHECK(c.slope() < nu(e));
  }
}

TEST_CASE("minimal-norm table: K-only search (frozen) and full search") {
  auto k = minimal_norm_table(120, true);
  const std::map<int, long> k_expected{{1, 1}, {2, 15}, {3, 9}, {4, 5}, {5, 3}};
  for (const auto& [a, e] : k_expected) CHECK(k.at(a).e == e);

  auto full = minimal_norm_table(120, false);
  const std::map<int, long> full_expected{{1, 1}, {2, 4}, {3, 9}, {4, 5}, {5, 3}};
  for (const auto& [a, e] : full_expected) CHECK(full.at(a).e == e);
}

TEST_CASE("every full-search witness is a genuine vector of h-perp") {
  const auto& lat = lattice_model();
  auto full = minimal_norm_table(120, false);
  for (const auto& [a, m] : full) {
    IVec c = IVec::Zero(22);
    c(0) = m.k_coords[0];
    c(1) = m.k_coords[1];
    if (m.adjusted) {
      c(2) = 11;                          // u2
      c(3) = 11 * (m.unimodular_norm / 242);  // n v2
    }
    IVec v = lat.perp_basis * c;
    CHECK(lat.q(v, lat.h) == 0);
    CHECK(lat.q(v, v) == -22 * m.e);
    IVec pair = lat.perp_gram * c;
    long div = 0;
    for (int i = 0; i < 22; ++i) div = std::gcd(div, pair(i));
    CHECK(std::labs(div) == 11);
    long content = 0;
    for (int i = 0; i < 22; ++i) content = std::gcd(content, c(i));
    CHECK(content == 1);
    CHECK(std::min(discriminant_class(m.k_coords[0], m.k_coords[1]),
                   11 - discriminant_class(m.k_coords[0], m.k_coords[1])) == a);
  }
}
