#include "dv/trivectors.hpp"

#include <doctest.h>

#include <random>

using namespace dv;

namespace {

using Q = Rational;
const RationalField QQ{};

// The unique alternating 3-form on Sym^3 with prescribed values det(u,v,w)^3 on
// cube triples, solved from scratch over F_p.
AltForm<Fp> det_cubed_oracle(std::uint64_t p, std::uint64_t seed) {
  PrimeField F(p);
  std::mt19937_64 rng(seed);
  const auto tuples = combinations(10, 3);
  const int rows = 200;
  Mat<Fp> a(rows, 121);
  for (int r = 0; r < rows; ++r) {
    Vec<Fp> u = random_vector(F, 3, rng), v = random_vector(F, 3, rng), w = random_vector(F, 3, rng);
    std::vector<Vec<Fp>> cubes{cube(u), cube(v), cube(w)};
    for (int t = 0; t < 120; ++t) a(r, t) = detail::det_rows(cubes, tuples[t]);
    Mat<Fp> m(3, 3);
    m << u.transpose(), v.transpose(), w.transpose();
    Fp d = determinant(m);
    a(r, 120) = -(d * d * d);
  }
  auto k = kernel(a);
  REQUIRE(k.dim() == 1);
  Vec<Fp> sol = k.vector(0);
  REQUIRE_FALSE(sol(120).is_zero());
  sol /= sol(120);
  return AltForm<Fp>(3, 10, sol.head(120));
}

}  // namespace

TEST_CASE("sl3 trivector equals the det-cubed polarization, solved independently") {
  for (std::uint64_t p : {10007ull, 10009ull}) {
    auto oracle = det_cubed_oracle(p, p);
    CHECK(oracle == reduce(sl3_sigma0<Q>(), p));
  }
}

TEST_CASE("sl3 trivector: frozen support and normalization") {
  auto s = sl3_sigma0<Q>();
  int nz = 0;
  for (int i = 0; i < 120; ++i) nz += !s.coeffs()(i).is_zero();
  CHECK(nz == 9);
  CHECK(s.at({0, 1, 2}) == Q(1));
  CHECK(s.at({5, 7, 9}) == Q(-6));
  CHECK(s.at({6, 7, 8}) == Q(-3));
  Vec<Q> x = unit<Q>(3, 0), y = unit<Q>(3, 1), z = unit<Q>(3, 2);
  CHECK(eval(s, cube(x), cube(y), cube(z)) == Q(1));
}

TEST_CASE("sp4 trace form: alternating and equal to Tr(XYZ) on 50 random triples") {
  auto m = sp4_model<Q>();
  std::mt19937_64 rng(2);
  auto endo = [&](const Vec<Q>& x) {
    Mat<Q> e = Mat<Q>::Zero(5, 5);
    for (int t = 0; t < 10; ++t) e += x(t) * m.skew[t];
    return e;
  };
  for (int k = 0; k < 50; ++k) {
    Vec<Q> x = random_vector(QQ, 10, rng, 4), y = random_vector(QQ, 10, rng, 4), z = random_vector(QQ, 10, rng, 4);
    const Q v = eval(m.sigma, x, y, z);
    CHECK(v == (endo(x) * endo(y) * endo(z)).trace());
    CHECK(v == (endo(y) * endo(z) * endo(x)).trace());
    CHECK(v == -(endo(y) * endo(x) * endo(z)).trace());
  }
}

TEST_CASE("sp4 model: q is nondegenerate of rank 5 and ω-compatible") {
  auto m = sp4_model<Q>();
  CHECK(rank(m.gram) == 5);
  CHECK(m.gram == Mat<Q>(m.gram.transpose()));
  CHECK(rank(m.v5) == 5);
  CHECK(all_zero(Mat<Q>(m.omega.coeffs().transpose() * m.v5)));
  CHECK_FALSE(m.sigma.is_zero_form());
}

TEST_CASE("sp4 trivector is invariant under random symplectic transvections") {
  auto m = sp4_model<Q>();
  std::mt19937_64 rng(4);
  for (int k = 0; k < 6; ++k) {
    Vec<Q> v = random_vector(QQ, 4, rng, 5);
    auto g = sp4_transvection(m, v, QQ.random(rng, 5));
    // g preserves ω.
    CHECK(pullback(m.omega, g) == m.omega);
    CHECK(pullback(m.sigma, compound<Q>(m.act_v5(g), 2)) == m.sigma);
  }
}

TEST_CASE("G2 x SL3 trivector: frozen Gram determinant and SL3 invariance") {
  auto m = g2sl3_model<Q>();
  CHECK(determinant(g2_bilinear(m.alpha)) == Q(279936));
  CHECK(m.lines.size() == 7);
  std::mt19937_64 rng(6);
  for (int k = 0; k < 5; ++k) {
    Mat<Q> g = random_matrix(QQ, 3, 3, rng, 4);
    Q d = determinant(g);
    if (d.is_zero()) continue;
    Mat<Q> big = Mat<Q>::Identity(10, 10);
    big.bottomRightCorner(3, 3) = g;
    // β scales by det g; α is untouched.
    auto pulled = pullback(m.sigma, big);
    CHECK(pulled.at({7, 8, 9}) == d);
    CHECK(pulled.at({0, 1, 2}) == m.sigma.at({0, 1, 2}));
  }
}

TEST_CASE("sl2 model: sl2 relations and the V7 + W3 decomposition") {
  auto m = sl2_model<Q>();
  CHECK(Mat<Q>(m.e5 * m.f5 - m.f5 * m.e5) == m.h5);
  CHECK(Mat<Q>(m.e * m.f - m.f * m.e) == m.h);
  CHECK(m.w3.dim() == 3);
  CHECK(m.v7.dim() == 7);
  CHECK(sum(m.w3, m.v7).dim() == 10);
  for (const Mat<Q>* x : {&m.e, &m.f, &m.h})
    for (int i = 0; i < 3; ++i) CHECK(contains(m.w3, Vec<Q>(*x * m.w3.vector(i))));
}

TEST_CASE("sl2 trivector: one-dimensional solution, invariant, normalized") {
  Sl2SolveInfo info;
  const auto& s = sl2_sigma0_rational(&info);
  CHECK(info.kernel_dim == 1);
  CHECK(info.rank == 119);
  CHECK(info.samples >= 40);
  auto m = sl2_sigma0_model_q();
  CHECK(lie_derivative(s, m.e).is_zero_form());
  CHECK(lie_derivative(s, m.f).is_zero_form());
  CHECK(lie_derivative(s, m.h).is_zero_form());
  int first = 0;
  while (s.coeffs()(first).is_zero()) ++first;
  CHECK(s.coeffs()(first) == Q(1));
}

TEST_CASE("prime-field models are reductions of the rational ones") {
  const std::uint64_t p = 10009;
  CHECK(sp4_model_mod(p).sigma == reduce(sp4_model<Q>().sigma, p));
  CHECK(g2sl3_model_mod(p).sigma == reduce(g2sl3_model<Q>().sigma, p));
  CHECK(sl2_sigma0_model_mod(p).sigma == reduce(sl2_sigma0_rational(), p));
  CHECK(sp4_model_mod(p).gram == reduce(sp4_model<Q>().gram, p));
}

TEST_CASE("random trivectors are reproducible from the seed") {
  PrimeField F(101);
  CHECK(random_trivector(5, F) == random_trivector(5, F));
  CHECK_FALSE(random_trivector(5, F) == random_trivector(6, F));
  CHECK(random_trivector(9, QQ, 3) == random_trivector(9, QQ, 3));
}
