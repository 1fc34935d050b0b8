#include "dv/dvgeom.hpp"

#include <doctest.h>

#include <random>

using namespace dv;

namespace {

using Q = Rational;
const RationalField QQ{};

// Rank of dσ̃ computed in Hom(W6, V10/W6) with a random complement instead of
// the coordinate one; it must not depend on that choice.
template <class F>
int rank_with_random_complement(const AltForm<typename F::Scalar>& sigma, const Subspace<typename F::Scalar>& w6,
                                const F& field, std::mt19937_64& rng) {
  using S = typename F::Scalar;
  std::vector<Vec<S>> comp;
  for (;;) {
    comp.clear();
    for (int c = 0; c < 4; ++c) comp.push_back(random_vector(field, 10, rng));
    auto all = w6;
    for (const auto& v : comp) all = sum(all, Subspace<S>::span(std::vector<Vec<S>>{v}, 10));
    if (all.dim() == 10) break;
  }
  auto triples = combinations(6, 3);
  Mat<S> d = Mat<S>::Zero(20, 24);
  for (int t = 0; t < 20; ++t)
    for (int slot = 0; slot < 3; ++slot)
      for (int c = 0; c < 4; ++c) {
        std::vector<Vec<S>> args{w6.vector(triples[t][0]), w6.vector(triples[t][1]), w6.vector(triples[t][2])};
        args[slot] = comp[c];
        d(t, triples[t][slot] * 4 + c) = eval(sigma, args);
      }
  return rank(d);
}

}  // namespace

TEST_CASE("membership and tangent preconditions") {
  auto sigma = sl3_sigma0<Q>();
  std::mt19937_64 rng(1);
  auto w = random_subspace(QQ, 6, 10, rng, 3);
  CHECK_FALSE(dv_member(sigma, w));
  CHECK_THROWS_AS(dv_tangent_rank(sigma, w), std::invalid_argument);
  CHECK_THROWS_AS(dv_member(sigma, random_subspace(QQ, 5, 10, rng, 3)), std::invalid_argument);
  CHECK_THROWS_AS(x_singular_at(sigma, random_subspace(QQ, 4, 10, rng, 3)), std::invalid_argument);
}

TEST_CASE("restriction functional computes the value on the 3-space") {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 10; ++k) {
    auto f = random_trivector(k, QQ, 4);
    auto w6 = random_subspace(QQ, 6, 10, rng, 3);
    Mat<Q> c = random_matrix(QQ, 3, 6, rng, 3);
    auto u3 = Subspace<Q>::span(Mat<Q>(c * w6.basis()));
    if (u3.dim() != 3) continue;
    Q direct = eval(f, u3.vector(0), u3.vector(1), u3.vector(2));
    CHECK(restriction_functional(w6, u3).dot(restrict_to(f, w6).coeffs()) == direct);
  }
}

TEST_CASE("sl3: Gauss points, L and M spaces") {
  auto sigma = sl3_sigma0<Q>();
  std::mt19937_64 rng(3);
  for (int k = 0; k < 10; ++k) {
    Vec<Q> x = random_vector(QQ, 3, rng, 5);
    if (all_zero(x)) continue;
    auto g = gauss_point(x);
    CHECK(g.dim() == 3);
    CHECK(contains(g, cube(x)));
    CHECK(x_singular_at(sigma, g));
  }
  for (int k = 0; k < 5; ++k) {
    auto p = sl3_kl_point(QQ, rng);
    CHECK(p.w6 == sum(p.u3, p.u3p));
    CHECK(dv_member(sigma, p.w6));
    auto q = sl3_km_point(QQ, rng);
    CHECK(q.w6.dim() == 6);
    CHECK(dv_member(sigma, q.w6));
  }
  Vec<Q> a(3), l(3);
  a << 1, 0, 0;
  l << 1, 1, 0;  // a(l) ≠ 0
  auto sq = primal_coords(Poly<Q>::linear(l) * Poly<Q>::linear(l));
  CHECK_THROWS_AS(sl3_L_space(a, Subspace<Q>::span(std::vector<Vec<Q>>{sq}, 6)), std::invalid_argument);
  CHECK_THROWS_AS(sl3_M_space(a, Vec<Q>(Vec<Q>::Zero(3))), std::invalid_argument);
}

TEST_CASE("every sampled zero-locus 6-space meets a·Sym² in its orthogonal") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 4; ++k) {
    auto w6 = k % 2 ? sl3_kl_point(QQ, rng).w6 : sl3_km_point(QQ, rng).w6;
    for (int j = 0; j < 5; ++j) {
      Vec<Q> a = random_vector(QQ, 3, rng, 7);
      if (all_zero(a)) continue;
      CHECK(second_jet_meet(a, w6).dim() > 0);
    }
  }
}

TEST_CASE("tangent rank does not depend on the complement") {
  auto sigma = sl3_sigma0<Q>();
  std::mt19937_64 rng(5);
  for (int k = 0; k < 4; ++k) {
    auto w6 = k % 2 ? sl3_kl_point(QQ, rng).w6 : sl3_km_point(QQ, rng).w6;
    auto t = dv_tangent_rank(sigma, w6);
    CHECK(t.rank == rank_with_random_complement(sigma, w6, QQ, rng));
    CHECK(t.tangent_dim == 24 - t.rank);
    CHECK(t.tangent_dim >= 4);
    CHECK(t.excess.cokernel.dim() == 20 - t.rank);
    // σ itself restricts to zero, so it has no excess component.
    CHECK(all_zero(excess_project(t.excess, sigma)));
  }
  PrimeField F(10007);
  auto m = sp4_model_mod(10007);
  auto pts = quadric_points(m, 4, F, rng);
  auto w = sp4_pair(m, pts[0], pts[1]);
  CHECK(dv_tangent_rank(m.sigma, w).rank == rank_with_random_complement(m.sigma, w, F, rng));
}

TEST_CASE("differential layout: complement and shape") {
  auto sigma = sl3_sigma0<Q>();
  std::mt19937_64 rng(6);
  auto w6 = sl3_km_point(QQ, rng).w6;
  auto d = dv_differential(sigma, w6);
  CHECK(d.matrix.rows() == 20);
  CHECK(d.matrix.cols() == 24);
  CHECK(d.complement.size() == 4);
  std::vector<int> all = d.complement;
  all.insert(all.end(), w6.pivots().begin(), w6.pivots().end());
  std::sort(all.begin(), all.end());
  for (int i = 0; i < 10; ++i) CHECK(all[i] == i);
}

TEST_CASE("sp4 samplers and pairs") {
  const std::uint64_t p = 10007;
  PrimeField F(p);
  auto m = sp4_model_mod(p);
  std::mt19937_64 rng(7);
  auto pts = quadric_points(m, 20, F, rng);
  for (const auto& x : pts) {
    CHECK(m.q(x, x).is_zero());
    CHECK(sp4_j(m, x).dim() == 3);
  }
  Vec<Fp> bad = unit<Fp>(5, 0) + unit<Fp>(5, 4);
  if (!m.q(bad, bad).is_zero()) CHECK_THROWS(sp4_j(m, bad));
  for (int k = 0; k < 10; k += 2) {
    auto w = sp4_pair(m, pts[k], pts[k + 1]);
    CHECK(dv_member(m.sigma, w));
    CHECK(dv_tangent_rank(m.sigma, w).rank == 18);
  }
  CHECK_THROWS(sp4_pair(m, pts[0], pts[0]));
}

TEST_CASE("sp4 excess: designed zeros of the induced cubic") {
  const std::uint64_t p = 10007;
  PrimeField F(p);
  auto m = sp4_model_mod(p);
  std::mt19937_64 rng(8);
  auto sp = random_trivector(3, F);
  auto zeros = induced_cubic_zeros(m, sp, 4, F, rng);
  for (const auto& x : zeros) CHECK(sp4_induced_cubic(m, sp, x).is_zero());
  auto t = dv_tangent_rank(m.sigma, sp4_pair(m, zeros[0], zeros[1]));
  CHECK(all_zero(excess_project(t.excess, sp)));
  auto rnd = quadric_points(m, 2, F, rng);
  auto u = dv_tangent_rank(m.sigma, sp4_pair(m, rnd[0], rnd[1]));
  CHECK_FALSE(all_zero(excess_project(u.excess, sp)));
}

TEST_CASE("sl2: V-spaces, K1 points and threefold points") {
  const std::uint64_t p = 10009;
  PrimeField F(p);
  auto m = sl2_sigma0_model_mod(p);
  std::mt19937_64 rng(9);
  for (int k = 0; k < 5; ++k) {
    Vec<Fp> x = random_vector(F, 5, rng), y = random_vector(F, 5, rng);
    auto vx = sl2_vspaces(m, x), vy = sl2_vspaces(m, y);
    CHECK(vx.v4.dim() == 4);
    CHECK(vx.v7.dim() == 7);
    CHECK(contains(vx.v7, vx.v4));
    CHECK(intersect(vx.v4, vy.v4) == Subspace<Fp>::span(std::vector<Vec<Fp>>{wedge2<Fp>(x, y)}, 10));
    CHECK(sum(vx.v4, vy.v4).dim() == 7);
    Vec<Fp> w1 = vx.v7.basis().transpose() * random_vector(F, 7, rng);
    Vec<Fp> w2 = vx.v7.basis().transpose() * random_vector(F, 7, rng);
    auto w = sl2_k1_point(m, x, w1, w2);
    CHECK(dv_member(m.sigma, w));
    CHECK(intersect(w, vy.v4).dim() > 0);
  }
  CHECK_THROWS(sl2_k1_point(m, unit<Fp>(5, 0), unit<Fp>(10, 9), unit<Fp>(10, 8)));

  auto pts = fano3fold_points(m, 6, F, rng);
  for (const auto& pt : pts) {
    CHECK(on_threefold(m, pt.v2));
    CHECK(pt.u3.dim() == 3);
    CHECK(x_singular_at(m.sigma, pt.u3));
  }
  auto w = sum(pts[0].u3, pts[1].u3);
  CHECK(dv_member(m.sigma, w));
  CHECK(dv_tangent_rank(m.sigma, w).tangent_dim > 4);
}

TEST_CASE("monomial sweeps") {
  auto s = monomial_sweeps();
  CHECK(s.singular_count == 3);
  CHECK(s.criterion_total == 220);
  CHECK(s.criterion_matches == 220);
  CHECK(s.isotropic6_total == 7);
  CHECK(s.isotropic6_count == 0);
  // x^2·W3 = <x^3, x^2y, x^2z> in the fixed basis.
  CHECK(s.singular.front() == std::array<int, 3>{0, 3, 7});
  CHECK(monomial_triple_predicted_nonzero(0, 1, 2));
  CHECK_FALSE(monomial_triple_predicted_nonzero(9, 9, 9));
  CHECK_FALSE(monomial_triple_predicted_nonzero(0, 0, 1));
}
