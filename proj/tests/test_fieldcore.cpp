#include "dv/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace dv;

namespace {

const RationalField QQ{};

// Naive residue arithmetic on int64, used as the reference for Fp.
long mod(long a, long p) { return ((a % p) + p) % p; }

}  // namespace

TEST_CASE("Fp arithmetic matches plain residues") {
  const std::uint64_t p = 10007;
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(-50000, 50000);
  for (int i = 0; i < 500; ++i) {
    long a = d(rng), b = d(rng);
    Fp x(a, p), y(b, p);
    CHECK((x + y).value() == static_cast<std::uint64_t>(mod(a + b, p)));
    CHECK((x - y).value() == static_cast<std::uint64_t>(mod(a - b, p)));
    CHECK((x * y).value() == static_cast<std::uint64_t>(mod(mod(a, p) * mod(b, p), p)));
    if (mod(b, p) != 0) CHECK(((x / y) * y).value() == static_cast<std::uint64_t>(mod(a, p)));
  }
}

TEST_CASE("unbound Fp constants adopt the modulus of the other operand") {
  Fp two(2), x(5, 7);
  CHECK((two * x).value() == 3);
  CHECK((x - Fp(5)).is_zero());
  CHECK(Fp(-1, 7).value() == 6);
}

TEST_CASE("reduction of rationals respects the field operations") {
  const std::uint64_t p = 101;
  Rational a(mpq_class(3, 4)), b(mpq_class(-5, 6));
  CHECK(reduce(a + b, p).value() == (reduce(a, p) + reduce(b, p)).value());
  CHECK(reduce(a * b, p).value() == (reduce(a, p) * reduce(b, p)).value());
  CHECK_THROWS(reduce(Rational(mpq_class(1, 101)), p));
}

TEST_CASE("is_prime on small integers") {
  int count = 0;
  for (std::uint64_t n = 0; n < 1000; ++n) count += is_prime(n);
  CHECK(count == 168);
  CHECK(is_prime(10007));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(10007ull * 10009ull));
}

TEST_CASE("rref: rank, pivots and kernel of a fixed matrix") {
  Mat<Rational> m(3, 4);
  m << 1, 2, 3, 4, 2, 4, 6, 8, 1, 0, 1, 0;
  auto r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<int>{0, 1});
  auto k = kernel(m);
  CHECK(k.dim() == 2);
  CHECK(all_zero(Mat<Rational>(m * k.basis().transpose())));
}

TEST_CASE("kernel and rank satisfy rank-nullity over Q and F_p") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    const int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 8);
    // Low-rank product to force nontrivial kernels.
    const int inner = 1 + static_cast<int>(rng() % 4);
    Mat<Rational> m = random_matrix(QQ, r, inner, rng, 3) * random_matrix(QQ, inner, c, rng, 3);
    auto k = kernel(m);
    CHECK(rank(m) + k.dim() == c);
    if (k.dim()) CHECK(all_zero(Mat<Rational>(m * k.basis().transpose())));
    PrimeField F(10007);
    Mat<Fp> mp = random_matrix(F, r, inner, rng) * random_matrix(F, inner, c, rng);
    CHECK(rank(mp) + kernel(mp).dim() == c);
  }
}

TEST_CASE("subspace dimension formula on 100 random pairs") {
  std::mt19937_64 rng(11);
  PrimeField F(10007);
  for (int t = 0; t < 100; ++t) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const int a = static_cast<int>(rng() % (n + 1)), b = static_cast<int>(rng() % (n + 1));
    Mat<Fp> ma = random_matrix(F, a, n, rng), mb = random_matrix(F, b, n, rng);
    // Share a few rows so intersections are not always minimal.
    if (a > 0 && b > 0) mb.row(0) = ma.row(0);
    auto A = Subspace<Fp>::span(ma), B = Subspace<Fp>::span(mb);
    CHECK(sum(A, B).dim() + intersect(A, B).dim() == A.dim() + B.dim());
    CHECK(contains(sum(A, B), A));
    CHECK(contains(A, intersect(A, B)));
    CHECK(perp(A).dim() == n - A.dim());
  }
}

TEST_CASE("Subspace equality is basis independent") {
  std::mt19937_64 rng(5);
  auto s = random_subspace(QQ, 3, 6, rng, 4);
  Mat<Rational> g = random_matrix(QQ, 3, 3, rng, 4);
  while (rank(g) < 3) g = random_matrix(QQ, 3, 3, rng, 4);
  CHECK(Subspace<Rational>::span(Mat<Rational>(g * s.basis())) == s);
  CHECK_THROWS_AS(sum(s, Subspace<Rational>(5)), std::invalid_argument);
}

TEST_CASE("annihilator under a nondegenerate pairing") {
  std::mt19937_64 rng(9);
  auto s = random_subspace(QQ, 2, 5, rng, 4);
  Mat<Rational> g = random_matrix(QQ, 5, 5, rng, 4);
  while (rank(g) < 5) g = random_matrix(QQ, 5, 5, rng, 4);
  auto ann = annihilator(s, g);
  CHECK(ann.dim() == 3);
  CHECK(all_zero(Mat<Rational>(s.basis() * g * ann.basis().transpose())));
}

TEST_CASE("unbound zero divided by an unbound constant stays zero") {
  Fp z(0), three(3);
  CHECK((z / three).is_zero());
  CHECK_THROWS(z / Fp(0));
  CHECK_THROWS(Fp(1, 7) / Fp(0, 7));
}
