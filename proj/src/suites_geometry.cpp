#include "dv/dvgeom.hpp"
#include "dv/report.hpp"
#include "suite_util.hpp"

#include <future>
#include <map>
#include <set>

namespace dv::report {

using detail::join;
using detail::ratio;
using detail::Recorder;
using detail::stream;

namespace {

using Q = Rational;
const RationalField QQ{};

std::string prime_tag(std::uint64_t p) { return "F_" + std::to_string(p); }

// Names of the unit vectors spanning a monomial subspace; "non-monomial" otherwise.
std::string monomial_span(const Subspace<Q>& u) {
  std::vector<std::string> names;
  for (int i = 0; i < u.dim(); ++i) {
    Vec<Q> v = u.vector(i);
    int nz = 0, at = -1;
    for (int k = 0; k < v.size(); ++k)
      if (!is_zero(v(k))) ++nz, at = k;
    if (nz != 1) return "non-monomial";
    names.push_back(sym(3).name(at));
  }
  std::sort(names.begin(), names.end());
  return "<" + join(names, ",") + ">";
}

Subspace<Q> span_of(std::initializer_list<Poly<Q>> polys) {
  std::vector<Vec<Q>> b;
  for (const auto& p : polys) b.push_back(primal_coords(p));
  return Subspace<Q>::span(b, 10);
}

Poly<Q> mono(int x, int y, int z) { return Poly<Q>::monomial({x, y, z}); }

std::string histogram(const std::map<int, int>& h) {
  std::vector<std::string> s;
  for (const auto& [k, n] : h) s.push_back(std::to_string(k) + " x" + std::to_string(n));
  return join(s, ", ");
}

}  // namespace

// ---------------------------------------------------------------- SL(3)

SuiteReport suite_sl3(const Config& cfg) {
  SuiteReport r;
  Recorder rec(r);
  const auto sigma = sl3_sigma0<Q>();
  const int n = std::max(cfg.samples, 20);

  std::vector<std::string> support;
  auto triples = combinations(10, 3);
  for (int t = 0; t < 120; ++t)
    if (!is_zero(sigma.coeffs()(t)))
      support.push_back(std::to_string(triples[t][0]) + std::to_string(triples[t][1]) +
                        std::to_string(triples[t][2]) + ":" + sigma.coeffs()(t).str());
  rec.equal("sigma0/support", "support of the invariant trivector in the cubic monomial basis",
            "012:1 058:-3 147:-3 236:-3 345:-3 389:-6 469:-6 579:-6 678:-3", join(support, " "));

  {
    auto rng = stream(cfg, 31);
    int agree = 0;
    for (int k = 0; k < 50; ++k) {
      Vec<Q> u = random_vector(QQ, 3, rng, 5), v = random_vector(QQ, 3, rng, 5), w = random_vector(QQ, 3, rng, 5);
      Mat<Q> m(3, 3);
      m << u.transpose(), v.transpose(), w.transpose();
      Q d = determinant(m);
      agree += eval(sigma, cube(u), cube(v), cube(w)) == d * d * d;
    }
    rec.equal("sigma0/det-cubed", "sigma0(u^3, v^3, w^3) = det(u, v, w)^3", "50/50", ratio(agree, 50),
              "50 random triples over Q");
  }

  {
    auto rng = stream(cfg, 32);
    int sing = 0;
    for (int k = 0; k < n; ++k) {
      Vec<Q> x = random_vector(QQ, 3, rng, 5);
      if (all_zero(x)) x(0) = 1;
      sing += x_singular_at(sigma, gauss_point(x));
    }
    rec.equal("gauss/singular", "x^2 W3 is a singular point of the Plucker hypersurface", ratio(n, n),
              ratio(sing, n), std::to_string(n) + " random x over Q");
  }

  std::vector<Subspace<Q>> k_points;
  {
    auto rng = stream(cfg, 33);
    int member = 0, rank20 = 0;
    std::map<int, int> ranks;
    for (int k = 0; k < n; ++k) {
      auto p = sl3_km_point(QQ, rng);
      if (!dv_member(sigma, p.w6)) continue;
      ++member;
      auto t = dv_tangent_rank(sigma, p.w6);
      ++ranks[t.rank];
      rank20 += t.rank == 20;
      if (k < 5) k_points.push_back(p.w6);
    }
    rec.equal("km/member", "M(a,x) lies in the zero locus", ratio(n, n), ratio(member, n));
    rec.equal("km/rank", "the differential has rank 20 at K_M points", ratio(n, n), ratio(rank20, n),
              std::to_string(n) + " points over Q, ranks " + histogram(ranks));
  }

  {
    auto rng = stream(cfg, 34);
    int member = 0, gauss_sum = 0, below = 0, killed = 0, big = 0;
    std::map<int, int> ranks;
    for (int k = 0; k < n; ++k) {
      auto p = sl3_kl_point(QQ, rng);
      gauss_sum += p.w6 == sum(p.u3, p.u3p);
      if (!dv_member(sigma, p.w6)) continue;
      ++member;
      auto t = dv_tangent_rank(sigma, p.w6);
      ++ranks[t.rank];
      below += t.rank < 20;
      big += t.tangent_dim > 4;
      auto d = dv_differential(sigma, p.w6);
      Vec<Q> f1 = restriction_functional(p.w6, p.u3), f2 = restriction_functional(p.w6, p.u3p);
      killed += all_zero(Vec<Q>(d.matrix.transpose() * f1)) && all_zero(Vec<Q>(d.matrix.transpose() * f2));
      if (k < 5) k_points.push_back(p.w6);
    }
    const std::string pt = std::to_string(n) + " points over Q";
    rec.equal("kl/gauss-sum", "L(a, <l1^2, l2^2>) = l1^2 W3 + l2^2 W3", ratio(n, n), ratio(gauss_sum, n), pt);
    rec.equal("kl/member", "K_L points lie in the zero locus", ratio(n, n), ratio(member, n), pt);
    rec.equal("kl/rank-drop", "the differential has rank below 20 at K_L points", ratio(n, n), ratio(below, n), pt);
    rec.equal("kl/functionals", "restriction to both singular 3-spaces kills the image of the differential",
              ratio(n, n), ratio(killed, n), pt);
    rec.equal("kl/tangent-excess", "tangent dimension exceeds 4 at points containing a singular 3-space",
              ratio(n, n), ratio(big, n), pt);
    rec.record("kl/rank-observed", "generic rank along K_L", histogram(ranks), pt);
  }

  {
    auto rng = stream(cfg, 35);
    int nonzero = 0, total = 0;
    std::map<int, int> dims;
    for (const auto& w6 : k_points)
      for (int k = 0; k < 20; ++k) {
        Vec<Q> a = random_vector(QQ, 3, rng, 5);
        if (all_zero(a)) continue;
        int d = second_jet_meet(a, w6).dim();
        ++dims[d];
        ++total;
        nonzero += d > 0;
      }
    rec.equal("jet/meet", "(a Sym^2) meets the orthogonal of a zero-locus 6-space for every a", ratio(total, total),
              ratio(nonzero, total), "20 random a at " + std::to_string(k_points.size()) + " points; dims " + histogram(dims));
  }

  {
    auto rng = stream(cfg, 36);
    const auto lambda = induced_weights({4, 3, 0}, 3);
    int ok = 0;
    for (int k = 0; k < n; ++k) {
      auto rnd = [&] { return Q(1 + static_cast<long>(rng() % 9)); };
      // φ = f2 z + f3 with every coefficient of f2 nonzero; ψ = z^3 + lower terms in z.
      Poly<Q> phi = rnd() * mono(2, 0, 1) + rnd() * mono(1, 1, 1) + rnd() * mono(0, 2, 1) +
                    rnd() * mono(3, 0, 0) + rnd() * mono(0, 3, 0);
      Poly<Q> psi = mono(0, 0, 3) + rnd() * mono(1, 0, 2) + rnd() * mono(1, 1, 1) + rnd() * mono(0, 3, 0);
      Poly<Q> chi = Poly<Q>{3, random_vector(QQ, 10, rng, 5)};
      auto u = span_of({phi, psi, chi});
      if (u.dim() != 3) continue;
      auto lim = one_ps_limit(u, lambda);
      auto names = monomial_span(lim);
      const bool shape = lim.dim() == 3 && names != "non-monomial" &&
                         contains(lim, primal_coords(mono(0, 0, 3))) && contains(lim, primal_coords(mono(0, 2, 1)));
      ok += shape && !x_singular_at(sigma, lim);
    }
    rec.equal("one-ps/node-limit",
              "diag(t^4, t^3, 1) degenerates U3 to a monomial space containing z^3 and y^2 z, not singular",
              ratio(n, n), ratio(ok, n));
  }

  {
    auto u = span_of({mono(3, 0, 0) + mono(0, 2, 1), mono(1, 2, 0), mono(0, 3, 0)});
    auto lim = one_ps_limit(u, induced_weights({1, 3, 0}, 3));
    auto lit = one_ps_limit(u, induced_weights({-1, -3, 0}, 3));
    rec.equal("one-ps/cusp-limit", "<x^3 + y^2 z, x y^2, y^3> degenerates to <x^3, x y^2, y^3>", "<x^3,xy^2,y^3>",
              monomial_span(lim), "weights (1,3,0) on x, y, z");
    rec.record("one-ps/cusp-limit-inverse", "same space under weights (-1,-3,0)", monomial_span(lit));
    rec.equal("one-ps/cusp-limit-smooth", "the limit is not a singular point", "false",
              x_singular_at(sigma, lim) ? "true" : "false");
  }

  {
    // a(x) = 0 is the degenerate branch of M(a, x); flagged, not asserted.
    Vec<Q> a(3), x(3);
    a << 1, 0, 0;
    x << 0, 1, 0;
    std::string what;
    try {
      what = "dim " + std::to_string(sl3_M_space(a, x).dim());
    } catch (const std::invalid_argument& e) {
      what = std::string("rejected: ") + e.what();
    }
    rec.record("km/degenerate-branch", "M(a, x) with a(x) = 0", what, "a = x^*, x = e_y");
  }
  return r;
}

// ---------------------------------------------------------------- Sp(4)

namespace {

struct Sp4Tally {
  int pairs = 0, member = 0, rank18 = 0, j3 = 0;
  std::map<int, int> ranks;
};

Sp4Tally sp4_pairs_at(std::uint64_t p, int count, std::mt19937_64 rng) {
  PrimeField F(p);
  auto m = sp4_model_mod(p);
  auto pts = quadric_points(m, 2 * count, F, rng);
  Sp4Tally t;
  for (int k = 0; k < count; ++k) {
    const auto &x = pts[2 * k], &y = pts[2 * k + 1];
    t.j3 += sp4_j(m, x).dim() == 3 && sp4_j(m, y).dim() == 3;
    Subspace<Fp> w;
    try {
      w = sp4_pair(m, x, y);
    } catch (const std::invalid_argument&) {
      continue;
    }
    ++t.pairs;
    if (!dv_member(m.sigma, w)) continue;
    ++t.member;
    auto tr = dv_tangent_rank(m.sigma, w);
    ++t.ranks[tr.rank];
    t.rank18 += tr.rank == 18;
  }
  return t;
}

}  // namespace

SuiteReport suite_sp4(const Config& cfg) {
  SuiteReport r;
  Recorder rec(r);
  const int n = std::max(cfg.samples, 50);

  {
    auto m = sp4_model<Q>();
    rec.equal("model/quadric-rank", "the induced quadratic form on V5 is nondegenerate", "5",
              std::to_string(rank(m.gram)));
    auto rng = stream(cfg, 41);
    int inv = 0;
    for (int k = 0; k < 5; ++k) {
      Vec<Q> v = random_vector(QQ, 4, rng, 5);
      auto g = sp4_transvection(m, v, Q(1 + k));
      auto big = compound<Q>(m.act_v5(g), 2);
      inv += pullback(m.sigma, big) == m.sigma;
    }
    rec.equal("model/invariance", "sigma0 is fixed by symplectic transvections", "5/5", ratio(inv, 5),
              "5 random transvections over Q");
  }

  auto primes = check_primes(cfg);
  std::vector<std::future<Sp4Tally>> jobs;
  for (std::size_t i = 0; i < primes.size(); ++i)
    jobs.push_back(std::async(std::launch::async, sp4_pairs_at, primes[i], n, stream(cfg, 42, i)));
  for (std::size_t i = 0; i < primes.size(); ++i) {
    auto t = jobs[i].get();
    const std::string pt = std::to_string(n) + " pairs on Q3 at " + prime_tag(primes[i]);
    rec.equal("pairs/j-dim@" + prime_tag(primes[i]), "j(x) is 3-dimensional", ratio(n, n), ratio(t.j3, n), pt);
    rec.equal("pairs/member@" + prime_tag(primes[i]), "j(x) + j(y) lies in the zero locus", ratio(n, n),
              ratio(t.member, n), pt);
    rec.equal("pairs/rank@" + prime_tag(primes[i]), "the differential has rank 18 at j(x) + j(y)", ratio(n, n),
              ratio(t.rank18, n), pt + "; ranks " + histogram(t.ranks));
  }

  {
    const std::uint64_t p = cfg.prime;
    PrimeField F(p);
    auto m = sp4_model_mod(p);
    auto sp = random_trivector(cfg.seed + 7, F);
    auto rng = stream(cfg, 43);
    const int both = 10, one = 10, random = n - both - one;
    auto zeros = induced_cubic_zeros(m, sp, 2 * both + one, F, rng);
    auto rnd = quadric_points(m, 2 * random + one, F, rng);
    int consistent = 0, total = 0, designed_vanish = 0;
    auto test = [&](const Vec<Fp>& x, const Vec<Fp>& y, bool designed) {
      Subspace<Fp> w;
      try {
        w = sp4_pair(m, x, y);
      } catch (const std::invalid_argument&) {
        return;
      }
      ++total;
      auto t = dv_tangent_rank(m.sigma, w);
      const bool excess = all_zero(excess_project(t.excess, sp));
      const bool cubic = is_zero(sp4_induced_cubic(m, sp, x)) && is_zero(sp4_induced_cubic(m, sp, y));
      consistent += excess == cubic;
      designed_vanish += designed && excess;
    };
    for (int k = 0; k < both; ++k) test(zeros[2 * k], zeros[2 * k + 1], true);
    for (int k = 0; k < one; ++k) test(zeros[2 * both + k], rnd[k], false);
    for (int k = 0; k < random; ++k) test(rnd[one + 2 * k], rnd[one + 2 * k + 1], false);
    const std::string pt = std::to_string(both) + " pairs of cubic zeros, " + std::to_string(one) +
                           " with one zero, " + std::to_string(random) + " random, at " + prime_tag(p);
    rec.equal("excess/consistency", "the excess projection of sigma' vanishes iff the induced cubic vanishes at both points",
              ratio(n, n), ratio(consistent, total), pt);
    rec.equal("excess/designed", "pairs of cubic zeros give a vanishing excess projection", ratio(both, both),
              ratio(designed_vanish, both), pt);
  }
  return r;
}

// ---------------------------------------------------------------- SL(2)

namespace {

struct K1Tally {
  int member = 0, rank18 = 0, meets = 0, meet_total = 0;
  std::map<int, int> ranks;
};

K1Tally k1_points_at(std::uint64_t p, int count, bool meets, std::mt19937_64 rng) {
  PrimeField F(p);
  auto m = sl2_sigma0_model_mod(p);
  K1Tally t;
  for (int k = 0; k < count;) {
    Vec<Fp> x = random_vector(F, 5, rng);
    if (all_zero(x)) continue;
    auto v = sl2_vspaces(m, x);
    Vec<Fp> w1 = v.v7.basis().transpose() * random_vector(F, 7, rng);
    Vec<Fp> w2 = v.v7.basis().transpose() * random_vector(F, 7, rng);
    Subspace<Fp> w;
    try {
      w = sl2_k1_point(m, x, w1, w2);
    } catch (const std::invalid_argument&) {
      continue;
    }
    ++k;
    if (!dv_member(m.sigma, w)) continue;
    ++t.member;
    auto tr = dv_tangent_rank(m.sigma, w);
    ++t.ranks[tr.rank];
    t.rank18 += tr.rank == 18;
    if (meets && k <= 3)
      for (int j = 0; j < 10; ++j) {
        Vec<Fp> y = random_vector(F, 5, rng);
        if (all_zero(y)) continue;
        ++t.meet_total;
        t.meets += intersect(w, sl2_vspaces(m, y).v4).dim() > 0;
      }
  }
  return t;
}

}  // namespace

SuiteReport suite_sl2(const Config& cfg) {
  SuiteReport r;
  Recorder rec(r);
  const int n = std::max(cfg.samples, 30);

  Sl2SolveInfo info;
  const auto& sigma = sl2_sigma0_rational(&info);
  auto mq = sl2_sigma0_model_q();
  rec.equal("solve/kernel", "the vanishing conditions cut out a 1-dimensional space of trivectors", "1",
            std::to_string(info.kernel_dim),
            std::to_string(info.samples) + " points, " + std::to_string(info.constraint_rows) + " rows");
  rec.record("solve/rank", "rank of the constraint system", std::to_string(info.rank));
  rec.check("solve/nonzero", "the solution is a nonzero trivector", "nonzero",
            sigma.is_zero_form() ? "zero" : "nonzero", !sigma.is_zero_form());
  rec.equal("model/decomposition", "wedge^2 V5 = V7 + W3", "7+3=10",
            std::to_string(mq.v7.dim()) + "+" + std::to_string(mq.w3.dim()) + "=" +
                std::to_string(sum(mq.v7, mq.w3).dim()));

  {
    int zero = 0;
    for (const auto& [name, x] : std::vector<std::pair<const char*, Mat<Q>>>{{"e", mq.e}, {"f", mq.f}, {"h", mq.h}})
      zero += lie_derivative(sigma, x).is_zero_form();
    rec.equal("model/invariance", "the Lie derivative along e, f, h vanishes", "3/3", ratio(zero, 3));
  }

  {
    auto rng = stream(cfg, 51);
    int ok = 0;
    for (int k = 0; k < 10; ++k) {
      Vec<Q> x = random_vector(QQ, 5, rng, 7);
      if (all_zero(x)) x(0) = 1;
      auto v = sl2_vspaces(mq, x);
      bool vanish = true;
      for (int a = 0; a < 4 && vanish; ++a)
        for (int b = 0; b < 7 && vanish; ++b)
          for (int c = b + 1; c < 7 && vanish; ++c)
            vanish = is_zero(eval(sigma, v.v4.vector(a), v.v7.vector(b), v.v7.vector(c)));
      ok += vanish;
    }
    rec.equal("solve/held-out", "sigma0 vanishes on V4,[x] x V7,[x] x V7,[x] at fresh points", "10/10",
              ratio(ok, 10), "10 points over Q outside the solve set");
  }

  {
    PrimeField F(cfg.prime);
    auto m = sl2_sigma0_model_mod(cfg.prime);
    auto rng = stream(cfg, 52);
    int dims = 0, meet1 = 0, sum7 = 0;
    for (int k = 0; k < cfg.samples; ++k) {
      Vec<Fp> x = random_vector(F, 5, rng), y = random_vector(F, 5, rng);
      if (all_zero(x) || all_zero(y)) {
        --k;
        continue;
      }
      auto vx = sl2_vspaces(m, x), vy = sl2_vspaces(m, y);
      dims += vx.v4.dim() == 4 && vx.v7.dim() == 7 && contains(vx.v7, vx.v4);
      meet1 += intersect(vx.v4, vy.v4).dim() == 1;
      sum7 += sum(vx.v4, vy.v4).dim() == 7;
    }
    const std::string pt = std::to_string(cfg.samples) + " pairs at " + prime_tag(cfg.prime);
    const auto all = ratio(cfg.samples, cfg.samples);
    rec.equal("vspaces/dims", "V4,[x] is 4-dimensional inside the 7-dimensional V7,[x]", all, ratio(dims, cfg.samples), pt);
    rec.equal("vspaces/meet", "V4,[x] and V4,[y] meet in the line of x^y", all, ratio(meet1, cfg.samples), pt);
    rec.equal("vspaces/sum", "V4,[x] + V4,[y] is 7-dimensional", all, ratio(sum7, cfg.samples), pt);
  }

  auto primes = check_primes(cfg);
  std::vector<std::future<K1Tally>> jobs;
  for (std::size_t i = 0; i < primes.size(); ++i)
    jobs.push_back(std::async(std::launch::async, k1_points_at, primes[i], n, i == 0, stream(cfg, 53, i)));
  for (std::size_t i = 0; i < primes.size(); ++i) {
    auto t = jobs[i].get();
    const std::string pt = std::to_string(n) + " K1 points at " + prime_tag(primes[i]);
    rec.equal("k1/member@" + prime_tag(primes[i]), "V4,[x] + W lies in the zero locus", ratio(n, n),
              ratio(t.member, n), pt);
    rec.equal("k1/rank@" + prime_tag(primes[i]), "the differential has rank 18 at K1 points", ratio(n, n),
              ratio(t.rank18, n), pt + "; ranks " + histogram(t.ranks));
    if (i == 0)
      rec.equal("k1/meets-v4", "a zero-locus 6-space meets V4,[y] for every y", ratio(t.meet_total, t.meet_total),
                ratio(t.meets, t.meet_total), "10 random y at 3 points");
  }

  {
    PrimeField F(cfg.prime);
    auto m = sl2_sigma0_model_mod(cfg.prime);
    auto rng = stream(cfg, 54);
    const int count = cfg.samples;
    auto pts = fano3fold_points(m, 2 * count, F, rng);
    int on = 0, sing = 0, member = 0, big = 0, pairs = 0;
    std::map<int, int> ranks;
    for (const auto& p : pts) {
      on += on_threefold(m, p.v2);
      sing += x_singular_at(m.sigma, p.u3);
    }
    for (int k = 0; k < count; ++k) {
      auto w = sum(pts[2 * k].u3, pts[2 * k + 1].u3);
      if (w.dim() != 6) continue;
      ++pairs;
      if (!dv_member(m.sigma, w)) continue;
      ++member;
      auto t = dv_tangent_rank(m.sigma, w);
      ++ranks[t.rank];
      big += t.tangent_dim > 4;
    }
    const std::string pt = std::to_string(2 * count) + " points at " + prime_tag(cfg.prime);
    const auto all = ratio(2 * count, 2 * count);
    rec.equal("x/on-threefold", "sampled 2-planes satisfy the three W3 conditions", all, ratio(on, 2 * count), pt);
    rec.equal("x/singular", "U3 = wedge^2 V3 is a singular point of the Plucker hypersurface", all,
              ratio(sing, 2 * count), pt);
    rec.equal("x/pair-member", "U3 + U3' lies in the zero locus", ratio(pairs, pairs), ratio(member, pairs), pt);
    rec.equal("x/pair-tangent", "tangent dimension exceeds 4 at U3 + U3'", ratio(pairs, pairs), ratio(big, pairs), pt);
    rec.record("x/pair-rank", "rank of the differential at U3 + U3'", histogram(ranks), pt);
  }
  return r;
}

// ---------------------------------------------------------------- G2 × SL(3)

SuiteReport suite_g2sl3(const Config& cfg) {
  SuiteReport r;
  Recorder rec(r);
  auto m = g2sl3_model<Q>();
  auto rng = stream(cfg, 61);

  rec.check("model/g2-nondegenerate", "the bilinear form attached to alpha is nondegenerate", "nonzero determinant",
            determinant(g2_bilinear(m.alpha)).str(), !is_zero(determinant(g2_bilinear(m.alpha))));

  {
    int inv = 0;
    for (int k = 0; k < 3; ++k) {
      // Product of elementary matrices: determinant 1.
      Mat<Q> g = Mat<Q>::Identity(3, 3);
      for (int s = 0; s < 4; ++s) {
        Mat<Q> el = Mat<Q>::Identity(3, 3);
        const int i = static_cast<int>(rng() % 3), j = (i + 1 + static_cast<int>(rng() % 2)) % 3;
        el(i, j) = QQ.random(rng, 5);
        g = g * el;
      }
      Mat<Q> big = Mat<Q>::Identity(10, 10);
      big.bottomRightCorner(3, 3) = g;
      inv += pullback(m.sigma, big) == m.sigma;
    }
    rec.equal("model/sl3-invariance", "alpha + beta is fixed by SL(W3)", "3/3", ratio(inv, 3));
  }

  auto coord = [](const std::vector<int>& idx, int n) {
    std::vector<Vec<Q>> b;
    for (int i : idx) b.push_back(unit<Q>(n, i));
    return Subspace<Q>::span(b, n);
  };

  std::vector<std::vector<int>> w4s;
  for (const auto& l : m.lines) {
    std::vector<int> c;
    for (int i = 0; i < 7; ++i)
      if (i != l[0] && i != l[1] && i != l[2]) c.push_back(i);
    w4s.push_back(c);
  }
  {
    int iso = 0, coord_iso = 0;
    for (const auto& c : w4s) iso += is_isotropic(m.alpha, coord(c, 7));
    for (const auto& c : combinations(7, 4)) coord_iso += is_isotropic(m.alpha, coord(c, 7));
    rec.equal("w4/line-complements", "complements of the seven lines are alpha-isotropic", "7/7", ratio(iso, 7));
    rec.record("w4/coordinate-count", "alpha-isotropic coordinate 4-spaces among 35", std::to_string(coord_iso));
    int w5 = 0;
    for (const auto& c : combinations(7, 5)) w5 += !is_isotropic(m.alpha, coord(c, 7));
    rec.equal("w5/coordinate", "no coordinate 5-space is alpha-isotropic", "21/21", ratio(w5, 21));
  }

  auto product = [&](const std::vector<int>& w4, const Subspace<Q>& w2) {
    std::vector<Vec<Q>> b;
    for (int i : w4) b.push_back(unit<Q>(10, i));
    for (int k = 0; k < w2.dim(); ++k) {
      Vec<Q> v = Vec<Q>::Zero(10);
      v.tail(3) = w2.vector(k);
      b.push_back(v);
    }
    return Subspace<Q>::span(b, 10);
  };

  {
    int member = 0, rank14 = 0, total = 0;
    std::map<int, int> ranks;
    for (const auto& w4 : w4s)
      for (const auto& pair : combinations(3, 2)) {
        ++total;
        auto w = product(w4, coord(pair, 3));
        if (!dv_member(m.sigma, w)) continue;
        ++member;
        auto t = dv_tangent_rank(m.sigma, w);
        ++ranks[t.rank];
        rank14 += t.rank == 14;
      }
    rec.equal("product/coordinate-member", "every coordinate W4 + W2 lies in the zero locus", "21/21",
              ratio(member, total));
    rec.equal("product/coordinate-rank", "the differential has rank 14 at coordinate W4 + W2", "21/21",
              ratio(rank14, total), "ranks " + histogram(ranks));
  }
  {
    const int n = std::max(cfg.samples, 20);
    int rank14 = 0;
    for (int k = 0; k < n; ++k) {
      auto w = product(w4s[k % 7], random_subspace(QQ, 2, 3, rng, 5));
      if (dv_member(m.sigma, w) && dv_tangent_rank(m.sigma, w).rank == 14) ++rank14;
    }
    rec.equal("product/random-rank", "rank 14 at W4 + W2 with a random W2", ratio(n, n), ratio(rank14, n),
              std::to_string(n) + " random planes over Q");
    int rejected = 0;
    for (int k = 0; k < n; ++k) {
      auto w5 = random_subspace(QQ, 5, 7, rng, 5);
      std::vector<Vec<Q>> b;
      for (int i = 0; i < 5; ++i) {
        Vec<Q> v = Vec<Q>::Zero(10);
        v.head(7) = w5.vector(i);
        b.push_back(v);
      }
      Vec<Q> line = Vec<Q>::Zero(10);
      line.tail(3) = random_vector(QQ, 3, rng, 5);
      if (all_zero(line)) line(9) = 1;
      b.push_back(line);
      rejected += !dv_member(m.sigma, Subspace<Q>::span(b, 10));
    }
    rec.equal("product/w5-rejected", "6-spaces with a 5-dimensional V7 part are not in the zero locus", ratio(n, n),
              ratio(rejected, n), std::to_string(n) + " random W5 + W1 over Q");
  }
  return r;
}

// ---------------------------------------------------------------- monomials

SuiteReport suite_monomials(const Config&) {
  SuiteReport r;
  Recorder rec(r);
  auto s = monomial_sweeps();
  std::vector<std::string> spaces;
  for (const auto& t : s.singular) {
    std::vector<std::string> nm;
    for (int i : t) nm.push_back(sym(3).name(i));
    spaces.push_back("<" + join(nm, ",") + ">");
  }
  rec.equal("monomials/singular", "monomial 3-spaces singular on the Plucker hypersurface", "3/120",
            ratio(s.singular_count, 120));
  rec.equal("monomials/singular-spaces", "the singular ones are x^2 W3, y^2 W3, z^2 W3",
            "<x^3,x^2y,x^2z> <y^3,y^2z,xy^2> <z^3,xz^2,yz^2>", join(spaces, " "));
  rec.equal("monomials/criterion", "sigma0 on monomial triples is nonzero exactly as the exponent criterion predicts",
            "220/220", ratio(s.criterion_matches, s.criterion_total));
  rec.equal("monomials/isotropic6", "monomial 6-subspaces of the 7-monomial span that are isotropic", "0/7",
            ratio(s.isotropic6_count, s.isotropic6_total));
  return r;
}

}  // namespace dv::report
