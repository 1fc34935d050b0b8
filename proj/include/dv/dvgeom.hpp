#pragma once

#include "dv/trivectors.hpp"

#include <random>
#include <vector>

namespace dv {

// ---------------------------------------------------------------- membership

template <class S>
bool dv_member(const AltForm<S>& sigma, const Subspace<S>& w6) {
  if (w6.dim() != 6) throw std::invalid_argument("dv_member expects a 6-dimensional subspace");
  return is_isotropic(sigma, w6);
}

// σ(u_a, u_b, v) = 0 for every pair of U3 and every ambient v.
template <class S>
bool x_singular_at(const AltForm<S>& sigma, const Subspace<S>& u3) {
  if (u3.dim() != 3) throw std::invalid_argument("x_singular_at expects a 3-dimensional subspace");
  const int n = sigma.ambient();
  for (int a = 0; a < 3; ++a) {
    auto g = contract(sigma, u3.vector(a));
    for (int b = a + 1; b < 3; ++b)
      for (int v = 0; v < n; ++v)
        if (!is_zero(eval(g, u3.vector(b), unit<S>(n, v)))) return false;
  }
  return true;
}

// ---------------------------------------------------------------- tangent space

template <class S>
struct ExcessFiber {
  Subspace<S> base;
  Subspace<S> cokernel;  // functionals on ∧³W6^∨ killing Im(dσ̃)
};

template <class S>
struct DVDifferential {
  Subspace<S> base;
  std::vector<int> complement;  // non-pivot coordinates spanning V10/W6
  Mat<S> matrix;                // 20 × 24, columns (i, c) ↦ 4 i + c
};

template <class S>
struct TangentResult {
  int rank = 0;
  int tangent_dim = 0;
  ExcessFiber<S> excess;
};

template <class S>
DVDifferential<S> dv_differential(const AltForm<S>& sigma, const Subspace<S>& w6) {
  DVDifferential<S> d;
  d.base = w6;
  const int n = w6.ambient();
  std::vector<bool> piv(n, false);
  for (int p : w6.pivots()) piv[p] = true;
  for (int c = 0; c < n; ++c)
    if (!piv[c]) d.complement.push_back(c);
  const int m = static_cast<int>(d.complement.size());
  auto triples = combinations(6, 3);
  d.matrix = Mat<S>::Zero(20, 6 * m);
  std::vector<Vec<S>> w(6);
  for (int i = 0; i < 6; ++i) w[i] = w6.vector(i);
  for (int t = 0; t < 20; ++t) {
    const auto& tr = triples[t];
    for (int slot = 0; slot < 3; ++slot)
      for (int c = 0; c < m; ++c) {
        std::vector<Vec<S>> args{w[tr[0]], w[tr[1]], w[tr[2]]};
        args[slot] = unit<S>(n, d.complement[c]);
        d.matrix(t, tr[slot] * m + c) = eval(sigma, args);
      }
  }
  return d;
}

template <class S>
TangentResult<S> dv_tangent_rank(const AltForm<S>& sigma, const Subspace<S>& w6) {
  if (!dv_member(sigma, w6)) throw std::invalid_argument("point is not in the zero locus");
  auto d = dv_differential(sigma, w6);
  TangentResult<S> r;
  r.rank = rank(d.matrix);
  r.tangent_dim = static_cast<int>(d.matrix.cols()) - r.rank;
  r.excess.base = w6;
  r.excess.cokernel = kernel(Mat<S>(d.matrix.transpose()));
  return r;
}

// Coordinates of σ'|W6 in the cokernel.
template <class S>
Vec<S> excess_project(const ExcessFiber<S>& f, const AltForm<S>& sigma_prime) {
  Vec<S> r = restrict_to(sigma_prime, f.base).coeffs();
  return f.cokernel.basis() * r;
}

// Row vector on ∧³W6^∨ sending a form to its value on the basis of U3 ⊂ W6.
template <class S>
Vec<S> restriction_functional(const Subspace<S>& w6, const Subspace<S>& u3) {
  if (!contains(w6, u3)) throw std::invalid_argument("U3 not inside W6");
  std::vector<Vec<S>> coords;
  for (int i = 0; i < 3; ++i) {
    Vec<S> u = u3.vector(i), c(6);
    for (int j = 0; j < 6; ++j) c(j) = u(w6.pivots()[j]);
    coords.push_back(c);
  }
  auto triples = combinations(6, 3);
  Vec<S> phi(20);
  for (int t = 0; t < 20; ++t) phi(t) = detail::det_rows(coords, triples[t]);
  return phi;
}

// ---------------------------------------------------------------- SL(3): Sym³W3

template <class S>
Subspace<S> gauss_point(const Vec<S>& x) {
  if (all_zero(x)) throw std::invalid_argument("gauss_point of zero");
  auto l = Poly<S>::linear(x);
  std::vector<Vec<S>> b;
  for (int i = 0; i < 3; ++i) b.push_back(primal_coords(l * l * Poly<S>::linear(unit<S>(3, i))));
  return Subspace<S>::span(b, 10);
}

namespace detail {

// (a · I^⊥)^⊥ for a 2-dimensional I ⊂ Sym²W3 given in primal coordinates.
template <class S>
Subspace<S> apolar_extend(const Vec<S>& a, const Subspace<S>& i2) {
  if (i2.dim() != 2) throw std::invalid_argument("expected a 2-dimensional space of quadrics");
  auto iperp = annihilator(i2, apolarity_matrix<S>(2));
  auto la = Poly<S>::linear(a);
  std::vector<Vec<S>> prod;
  for (int k = 0; k < iperp.dim(); ++k) prod.push_back(dual_coords(la * Poly<S>{2, iperp.vector(k)}));
  auto ai = Subspace<S>::span(prod, 10);
  auto out = annihilator(ai, apolarity_matrix<S>(3));
  if (out.dim() != 6) throw std::invalid_argument("degenerate input: dimension drop");
  return out;
}

}  // namespace detail

// L(a, H) for H ⊂ Sym²(a^⊥), given as quadrics in primal coordinates.
template <class S>
Subspace<S> sl3_L_space(const Vec<S>& a, const Subspace<S>& h) {
  if (all_zero(a)) throw std::invalid_argument("a = 0");
  for (int k = 0; k < h.dim(); ++k) {
    // H must lie in Sym²(a^⊥): a ⌟ h = 0.
    auto q = from_primal_coords(h.vector(k), 2);
    const auto& s2 = sym(2);
    Vec<S> c = Vec<S>::Zero(3);
    for (int m = 0; m < 6; ++m) {
      const auto& e = s2.monomial(m);
      for (int v = 0; v < 3; ++v)
        if (e[v] > 0) {
          Exponent f = e;
          --f[v];
          c(sym(1).index_of(f)) += S(e[v]) * a(v) * q.coeffs(m);
        }
    }
    if (!all_zero(c)) throw std::invalid_argument("H not contained in Sym2(a-perp)");
  }
  return detail::apolar_extend(a, h);
}

template <class S>
Subspace<S> sl3_M_space(const Vec<S>& a, const Vec<S>& x) {
  if (all_zero(a) || all_zero(x)) throw std::invalid_argument("zero input");
  Mat<S> am(1, 3);
  am.row(0) = a.transpose();
  auto ker = kernel(am);
  auto lx = Poly<S>::linear(x);
  std::vector<Vec<S>> j;
  for (int k = 0; k < 2; ++k) j.push_back(primal_coords(lx * Poly<S>::linear(ker.vector(k))));
  return detail::apolar_extend(a, Subspace<S>::span(j, 6));
}

// (a · Sym²W3^∨) ∩ U^⊥, in dual coordinates.
template <class S>
Subspace<S> second_jet_meet(const Vec<S>& a, const Subspace<S>& u) {
  auto uperp = annihilator(u, apolarity_matrix<S>(3));
  auto la = Poly<S>::linear(a);
  std::vector<Vec<S>> b;
  for (int m = 0; m < 6; ++m) b.push_back(dual_coords(la * Poly<S>::monomial(sym(2).monomial(m))));
  return intersect(Subspace<S>::span(b, 10), uperp);
}

template <class S>
Vec<S> cross(const Vec<S>& u, const Vec<S>& v) {
  Vec<S> w(3);
  w << u(1) * v(2) - u(2) * v(1), u(2) * v(0) - u(0) * v(2), u(0) * v(1) - u(1) * v(0);
  return w;
}

// A K_L point: a = ℓ1 × ℓ2 kills both lines, H = ⟨ℓ1², ℓ2²⟩.
template <class S>
struct KLPoint {
  Vec<S> a, l1, l2;
  Subspace<S> w6, u3, u3p;  // u3 = ℓ1²·W3, u3p = ℓ2²·W3
};

template <class F>
KLPoint<typename F::Scalar> sl3_kl_point(const F& field, std::mt19937_64& rng, int height = 5) {
  using S = typename F::Scalar;
  for (;;) {
    KLPoint<S> p;
    p.l1 = random_vector(field, 3, rng, height);
    p.l2 = random_vector(field, 3, rng, height);
    p.a = cross(p.l1, p.l2);
    if (all_zero(p.a)) continue;
    auto sq = [](const Vec<S>& l) { return primal_coords(Poly<S>::linear(l) * Poly<S>::linear(l)); };
    p.w6 = sl3_L_space(p.a, Subspace<S>::span(std::vector<Vec<S>>{sq(p.l1), sq(p.l2)}, 6));
    p.u3 = gauss_point(p.l1);
    p.u3p = gauss_point(p.l2);
    return p;
  }
}

template <class S>
struct KMPoint {
  Vec<S> a, x;
  Subspace<S> w6;
};

// Generic branch a(x) ≠ 0 only.
template <class F>
KMPoint<typename F::Scalar> sl3_km_point(const F& field, std::mt19937_64& rng, int height = 5) {
  using S = typename F::Scalar;
  for (;;) {
    KMPoint<S> p{random_vector(field, 3, rng, height), random_vector(field, 3, rng, height), {}};
    if (is_zero(p.a.dot(p.x)) || all_zero(p.x)) continue;
    p.w6 = sl3_M_space(p.a, p.x);
    return p;
  }
}

// ---------------------------------------------------------------- Sp(4)

template <class S>
Subspace<S> sp4_j(const Sp4Model<S>& m, const Vec<S>& x) {
  if (!is_zero(m.q(x, x)) || all_zero(x)) throw std::invalid_argument("x is not a point of Q3");
  Mat<S> row(1, 5);
  row.row(0) = (m.gram * x).transpose();
  auto xp = kernel(row);
  std::vector<Vec<S>> b;
  for (int k = 0; k < xp.dim(); ++k) b.push_back(wedge2<S>(x, xp.vector(k)));
  auto j = Subspace<S>::span(b, 10);
  if (j.dim() != 3) throw std::logic_error("j(x) is not 3-dimensional");
  return j;
}

template <class S>
Subspace<S> sp4_pair(const Sp4Model<S>& m, const Vec<S>& x, const Vec<S>& y) {
  auto w = sum(sp4_j(m, x), sp4_j(m, y));
  if (w.dim() != 6) throw std::invalid_argument("j(x) and j(y) overlap");
  return w;
}

// Value of σ' on the basis of j(x); its vanishing is basis independent.
template <class S>
S sp4_induced_cubic(const Sp4Model<S>& m, const AltForm<S>& sigma_prime, const Vec<S>& x) {
  auto j = sp4_j(m, x);
  return eval(sigma_prime, j.vector(0), j.vector(1), j.vector(2));
}

// Isotropic vectors of q by projection from the isotropic basis vector x0:
// d ↦ q(d,d) x0 − 2 q(x0,d) d.
template <class S>
Vec<S> quadric_param(const Sp4Model<S>& m, const Vec<S>& x0, const Vec<S>& d) {
  return m.q(d, d) * x0 - S(2) * m.q(x0, d) * d;
}

template <class S>
Vec<S> isotropic_base(const Sp4Model<S>& m) {
  for (int i = 0; i < 5; ++i)
    if (is_zero(m.gram(i, i))) return unit<S>(5, i);
  throw std::logic_error("no isotropic basis vector");
}

template <class F>
std::vector<Vec<typename F::Scalar>> quadric_points(const Sp4Model<typename F::Scalar>& m, int count,
                                                    const F& field, std::mt19937_64& rng,
                                                    int budget = 100000) {
  using S = typename F::Scalar;
  const Vec<S> x0 = isotropic_base(m);
  std::vector<Vec<S>> out;
  for (int trial = 0; static_cast<int>(out.size()) < count; ++trial) {
    if (trial >= budget) throw std::runtime_error("quadric sampler exhausted its budget");
    Vec<S> x = quadric_param(m, x0, random_vector(field, 5, rng));
    if (!all_zero(x)) out.push_back(x);
  }
  return out;
}

// Zeros of the induced cubic on Q3 over a prime field, found by running the
// parameter d0 + s d1 over every s ∈ F_p on random lines.
template <class F>
std::vector<Vec<typename F::Scalar>> induced_cubic_zeros(const Sp4Model<typename F::Scalar>& m,
                                                         const AltForm<typename F::Scalar>& sigma_prime,
                                                         int count, const F& field, std::mt19937_64& rng,
                                                         int max_lines = 1000) {
  using S = typename F::Scalar;
  const Vec<S> x0 = isotropic_base(m);
  std::vector<Vec<S>> out;
  for (int line = 0; static_cast<int>(out.size()) < count; ++line) {
    if (line >= max_lines) throw std::runtime_error("no cubic zeros found within the line budget");
    Vec<S> d0 = random_vector(field, 5, rng), d1 = random_vector(field, 5, rng);
    for (std::uint64_t s = 0; s < field.p && static_cast<int>(out.size()) < count; ++s) {
      Vec<S> x = quadric_param(m, x0, Vec<S>(d0 + field(static_cast<long>(s)) * d1));
      if (all_zero(x)) continue;
      if (is_zero(sp4_induced_cubic(m, sigma_prime, x))) out.push_back(x);
    }
  }
  return out;
}

// ---------------------------------------------------------------- SL(2)

template <class S>
struct VSpaces {
  Subspace<S> v4, v7;
};

template <class S>
VSpaces<S> sl2_vspaces(const SL2Model<S>& m, const Vec<S>& x) {
  if (all_zero(x)) throw std::invalid_argument("x = 0");
  std::vector<Vec<S>> b;
  for (int j = 0; j < 5; ++j) b.push_back(wedge2<S>(x, unit<S>(5, j)));
  Mat<S> cond(3, 10);
  for (int k = 0; k < 3; ++k) cond.row(k) = m.wedge_row(x, m.w3.vector(k)).transpose();
  if (rank(cond) != 3) throw std::logic_error("x ∧ W3 is not 3-dimensional");
  VSpaces<S> v{Subspace<S>::span(b, 10), kernel(cond)};
  if (v.v4.dim() != 4 || v.v7.dim() != 7) throw std::logic_error("unexpected V4/V7 dimensions");
  return v;
}

// V4,[x] + ⟨w1, w2⟩ for lifts w1, w2 ∈ V7,[x].
template <class S>
Subspace<S> sl2_k1_point(const SL2Model<S>& m, const Vec<S>& x, const Vec<S>& w1, const Vec<S>& w2) {
  auto v = sl2_vspaces(m, x);
  if (!contains(v.v7, w1) || !contains(v.v7, w2)) throw std::invalid_argument("lift not in V7,[x]");
  auto w = sum(v.v4, Subspace<S>::span(std::vector<Vec<S>>{w1, w2}, 10));
  if (w.dim() != 6) throw std::invalid_argument("W does not span a 2-plane modulo V4,[x]");
  return w;
}

template <class S>
struct XPoint {
  Subspace<S> v2;  // in V5^∨
  Subspace<S> u3;  // ∧²(V2^⊥) in ∧²V5
};

// Points of the threefold cut out in Gr(2, V5^∨) by the three W3 conditions.
// For a ∈ V5^∨ the conditions are linear in b, so V2 = ⟨a, b⟩ is their kernel.
template <class F>
std::vector<XPoint<typename F::Scalar>> fano3fold_points(const SL2Model<typename F::Scalar>& m,
                                                         int count, const F& field,
                                                         std::mt19937_64& rng, int budget = 10000) {
  using S = typename F::Scalar;
  auto pairs = combinations(5, 2);
  std::vector<Mat<S>> skew;
  for (int k = 0; k < 3; ++k) {
    Mat<S> w = Mat<S>::Zero(5, 5);
    Vec<S> c = m.w3.vector(k);
    for (int t = 0; t < 10; ++t) {
      w(pairs[t][0], pairs[t][1]) = c(t);
      w(pairs[t][1], pairs[t][0]) = -c(t);
    }
    skew.push_back(w);
  }
  std::vector<XPoint<S>> out;
  for (int trial = 0; static_cast<int>(out.size()) < count; ++trial) {
    if (trial >= budget) throw std::runtime_error("threefold sampler exhausted its budget");
    Vec<S> a = random_vector(field, 5, rng);
    Mat<S> cond(3, 5);
    for (int k = 0; k < 3; ++k) cond.row(k) = (skew[k].transpose() * a).transpose();
    auto v2 = kernel(cond);
    if (v2.dim() != 2) continue;
    auto v3 = kernel(v2.basis());
    std::vector<Vec<S>> u;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) u.push_back(wedge2<S>(v3.vector(i), v3.vector(j)));
    out.push_back({v2, Subspace<S>::span(u, 10)});
  }
  return out;
}

// Plücker vector of V2 paired against W3: all three values vanish on X.
template <class S>
bool on_threefold(const SL2Model<S>& m, const Subspace<S>& v2) {
  Vec<S> p = wedge2<S>(v2.vector(0), v2.vector(1));
  for (int k = 0; k < 3; ++k)
    if (!is_zero(m.w3.vector(k).dot(p))) return false;
  return true;
}

// ---------------------------------------------------------------- monomial scans

struct MonomialSweep {
  int singular_count = 0;
  std::vector<std::array<int, 3>> singular;
  int criterion_matches = 0, criterion_total = 0;
  int isotropic6_count = 0, isotropic6_total = 0;
};

// Predicted nonvanishing of sigma0 on a multiset of three cubic monomials.
bool monomial_triple_predicted_nonzero(int a, int b, int c);

MonomialSweep monomial_sweeps();

}  // namespace dv
