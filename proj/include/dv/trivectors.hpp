#pragma once

#include "dv/altform.hpp"
#include "dv/symspace.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace dv {

// SL(W_3)-invariant trivector on Sym^3 W_3, normalized by σ0(x^3, y^3, z^3) = 1.
template <class S>
AltForm<S> sl3_sigma0() {
  AltForm<S> f(3, 10);
  f.set({0, 1, 2}, S(1));
  for (auto t : std::vector<std::vector<int>>{{0, 5, 8}, {1, 4, 7}, {2, 3, 6}, {3, 4, 5}, {6, 7, 8}})
    f.set(t, S(-3));
  for (auto t : std::vector<std::vector<int>>{{3, 8, 9}, {4, 6, 9}, {5, 7, 9}}) f.set(t, S(-6));
  return f;
}

// ---------------------------------------------------------------- Sp(4)

template <class S>
struct Sp4Model {
  AltForm<S> omega;               // on V4, ω(e0,e1) = ω(e2,e3) = 1
  Mat<S> v5;                      // 6×5: V5 = ker ω inside ∧²V4, basis as columns
  Mat<S> gram;                    // q on V5
  std::vector<Mat<S>> skew;       // image of the basis of ∧²V5 in End(V5)
  AltForm<S> sigma;

  S q(const Vec<S>& x, const Vec<S>& y) const { return x.dot(gram * y); }
  // End(V5) image of x∧z: u ↦ q(x,u) z − q(z,u) x.
  Mat<S> endo(const Vec<S>& x, const Vec<S>& z) const {
    return z * (gram * x).transpose() - x * (gram * z).transpose();
  }
  // Coordinates in V5 of a vector of ker ω ⊂ ∧²V4.
  Vec<S> v5_coords(const Vec<S>& w) const;
  // Action on V5 and ∧²V5 induced by g ∈ Sp(V4).
  Mat<S> act_v5(const Mat<S>& g) const;
};

template <class S>
Vec<S> Sp4Model<S>::v5_coords(const Vec<S>& w) const {
  // v5 columns come from an RREF basis, so coordinates sit at the pivot rows.
  Vec<S> c(5);
  for (int j = 0; j < 5; ++j) {
    int p = 0;
    while (is_zero(v5(p, j))) ++p;
    c(j) = w(p) / v5(p, j);
  }
  if (!(v5 * c == w)) throw std::invalid_argument("vector not in V5");
  return c;
}

template <class S>
Mat<S> Sp4Model<S>::act_v5(const Mat<S>& g) const {
  Mat<S> g2 = compound<S>(g, 2);
  Mat<S> m(5, 5);
  for (int j = 0; j < 5; ++j) m.col(j) = v5_coords(g2 * v5.col(j));
  return m;
}

template <class S>
Sp4Model<S> sp4_model() {
  Sp4Model<S> m;
  m.omega = AltForm<S>(2, 4);
  m.omega.set({0, 1}, S(1));
  m.omega.set({2, 3}, S(1));
  auto ker = kernel(Mat<S>(m.omega.coeffs().transpose()));
  m.v5 = ker.basis().transpose();
  auto om = Multivector<S>::from_form(m.omega);
  auto top = wedge(om, om).at(0xf);
  m.gram = Mat<S>(5, 5);
  std::vector<Multivector<S>> b;
  for (int i = 0; i < 5; ++i) {
    Multivector<S> mv(4);
    auto tuples = combinations(4, 2);
    for (int t = 0; t < 6; ++t) mv.add((1u << tuples[t][0]) | (1u << tuples[t][1]), m.v5(t, i));
    b.push_back(mv);
  }
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m.gram(i, j) = top * wedge(b[i], b[j]).at(0xf);
  for (const auto& t : combinations(5, 2))
    m.skew.push_back(m.endo(unit<S>(5, t[0]), unit<S>(5, t[1])));
  m.sigma = AltForm<S>(3, 10);
  auto triples = combinations(10, 3);
  for (int t = 0; t < 120; ++t) {
    const auto& a = m.skew[triples[t][0]];
    const auto& bb = m.skew[triples[t][1]];
    const auto& c = m.skew[triples[t][2]];
    m.sigma.coeffs()(t) = (a * bb * c).trace();
  }
  // Build-time alternation certificate: Tr(abc) = -Tr(bac) on all basis triples.
  for (const auto& t : triples) {
    const auto &a = m.skew[t[0]], &bb = m.skew[t[1]], &c = m.skew[t[2]];
    if (!((a * bb * c).trace() == -(bb * a * c).trace()))
      throw std::logic_error("trace form is not alternating");
  }
  return m;
}

template <class S>
AltForm<S> sp4_sigma0() {
  return sp4_model<S>().sigma;
}

// Symplectic transvection u ↦ u + c ω(v, u) v on V4.
template <class S>
Mat<S> sp4_transvection(const Sp4Model<S>& m, const Vec<S>& v, const S& c) {
  Mat<S> g = Mat<S>::Identity(4, 4);
  for (int j = 0; j < 4; ++j) g.col(j) += c * eval(m.omega, v, unit<S>(4, j)) * v;
  return g;
}

// ---------------------------------------------------------------- G2 × SL(3)

// Signed Fano-plane 3-form on V7 (0-indexed).
const std::vector<std::pair<std::array<int, 3>, int>>& fano_terms();

template <class S>
struct G2SL3Model {
  AltForm<S> alpha;   // on V7
  AltForm<S> beta;    // on W3
  AltForm<S> sigma;   // α + β on V7 ⊕ W3
  std::vector<std::array<int, 3>> lines;
};

template <class S>
G2SL3Model<S> g2sl3_model() {
  G2SL3Model<S> m;
  m.alpha = AltForm<S>(3, 7);
  m.sigma = AltForm<S>(3, 10);
  for (const auto& [t, s] : fano_terms()) {
    m.alpha.set({t[0], t[1], t[2]}, S(s));
    m.sigma.set({t[0], t[1], t[2]}, S(s));
    m.lines.push_back(t);
  }
  m.beta = AltForm<S>(3, 3);
  m.beta.set({0, 1, 2}, S(1));
  m.sigma.set({7, 8, 9}, S(1));
  if (is_zero(determinant(g2_bilinear(m.alpha))))
    throw std::logic_error("degenerate G2 form");
  return m;
}

template <class S>
AltForm<S> g2sl3_sigma0() {
  return g2sl3_model<S>().sigma;
}

// ---------------------------------------------------------------- SL(2)

template <class S>
struct SL2Model {
  // V5 = Sym^4 U2 with basis v_k = s^{4-k} t^k.
  Mat<S> e5, f5, h5;
  Mat<S> e, f, h;   // on ∧²V5
  Subspace<S> w3;   // weight-2 highest-weight summand
  Subspace<S> v7;   // weight-6 highest-weight summand
  AltForm<S> sigma; // empty until attached

  // Trivector x∧w for x ∈ V5, w ∈ ∧²V5, as a 3-vector in lexicographic order.
  // The pairing ∧²V5 × ∧³V5 → ∧⁵V5 is exposed through wedge_row().
  Vec<S> wedge_row(const Vec<S>& x, const Vec<S>& w) const;
};

template <class S>
Vec<S> SL2Model<S>::wedge_row(const Vec<S>& x, const Vec<S>& w) const {
  auto pairs = combinations(5, 2);
  Multivector<S> mw(5);
  for (int t = 0; t < 10; ++t) mw.add((1u << pairs[t][0]) | (1u << pairs[t][1]), w(t));
  auto xw = wedge(Multivector<S>::from_vector(x), mw);
  Vec<S> row(10);
  for (int t = 0; t < 10; ++t) {
    Multivector<S> b(5);
    b.add((1u << pairs[t][0]) | (1u << pairs[t][1]), S(1));
    row(t) = wedge(b, xw).at(0x1f);
  }
  return row;
}

template <class S>
SL2Model<S> sl2_model() {
  SL2Model<S> m;
  m.e5 = Mat<S>::Zero(5, 5);
  m.f5 = Mat<S>::Zero(5, 5);
  m.h5 = Mat<S>::Zero(5, 5);
  for (int k = 0; k < 5; ++k) {
    if (k > 0) m.e5(k - 1, k) = S(k);
    if (k < 4) m.f5(k + 1, k) = S(4 - k);
    m.h5(k, k) = S(4 - 2 * k);
  }
  m.e = derivation2<S>(m.e5);
  m.f = derivation2<S>(m.f5);
  m.h = derivation2<S>(m.h5);
  auto pairs = combinations(5, 2);
  std::vector<Vec<S>> wt2;
  for (int t = 0; t < 10; ++t)
    if (pairs[t][0] + pairs[t][1] == 3) wt2.push_back(unit<S>(10, t));
  auto w2 = Subspace<S>::span(wt2, 10);
  auto hw = intersect(w2, kernel(m.e));
  if (hw.dim() != 1) throw std::logic_error("weight-2 highest-weight line not found");
  std::vector<Vec<S>> wb{hw.vector(0)};
  for (int i = 0; i < 2; ++i) wb.push_back(m.f * wb.back());
  m.w3 = Subspace<S>::span(wb, 10);
  std::vector<Vec<S>> vb{unit<S>(10, 0)};
  for (int i = 0; i < 6; ++i) vb.push_back(m.f * vb.back());
  m.v7 = Subspace<S>::span(vb, 10);
  return m;
}

struct Sl2SolveInfo {
  int samples = 0;
  int constraint_rows = 0;
  int rank = 0;
  int kernel_dim = 0;
};

// The trivector cut out by the vanishing conditions on V4,[x] × V7,[x] × V7,[x];
// solved over Q once and cached.
const AltForm<Rational>& sl2_sigma0_rational(Sl2SolveInfo* info = nullptr);

SL2Model<Rational> sl2_sigma0_model_q();

// Prime-field models, obtained by reducing the rational constructions.
Sp4Model<Fp> sp4_model_mod(std::uint64_t p);
G2SL3Model<Fp> g2sl3_model_mod(std::uint64_t p);
SL2Model<Fp> sl2_sigma0_model_mod(std::uint64_t p);

// Deterministic random trivector on a 10-space; small heights over Q.
template <class F>
AltForm<typename F::Scalar> random_trivector(std::uint64_t seed, const F& field, int height = 5) {
  std::mt19937_64 rng(seed);
  AltForm<typename F::Scalar> f(3, 10);
  for (int i = 0; i < 120; ++i) f.coeffs()(i) = field.random(rng, height);
  return f;
}

}  // namespace dv
