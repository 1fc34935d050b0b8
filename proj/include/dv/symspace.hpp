#pragma once

#include "dv/linalg.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

namespace dv {

using Exponent = std::array<int, 3>;

// Monomial basis of Sym^a W_3 (a = 1, 2, 3). Degree 3 follows the fixed order
// 300,030,003,210,102,021,120,201,012,111.
class SymSpace {
 public:
  explicit SymSpace(int power);

  int power() const { return power_; }
  int dim() const { return static_cast<int>(monomials_.size()); }
  const std::vector<Exponent>& monomials() const { return monomials_; }
  const Exponent& monomial(int i) const { return monomials_[i]; }
  long multinomial(int i) const { return multinomial_[i]; }
  int index_of(const Exponent& e) const;
  std::string name(int i, const char* letters = "xyz") const;

 private:
  int power_;
  std::vector<Exponent> monomials_;
  std::vector<long> multinomial_;
};

const SymSpace& sym(int power);

// Homogeneous ternary form with actual monomial coefficients.
template <class S>
struct Poly {
  int power = 0;
  Vec<S> coeffs;

  static Poly zero(int a) { return Poly{a, Vec<S>::Zero(sym(a).dim())}; }
  static Poly monomial(const Exponent& e, const S& c = S(1)) {
    int a = e[0] + e[1] + e[2];
    Poly p = zero(a);
    p.coeffs(sym(a).index_of(e)) = c;
    return p;
  }
  static Poly linear(const Vec<S>& v) {
    if (v.size() != 3) throw std::invalid_argument("linear form needs 3 coordinates");
    return Poly{1, v};
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    if (a.power != b.power) throw std::invalid_argument("degree mismatch");
    return Poly{a.power, a.coeffs + b.coeffs};
  }
  friend Poly operator*(const S& s, const Poly& a) { return Poly{a.power, s * a.coeffs}; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    const int d = a.power + b.power;
    if (d > 3) throw std::invalid_argument("degree above 3");
    Poly r = zero(d);
    const auto &sa = sym(a.power), &sb = sym(b.power), &sr = sym(d);
    for (int i = 0; i < sa.dim(); ++i) {
      if (is_zero(a.coeffs(i))) continue;
      for (int j = 0; j < sb.dim(); ++j) {
        if (is_zero(b.coeffs(j))) continue;
        const auto &e = sa.monomial(i), &f = sb.monomial(j);
        r.coeffs(sr.index_of({e[0] + f[0], e[1] + f[1], e[2] + f[2]})) += a.coeffs(i) * b.coeffs(j);
      }
    }
    return r;
  }
};

// Coordinates of an element of Sym^a W_3 in the basis multinomial(m)·x^m.
// In these coordinates u^3 has coordinates (u^m)_m and apolarity is the dot product.
template <class S>
Vec<S> primal_coords(const Poly<S>& p) {
  const auto& s = sym(p.power);
  Vec<S> v(s.dim());
  for (int i = 0; i < s.dim(); ++i) v(i) = p.coeffs(i) / S(s.multinomial(i));
  return v;
}

template <class S>
Poly<S> from_primal_coords(const Vec<S>& v, int power) {
  const auto& s = sym(power);
  if (v.size() != s.dim()) throw std::invalid_argument("coordinate count");
  Poly<S> p = Poly<S>::zero(power);
  for (int i = 0; i < s.dim(); ++i) p.coeffs(i) = v(i) * S(s.multinomial(i));
  return p;
}

// Elements of Sym^a W_3^∨ are stored by their monomial coefficients.
template <class S>
Vec<S> dual_coords(const Poly<S>& p) {
  return p.coeffs;
}

// Contraction pairing normalized so that <x^m, a^m> = 1 for dual monomials of
// equal exponent and distinct monomials pair to 0.
template <class S>
S apolar_pair(const Poly<S>& phi, const Poly<S>& psi) {
  if (phi.power != psi.power) throw std::invalid_argument("apolarity: power mismatch");
  return primal_coords(phi).dot(dual_coords(psi));
}

// Matrix of the apolarity pairing in (primal, dual) coordinates.
template <class S>
Mat<S> apolarity_matrix(int power) {
  const int n = sym(power).dim();
  return Mat<S>::Identity(n, n);
}

template <class S>
Vec<S> cube(const Vec<S>& u) {
  auto l = Poly<S>::linear(u);
  return primal_coords(l * l * l);
}

// Diagonal one-parameter subgroup t ↦ diag(t^{w_0}, ..., t^{w_{n-1}}).
struct OnePS {
  std::vector<long> weights;
};

// Weights induced on Sym^a W_3 by diag(t^{w_x}, t^{w_y}, t^{w_z}) on W_3.
OnePS induced_weights(const std::array<long, 3>& w, int power);

// Flat limit as t -> 0: the subspace of lowest-weight initial terms.
template <class S>
Subspace<S> one_ps_limit(const Subspace<S>& u, const OnePS& lambda) {
  const int n = u.ambient();
  if (static_cast<int>(lambda.weights.size()) != n) throw std::invalid_argument("weight count");
  std::vector<long> levels(lambda.weights.begin(), lambda.weights.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  Subspace<S> out(n);
  for (long c : levels) {
    std::vector<Vec<S>> f;
    for (int i = 0; i < n; ++i)
      if (lambda.weights[i] >= c) f.push_back(unit<S>(n, i));
    auto piece = intersect(u, Subspace<S>::span(f, n));
    Mat<S> g = piece.basis();
    for (int i = 0; i < n; ++i)
      if (lambda.weights[i] != c) g.col(i).setZero();
    out = sum(out, Subspace<S>::span(g));
  }
  return out;
}

}  // namespace dv
