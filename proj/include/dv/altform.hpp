#pragma once

#include "dv/linalg.hpp"

#include <array>
#include <map>
#include <vector>

namespace dv {

// Strictly increasing k-tuples of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k);
int binomial(int n, int k);

// Position of a sorted tuple in lexicographic order.
int tuple_index(int n, const std::vector<int>& sorted);

// Sorts idx in place; returns the permutation sign, or 0 on a repeated index.
int sort_sign(std::vector<int>& idx);

template <class S>
class AltForm {
 public:
  AltForm() = default;
  AltForm(int k, int n) : k_(k), n_(n), coeffs_(Vec<S>::Zero(binomial(n, k))) {
    if (k < 1 || k > n) throw std::invalid_argument("bad form degree");
  }
  AltForm(int k, int n, Vec<S> coeffs) : k_(k), n_(n), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != binomial(n, k)) throw std::invalid_argument("coefficient count");
  }

  int degree() const { return k_; }
  int ambient() const { return n_; }
  const Vec<S>& coeffs() const { return coeffs_; }
  Vec<S>& coeffs() { return coeffs_; }

  // Coefficient at an arbitrary index tuple, with the alternating sign.
  S at(std::vector<int> idx) const {
    int s = sort_sign(idx);
    if (s == 0) return S(0);
    S c = coeffs_(tuple_index(n_, idx));
    return s > 0 ? c : -c;
  }
  void set(std::vector<int> idx, const S& v) {
    int s = sort_sign(idx);
    if (s == 0) throw std::invalid_argument("repeated index");
    coeffs_(tuple_index(n_, idx)) = s > 0 ? v : -v;
  }

  bool is_zero_form() const {
    for (int i = 0; i < coeffs_.size(); ++i)
      if (!is_zero(coeffs_(i))) return false;
    return true;
  }

  friend AltForm operator+(const AltForm& a, const AltForm& b) {
    if (a.k_ != b.k_ || a.n_ != b.n_) throw std::invalid_argument("form shape mismatch");
    return AltForm(a.k_, a.n_, a.coeffs_ + b.coeffs_);
  }
  friend AltForm operator*(const S& s, const AltForm& a) {
    return AltForm(a.k_, a.n_, s * a.coeffs_);
  }
  friend bool operator==(const AltForm& a, const AltForm& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int k_ = 0, n_ = 0;
  Vec<S> coeffs_;
};

namespace detail {

template <class S>
S det_rows(const std::vector<Vec<S>>& v, const std::vector<int>& idx) {
  const int k = static_cast<int>(idx.size());
  if (k == 1) return v[0](idx[0]);
  if (k == 2) return v[0](idx[0]) * v[1](idx[1]) - v[0](idx[1]) * v[1](idx[0]);
  if (k == 3) {
    const auto &a = v[0], &b = v[1], &c = v[2];
    const int i = idx[0], j = idx[1], l = idx[2];
    return a(i) * (b(j) * c(l) - b(l) * c(j)) - a(j) * (b(i) * c(l) - b(l) * c(i)) +
           a(l) * (b(i) * c(j) - b(j) * c(i));
  }
  Mat<S> m(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) m(r, c) = v[r](idx[c]);
  Mat<S> a = m;
  S det(1);
  for (int c = 0; c < k; ++c) {
    int p = c;
    while (p < k && is_zero(a(p, c))) ++p;
    if (p == k) return S(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (int r = c + 1; r < k; ++r) {
      S f = a(r, c) / a(c, c);
      a.row(r) -= f * a.row(c);
    }
  }
  return det;
}

}  // namespace detail

// Multilinear alternating evaluation.
template <class S>
S eval(const AltForm<S>& f, const std::vector<Vec<S>>& v) {
  if (static_cast<int>(v.size()) != f.degree()) throw std::invalid_argument("argument count");
  for (const auto& x : v)
    if (x.size() != f.ambient()) throw std::invalid_argument("dimension mismatch");
  static thread_local std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
  auto key = std::make_pair(f.ambient(), f.degree());
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, combinations(f.ambient(), f.degree())).first;
  S s(0);
  const auto& tuples = it->second;
  for (int t = 0; t < static_cast<int>(tuples.size()); ++t) {
    if (is_zero(f.coeffs()(t))) continue;
    S d = detail::det_rows(v, tuples[t]);
    if (!is_zero(d)) s += f.coeffs()(t) * d;
  }
  return s;
}

template <class S>
S eval(const AltForm<S>& f, const Vec<S>& a, const Vec<S>& b, const Vec<S>& c) {
  return eval(f, std::vector<Vec<S>>{a, b, c});
}

template <class S>
S eval(const AltForm<S>& f, const Vec<S>& a, const Vec<S>& b) {
  return eval(f, std::vector<Vec<S>>{a, b});
}

// (u ⌟ f)(a, b) = f(u, a, b).
template <class S>
AltForm<S> contract(const AltForm<S>& f, const Vec<S>& u) {
  if (f.degree() != 3) throw std::invalid_argument("contract expects a 3-form");
  if (u.size() != f.ambient()) throw std::invalid_argument("dimension mismatch");
  const int n = f.ambient();
  AltForm<S> g(2, n);
  int t = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b, ++t) {
      S s(0);
      for (int i = 0; i < n; ++i) {
        if (is_zero(u(i))) continue;
        S c = f.at({i, a, b});
        if (!is_zero(c)) s += u(i) * c;
      }
      g.coeffs()(t) = s;
    }
  return g;
}

// f pulled back to W in the basis of W's stored rows.
template <class S>
AltForm<S> restrict_to(const AltForm<S>& f, const Subspace<S>& w) {
  const int d = w.dim(), k = f.degree();
  AltForm<S> g(k, d);
  auto tuples = combinations(d, k);
  std::vector<Vec<S>> rows(d);
  for (int i = 0; i < d; ++i) rows[i] = w.vector(i);
  for (int t = 0; t < static_cast<int>(tuples.size()); ++t) {
    std::vector<Vec<S>> args;
    for (int i : tuples[t]) args.push_back(rows[i]);
    g.coeffs()(t) = eval(f, args);
  }
  return g;
}

template <class S>
bool is_isotropic(const AltForm<S>& f, const Subspace<S>& w) {
  if (w.dim() < f.degree()) throw std::invalid_argument("subspace too small");
  return restrict_to(f, w).is_zero_form();
}

template <class S>
AltForm<Fp> reduce(const AltForm<S>& f, std::uint64_t p) {
  Vec<Fp> c(f.coeffs().size());
  for (int i = 0; i < c.size(); ++i) c(i) = reduce(f.coeffs()(i), p);
  return AltForm<Fp>(f.degree(), f.ambient(), c);
}

// Element of the exterior algebra on a basis of size n <= 16, indexed by bitmask.
template <class S>
class Multivector {
 public:
  explicit Multivector(int n) : n_(n) {}
  int ambient() const { return n_; }
  const std::map<unsigned, S>& terms() const { return terms_; }
  void add(unsigned mask, const S& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(mask, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }
  S at(unsigned mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? S(0) : it->second;
  }

  static Multivector from_vector(const Vec<S>& v) {
    Multivector m(static_cast<int>(v.size()));
    for (int i = 0; i < v.size(); ++i) m.add(1u << i, v(i));
    return m;
  }
  static Multivector from_form(const AltForm<S>& f) {
    Multivector m(f.ambient());
    auto tuples = combinations(f.ambient(), f.degree());
    for (int t = 0; t < static_cast<int>(tuples.size()); ++t) {
      unsigned mask = 0;
      for (int i : tuples[t]) mask |= 1u << i;
      m.add(mask, f.coeffs()(t));
    }
    return m;
  }

  friend Multivector wedge(const Multivector& a, const Multivector& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("wedge ambient mismatch");
    Multivector r(a.n_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        if (ma & mb) continue;
        int inv = 0;
        for (int j = 0; j < a.n_; ++j)
          if (mb & (1u << j)) inv += __builtin_popcount(ma >> (j + 1));
        S c = ca * cb;
        r.add(ma | mb, inv % 2 ? -c : c);
      }
    return r;
  }

  // Coordinates in the lexicographic basis of degree-k elements.
  Vec<S> graded(int k) const {
    auto tuples = combinations(n_, k);
    Vec<S> v = Vec<S>::Zero(static_cast<int>(tuples.size()));
    for (int t = 0; t < static_cast<int>(tuples.size()); ++t) {
      unsigned mask = 0;
      for (int i : tuples[t]) mask |= 1u << i;
      v(t) = at(mask);
    }
    return v;
  }

 private:
  int n_;
  std::map<unsigned, S> terms_;
};

// B(u,v) defined by (u⌟α)∧(v⌟α)∧α = B(u,v) e_0^*∧…∧e_6^*.
template <class S>
Mat<S> g2_bilinear(const AltForm<S>& alpha) {
  if (alpha.ambient() != 7 || alpha.degree() != 3)
    throw std::invalid_argument("g2_bilinear needs a 3-form on a 7-space");
  auto a = Multivector<S>::from_form(alpha);
  std::vector<Multivector<S>> c;
  for (int i = 0; i < 7; ++i)
    c.push_back(Multivector<S>::from_form(contract(alpha, unit<S>(7, i))));
  Mat<S> b(7, 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) b(i, j) = wedge(wedge(c[i], c[j]), a).at(0x7f);
  return b;
}

// Determinant by elimination.
template <class S>
S determinant(const Mat<S>& m) {
  const int k = static_cast<int>(m.rows());
  std::vector<Vec<S>> rows;
  for (int i = 0; i < k; ++i) rows.push_back(m.row(i).transpose());
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  return detail::det_rows(rows, idx);
}

// Coordinates of u∧v in the lexicographic basis of ∧²S^n.
template <class S>
Vec<S> wedge2(const Vec<S>& u, const Vec<S>& v) {
  const int n = static_cast<int>(u.size());
  Vec<S> w(binomial(n, 2));
  int t = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++t) w(t) = u(i) * v(j) - u(j) * v(i);
  return w;
}

// Matrix of ∧^k M on the lexicographic basis (entries are k×k minors).
template <class S>
Mat<S> compound(const Mat<S>& m, int k) {
  const int n = static_cast<int>(m.rows());
  auto tuples = combinations(n, k);
  const int d = static_cast<int>(tuples.size());
  std::vector<Vec<S>> cols(n);
  for (int j = 0; j < n; ++j) cols[j] = m.col(j);
  Mat<S> c(d, d);
  for (int b = 0; b < d; ++b) {
    std::vector<Vec<S>> args;
    for (int j : tuples[b]) args.push_back(cols[j]);
    for (int a = 0; a < d; ++a) c(a, b) = detail::det_rows(args, tuples[a]);
  }
  return c;
}

// (M^*f)(v_1, ..., v_k) = f(M v_1, ..., M v_k).
template <class S>
AltForm<S> pullback(const AltForm<S>& f, const Mat<S>& m) {
  const int n = f.ambient(), k = f.degree();
  auto tuples = combinations(n, k);
  AltForm<S> g(k, n);
  for (int t = 0; t < static_cast<int>(tuples.size()); ++t) {
    std::vector<Vec<S>> args;
    for (int j : tuples[t]) args.push_back(m.col(j));
    g.coeffs()(t) = eval(f, args);
  }
  return g;
}

// Action of an endomorphism X on ∧²S^n as a derivation.
template <class S>
Mat<S> derivation2(const Mat<S>& x) {
  const int n = static_cast<int>(x.rows());
  Mat<S> d(binomial(n, 2), binomial(n, 2));
  int t = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++t) {
      Vec<S> ei = unit<S>(n, i), ej = unit<S>(n, j);
      d.col(t) = wedge2<S>(x.col(i), ej) + wedge2<S>(ei, x.col(j));
    }
  return d;
}

// Infinitesimal action: (X·f)(v_1..v_k) = -Σ f(.., X v_i, ..).
template <class S>
AltForm<S> lie_derivative(const AltForm<S>& f, const Mat<S>& x) {
  const int n = f.ambient(), k = f.degree();
  auto tuples = combinations(n, k);
  AltForm<S> g(k, n);
  for (int t = 0; t < static_cast<int>(tuples.size()); ++t) {
    S s(0);
    for (int slot = 0; slot < k; ++slot) {
      std::vector<Vec<S>> args;
      for (int r = 0; r < k; ++r)
        args.push_back(r == slot ? Vec<S>(x.col(tuples[t][r])) : unit<S>(n, tuples[t][r]));
      s -= eval(f, args);
    }
    g.coeffs()(t) = s;
  }
  return g;
}

}  // namespace dv
