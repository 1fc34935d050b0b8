#pragma once

#include "dv/scalar.hpp"

#include <Eigen/Core>

#include <stdexcept>
#include <utility>
#include <vector>

namespace dv {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
struct RrefResult {
  Mat<S> matrix;
  int rank = 0;
  std::vector<int> pivots;
};

// Gauss-Jordan elimination to the reduced row-echelon form.
template <class Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  RrefResult<S> out;
  Mat<S> a = m;
  const int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(a(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    S inv = S(1) / a(r, c);
    for (int j = c; j < cols; ++j) a(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      S f = a(i, c);
      for (int j = c; j < cols; ++j)
        if (!is_zero(a(r, j))) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.matrix = std::move(a);
  return out;
}

template <class Derived>
int rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank;
}

// A linear subspace of S^n stored by its canonical RREF basis (rows).
template <class S>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int n) : basis_(0, n) {}

  template <class Derived>
  static Subspace span(const Eigen::MatrixBase<Derived>& rows) {
    auto r = rref(rows);
    Subspace s;
    s.basis_ = r.matrix.topRows(r.rank);
    s.pivots_ = std::move(r.pivots);
    return s;
  }
  static Subspace span(const std::vector<Vec<S>>& vecs, int n) {
    Mat<S> m(static_cast<int>(vecs.size()), n);
    for (int i = 0; i < static_cast<int>(vecs.size()); ++i) {
      if (vecs[i].size() != n) throw std::invalid_argument("vector length mismatch");
      m.row(i) = vecs[i].transpose();
    }
    return span(m);
  }
  static Subspace full(int n) { return span(Mat<S>::Identity(n, n)); }

  int dim() const { return static_cast<int>(basis_.rows()); }
  int ambient() const { return static_cast<int>(basis_.cols()); }
  const Mat<S>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  Vec<S> vector(int i) const { return basis_.row(i).transpose(); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_.rows() == b.basis_.rows() && a.basis_.cols() == b.basis_.cols() &&
           a.basis_ == b.basis_;
  }

 private:
  Mat<S> basis_;
  std::vector<int> pivots_;
};

// Null space of m as a subspace of S^{cols}.
template <class Derived>
Subspace<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  const int cols = static_cast<int>(m.cols());
  auto r = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : r.pivots) is_pivot[c] = true;
  Mat<S> k(cols - r.rank, cols);
  k.setZero();
  int row = 0;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    k(row, f) = S(1);
    for (int i = 0; i < r.rank; ++i) k(row, r.pivots[i]) = -r.matrix(i, f);
    ++row;
  }
  return Subspace<S>::span(k);
}

template <class S>
void check_ambient(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("incompatible ambient dimensions");
}

template <class S>
Subspace<S> sum(const Subspace<S>& a, const Subspace<S>& b) {
  check_ambient(a, b);
  Mat<S> m(a.dim() + b.dim(), a.ambient());
  m << a.basis(), b.basis();
  return Subspace<S>::span(m);
}

// Standard-dot orthogonal complement.
template <class S>
Subspace<S> perp(const Subspace<S>& a) {
  if (a.dim() == 0) return Subspace<S>::full(a.ambient());
  return kernel(a.basis());
}

template <class S>
Subspace<S> intersect(const Subspace<S>& a, const Subspace<S>& b) {
  check_ambient(a, b);
  return perp(sum(perp(a), perp(b)));
}

template <class S>
bool contains(const Subspace<S>& a, const Vec<S>& v) {
  if (v.size() != a.ambient()) throw std::invalid_argument("incompatible ambient dimensions");
  Vec<S> r = v;
  for (int i = 0; i < a.dim(); ++i) {
    int p = a.pivots()[i];
    if (is_zero(r(p))) continue;
    S f = r(p);
    r -= f * a.vector(i);
  }
  for (int i = 0; i < r.size(); ++i)
    if (!is_zero(r(i))) return false;
  return true;
}

template <class S>
bool contains(const Subspace<S>& a, const Subspace<S>& b) {
  for (int i = 0; i < b.dim(); ++i)
    if (!contains(a, b.vector(i))) return false;
  return true;
}

// {w in S^m : <a, w> = 0 for all a in A} where <a, w> = a^T P w.
template <class S>
Subspace<S> annihilator(const Subspace<S>& a, const Mat<S>& pairing) {
  if (pairing.rows() != a.ambient()) throw std::invalid_argument("pairing size mismatch");
  if (a.dim() == 0) return Subspace<S>::full(static_cast<int>(pairing.cols()));
  Mat<S> m = a.basis() * pairing;
  return kernel(m);
}

template <class Derived>
Mat<Fp> reduce(const Eigen::MatrixBase<Derived>& m, std::uint64_t p) {
  Mat<Fp> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = reduce(m(i, j), p);
  return out;
}

template <class S>
Subspace<Fp> reduce(const Subspace<S>& a, std::uint64_t p) {
  return Subspace<Fp>::span(reduce(a.basis(), p));
}

// Exact zero test; Eigen's isZero() relies on fuzzy comparisons.
template <class Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class S>
Vec<S> unit(int n, int i) {
  Vec<S> v = Vec<S>::Zero(n);
  v(i) = S(1);
  return v;
}

template <class F>
Mat<typename F::Scalar> random_matrix(const F& field, int r, int c, std::mt19937_64& rng,
                                      int height = 9) {
  Mat<typename F::Scalar> m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = field.random(rng, height);
  return m;
}

template <class F>
Vec<typename F::Scalar> random_vector(const F& field, int n, std::mt19937_64& rng,
                                      int height = 9) {
  Vec<typename F::Scalar> v(n);
  for (int i = 0; i < n; ++i) v(i) = field.random(rng, height);
  return v;
}

// Random subspace of dimension d (resampled until the rank is right).
template <class F>
Subspace<typename F::Scalar> random_subspace(const F& field, int d, int n, std::mt19937_64& rng,
                                             int height = 9) {
  for (;;) {
    auto s = Subspace<typename F::Scalar>::span(random_matrix(field, d, n, rng, height));
    if (s.dim() == d) return s;
  }
}

}  // namespace dv
