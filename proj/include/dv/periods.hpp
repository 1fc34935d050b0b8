#pragma once

#include "dv/scalar.hpp"

#include <Eigen/Core>
#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dv {

using IntPair = std::pair<mpz_class, mpz_class>;

// x L + y δ on the Hilbert square of a degree-2e K3.
struct NSClass {
  long e = 1;
  mpz_class x, y;

  // The class 2bL − aδ attached to a solution of a² − 4eb² = −11.
  static NSClass from_solution(long e, const IntPair& ab) { return {e, 2 * ab.second, -ab.first}; }
  Rational slope() const { return Rational(mpq_class(-y, x)); }  // a / 2b
  std::string str() const;
  friend bool operator==(const NSClass& a, const NSClass& b) {
    return a.e == b.e && a.x == b.x && a.y == b.y;
  }
};

bool is_square(long n);

// Minimal positive solution of x² − d y² = 1 (d not a square).
std::optional<IntPair> pell_fundamental(long d);

// Minimal positive solution (x ≥ 0, y ≥ 1) of x² − d y² = n, n squarefree.
// Square d by factorization, |n| < √d by convergents, otherwise by the
// Nagell bound on fundamental solutions.
std::optional<IntPair> norm_form_min(long d, long n);

std::optional<IntPair> neg11_min(long e);  // a² − 4eb² = −11
std::optional<IntPair> five_min(long e);   // x² − 4ey² = 5

Rational mu(long e);
Rational nu(long e);

// Route 1: walk the solution chain x₂ x₁'^n, −x̄₂ x₁'^n in increasing order.
std::vector<NSClass> movable_classes_22(long e);
// Route 2: the four-case closed form.
std::vector<NSClass> movable_classes_closed_form(long e);
std::vector<NSClass> ample_classes_22(long e);

bool heegner_nonempty(long e);

// ---------------------------------------------------------------- lattice

using IMat = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<long, Eigen::Dynamic, 1>;

// Λ = U³ ⊕ E8(−1)² ⊕ ⟨−2⟩ with basis u1,v1,u2,v2,u3,v3, e8 (16), g.
struct LatticeModel {
  IMat gram;        // 23 × 23
  IVec h;           // 2u1 + 6v1 + g
  IMat perp_basis;  // 23 × 22, columns k1, k2, then u2..v3 and the E8 blocks
  IMat perp_gram;   // 22 × 22
  IMat k_gram;      // 2 × 2

  long q(const IVec& a, const IVec& b) const { return a.dot(gram * b); }
  long divisibility(const IVec& v) const;
  IVec L(long e) const;  // u1 + e v1
  IVec delta() const;    // g
  IVec embed(const NSClass& c) const;
};

const LatticeModel& lattice_model();
IMat e8_gram();

mpz_class bbf_square(const NSClass& c);
long bbf_div(const NSClass& c);

// Class ±a ∈ Z/11 of v_* for v_K ∈ K with G_K v_K ≡ 0 mod 11 (0 if trivial).
int discriminant_class(long p, long q);

struct MinimalNormEntry {
  long e = 0;
  std::array<long, 2> k_coords{};  // v_K in the basis k1, k2
  long unimodular_norm = 0;        // (11 m')² of the adjustment
  bool adjusted = false;           // m' ≠ 0
};

// Minimal e per class ±a (a = 1..5) over divisibility-11 primitive v ∈ h^⊥ with
// v² = −22e, v = v_K + 11 m'. With k_only, m' = 0 and v_K must be primitive.
std::map<int, MinimalNormEntry> minimal_norm_table(long bound, bool k_only = false);

}  // namespace dv
