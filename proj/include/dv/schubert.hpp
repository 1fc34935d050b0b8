#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace dv {

// Weakly decreasing positive parts; the empty partition is the unit class.
using Partition = std::vector<int>;

std::string to_string(const Partition& p);
int size(const Partition& p);
Partition conjugate(const Partition& p);

struct Grassmannian {
  int k = 0, n = 0;  // k-planes in an n-space; box k × (n−k)

  int rows() const { return k; }
  int cols() const { return n - k; }
  int dim() const { return k * (n - k); }
  bool fits(const Partition& p) const;
  Partition box() const { return Partition(k, n - k); }
  Partition complement(const Partition& p) const;
  std::vector<Partition> partitions() const;
  friend bool operator==(const Grassmannian& a, const Grassmannian& b) { return a.k == b.k && a.n == b.n; }
};

class SchubertClass {
 public:
  explicit SchubertClass(Grassmannian g) : g_(g) {}
  static SchubertClass sigma(Grassmannian g, const Partition& p, const mpz_class& c = 1);
  static SchubertClass one(Grassmannian g) { return sigma(g, {}); }

  const Grassmannian& grassmannian() const { return g_; }
  const std::map<Partition, mpz_class>& terms() const { return terms_; }
  mpz_class coefficient(const Partition& p) const;
  void add(const Partition& p, const mpz_class& c);
  bool is_zero() const { return terms_.empty(); }
  // Codimension if homogeneous, −1 otherwise (or for 0).
  int degree() const;
  SchubertClass graded(int d) const;
  std::string str() const;

  friend SchubertClass operator+(const SchubertClass& a, const SchubertClass& b);
  friend SchubertClass operator-(const SchubertClass& a, const SchubertClass& b);
  friend SchubertClass operator*(const mpz_class& c, const SchubertClass& a);
  friend bool operator==(const SchubertClass& a, const SchubertClass& b) {
    return a.g_ == b.g_ && a.terms_ == b.terms_;
  }

 private:
  Grassmannian g_;
  std::map<Partition, mpz_class> terms_;
};

// σ_{1^r} · A: vertical strips of size r, box-truncated.
SchubertClass pieri_column(const SchubertClass& a, int r);
// σ_r · A: horizontal strips of size r, box-truncated.
SchubertClass pieri_row(const SchubertClass& a, int r);

SchubertClass multiply(const SchubertClass& a, const SchubertClass& b);
SchubertClass power(const SchubertClass& a, int e);
mpz_class integrate(const SchubertClass& a);

// c_0 .. c_rank of ∧^p E, with E the dual of the tautological subbundle.
std::vector<SchubertClass> chern_exterior(Grassmannian g, int p);

// Total Chern class of E (c_i = σ_{1^i}) and of the tautological quotient (σ_i).
SchubertClass chern_dual_sub(Grassmannian g);
SchubertClass chern_quotient(Grassmannian g);

struct SegreNumbers {
  // s1^4, s1^2 s2, s1 s3, s2^2, s4
  std::array<mpz_class, 5> values;
  static constexpr std::array<const char*, 5> names{"s1^4", "s1^2s2", "s1s3", "s2^2", "s4"};
};

// ∫_{Gr(6,10)} c20(∧³E6) · m(s(Q4)) for the five degree-4 monomials m.
SegreNumbers dv_segre_numbers();

struct AuxChern {
  mpz_class gr37_sigma2, gr37_sigma11;  // c10 of 3·∧²E3 ⊕ ∧³E3 paired with σ2, σ11
  SchubertClass gr47_c4{Grassmannian{4, 7}};
  mpz_class gr57_integral;              // ∫ c10(∧³E5)
};

AuxChern aux_chern_checks();

}  // namespace dv
