#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

namespace dv {

// Exact rational in lowest terms (gmp keeps the canonical form).
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I n) : q_(static_cast<long>(n)) {}
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit Rational(const mpz_class& z) : q_(z) {}

  static Rational parse(const std::string& s);

  const mpq_class& get() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  std::string str() const { return q_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= o.q_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }

 private:
  mpq_class q_;
};

// Element of F_p. A zero modulus marks an integer constant not yet bound to a
// field (what Eigen produces for Zero()/Identity()); it adopts the modulus of
// the first bound operand it meets.
class Fp {
 public:
  Fp() = default;
  template <std::integral I>
  Fp(I n) : raw_(static_cast<std::int64_t>(n)), p_(0) {}
  Fp(std::int64_t n, std::uint64_t p);

  std::uint64_t value() const;  // requires a bound element
  std::uint64_t modulus() const { return p_; }
  std::int64_t raw() const { return raw_; }
  bool is_zero() const { return raw_ == 0; }
  std::string str() const;

  Fp inverse() const;
  Fp operator-() const;
  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o) { return *this += -o; }
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o);
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b);

 private:
  static std::uint64_t common(const Fp& a, const Fp& b);
  Fp bound_to(std::uint64_t p) const;

  std::int64_t raw_ = 0;
  std::uint64_t p_ = 0;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline std::string to_string(const Rational& x) { return x.str(); }
inline std::string to_string(const Fp& x) { return x.str(); }
inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }
inline std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.str(); }

bool is_prime(std::uint64_t n);

// Field descriptors: how to make constants and random elements of a scalar type.
struct RationalField {
  using Scalar = Rational;
  Rational operator()(long n) const { return Rational(n); }
  Rational random(std::mt19937_64& rng, int height) const {
    std::uniform_int_distribution<long> d(-height, height);
    return Rational(d(rng));
  }
  std::string name() const { return "Q"; }
};

struct PrimeField {
  using Scalar = Fp;
  std::uint64_t p = 10007;
  PrimeField() = default;
  explicit PrimeField(std::uint64_t prime);
  Fp operator()(long n) const { return Fp(n, p); }
  Fp random(std::mt19937_64& rng, int = 0) const {
    std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
    return Fp(static_cast<std::int64_t>(d(rng)), p);
  }
  std::string name() const { return "F_" + std::to_string(p); }
};

// Reduction Q -> F_p; throws when p divides the denominator.
Fp reduce(const Rational& x, std::uint64_t p);

}  // namespace dv

namespace Eigen {

template <>
struct NumTraits<dv::Rational> : GenericNumTraits<dv::Rational> {
  using Real = dv::Rational;
  using NonInteger = dv::Rational;
  using Nested = dv::Rational;
  using Literal = dv::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 60
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<dv::Fp> : GenericNumTraits<dv::Fp> {
  using Real = dv::Fp;
  using NonInteger = dv::Fp;
  using Nested = dv::Fp;
  using Literal = dv::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 3,
    MulCost = 5
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
