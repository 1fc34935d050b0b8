#include "dv/scalar.hpp"

namespace dv {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::domain_error("zero denominator");
  q.canonicalize();
  return Rational(q);
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::int64_t normalize(std::int64_t n, std::uint64_t p) {
  auto m = static_cast<std::int64_t>(p);
  std::int64_t r = n % m;
  return r < 0 ? r + m : r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Fp::Fp(std::int64_t n, std::uint64_t p) : p_(p) {
  if (p < 2 || p >= (1ULL << 62)) throw std::invalid_argument("bad modulus");
  raw_ = normalize(n, p);
}

std::uint64_t Fp::value() const {
  if (p_ == 0) throw std::logic_error("prime-field element has no modulus");
  return static_cast<std::uint64_t>(raw_);
}

std::string Fp::str() const { return std::to_string(raw_); }

std::uint64_t Fp::common(const Fp& a, const Fp& b) {
  if (a.p_ && b.p_ && a.p_ != b.p_)
    throw std::domain_error("mixing prime fields " + std::to_string(a.p_) + " and " +
                            std::to_string(b.p_));
  return a.p_ ? a.p_ : b.p_;
}

Fp Fp::bound_to(std::uint64_t p) const {
  if (p_ == p) return *this;
  return Fp(raw_, p);
}

Fp Fp::operator-() const {
  Fp r = *this;
  if (p_ == 0) {
    r.raw_ = -raw_;
  } else if (raw_ != 0) {
    r.raw_ = static_cast<std::int64_t>(p_) - raw_;
  }
  return r;
}

Fp& Fp::operator+=(const Fp& o) {
  std::uint64_t p = common(*this, o);
  if (p == 0) {
    raw_ += o.raw_;
    return *this;
  }
  Fp a = bound_to(p), b = o.bound_to(p);
  std::int64_t s = a.raw_ + b.raw_;
  if (s >= static_cast<std::int64_t>(p)) s -= static_cast<std::int64_t>(p);
  raw_ = s;
  p_ = p;
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  std::uint64_t p = common(*this, o);
  if (p == 0) {
    raw_ *= o.raw_;
    return *this;
  }
  Fp a = bound_to(p), b = o.bound_to(p);
  raw_ = static_cast<std::int64_t>(mulmod(a.value(), b.value(), p));
  p_ = p;
  return *this;
}

Fp& Fp::operator/=(const Fp& o) {
  std::uint64_t p = common(*this, o);
  if (p == 0 && raw_ == 0) {
    if (o.raw_ == 0) throw std::domain_error("prime-field division by zero");
    return *this;
  }
  return *this *= (p ? o.bound_to(p) : o).inverse();
}

Fp Fp::inverse() const {
  if (raw_ == 0) throw std::domain_error("prime-field division by zero");
  if (p_ == 0) {
    if (raw_ == 1 || raw_ == -1) return *this;
    throw std::domain_error("inverse of an unbound prime-field constant");
  }
  return Fp(static_cast<std::int64_t>(powmod(value(), p_ - 2, p_)), p_);
}

bool operator==(const Fp& a, const Fp& b) {
  std::uint64_t p = Fp::common(a, b);
  if (p == 0) return a.raw_ == b.raw_;
  return a.bound_to(p).raw_ == b.bound_to(p).raw_;
}

PrimeField::PrimeField(std::uint64_t prime) : p(prime) {
  if (!is_prime(prime)) throw std::invalid_argument("not a prime: " + std::to_string(prime));
}

Fp reduce(const Rational& x, std::uint64_t p) {
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class n = x.num() % pz, d = x.den() % pz;
  if (n < 0) n += pz;
  if (d == 0) throw std::domain_error("denominator divisible by p");
  return Fp(static_cast<std::int64_t>(n.get_ui()), p) /
         Fp(static_cast<std::int64_t>(d.get_ui()), p);
}

}  // namespace dv
