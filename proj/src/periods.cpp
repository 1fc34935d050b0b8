#include "dv/periods.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace dv {

namespace {

long isqrt(long n) {
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Convergents p_k/q_k of √d, handed to f until it returns true.
template <class F>
void scan_convergents(long d, F&& f) {
  const long a0 = isqrt(d);
  long m = 0, den = 1, a = a0;
  mpz_class p_prev = 1, p = a0, q_prev = 0, q = 1;
  for (;;) {
    if (f(p, q)) return;
    m = den * a - m;
    den = (d - m * m) / den;
    a = (a0 + m) / den;
    mpz_class pn = a * p + p_prev, qn = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = pn;
    q = qn;
  }
}

std::vector<IntPair> square_solutions(long s, long n) {
  // (x − s y)(x + s y) = n
  std::vector<IntPair> out;
  const long an = std::labs(n);
  for (long d2 = 1; d2 <= an; ++d2) {
    if (an % d2) continue;
    for (long sg : {1L, -1L}) {
      const long e2 = sg * d2, e1 = n / e2;
      if ((e1 + e2) % 2 || s == 0) continue;
      const long x = (e1 + e2) / 2, num = e2 - e1;
      if (num <= 0 || num % (2 * s)) continue;
      if (x < 0) continue;
      out.emplace_back(mpz_class(x), mpz_class(num / (2 * s)));
    }
  }
  std::sort(out.begin(), out.end(), [](const IntPair& a, const IntPair& b) { return a.second < b.second; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IntPair mul(const IntPair& a, const IntPair& b, long d) {
  return {a.first * b.first + d * a.second * b.second, a.first * b.second + a.second * b.first};
}

std::string coeff_str(const mpz_class& c, const char* sym, bool leading) {
  std::string s;
  if (sgn(c) < 0) s += "-";
  else if (!leading) s += "+";
  mpz_class a = abs(c);
  if (a != 1) s += a.get_str();
  return s + sym;
}

}  // namespace

std::string NSClass::str() const {
  std::string s;
  if (sgn(x) != 0) s += coeff_str(x, "L", true);
  if (sgn(y) != 0) s += coeff_str(y, "δ", s.empty());
  return s.empty() ? "0" : s;
}

bool is_square(long n) {
  if (n < 0) return false;
  const long r = isqrt(n);
  return r * r == n;
}

std::optional<IntPair> pell_fundamental(long d) {
  if (d <= 0 || is_square(d)) return std::nullopt;
  IntPair r;
  scan_convergents(d, [&](const mpz_class& p, const mpz_class& q) {
    if (p * p - d * q * q == 1) {
      r = {p, q};
      return true;
    }
    return false;
  });
  return r;
}

std::optional<IntPair> norm_form_min(long d, long n) {
  if (d <= 0 || n == 0) throw std::invalid_argument("norm_form_min: need d > 0, n != 0");
  if (is_square(d)) {
    auto all = square_solutions(isqrt(d), n);
    if (all.empty()) return std::nullopt;
    return all.front();
  }
  if (n * n < d) {
    std::optional<IntPair> r;
    scan_convergents(d, [&](const mpz_class& p, const mpz_class& q) {
      const mpz_class v = p * p - d * q * q;
      if (v == n) {
        r = IntPair{p, q};
        return true;
      }
      return v == 1;
    });
    return r;
  }
  const auto unit = *pell_fundamental(d);
  const mpz_class bound_num = unit.second * unit.second * std::labs(n);
  const mpz_class bound_den = 2 * (unit.first + (n > 0 ? 1 : -1));
  for (mpz_class y = 1; bound_den * y * y <= bound_num; ++y) {
    const mpz_class x2 = n + d * y * y;
    if (sgn(x2) < 0 || !mpz_perfect_square_p(x2.get_mpz_t())) continue;
    return IntPair{sqrt(x2), y};
  }
  return std::nullopt;
}

std::optional<IntPair> neg11_min(long e) { return norm_form_min(4 * e, -11); }
std::optional<IntPair> five_min(long e) { return norm_form_min(4 * e, 5); }

Rational mu(long e) {
  if (e < 1) throw std::invalid_argument("e must be positive");
  if (is_square(e)) return Rational(isqrt(e));
  auto p = *pell_fundamental(e);
  return Rational(mpq_class(e * p.second, p.first));
}

Rational nu(long e) {
  auto f = five_min(e);
  if (!f) return mu(e);
  return Rational(mpq_class(2 * e * f->second, f->first));
}

std::vector<NSClass> movable_classes_22(long e) {
  std::vector<NSClass> out;
  const Rational m = mu(e);
  std::vector<IntPair> sols;
  if (is_square(e)) {
    sols = square_solutions(2 * isqrt(e), -11);
  } else {
    auto x2 = neg11_min(e);
    if (!x2) return out;
    const auto unit = *pell_fundamental(4 * e);
    // Slopes increase along each family; stop once past μ.
    for (IntPair z : {*x2, mul(IntPair{-x2->first, x2->second}, unit, 4 * e)}) {
      while (!(Rational(mpq_class(z.first, 2 * z.second)) > m)) {
        sols.push_back(z);
        z = mul(z, unit, 4 * e);
      }
    }
  }
  std::sort(sols.begin(), sols.end());
  sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
  for (const auto& s : sols)
    if (sgn(s.first) > 0 && !(Rational(mpq_class(s.first, 2 * s.second)) > m))
      out.push_back(NSClass::from_solution(e, s));
  return out;
}

std::vector<NSClass> movable_classes_closed_form(long e) {
  std::vector<NSClass> out;
  if (e == 1) return {NSClass::from_solution(1, {5, 3})};
  if (e == 9) return {NSClass::from_solution(9, {5, 1})};
  if (is_square(e)) return out;
  auto x2 = neg11_min(e);
  if (!x2) return out;
  const auto [a1, b1] = *pell_fundamental(e);
  const auto& [a2, b2] = *x2;
  out.push_back(NSClass::from_solution(e, *x2));
  if (b1 % 2 == 0) {
    IntPair other{2 * e * b1 * b2 - a1 * a2, a1 * b2 - a2 * b1 / 2};
    if (other != *x2) out.push_back(NSClass::from_solution(e, other));
  }
  return out;
}

std::vector<NSClass> ample_classes_22(long e) {
  std::vector<NSClass> out;
  const Rational n = nu(e);
  for (const auto& c : movable_classes_22(e))
    if (c.slope() < n) out.push_back(c);
  return out;
}

bool heegner_nonempty(long e) {
  if (e <= 0) return false;
  // 11 | e: u2 − (e/11) v2 is primitive of divisibility 1 and square −2e/11.
  if (e % 11 == 0) return true;
  // Otherwise v = v_K + 11 m' with v_* ≠ 0 and m' primitive in U ⊕ U; m'² is any
  // even integer, so only v_K² ≡ −22e mod 242 matters, and v_K mod 121 decides it.
  const auto& g = lattice_model().k_gram;
  for (long p = 0; p < 121; ++p)
    for (long q = 0; q < 121; ++q) {
      if ((g(0, 0) * p + g(0, 1) * q) % 11 || (g(1, 0) * p + g(1, 1) * q) % 11) continue;
      if (discriminant_class(p, q) == 0) continue;
      const long norm = g(0, 0) * p * p + 2 * g(0, 1) * p * q + g(1, 1) * q * q;
      if (((norm + 22 * e) % 242 + 242) % 242 == 0) return true;
    }
  return false;
}

// ---------------------------------------------------------------- lattice

IMat e8_gram() {
  // Dynkin diagram: chain 0–6, node 7 attached to node 4.
  IMat g = IMat::Zero(8, 8);
  for (int i = 0; i < 8; ++i) g(i, i) = 2;
  auto link = [&](int a, int b) { g(a, b) = g(b, a) = -1; };
  for (int i = 0; i < 6; ++i) link(i, i + 1);
  link(4, 7);
  return g;
}

long LatticeModel::divisibility(const IVec& v) const {
  IVec p = gram * v;
  long g = 0;
  for (int i = 0; i < p.size(); ++i) g = std::gcd(g, p(i));
  return std::labs(g);
}

IVec LatticeModel::L(long e) const {
  IVec v = IVec::Zero(23);
  v(0) = 1;
  v(1) = e;
  return v;
}

IVec LatticeModel::delta() const {
  IVec v = IVec::Zero(23);
  v(22) = 1;
  return v;
}

IVec LatticeModel::embed(const NSClass& c) const {
  return c.x.get_si() * L(c.e) + c.y.get_si() * delta();
}

const LatticeModel& lattice_model() {
  static const LatticeModel m = [] {
    LatticeModel l;
    l.gram = IMat::Zero(23, 23);
    for (int k = 0; k < 3; ++k) l.gram(2 * k, 2 * k + 1) = l.gram(2 * k + 1, 2 * k) = 1;
    l.gram.block(6, 6, 8, 8) = -e8_gram();
    l.gram.block(14, 14, 8, 8) = -e8_gram();
    l.gram(22, 22) = -2;
    l.h = IVec::Zero(23);
    l.h(0) = 2;
    l.h(1) = 6;
    l.h(22) = 1;
    l.perp_basis = IMat::Zero(23, 22);
    l.perp_basis(0, 0) = 1;  // k1 = u1 + 3g
    l.perp_basis(22, 0) = 3;
    l.perp_basis(1, 1) = 1;  // k2 = v1 + g
    l.perp_basis(22, 1) = 1;
    for (int i = 0; i < 20; ++i) l.perp_basis(2 + i, 2 + i) = 1;
    l.perp_gram = l.perp_basis.transpose() * l.gram * l.perp_basis;
    l.k_gram = l.perp_gram.topLeftCorner(2, 2);
    return l;
  }();
  return m;
}

mpz_class bbf_square(const NSClass& c) { return 2 * c.e * c.x * c.x - 2 * c.y * c.y; }

long bbf_div(const NSClass& c) {
  const auto& l = lattice_model();
  return l.divisibility(l.embed(c));
}

int discriminant_class(long p, long q) {
  const auto& g = lattice_model().k_gram;
  long s0 = g(0, 0) * p + g(0, 1) * q, s1 = g(1, 0) * p + g(1, 1) * q;
  if (s0 % 11 || s1 % 11) throw std::invalid_argument("v_K does not have divisibility 11");
  s0 /= 11;
  s1 /= 11;
  // v_* ≡ a·k1* mod K  ⇔  adj(G_K)(s − a e1) ≡ 0 mod 11.
  const long adj[2][2] = {{g(1, 1), -g(0, 1)}, {-g(1, 0), g(0, 0)}};
  for (int a = 0; a < 11; ++a) {
    const long r0 = s0 - a, r1 = s1;
    if ((adj[0][0] * r0 + adj[0][1] * r1) % 11 == 0 && (adj[1][0] * r0 + adj[1][1] * r1) % 11 == 0)
      return a;
  }
  throw std::logic_error("class label not found");
}

std::map<int, MinimalNormEntry> minimal_norm_table(long bound, bool k_only) {
  if (bound < 1) throw std::invalid_argument("search bound must be positive");
  const auto& g = lattice_model().k_gram;
  std::map<int, MinimalNormEntry> best;
  for (long p = -bound; p <= bound; ++p)
    for (long q = -bound; q <= bound; ++q) {
      if (p == 0 && q == 0) continue;
      if ((g(0, 0) * p + g(0, 1) * q) % 11 || (g(1, 0) * p + g(1, 1) * q) % 11) continue;
      const int a = discriminant_class(p, q);
      if (a == 0) continue;
      const int label = std::min(a, 11 - a);
      const long norm = g(0, 0) * p * p + 2 * g(0, 1) * p * q + g(1, 1) * q * q;
      const long content = std::gcd(std::labs(p), std::labs(q));
      if (norm % 22) throw std::logic_error("norm not divisible by 22");
      const long ek = -norm / 22;
      MinimalNormEntry cand{0, {p, q}, 0, false};
      if (k_only) {
        if (content != 1 || ek < 1) continue;
        cand.e = ek;
      } else {
        // 11 m' with m' = u2 + n v2 primitive of square 2n: e = e_K − 11 n.
        if (content % 11 == 0) continue;
        long n = ek - 1 >= 0 ? (ek - 1) / 11 : -((-(ek - 1) + 10) / 11);
        if (std::labs(n) > bound) continue;
        cand.e = ek - 11 * n;
        cand.unimodular_norm = 242 * n;
        cand.adjusted = true;
        if (content == 1 && ek >= 1 && ek <= cand.e) cand = {ek, {p, q}, 0, false};
      }
      // Ties: unadjusted first, then the shortest K-coordinates.
      auto key = [](const MinimalNormEntry& m) {
        return std::make_tuple(m.e, m.adjusted, std::labs(m.k_coords[0]) + std::labs(m.k_coords[1]));
      };
      auto it = best.find(label);
      if (it == best.end() || key(cand) < key(it->second)) best[label] = cand;
    }
  return best;
}

}  // namespace dv
