#include "dv/schubert.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace dv {

std::string to_string(const Partition& p) {
  if (p.empty()) return "()";
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition conjugate(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  for (int j = 1; j <= p.front(); ++j) {
    int cnt = 0;
    for (int x : p)
      if (x >= j) ++cnt;
    c.push_back(cnt);
  }
  return c;
}

namespace {

Partition trimmed(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Partition padded(const Partition& p, int k) {
  Partition q = p;
  q.resize(k, 0);
  return q;
}

}  // namespace

bool Grassmannian::fits(const Partition& p) const {
  if (static_cast<int>(p.size()) > k) return false;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] > n - k) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  return true;
}

Partition Grassmannian::complement(const Partition& p) const {
  if (!fits(p)) throw std::invalid_argument("partition outside the box");
  Partition q = padded(p, k), c(k);
  for (int i = 0; i < k; ++i) c[i] = (n - k) - q[k - 1 - i];
  return trimmed(c);
}

std::vector<Partition> Grassmannian::partitions() const {
  std::vector<Partition> out;
  Partition cur(k, 0);
  std::function<void(int, int)> rec = [&](int row, int cap) {
    if (row == k) {
      out.push_back(trimmed(cur));
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      cur[row] = v;
      rec(row + 1, v);
    }
    cur[row] = 0;
  };
  rec(0, n - k);
  return out;
}

// ---------------------------------------------------------------- SchubertClass

SchubertClass SchubertClass::sigma(Grassmannian g, const Partition& p, const mpz_class& c) {
  SchubertClass s(g);
  Partition q = trimmed(p);
  if (g.fits(q)) s.add(q, c);
  return s;
}

mpz_class SchubertClass::coefficient(const Partition& p) const {
  auto it = terms_.find(trimmed(p));
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void SchubertClass::add(const Partition& p, const mpz_class& c) {
  if (sgn(c) == 0) return;
  if (!g_.fits(p)) throw std::invalid_argument("partition outside the box");
  auto [it, fresh] = terms_.emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int SchubertClass::degree() const {
  int d = -1;
  for (const auto& [p, c] : terms_) {
    const int s = size(p);
    if (d >= 0 && s != d) return -1;
    d = s;
  }
  return d;
}

SchubertClass SchubertClass::graded(int d) const {
  SchubertClass r(g_);
  for (const auto& [p, c] : terms_)
    if (size(p) == d) r.add(p, c);
  return r;
}

std::string SchubertClass::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : terms_) {
    if (!s.empty()) s += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) s += "-";
    mpz_class a = abs(c);
    if (a != 1) s += a.get_str() + "*";
    s += "s" + to_string(p);
  }
  return s;
}

SchubertClass operator+(const SchubertClass& a, const SchubertClass& b) {
  if (!(a.g_ == b.g_)) throw std::invalid_argument("ambient mismatch");
  SchubertClass r = a;
  for (const auto& [p, c] : b.terms_) r.add(p, c);
  return r;
}

SchubertClass operator-(const SchubertClass& a, const SchubertClass& b) {
  return a + mpz_class(-1) * b;
}

SchubertClass operator*(const mpz_class& c, const SchubertClass& a) {
  SchubertClass r(a.g_);
  for (const auto& [p, v] : a.terms_) r.add(p, c * v);
  return r;
}

// ---------------------------------------------------------------- Pieri rules

SchubertClass pieri_column(const SchubertClass& a, int r) {
  const auto& g = a.grassmannian();
  SchubertClass out(g);
  if (r < 0 || r > g.k) return out;
  for (const auto& [lam, c] : a.terms()) {
    Partition base = padded(lam, g.k), mu = base;
    std::function<void(int, int)> rec = [&](int row, int left) {
      if (left == 0) {
        out.add(trimmed(mu), c);
        return;
      }
      if (g.k - row < left) return;
      // add a box in this row when the result stays a partition inside the box
      if (base[row] + 1 <= g.cols() && (row == 0 || base[row] + 1 <= mu[row - 1])) {
        mu[row] = base[row] + 1;
        rec(row + 1, left - 1);
        mu[row] = base[row];
      }
      rec(row + 1, left);
    };
    rec(0, r);
  }
  return out;
}

SchubertClass pieri_row(const SchubertClass& a, int r) {
  const auto& g = a.grassmannian();
  SchubertClass out(g);
  if (r < 0 || r > g.cols()) return out;
  for (const auto& [lam, c] : a.terms()) {
    Partition base = padded(lam, g.k), mu = base;
    std::function<void(int, int)> rec = [&](int row, int left) {
      if (row == g.k) {
        if (left == 0) out.add(trimmed(mu), c);
        return;
      }
      const int cap = row == 0 ? g.cols() : base[row - 1];
      for (int add = 0; add <= left && base[row] + add <= cap; ++add) {
        mu[row] = base[row] + add;
        rec(row + 1, left - add);
      }
      mu[row] = base[row];
    };
    rec(0, r);
  }
  return out;
}

// σ_λ = det(e_{λ'_i − i + j}) expanded into e-monomials, each applied by vertical strips.
SchubertClass multiply(const SchubertClass& a, const SchubertClass& b) {
  if (!(a.grassmannian() == b.grassmannian())) throw std::invalid_argument("ambient mismatch");
  const auto& g = a.grassmannian();
  SchubertClass out(g);
  for (const auto& [lam, c] : b.terms()) {
    const Partition lc = conjugate(lam);
    const int m = static_cast<int>(lc.size());
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int inv = 0;
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          if (perm[i] > perm[j]) ++inv;
      SchubertClass term = a;
      bool dead = false;
      for (int i = 0; i < m && !dead; ++i) {
        const int idx = lc[i] - i + perm[i];
        if (idx < 0 || idx > g.k) dead = true;
        else if (idx > 0) term = pieri_column(term, idx);
        if (term.is_zero()) dead = true;
      }
      if (!dead) out = out + mpz_class(inv % 2 ? -c : c) * term;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

SchubertClass power(const SchubertClass& a, int e) {
  SchubertClass r = SchubertClass::one(a.grassmannian());
  for (int i = 0; i < e; ++i) r = multiply(r, a);
  return r;
}

mpz_class integrate(const SchubertClass& a) {
  return a.coefficient(a.grassmannian().box());
}

SchubertClass chern_dual_sub(Grassmannian g) {
  SchubertClass c(g);
  for (int i = 0; i <= g.k; ++i) c.add(Partition(i, 1), 1);
  return c;
}

SchubertClass chern_quotient(Grassmannian g) {
  SchubertClass c(g);
  for (int i = 0; i <= g.cols(); ++i) c.add(i ? Partition{i} : Partition{}, 1);
  return c;
}

// ---------------------------------------------------------------- symmetric functions

namespace {

// Polynomials in e_1..e_k, keyed by exponent vectors.
using Mono = std::vector<int>;
using Poly = std::map<Mono, mpq_class>;
using Graded = std::vector<Poly>;  // index = degree

void add_to(Poly& a, const Poly& b, const mpq_class& s = 1) {
  for (const auto& [m, c] : b) {
    auto& v = a[m];
    v += s * c;
    if (sgn(v) == 0) a.erase(m);
  }
}

Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Mono m = ma;
      for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      auto& v = r[m];
      v += ca * cb;
      if (sgn(v) == 0) r.erase(m);
    }
  return r;
}

Poly constant(int k, const mpq_class& c) {
  Poly p;
  if (sgn(c) != 0) p[Mono(k, 0)] = c;
  return p;
}

Poly variable(int k, int i) {  // e_i, 1-based
  Mono m(k, 0);
  m[i - 1] = 1;
  return Poly{{m, 1}};
}

// Product of graded objects truncated at degree d.
Graded mul(const Graded& a, const Graded& b, int d) {
  Graded r(d + 1);
  for (int i = 0; i <= d && i < static_cast<int>(a.size()); ++i)
    for (int j = 0; i + j <= d && j < static_cast<int>(b.size()); ++j)
      if (!a[i].empty() && !b[j].empty()) add_to(r[i + j], mul(a[i], b[j]));
  return r;
}

// Power sums of the k Chern roots of E as polynomials in e_1..e_k, degrees 0..d.
std::vector<Poly> power_sums(int k, int d) {
  std::vector<Poly> p(d + 1);
  p[0] = constant(k, k);
  for (int m = 1; m <= d; ++m) {
    for (int i = 1; i < m && i <= k; ++i)
      add_to(p[m], mul(variable(k, i), p[m - i]), (i % 2) ? 1 : -1);
    if (m <= k) add_to(p[m], variable(k, m), (m % 2) ? m : -m);
  }
  return p;
}

// Total Chern class of ∧^p E, truncated at degree d, by the splitting principle:
// Σ_roots exp(r t) = e_p(exp(t x_1), ..., exp(t x_k)), expanded through power sums.
Graded chern_exterior_poly(int k, int p, int d) {
  const auto ps = power_sums(k, d);
  mpq_class fact = 1;
  std::vector<mpq_class> inv_fact(d + 1);
  for (int m = 0; m <= d; ++m) {
    if (m) fact *= m;
    inv_fact[m] = 1 / fact;
  }
  // P_j(t) = Σ_m (j t)^m p_m / m!
  std::vector<Graded> P(p + 1);
  for (int j = 1; j <= p; ++j) {
    P[j].resize(d + 1);
    mpq_class jm = 1;
    for (int m = 0; m <= d; ++m) {
      add_to(P[j][m], ps[m], jm * inv_fact[m]);
      jm *= j;
    }
  }
  // Newton: i E_i = Σ_j (−1)^{j−1} E_{i−j} P_j
  std::vector<Graded> E(p + 1, Graded(d + 1));
  E[0][0] = constant(k, 1);
  for (int i = 1; i <= p; ++i) {
    for (int j = 1; j <= i; ++j) {
      auto prod = mul(E[i - j], P[j], d);
      for (int m = 0; m <= d; ++m) add_to(E[i][m], prod[m], mpq_class((j % 2) ? 1 : -1, i));
    }
  }
  // Power sums of the roots of ∧^p E, then Chern classes by Newton again.
  std::vector<Poly> pi(d + 1);
  fact = 1;
  for (int m = 1; m <= d; ++m) {
    fact *= m;
    add_to(pi[m], E[p][m], fact);
  }
  Graded c(d + 1);
  c[0] = constant(k, 1);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= i; ++j) add_to(c[i], mul(c[i - j], pi[j]), mpq_class((j % 2) ? 1 : -1, i));
  return c;
}

class MonomialExpander {
 public:
  explicit MonomialExpander(Grassmannian g) : g_(g) {}

  const SchubertClass& operator()(const Mono& m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    int last = static_cast<int>(m.size()) - 1;
    while (last >= 0 && m[last] == 0) --last;
    SchubertClass r = SchubertClass::one(g_);
    if (last >= 0) {
      Mono rest = m;
      --rest[last];
      r = pieri_column((*this)(rest), last + 1);
    }
    return cache_.emplace(m, std::move(r)).first->second;
  }

  SchubertClass convert(const Poly& p) {
    SchubertClass out(g_);
    for (const auto& [m, c] : p) {
      if (c.get_den() != 1) throw std::logic_error("non-integral Chern coefficient");
      out = out + c.get_num() * (*this)(m);
    }
    return out;
  }

 private:
  Grassmannian g_;
  std::map<Mono, SchubertClass> cache_;
};

}  // namespace

std::vector<SchubertClass> chern_exterior(Grassmannian g, int p) {
  if (p < 1 || p > g.k) throw std::invalid_argument("exterior power out of range");
  int rank = 1;
  for (int i = 0; i < p; ++i) rank = rank * (g.k - i) / (i + 1);
  const int d = std::min(rank, g.dim());
  auto c = chern_exterior_poly(g.k, p, d);
  MonomialExpander ex(g);
  std::vector<SchubertClass> out;
  for (int i = 0; i <= rank; ++i) out.push_back(i <= d ? ex.convert(c[i]) : SchubertClass(g));
  return out;
}

SegreNumbers dv_segre_numbers() {
  const Grassmannian g{6, 10};
  const auto c20 = chern_exterior(g, 3)[20];
  MonomialExpander ex(g);
  // s(Q) = c(S): s_i = (−1)^i e_i, so every degree-4 monomial carries sign +.
  const std::array<Mono, 5> monos{Mono{4, 0, 0, 0, 0, 0}, Mono{2, 1, 0, 0, 0, 0}, Mono{1, 0, 1, 0, 0, 0},
                                  Mono{0, 2, 0, 0, 0, 0}, Mono{0, 0, 0, 1, 0, 0}};
  SegreNumbers s;
  for (int i = 0; i < 5; ++i) s.values[i] = integrate(multiply(c20, ex(monos[i])));
  return s;
}

AuxChern aux_chern_checks() {
  AuxChern r;
  {
    const Grassmannian g{3, 7};
    auto c2 = chern_exterior_poly(3, 2, g.dim());
    auto c3 = chern_exterior_poly(3, 3, g.dim());
    auto total = mul(mul(mul(c2, c2, g.dim()), c2, g.dim()), c3, g.dim());
    MonomialExpander ex(g);
    auto c10 = ex.convert(total[10]);
    r.gr37_sigma2 = integrate(multiply(c10, SchubertClass::sigma(g, {2})));
    r.gr37_sigma11 = integrate(multiply(c10, SchubertClass::sigma(g, {1, 1})));
  }
  r.gr47_c4 = chern_exterior({4, 7}, 3)[4];
  r.gr57_integral = integrate(chern_exterior({5, 7}, 3)[10]);
  return r;
}

}  // namespace dv
