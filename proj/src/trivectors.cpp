#include "dv/trivectors.hpp"

#include <mutex>

namespace dv {

const std::vector<std::pair<std::array<int, 3>, int>>& fano_terms() {
  // e012 + e034 + e056 + e135 − e146 − e236 − e245
  static const std::vector<std::pair<std::array<int, 3>, int>> t = {
      {{0, 1, 2}, 1}, {{0, 3, 4}, 1},  {{0, 5, 6}, 1},  {{1, 3, 5}, 1},
      {{1, 4, 6}, -1}, {{2, 3, 6}, -1}, {{2, 4, 5}, -1}};
  return t;
}

namespace {

constexpr std::uint64_t kSelectPrime = 2147483647ULL;
constexpr int kSl2Samples = 40;
constexpr std::uint64_t kSl2Seed = 0x5eed2;

// Incremental echelon basis over F_p used to pick independent rows.
struct ModEchelon {
  std::uint64_t p;
  std::vector<Vec<Fp>> rows;
  std::vector<int> pivots;

  bool insert(Vec<Fp> v) {
    for (size_t i = 0; i < rows.size(); ++i) {
      const Fp c = v(pivots[i]);
      if (!is_zero(c)) v -= c * rows[i];
    }
    int piv = -1;
    for (int j = 0; j < v.size(); ++j)
      if (!is_zero(v(j))) {
        piv = j;
        break;
      }
    if (piv < 0) return false;
    v *= v(piv).inverse();
    for (auto& r : rows) {
      const Fp c = r(piv);
      if (!is_zero(c)) r -= c * v;
    }
    rows.push_back(v);
    pivots.push_back(piv);
    return true;
  }
};

Vec<Rational> integral_row(const Vec<Rational>& r) {
  mpz_class l = 1;
  for (int i = 0; i < r.size(); ++i) l = lcm(l, r(i).den());
  Vec<Rational> out = r;
  for (int i = 0; i < r.size(); ++i) out(i) = r(i) * Rational(l);
  return out;
}

std::vector<Vec<Rational>> constraint_rows(const SL2Model<Rational>& m, const Vec<Rational>& x) {
  std::vector<Vec<Rational>> v4, v7;
  for (int j = 0; j < 5; ++j) v4.push_back(wedge2<Rational>(x, unit<Rational>(5, j)));
  Mat<Rational> cond(3, 10);
  for (int k = 0; k < 3; ++k) cond.row(k) = m.wedge_row(x, m.w3.vector(k)).transpose();
  auto s7 = kernel(cond);
  for (int i = 0; i < s7.dim(); ++i) v7.push_back(s7.vector(i));
  auto s4 = Subspace<Rational>::span(v4, 10);
  auto triples = combinations(10, 3);
  std::vector<Vec<Rational>> rows;
  for (int a = 0; a < s4.dim(); ++a)
    for (size_t b = 0; b < v7.size(); ++b)
      for (size_t c = b + 1; c < v7.size(); ++c) {
        std::vector<Vec<Rational>> args{s4.vector(a), v7[b], v7[c]};
        Vec<Rational> r(120);
        for (int t = 0; t < 120; ++t) r(t) = detail::det_rows(args, triples[t]);
        rows.push_back(integral_row(r));
      }
  return rows;
}

}  // namespace

const AltForm<Rational>& sl2_sigma0_rational(Sl2SolveInfo* info) {
  static std::once_flag once;
  static AltForm<Rational> sigma;
  static Sl2SolveInfo stats;
  std::call_once(once, [] {
    auto m = sl2_model<Rational>();
    std::mt19937_64 rng(kSl2Seed);
    RationalField q;
    ModEchelon ech{kSelectPrime, {}, {}};
    std::vector<Vec<Rational>> selected, all;
    for (int s = 0; s < kSl2Samples; ++s) {
      Vec<Rational> x;
      do x = random_vector(q, 5, rng, 3);
      while (all_zero(x));
      for (auto& r : constraint_rows(m, x)) {
        if (ech.insert(reduce(r, kSelectPrime))) selected.push_back(r);
        all.push_back(std::move(r));
      }
    }
    Mat<Rational> sys(static_cast<int>(selected.size()), 120);
    for (int i = 0; i < sys.rows(); ++i) sys.row(i) = selected[i].transpose();
    auto ker = kernel(sys);
    stats.samples = kSl2Samples;
    stats.constraint_rows = static_cast<int>(all.size());
    stats.rank = 120 - ker.dim();
    if (ker.dim() != 1) {
      stats.kernel_dim = ker.dim();
      throw std::runtime_error("sl2 constraint system: kernel dimension " +
                               std::to_string(ker.dim()));
    }
    Vec<Rational> sol = ker.vector(0);
    for (const auto& r : all)
      if (!is_zero(r.dot(sol))) throw std::runtime_error("sl2 constraint system: rank 120 over Q");
    stats.kernel_dim = 1;
    int first = 0;
    while (is_zero(sol(first))) ++first;
    sol /= sol(first);
    sigma = AltForm<Rational>(3, 10, sol);
  });
  if (info) *info = stats;
  return sigma;
}

SL2Model<Rational> sl2_sigma0_model_q() {
  auto m = sl2_model<Rational>();
  m.sigma = sl2_sigma0_rational();
  return m;
}

Sp4Model<Fp> sp4_model_mod(std::uint64_t p) {
  auto q = sp4_model<Rational>();
  Sp4Model<Fp> m;
  m.omega = reduce(q.omega, p);
  m.v5 = reduce(q.v5, p);
  m.gram = reduce(q.gram, p);
  for (const auto& s : q.skew) m.skew.push_back(reduce(s, p));
  m.sigma = reduce(q.sigma, p);
  return m;
}

G2SL3Model<Fp> g2sl3_model_mod(std::uint64_t p) {
  auto q = g2sl3_model<Rational>();
  G2SL3Model<Fp> m;
  m.alpha = reduce(q.alpha, p);
  m.beta = reduce(q.beta, p);
  m.sigma = reduce(q.sigma, p);
  m.lines = q.lines;
  return m;
}

SL2Model<Fp> sl2_sigma0_model_mod(std::uint64_t p) {
  auto q = sl2_sigma0_model_q();
  SL2Model<Fp> m;
  m.e5 = reduce(q.e5, p);
  m.f5 = reduce(q.f5, p);
  m.h5 = reduce(q.h5, p);
  m.e = reduce(q.e, p);
  m.f = reduce(q.f, p);
  m.h = reduce(q.h, p);
  m.w3 = reduce(q.w3, p);
  m.v7 = reduce(q.v7, p);
  m.sigma = reduce(q.sigma, p);
  return m;
}

}  // namespace dv
