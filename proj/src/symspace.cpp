#include "dv/symspace.hpp"

#include <stdexcept>

namespace dv {

namespace {

long factorial(int n) {
  long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

SymSpace::SymSpace(int power) : power_(power) {
  switch (power) {
    case 1:
      monomials_ = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
      break;
    case 2:
      monomials_ = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
      break;
    case 3:
      monomials_ = {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {2, 1, 0}, {1, 0, 2},
                    {0, 2, 1}, {1, 2, 0}, {2, 0, 1}, {0, 1, 2}, {1, 1, 1}};
      break;
    default:
      throw std::invalid_argument("SymSpace supports powers 1..3");
  }
  for (const auto& e : monomials_)
    multinomial_.push_back(factorial(power) / (factorial(e[0]) * factorial(e[1]) * factorial(e[2])));
}

int SymSpace::index_of(const Exponent& e) const {
  for (int i = 0; i < dim(); ++i)
    if (monomials_[i] == e) return i;
  throw std::invalid_argument("exponent not in this symmetric power");
}

std::string SymSpace::name(int i, const char* letters) const {
  std::string s;
  const auto& e = monomials_[i];
  for (int v = 0; v < 3; ++v) {
    if (e[v] == 0) continue;
    s += letters[v];
    if (e[v] > 1) s += "^" + std::to_string(e[v]);
  }
  return s;
}

const SymSpace& sym(int power) {
  static const SymSpace s1(1), s2(2), s3(3);
  switch (power) {
    case 1: return s1;
    case 2: return s2;
    case 3: return s3;
    default: throw std::invalid_argument("SymSpace supports powers 1..3");
  }
}

OnePS induced_weights(const std::array<long, 3>& w, int power) {
  OnePS l;
  for (const auto& e : sym(power).monomials()) l.weights.push_back(e[0] * w[0] + e[1] * w[1] + e[2] * w[2]);
  return l;
}

}  // namespace dv
