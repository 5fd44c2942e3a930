#include "eqcoll/graded.hpp"

#include <algorithm>

namespace eqcoll {

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(const Int& n, int k) {
  if (k < 0) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - (i - 1);
    r /= i;
  }
  return r < 0 ? Int(0) : r;
}

GradedDim GradedDim::point(int degree, Int mult) {
  GradedDim g;
  g.add(degree, mult);
  return g;
}

void GradedDim::add(int degree, const Int& mult) {
  if (mult < 0) throw std::invalid_argument("GradedDim: negative multiplicity");
  if (mult == 0) return;
  dims_[degree] += mult;
}

Int GradedDim::at(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? Int(0) : it->second;
}

Int GradedDim::total_dim() const {
  Int t = 0;
  for (const auto& [d, m] : dims_) t += m;
  return t;
}

bool GradedDim::concentrated_in_degree(int degree) const {
  return dims_.empty() || (dims_.size() == 1 && dims_.begin()->first == degree);
}

SignedLaurent::SignedLaurent(const GradedDim& a) {
  for (const auto& [d, m] : a.dims()) coeffs_[d] = m;
}

SignedLaurent SignedLaurent::term(int degree, Int coeff) {
  SignedLaurent s;
  s.add(degree, coeff);
  return s;
}

void SignedLaurent::add(int degree, const Int& coeff) {
  if (coeff == 0) return;
  auto it = coeffs_.find(degree);
  if (it == coeffs_.end()) {
    coeffs_[degree] = coeff;
  } else {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

SignedLaurent& SignedLaurent::operator+=(const SignedLaurent& other) {
  for (const auto& [d, c] : other.coeffs_) add(d, c);
  return *this;
}

SignedLaurent& SignedLaurent::operator-=(const SignedLaurent& other) {
  for (const auto& [d, c] : other.coeffs_) add(d, -c);
  return *this;
}

SignedLaurent SignedLaurent::operator*(const SignedLaurent& other) const {
  SignedLaurent r;
  for (const auto& [d1, c1] : coeffs_)
    for (const auto& [d2, c2] : other.coeffs_) r.add(d1 + d2, c1 * c2);
  return r;
}

SignedLaurent& SignedLaurent::operator*=(const Int& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [d, c] : coeffs_) c *= scalar;
  return *this;
}

SignedLaurent SignedLaurent::divided_by(const Int& divisor) const {
  if (divisor <= 0) throw std::invalid_argument("divided_by: divisor must be positive");
  SignedLaurent r;
  for (const auto& [d, c] : coeffs_) {
    if (c % divisor != 0)
      throw std::domain_error("divided_by: inexact division at degree " + std::to_string(d));
    r.coeffs_[d] = c / divisor;
  }
  return r;
}

GradedDim SignedLaurent::to_graded_dim() const {
  GradedDim g;
  for (const auto& [d, c] : coeffs_) {
    if (c < 0)
      throw std::domain_error("to_graded_dim: negative coefficient at degree " + std::to_string(d));
    g.add(d, c);
  }
  return g;
}

GradedDim direct_sum(const GradedDim& a, const GradedDim& b) {
  GradedDim r = a;
  for (const auto& [d, m] : b.dims()) r.add(d, m);
  return r;
}

GradedDim tensor(const GradedDim& a, const GradedDim& b) {
  GradedDim r;
  for (const auto& [d1, m1] : a.dims())
    for (const auto& [d2, m2] : b.dims()) r.add(d1 + d2, m1 * m2);
  return r;
}

GradedDim shift(const GradedDim& a, int m) {
  GradedDim r;
  for (const auto& [d, v] : a.dims()) r.add(d - m, v);
  return r;
}

GradedDim dual(const GradedDim& a) {
  GradedDim r;
  for (const auto& [d, v] : a.dims()) r.add(-d, v);
  return r;
}

GradedDim sym_power(const GradedDim& a, int k) {
  if (k < 0) throw std::invalid_argument("sym_power: negative exponent");
  // Coefficient of u^k in
  //   prod_{i even} (1 - u t^i)^{-a_i} * prod_{i odd} (1 + u t^i)^{a_i},
  // built up one degree of `a` at a time.
  std::vector<GradedDim> coeff(k + 1);
  coeff[0] = GradedDim::unit();
  for (const auto& [deg, mult] : a.dims()) {
    const bool odd = ((deg % 2) + 2) % 2 == 1;
    const int mult_i = mult.convert_to<int>();
    std::vector<GradedDim> next(k + 1);
    for (int j = 0; j <= k; ++j) {
      if (odd && j > mult_i) break;
      Int c = odd ? binomial(mult, j) : binomial(mult + j - 1, j);
      if (c == 0) continue;
      for (int i = 0; i + j <= k; ++i) {
        for (const auto& [d0, m0] : coeff[i].dims())
          next[i + j].add(d0 + deg * j, m0 * c);
      }
    }
    coeff = std::move(next);
  }
  return coeff[k];
}

SignedLaurent cycle_substitute(const GradedDim& a, int len) {
  SignedLaurent r;
  for (const auto& [d, m] : a.dims()) {
    int sign_exp = d * (len - 1);
    Int c = (((sign_exp % 2) + 2) % 2 == 1) ? -m : m;
    r.add(d * len, c);
  }
  return r;
}

SignedLaurent graded_trace(const GradedDim& a, const Partition& cycle_type) {
  SignedLaurent r = SignedLaurent::term(0, 1);
  for (int len : cycle_type) {
    if (len < 1) throw std::invalid_argument("graded_trace: cycle lengths must be >= 1");
    r = r * cycle_substitute(a, len);
  }
  return r;
}

}  // namespace eqcoll
