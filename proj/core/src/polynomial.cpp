#include "splinefan/polynomial.hpp"

#include <stdexcept>

namespace splinefan {

Polynomial::Polynomial(RatVec coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(RatVec{c}); }

Polynomial Polynomial::variable() { return Polynomial(RatVec{Rational(0), Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational Polynomial::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::eval(const Rational& x) const {
  Rational r;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  RatVec c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = (i < a.coeffs_.size() ? a.coeffs_[i] : Rational(0)) +
           (i < b.coeffs_.size() ? b.coeffs_[i] : Rational(0));
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + Rational(-1) * b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  RatVec c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  RatVec out(p.coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * p.coeffs_[i];
  return Polynomial(std::move(out));
}

std::string Polynomial::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (int p = degree(); p >= 0; --p) {
    const Rational& c = coeffs_[p];
    if (c.is_zero()) continue;
    if (!s.empty()) s += c.sign() > 0 ? "+" : "-";
    else if (c.sign() < 0) s += "-";
    Rational a = c.sign() < 0 ? -c : c;
    if (p == 0 || a != Rational(1)) s += a.str();
    if (p >= 1) {
      s += var;
      if (p > 1) s += "^" + std::to_string(p);
    }
  }
  return s;
}

Polynomial lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  Polynomial result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Polynomial term = Polynomial::constant(points[i].second);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      const Rational denom = points[i].first - points[j].first;
      if (denom.is_zero()) throw std::invalid_argument("interpolate: duplicate x values");
      // (x - x_j) / (x_i - x_j)
      term = term * Polynomial(RatVec{-points[j].first / denom, Rational(1) / denom});
    }
    result = result + term;
  }
  return result;
}

Polynomial binomial_polynomial(long shift, long j) {
  if (j < 0) return Polynomial();
  // C(k + shift, j) = prod_{i=0}^{j-1} (k + shift - i) / j!
  Polynomial p = Polynomial::constant(Rational(1));
  Integer fact = 1;
  for (long i = 0; i < j; ++i) {
    p = p * Polynomial(RatVec{Rational(shift - i), Rational(1)});
    fact *= (i + 1);
  }
  return Rational(Integer(1), fact) * p;
}

}  // namespace splinefan
