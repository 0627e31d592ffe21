#ifndef SPLINEFAN_POLYNOMIAL_HPP
#define SPLINEFAN_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "splinefan/rational.hpp"

namespace splinefan {

// Dense univariate polynomial over Q, coefficients by ascending power,
// trailing zeros trimmed (the zero polynomial has no coefficients).
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(RatVec coefficients);
  static Polynomial constant(const Rational& c);
  static Polynomial variable();  // the monomial t

  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const RatVec& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t power) const;
  Rational leading_coefficient() const;

  Rational eval(const Rational& x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Rendered in the variable `var`, e.g. "2k^2+2".
  std::string str(const std::string& var = "k") const;

private:
  RatVec coeffs_;
  void trim();
};

// Lagrange interpolation through the given (x, y) points, exact.
Polynomial lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points);

// The binomial C(k + shift, j) as a polynomial in k.
Polynomial binomial_polynomial(long shift, long j);

}  // namespace splinefan

#endif
