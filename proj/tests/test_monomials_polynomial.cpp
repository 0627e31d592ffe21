#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "splinefan/monomials.hpp"
#include "splinefan/polynomial.hpp"

using namespace splinefan;

TEST_CASE("binomials and form dimensions") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(3, 5) == 0);
  CHECK(forms_dimension(3, 2) == 6);
  CHECK(forms_dimension(1, 7) == 1);
  CHECK(forms_dimension(4, 0) == 1);
}

TEST_CASE("monomial basis is graded-lex descending and indexable") {
  MonomialBasis b(3, 2);
  REQUIRE(b.size() == 6);
  CHECK(b[0] == std::vector<int>{2, 0, 0});
  CHECK(b[1] == std::vector<int>{1, 1, 0});
  CHECK(b[5] == std::vector<int>{0, 0, 2});
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.index_of(b[i]) == i);
}

TEST_CASE("multiplication by a linear form in two variables") {
  // l = x + 2y as a map from degree-1 to degree-2 forms, bases {x,y} and
  // {x^2, xy, y^2}: x -> x^2 + 2xy, y -> xy + 2y^2.
  RatMatrix m = mult_by_linear_form(RatVec{Rational(1), Rational(2)}, 2);
  REQUIRE(m.rows() == 3);
  REQUIRE(m.cols() == 2);
  CHECK(m(0, 0) == Rational(1));
  CHECK(m(1, 0) == Rational(2));
  CHECK(m(2, 0) == Rational(0));
  CHECK(m(0, 1) == Rational(0));
  CHECK(m(1, 1) == Rational(1));
  CHECK(m(2, 1) == Rational(2));
  CHECK_THROWS_AS(mult_by_linear_form(RatVec{Rational(0), Rational(0)}, 2),
                  std::invalid_argument);
}

TEST_CASE("substitution matrices compose contravariantly") {
  // A : Q^2 -> Q^3 and B : Q^1 -> Q^2; substitution along A*B equals
  // substituting along A first, then along B.
  RatMatrix a(3, 2), b(2, 1);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = -1;
  a(1, 1) = 0;
  a(2, 0) = 3;
  a(2, 1) = 1;
  b(0, 0) = 2;
  b(1, 0) = -3;
  for (int k = 0; k <= 4; ++k) {
    RatMatrix lhs = substitution_matrix(a * b, k);
    RatMatrix rhs = substitution_matrix(b, k) * substitution_matrix(a, k);
    CHECK(lhs == rhs);
  }
  CHECK(substitution_matrix(RatMatrix::identity(3), 3) ==
        RatMatrix::identity(static_cast<std::size_t>(forms_dimension(3, 3).get_si())));
}

TEST_CASE("polynomial arithmetic, evaluation, rendering") {
  Polynomial p(RatVec{Rational(2), Rational(0), Rational(2)});  // 2 + 2k^2
  CHECK(p.eval(Rational(3)) == Rational(20));
  CHECK(p.degree() == 2);
  CHECK(p.str() == "2k^2+2");
  Polynomial zero;
  CHECK(zero.degree() == -1);
  CHECK((p - p).is_zero());
  CHECK((p * Polynomial::constant(Rational(1, 2))).eval(Rational(3)) == Rational(10));
}

TEST_CASE("lagrange interpolation is exact") {
  std::vector<std::pair<Rational, Rational>> pts;
  Polynomial target(RatVec{Rational(1), Rational(-2), Rational(0), Rational(1, 3)});
  for (int x = 0; x < 4; ++x) pts.emplace_back(Rational(x), target.eval(Rational(x)));
  CHECK(lagrange_interpolate(pts) == target);
}

TEST_CASE("binomial polynomial matches binomial values") {
  Polynomial p = binomial_polynomial(2, 2);  // C(k+2, 2)
  for (int k = 0; k <= 6; ++k) CHECK(p.eval(Rational(k)) == Rational(binomial(k + 2, 2)));
  CHECK(p.degree() == 2);
}
