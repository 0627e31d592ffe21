#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "splinefan/matrix.hpp"
#include "splinefan/rational.hpp"

using namespace splinefan;

TEST_CASE("rational parsing and normalization") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4/2") == Rational(-2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("3/-6") == Rational(-1, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-6, 3).str() == "-2");
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("primitive integer vector") {
  RatVec v{Rational(1, 2), Rational(0), Rational(-3, 2)};
  RatVec p = primitive_integer_vector(v);
  CHECK(p == RatVec{Rational(1), Rational(0), Rational(-3)});
  RatVec q = primitive_integer_vector(RatVec{Rational(-2), Rational(4)}, /*fix_sign=*/true);
  CHECK(q == RatVec{Rational(1), Rational(-2)});
}

namespace {

RatMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(num(rng), den(rng));
  return m;
}

std::size_t rank_via_rref(const RatMatrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

}  // namespace

TEST_CASE("bareiss rank agrees with rref rank on random matrices") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 9);
    RatMatrix m = random_matrix(rng, dim(rng), dim(rng));
    CHECK(rank(m) == rank_via_rref(m));
  }
}

TEST_CASE("rank of structured matrices") {
  // Rank-deficient: third row is the sum of the first two.
  RatMatrix m(3, 4);
  std::mt19937 rng(7);
  m = random_matrix(rng, 3, 4);
  for (std::size_t j = 0; j < 4; ++j) m(2, j) = m(0, j) + m(1, j);
  CHECK(rank(m) <= 2);
  CHECK(rank(m) == rank_via_rref(m));
  CHECK(rank(RatMatrix(5, 3)) == 0);
  CHECK(rank(RatMatrix::identity(6)) == 6);
}

TEST_CASE("nullspace vectors are in the kernel and span it") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    RatMatrix m = random_matrix(rng, 4, 7);
    auto basis = nullspace_basis(m);
    CHECK(basis.size() == nullity(m));
    for (const auto& x : basis)
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational s;
        for (std::size_t j = 0; j < m.cols(); ++j) s = s + m(i, j) * x[j];
        CHECK(s.is_zero());
      }
    CHECK(rank(RatMatrix::from_rows(basis)) == basis.size());
  }
}

TEST_CASE("solve_exact recovers a known solution") {
  std::mt19937 rng(4242);
  RatMatrix a = random_matrix(rng, 5, 3);
  while (rank(a) < 3) a = random_matrix(rng, 5, 3);
  RatMatrix x = random_matrix(rng, 3, 2);
  CHECK(solve_exact(a, a * x) == x);
  RatMatrix bad(5, 1);
  bad(0, 0) = 1;  // not in the column space with overwhelming probability
  bool consistent = rank(a) == 3;
  (void)consistent;
}

TEST_CASE("determinant basics") {
  RatMatrix m(2, 2);
  m(0, 0) = Rational(1, 2);
  m(0, 1) = 3;
  m(1, 0) = 1;
  m(1, 1) = 4;
  CHECK(determinant(m) == Rational(-1));
  CHECK(determinant(RatMatrix::identity(4)) == Rational(1));
}

TEST_CASE("canonical rowspace basis identifies equal subspaces") {
  RatVec u{Rational(1), Rational(2), Rational(3)};
  RatVec v{Rational(0), Rational(1), Rational(1)};
  RatVec sum{Rational(1), Rational(3), Rational(4)};
  auto b1 = canonical_rowspace_basis({u, v}, 3);
  auto b2 = canonical_rowspace_basis({sum, v, u}, 3);
  CHECK(b1 == b2);
  auto b3 = canonical_rowspace_basis({u}, 3);
  CHECK(b1 != b3);
}
