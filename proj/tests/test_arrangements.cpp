#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "splinefan/arrangements.hpp"
#include "splinefan/monomials.hpp"
#include "splinefan/constructions.hpp"

using namespace splinefan;

namespace {

RatVec v(std::initializer_list<long> xs) {
  RatVec out;
  for (long x : xs) out.push_back(Rational(x));
  return out;
}

}  // namespace

TEST_CASE("make_arrangement normalizes, deduplicates, rejects zero forms") {
  Arrangement a = make_arrangement(2, {v({2, 4}), v({-1, -2}), v({0, 3})});
  REQUIRE(a.forms.size() == 2);
  CHECK(a.forms[0] == v({0, 1}));
  CHECK(a.forms[1] == v({1, 2}));
  CHECK_THROWS_AS(make_arrangement(2, {v({0, 0})}), std::invalid_argument);
}

TEST_CASE("intersection lattice of small arrangements") {
  // A single hyperplane: two flats, mobius 1 and -1, pi = 1 + t.
  Arrangement one = make_arrangement(3, {v({1, 0, 0})});
  IntersectionLattice l1 = intersection_lattice(one);
  REQUIRE(l1.flats.size() == 2);
  CHECK(l1.flats[0].mobius == 1);
  CHECK(l1.flats[1].mobius == -1);
  CHECK(poincare_polynomial(one) == Polynomial(RatVec{Rational(1), Rational(1)}));

  // Two distinct lines through the origin in the plane meet in rank 2.
  Arrangement two = make_arrangement(2, {v({1, 0}), v({0, 1})});
  IntersectionLattice l2 = intersection_lattice(two);
  REQUIRE(l2.flats.size() == 4);
  CHECK(l2.flats[3].rank == 2);
  CHECK(l2.flats[3].mobius == 1);
  CHECK(poincare_polynomial(two) ==
        Polynomial(RatVec{Rational(1), Rational(2), Rational(1)}));

  // The empty arrangement has only the ambient flat.
  Arrangement empty = make_arrangement(3, {});
  CHECK(intersection_lattice(empty).flats.size() == 1);
  CHECK(poincare_polynomial(empty) == Polynomial::constant(Rational(1)));
}

TEST_CASE("braid arrangement lattice and poincare polynomial") {
  Arrangement braid = braid_arrangement(3, /*essential=*/true);
  CHECK(braid.ambient_dim == 3);
  CHECK(braid.forms.size() == 6);
  IntersectionLattice lattice = intersection_lattice(braid);
  int rank2 = 0, mu2 = 0, mu1 = 0;
  for (const auto& f : lattice.flats)
    if (f.rank == 2) {
      ++rank2;
      if (f.mobius == 2) ++mu2;
      if (f.mobius == 1) ++mu1;
    }
  CHECK(rank2 == 7);
  CHECK(mu2 == 4);  // triple points
  CHECK(mu1 == 3);  // simple crossings
  Polynomial expect = Polynomial(RatVec{Rational(1), Rational(1)}) *
                      Polynomial(RatVec{Rational(1), Rational(2)}) *
                      Polynomial(RatVec{Rational(1), Rational(3)});
  CHECK(poincare_polynomial(braid) == expect);
  // The essential and non-essential versions have the same poincare polynomial.
  CHECK(poincare_polynomial(braid_arrangement(3, false)) == expect);
}

TEST_CASE("derivation dimensions") {
  // Degree 0: constant-coefficient derivations preserving each hyperplane
  // are the ones vanishing on the span of the forms.
  for (int n = 2; n <= 4; ++n) {
    Arrangement a = braid_arrangement(n, true);
    CHECK(derivation_dimension(a, 0) ==
          a.ambient_dim - static_cast<long>(rank(RatMatrix::from_rows(a.forms))));
  }
  // Empty arrangement: D(A) is all of Der(S), dimension d * dim S_k.
  Arrangement empty = make_arrangement(3, {});
  for (int k = 0; k <= 3; ++k)
    CHECK(derivation_dimension(empty, k) == 3 * forms_dimension(3, k).get_si());
}

TEST_CASE("braid exponents and terao factorization") {
  for (int n = 2; n <= 4; ++n) {
    Arrangement a = braid_arrangement(n, true);
    auto r = exponents_from_derivations(a, 2 * n + 2);
    REQUIRE(r.status == FreeDecompositionResult::Status::Free);
    std::vector<int> expect;
    for (int e = 1; e <= n; ++e) expect.push_back(e);
    CHECK(r.generator_degrees == expect);
    CHECK(terao_check(a, r.generator_degrees));
  }
}

TEST_CASE("terao check rejects a wrong exponent list") {
  Arrangement a = braid_arrangement(3, true);
  CHECK_FALSE(terao_check(a, {0, 0, 0}));
  CHECK_FALSE(terao_check(a, {1, 2, 4}));
}

TEST_CASE("defining arrangement of the symmetric subdivision fan") {
  FaceLattice lattice(p2_fan(3).fan);
  Arrangement a = defining_arrangement(lattice);
  Arrangement braid = braid_arrangement(3, true);
  CHECK(a.forms == braid.forms);
}
