#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "splinefan/constructions.hpp"
#include "splinefan/supports.hpp"

using namespace splinefan;

namespace {

bool is_diagonal_line(const FlatCandidate& f) {
  if (f.basis.size() != 1) return false;
  for (const auto& x : f.basis[0])
    if (x != Rational(1)) return false;
  return true;
}

bool is_axis_line(const FlatCandidate& f) {
  if (f.basis.size() != 1) return false;
  int ones = 0, zeros = 0;
  for (const auto& x : f.basis[0]) {
    if (x == Rational(1)) ++ones;
    if (x.is_zero()) ++zeros;
  }
  return ones == 1 && zeros == static_cast<int>(f.basis[0].size()) - 1;
}

}  // namespace

TEST_CASE("candidate flats of the symmetric subdivision fan") {
  FaceLattice lattice(p2_fan(3).fan);
  auto flats = candidate_flats(lattice, 1);
  REQUIRE(flats.size() == 4);
  int axes = 0, diagonal = 0;
  for (const auto& f : flats) {
    CHECK(f.codim == 2);
    CHECK(f.basis.size() == 1);
    if (is_axis_line(f)) ++axes;
    if (is_diagonal_line(f)) ++diagonal;
  }
  CHECK(axes == 3);
  CHECK(diagonal == 1);
}

TEST_CASE("graphs at the two kinds of flats") {
  FaceLattice lattice(p2_fan(3).fan);
  for (const auto& f : candidate_flats(lattice, 1)) {
    GxiGraph g = g_xi_graph(lattice, f, 1);
    if (is_diagonal_line(f)) {
      // The three spoke walls form a triangle with no interior ray inside.
      CHECK(g.vertices.size() == 3);
      CHECK(g.edges.size() == 3);
      REQUIRE(g.components.size() == 1);
      CHECK_FALSE(g.components[0].has_valence_one);
      CHECK_FALSE(g.components[0].is_loop_around_gamma);
      CHECK(a_xi(g) == 1);
    } else {
      // A loop around the interior ray spanning the flat.
      CHECK(g.vertices.size() == 3);
      CHECK(g.edges.size() == 3);
      REQUIRE(g.components.size() == 1);
      CHECK(g.components[0].is_loop_around_gamma);
      CHECK(g.components[0].gammas.size() == 1);
      CHECK(a_xi(g) == 0);
    }
  }
}

TEST_CASE("alpha values across the d=3 fixtures") {
  FaceLattice sym(p2_fan(3).fan);
  FaceLattice pert(perturbed_p2a3().fan);
  FaceLattice ann(nonfree_annulus_fan().fan);
  CHECK(alpha(sym, 1) == 1);
  CHECK(alpha(pert, 1) == 0);
  CHECK(alpha(ann, 1) == 0);
  CHECK(alpha1_via_h1(sym) == 1);
  CHECK(alpha1_via_h1(pert) == 0);
  CHECK(alpha1_via_h1(ann) == 0);
}

TEST_CASE("perturbation splits the diagonal flat") {
  FaceLattice pert(perturbed_p2a3().fan);
  for (const auto& f : candidate_flats(pert, 1)) {
    GxiGraph g = g_xi_graph(pert, f, 1);
    CHECK(a_xi(g) == 0);
  }
  CHECK(associated_prime_flats(pert, 1).empty());
}

TEST_CASE("associated primes of the symmetric fan") {
  FaceLattice sym(p2_fan(3).fan);
  auto primes = associated_prime_flats(sym, 1);
  REQUIRE(primes.size() == 1);
  CHECK(is_diagonal_line(primes[0]));
}

TEST_CASE("tetrahedron graph in the 4-dimensional fan") {
  FaceLattice lattice(p2_fan(4).fan);
  bool found = false;
  for (const auto& f : candidate_flats(lattice, 2))
    if (is_diagonal_line(f)) {
      found = true;
      GxiGraph g = g_xi_graph(lattice, f, 2);
      CHECK(g.vertices.size() == 4);
      CHECK(g.edges.size() == 6);
      CHECK(a_xi(g) == 1);
    }
  CHECK(found);
  CHECK(alpha(lattice, 2) == 1);
  auto primes = associated_prime_flats(lattice, 2);
  REQUIRE(primes.size() == 1);
  CHECK(is_diagonal_line(primes[0]));
}

TEST_CASE("closed-form d=3 polynomial and its guard") {
  FaceLattice sym(p2_fan(3).fan);
  CHECK(hp3d(sym).poly == Polynomial(RatVec{Rational(2), Rational(0), Rational(2)}));
  FaceLattice four(p2_fan(4).fan);
  CHECK_THROWS_AS(hp3d(four), std::invalid_argument);
}

TEST_CASE("euler prediction matches the known polynomials") {
  FaceLattice sym(p2_fan(3).fan);
  CHECK(euler2_prediction(sym).poly ==
        Polynomial(RatVec{Rational(2), Rational(0), Rational(2)}));
  FaceLattice pert(perturbed_p2a3().fan);
  CHECK(euler2_prediction(pert).poly ==
        Polynomial(RatVec{Rational(1), Rational(0), Rational(2)}));
  // 4-dimensional fan: interior f-vector (4,10,10,5), alpha_1 = 0 (each
  // codim-2 correction enters the term one dimension lower), alpha_2 = 1:
  // 5 C(k+3,3) - 10 C(k+2,2) + (10 + alpha_1)(k+1) - (4 + alpha_2).
  FaceLattice four(p2_fan(4).fan);
  Polynomial expect = Rational(5) * binomial_polynomial(3, 3) -
                      Rational(10) * binomial_polynomial(2, 2) +
                      Rational(10) * binomial_polynomial(1, 1) -
                      Polynomial::constant(Rational(5));
  CHECK(euler2_prediction(four).poly == expect);
}
