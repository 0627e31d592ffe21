#ifndef SPLINEFAN_ARRANGEMENTS_HPP
#define SPLINEFAN_ARRANGEMENTS_HPP

#include <vector>

#include "splinefan/fan.hpp"
#include "splinefan/polynomial.hpp"
#include "splinefan/splines.hpp"

namespace splinefan {

// A central hyperplane arrangement: pairwise nonproportional nonzero linear
// forms with integer coefficients. Build through make_arrangement, which
// normalizes to primitive vectors (first nonzero entry positive), removes
// duplicates, and sorts; throws std::invalid_argument on a zero form.
struct Arrangement {
  int ambient_dim = 0;
  std::vector<RatVec> forms;
};

Arrangement make_arrangement(int ambient_dim, const std::vector<RatVec>& forms);

// Flats ordered by reverse inclusion from the ambient space; a flat is
// identified by the set of hyperplanes containing it, and s <= t in the
// lattice iff hyperplanes(s) is a subset of hyperplanes(t).
struct IntersectionLattice {
  struct Flat {
    std::vector<RatVec> basis;     // canonical basis of the subspace
    int rank = 0;                  // codimension in the ambient space
    std::vector<int> hyperplanes;  // sorted indices of forms vanishing on it
    long mobius = 0;
  };
  int ambient_dim = 0;
  std::vector<Flat> flats;  // flats[0] is the ambient space; sorted by (rank, hyperplanes)
};

// Closure of the hyperplanes under intersection, with the Mobius function
// mu(0-hat) = 1, mu(t) = -sum_{s<t} mu(s) already filled in.
IntersectionLattice intersection_lattice(const Arrangement& a);

// pi(A, t) = sum over flats of mu(x) (-t)^rank(x); integer coefficients.
Polynomial poincare_polynomial(const Arrangement& a);

// dim of the degree-k piece of D(A) = { theta : theta(l_i) in <l_i> }:
// the nullity of the block [theta(l_i) | -l_i q_i] with the d coefficient
// forms theta_j of degree k and one multiplier q_i of degree k-1 per form.
long derivation_dimension(const Arrangement& a, int k);

GradedDimensionTable derivation_table(const Arrangement& a, int max_degree);

// True iff poincare_polynomial(a) = prod_i (1 + d_i t).
bool terao_check(const Arrangement& a, const std::vector<int>& exponents);

// free_decomposition of the derivation table with rank = ambient_dim.
FreeDecompositionResult exponents_from_derivations(const Arrangement& a, int max_degree);

// The braid arrangement of the symmetric group on n+1 letters: forms
// x_j - x_i in n+1 variables, or the essential version with x_{n+1} set to
// zero (forms x_i and x_j - x_i in n variables).
Arrangement braid_arrangement(int n, bool essential);

// Spans of the interior walls of a fan, as an arrangement in Q^d.
Arrangement defining_arrangement(const FaceLattice& lattice);

}  // namespace splinefan

#endif
