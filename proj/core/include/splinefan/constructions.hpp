#ifndef SPLINEFAN_CONSTRUCTIONS_HPP
#define SPLINEFAN_CONSTRUCTIONS_HPP

#include <string>

#include "splinefan/fan.hpp"

namespace splinefan {

struct NamedFan {
  std::string name;
  std::string provenance;  // short human description of the construction
  Fan fan;
};

// Subdivision of cone(e_1, ..., e_n) in Q^n by the inner simplex on
// v_i = (n+1) e_i - (e_1 + ... + e_n): maximal cones a_0 = cone(e_1..e_n)
// and a_i = cone({v_j, e_j : j != i}) for i = 1..n. Requires n >= 2.
NamedFan p2_fan(int n);

// The complete fan of projective n-space: rays e_1..e_n and -(e_1+...+e_n),
// maximal cones all n-element ray subsets. Requires n >= 1.
NamedFan p1_fan(int n);

// p2_fan(3) with v_1 = (3,-1,-1) moved to (4,-1,-2). The result is checked to
// be a valid fan, combinatorially equivalent to p2_fan(3) under the obvious
// ray bijection, with the three spoke-wall planes no longer sharing a line;
// throws std::runtime_error("InvalidPerturbation...") otherwise.
NamedFan perturbed_p2a3();

// Cone in Q^3 (height-1 homogenization) over a triangulated triangular
// annulus: outer triangle (0,0),(4,0),(2,4), inner triangle
// (1,1),(3,1),(2,2) removed, ring split into 6 triangles.
NamedFan nonfree_annulus_fan();

}  // namespace splinefan

#endif
