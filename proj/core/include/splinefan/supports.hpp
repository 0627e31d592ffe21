#ifndef SPLINEFAN_SUPPORTS_HPP
#define SPLINEFAN_SUPPORTS_HPP

#include <string>
#include <vector>

#include "splinefan/fan.hpp"
#include "splinefan/splines.hpp"

namespace splinefan {

// A codimension-(i+1) linear subspace that can support an associated prime of
// H_{d-i} of the chain complex. Only finitely many subspaces qualify: spans
// of interior codim-(i+1) faces, and intersections span(beta) ^ span(beta')
// of interior codim-i faces that are facets of a common cone (any other
// subspace yields a graph with no edges).
struct FlatCandidate {
  int codim = 0;
  std::vector<RatVec> basis;  // canonical (RREF) basis, d - codim vectors
  std::string origin;         // "pair-intersection", "face-span", or both
};

// The graph attached to a flat xi of codim i+1: one vertex per interior
// codim-i face whose span contains xi, and an edge (beta, beta') whenever
// some cone alpha of dimension d-i+1 has both as facets with
// span(beta) ^ span(beta') = xi.
struct GxiGraph {
  std::vector<int> vertices;  // face ids
  struct Edge {
    int v1, v2;                 // indices into vertices
    std::vector<int> witnesses;  // face ids of cones alpha inducing the edge
  };
  std::vector<Edge> edges;
  struct Component {
    std::vector<int> vertex_indices;
    long num_edges = 0;
    bool has_valence_one = false;
    bool is_loop_around_gamma = false;
    std::vector<int> gammas;  // interior faces gamma in xi common to all vertices
  };
  std::vector<Component> components;
};

std::vector<FlatCandidate> candidate_flats(const FaceLattice& lattice, int i);

GxiGraph g_xi_graph(const FaceLattice& lattice, const FlatCandidate& xi, int i);

// Number of components with at least one edge, no valence-one vertex, and
// not forming a loop around an interior face inside xi.
long a_xi(const GxiGraph& g);

// alpha_i = sum of a_xi over all candidate codim-(i+1) flats.
long alpha(const FaceLattice& lattice, int i);

// alpha_1 recomputed as total first-Betti number of the codim-2 flat graphs
// minus the number of interior (d-2)-faces; equals alpha(lattice, 1).
long alpha1_via_h1(const FaceLattice& lattice);

// Closed-form Hilbert polynomial for a 3-dimensional fan:
// f_3 C(k+2,2) - f0_2 (k+1) + f0_1 + alpha_1. Throws std::invalid_argument
// ("WrongDimension") unless d = 3. stable_from is not determined by the
// closed form and is reported as -1.
HilbertPolynomial hp3d(const FaceLattice& lattice);

// Candidate flats with a_xi > 0: the codim-(i+1) associated primes of
// H_{d-i} of the chain complex.
std::vector<FlatCandidate> associated_prime_flats(const FaceLattice& lattice, int i);

// Predicted Hilbert polynomial of C0 from the alpha-corrected Euler formula
// sum_i (-1)^{d-i} (f0_i + alpha_{d-1-i}) C(k+i-1, i-1), alpha_0=alpha_{-1}=0.
// Valid under the vanishing hypotheses of the corollary; callers compare it
// against the interpolated polynomial. stable_from is reported as -1.
HilbertPolynomial euler2_prediction(const FaceLattice& lattice);

}  // namespace splinefan

#endif
