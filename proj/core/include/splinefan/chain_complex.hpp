#ifndef SPLINEFAN_CHAIN_COMPLEX_HPP
#define SPLINEFAN_CHAIN_COMPLEX_HPP

#include <vector>

#include "splinefan/fan.hpp"
#include "splinefan/splines.hpp"

namespace splinefan {

// The cellular chain complex over the interior faces of a fan: at position i
// one polynomial quotient per interior i-face (the full ring for maximal
// cones), with differentials (incidence sign) x (restriction to the facet's
// span). Each face carries a fixed linear isomorphism Q^{dim} -> span(face)
// given by its orientation basis, so restrictions become substitution
// matrices; the choice does not affect any dimension.
class ChainComplex {
public:
  explicit ChainComplex(const FaceLattice& lattice);

  const FaceLattice& lattice() const { return lattice_; }
  int dim() const { return d_; }

  // Interior i-face ids at position i (position d: all maximal cones).
  const std::vector<int>& position(int i) const { return positions_[i]; }

  // Matrix of the degree-k piece of the differential at position i
  // (2 <= i <= d): source one degree-k form block per interior i-face,
  // target per interior (i-1)-face.
  RatMatrix differential_block(int i, int k) const;

  // Total dimension of the degree-k piece at position i.
  long position_dimension(int i, int k) const;

private:
  const FaceLattice& lattice_;
  int d_;
  std::vector<std::vector<int>> positions_;            // by position 0..d
  std::vector<RatMatrix> span_coords_;                 // per face id: d x dim basis columns
  struct Arrow {
    int source_index, target_index;  // indices into positions_[i], positions_[i-1]
    int sign;
    RatMatrix inclusion;  // dim(beta) columns expressed in alpha coordinates
  };
  std::vector<std::vector<Arrow>> arrows_;  // arrows_[i]: from position i to i-1
};

// dims[i][k] = dim of the degree-k piece of H_i, i = 1..d, k = 0..max_degree.
struct HomologyTable {
  int dim = 0;
  int max_degree = 0;
  std::vector<std::vector<long>> dims;  // dims[i][k], index 0 unused
};

HomologyTable homology_dimensions(const ChainComplex& complex, int max_degree);

// Degreewise Euler characteristic identity: for every k <= max_degree,
//   dim C0_k = sum_i (-1)^{d-i} f0_i C(k+i-1, i-1)
//            + sum_{i<d} (-1)^{d-1-i} dim H_i(C)_k.
bool euler_identity_check(const FaceLattice& lattice, const HomologyTable& homology,
                          const GradedDimensionTable& c0_table);

}  // namespace splinefan

#endif
