#ifndef SPLINEFAN_SPLINES_HPP
#define SPLINEFAN_SPLINES_HPP

#include <optional>
#include <string>
#include <vector>

#include "splinefan/fan.hpp"
#include "splinefan/polynomial.hpp"

namespace splinefan {

// Degreewise dimensions of a graded module, degrees 0..max_degree.
struct GradedDimensionTable {
  std::string label;
  int max_degree = 0;
  std::vector<long> dims;  // dims[k] for k = 0..max_degree
};

struct HilbertPolynomial {
  Polynomial poly;
  int stable_from = 0;  // least degree from which table and polynomial agree
};

// Result of the Hilbert-series freeness necessary-condition test. When the
// numerator (sum dims[k] t^k) * (1-t)^d has only nonnegative coefficients
// summing to the expected rank, the exponents of t are candidate generator
// degrees; any negative coefficient certifies the module is not free.
struct FreeDecompositionResult {
  enum class Status { Free, NotFree, Inconclusive };
  Status status = Status::Inconclusive;
  std::vector<int> generator_degrees;  // sorted multiset, when status == Free
  int negative_index = -1;             // when status == NotFree
};

// Degree-k block of the Billera-Rose matrix [d_d | diag(l_tau)]: one row per
// (interior wall, degree-k monomial); unknown blocks are one degree-k form
// per maximal cone followed by one degree-(k-1) form per interior wall.
RatMatrix billera_rose_block(const FaceLattice& lattice, int k);

// dim of the degree-k piece of C0(fan): the nullity of the Billera-Rose
// block (the multiplier forms are determined by the cone polynomials).
long spline_dimension(const FaceLattice& lattice, int k);

GradedDimensionTable hilbert_function(const FaceLattice& lattice, int max_degree);

// Fits a degree-(d-1) polynomial through the last d table entries and walks
// backward to find the stabilization degree. Throws std::runtime_error
// ("NotStabilized") if even the last d+1 entries disagree.
HilbertPolynomial interpolate_hilbert_polynomial(const GradedDimensionTable& table, int d);

FreeDecompositionResult free_decomposition(const GradedDimensionTable& table, int d,
                                           long expected_rank);

// Hilbert function of a free module  sum_i S(-a_i)  in d variables, for
// cross-checking candidate generator degrees against a table.
long free_module_dimension(const std::vector<int>& generator_degrees, int d, int k);

}  // namespace splinefan

#endif
