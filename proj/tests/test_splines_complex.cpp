#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "splinefan/chain_complex.hpp"
#include "splinefan/constructions.hpp"
#include "splinefan/splines.hpp"

using namespace splinefan;

TEST_CASE("billera-rose block shape and dimensions") {
  FaceLattice lattice(p2_fan(3).fan);
  RatMatrix m = billera_rose_block(lattice, 2);
  // 6 walls x 6 degree-2 monomials rows; 4 cones x 6 + 6 walls x 3 columns.
  CHECK(m.rows() == 36);
  CHECK(m.cols() == 42);
  CHECK(spline_dimension(lattice, 0) == 1);
  CHECK(spline_dimension(lattice, 1) == 4);
  CHECK(spline_dimension(lattice, 2) == 10);
}

TEST_CASE("hilbert interpolation and stabilization") {
  FaceLattice lattice(p2_fan(3).fan);
  GradedDimensionTable t = hilbert_function(lattice, 8);
  HilbertPolynomial hp = interpolate_hilbert_polynomial(t, 3);
  CHECK(hp.poly == Polynomial(RatVec{Rational(2), Rational(0), Rational(2)}));
  CHECK(hp.stable_from == 1);  // 2k^2+2 gives 2 at k=0, table has 1
}

TEST_CASE("interpolation rejects non-polynomial tails") {
  GradedDimensionTable t;
  t.max_degree = 6;
  t.dims = {1, 2, 4, 8, 16, 32, 64};  // exponential, never polynomial of degree 2
  CHECK_THROWS_AS(interpolate_hilbert_polynomial(t, 3), std::runtime_error);
  GradedDimensionTable tiny;
  tiny.max_degree = 1;
  tiny.dims = {1, 2};
  CHECK_THROWS_AS(interpolate_hilbert_polynomial(tiny, 3), std::runtime_error);
}

TEST_CASE("free decomposition outcomes") {
  // A free table: S + S(-1) in 2 variables -> dims k+1 + k = 2k+1.
  GradedDimensionTable f;
  f.max_degree = 5;
  for (int k = 0; k <= 5; ++k) f.dims.push_back(2 * k + 2);
  // dims = (k+1) + (k+1): generators {0, 0}.
  auto r = free_decomposition(f, 2, 2);
  CHECK(r.status == FreeDecompositionResult::Status::Free);
  CHECK(r.generator_degrees == std::vector<int>{0, 0});

  // A negative numerator coefficient certifies non-freeness.
  GradedDimensionTable nf;
  nf.max_degree = 5;
  nf.dims = {2, 3, 5, 7, 9, 11};  // (1-t)^2-numerator: 2, -1, ...
  auto r2 = free_decomposition(nf, 2, 2);
  CHECK(r2.status == FreeDecompositionResult::Status::NotFree);
  CHECK(r2.negative_index == 1);

  // Rank mismatch in the window: inconclusive.
  GradedDimensionTable inc;
  inc.max_degree = 2;
  inc.dims = {1, 2, 3};
  CHECK(free_decomposition(inc, 1, 5).status == FreeDecompositionResult::Status::Inconclusive);
}

TEST_CASE("free module dimension helper") {
  CHECK(free_module_dimension({0, 1, 2}, 3, 2) == 6 + 3 + 1);
  CHECK(free_module_dimension({4}, 3, 2) == 0);
}

TEST_CASE("chain complex differentials square to zero") {
  for (const NamedFan& nf : {p2_fan(3), nonfree_annulus_fan()}) {
    FaceLattice lattice(nf.fan);
    ChainComplex complex(lattice);
    for (int k = 0; k <= 4; ++k)
      for (int i = 2; i < 3; ++i) {
        RatMatrix prod = complex.differential_block(i, k) * complex.differential_block(i + 1, k);
        bool zero = true;
        for (std::size_t r = 0; r < prod.rows(); ++r)
          for (std::size_t c = 0; c < prod.cols(); ++c)
            if (!prod(r, c).is_zero()) zero = false;
        CHECK(zero);
      }
  }
}

TEST_CASE("top homology equals the spline dimension") {
  FaceLattice lattice(perturbed_p2a3().fan);
  ChainComplex complex(lattice);
  HomologyTable h = homology_dimensions(complex, 5);
  for (int k = 0; k <= 5; ++k) CHECK(h.dims[3][k] == spline_dimension(lattice, k));
}

TEST_CASE("euler identity holds and its check detects corruption") {
  FaceLattice lattice(p2_fan(3).fan);
  ChainComplex complex(lattice);
  HomologyTable h = homology_dimensions(complex, 5);
  GradedDimensionTable c0 = hilbert_function(lattice, 5);
  CHECK(euler_identity_check(lattice, h, c0));
  GradedDimensionTable corrupted = c0;
  corrupted.dims[3] += 1;
  CHECK_FALSE(euler_identity_check(lattice, h, corrupted));
}
