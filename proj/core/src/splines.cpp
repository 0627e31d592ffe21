#include "splinefan/splines.hpp"

#include <stdexcept>

#include "splinefan/monomials.hpp"

namespace splinefan {

RatMatrix billera_rose_block(const FaceLattice& lattice, int k) {
  const Fan& fan = lattice.fan();
  const int d = fan.dim();
  const auto walls = lattice.interior_faces_of_dim(d - 1);
  const auto& max_ids = lattice.maximal_face_ids();
  const std::size_t num_cones = max_ids.size();

  MonomialBasis deg_k(d, k);
  const std::size_t nk = deg_k.size();
  const std::size_t nk1 = k >= 1 ? MonomialBasis(d, k - 1).size() : 0;

  RatMatrix m(walls.size() * nk, num_cones * nk + walls.size() * nk1);

  for (std::size_t w = 0; w < walls.size(); ++w) {
    const Face& wall = lattice.face(walls[w]);
    const int a1 = wall.adjacent_maximal.at(0);
    const int a2 = wall.adjacent_maximal.at(1);
    const int s1 = lattice.incidence_sign(max_ids[a1], walls[w]);
    const int s2 = lattice.incidence_sign(max_ids[a2], walls[w]);
    const std::size_t row0 = w * nk;
    // Continuity across the wall: s1 p_{a1} + s2 p_{a2} - l_tau q_tau = 0.
    for (std::size_t r = 0; r < nk; ++r) {
      m(row0 + r, a1 * nk + r) = s1;
      m(row0 + r, a2 * nk + r) = s2;
    }
    if (k >= 1) {
      RatVec l = lattice.wall_form(walls[w]);
      RatMatrix mult = mult_by_linear_form(l, k);
      const std::size_t col0 = num_cones * nk + w * nk1;
      for (std::size_t r = 0; r < nk; ++r)
        for (std::size_t c = 0; c < nk1; ++c)
          if (!mult(r, c).is_zero()) m(row0 + r, col0 + c) = -mult(r, c);
    }
  }
  return m;
}

long spline_dimension(const FaceLattice& lattice, int k) {
  return static_cast<long>(nullity(billera_rose_block(lattice, k)));
}

GradedDimensionTable hilbert_function(const FaceLattice& lattice, int max_degree) {
  GradedDimensionTable t;
  t.label = "C0";
  t.max_degree = max_degree;
  t.dims.resize(max_degree + 1);
  for (int k = 0; k <= max_degree; ++k) t.dims[k] = spline_dimension(lattice, k);
  return t;
}

HilbertPolynomial interpolate_hilbert_polynomial(const GradedDimensionTable& table, int d) {
  const int K = table.max_degree;
  if (d < 1 || K + 1 < d + 1) throw std::runtime_error("NotStabilized: table too short");
  std::vector<std::pair<Rational, Rational>> pts;
  for (int k = K - d + 1; k <= K; ++k)
    pts.emplace_back(Rational(k), Rational(table.dims[k]));
  HilbertPolynomial hp;
  hp.poly = lagrange_interpolate(pts);
  // Verify one degree beyond the fitted window, then extend backward.
  if (hp.poly.eval(Rational(K - d)) != Rational(table.dims[K - d]))
    throw std::runtime_error("NotStabilized: last entries do not fit a polynomial");
  int stable = K - d;
  while (stable > 0 && hp.poly.eval(Rational(stable - 1)) == Rational(table.dims[stable - 1]))
    --stable;
  hp.stable_from = stable;
  return hp;
}

FreeDecompositionResult free_decomposition(const GradedDimensionTable& table, int d,
                                           long expected_rank) {
  const int K = table.max_degree;
  FreeDecompositionResult res;
  // Numerator coefficients of (sum dims[k] t^k) (1-t)^d; coefficient a
  // depends only on dims[0..a], so all K+1 of them are exact.
  std::vector<Integer> numerator(K + 1, Integer(0));
  for (int a = 0; a <= K; ++a) {
    Integer c = 0;
    for (int j = 0; j <= d && j <= a; ++j) {
      Integer term = binomial(d, j) * table.dims[a - j];
      if (j % 2 == 0)
        c += term;
      else
        c -= term;
    }
    numerator[a] = c;
  }
  Integer total = 0;
  for (int a = 0; a <= K; ++a) {
    if (numerator[a] < 0) {
      res.status = FreeDecompositionResult::Status::NotFree;
      res.negative_index = a;
      return res;
    }
    total += numerator[a];
  }
  if (total != expected_rank || numerator[K] != 0) {
    // Either the window ends before the numerator does, or it never will:
    // with what is computed we cannot certify a decomposition.
    res.status = FreeDecompositionResult::Status::Inconclusive;
    return res;
  }
  res.status = FreeDecompositionResult::Status::Free;
  for (int a = 0; a <= K; ++a)
    for (Integer c = numerator[a]; c > 0; --c) res.generator_degrees.push_back(a);
  return res;
}

long free_module_dimension(const std::vector<int>& generator_degrees, int d, int k) {
  Integer total = 0;
  for (int a : generator_degrees) total += forms_dimension(d, k - a);
  return static_cast<long>(total.get_si());
}

}  // namespace splinefan
