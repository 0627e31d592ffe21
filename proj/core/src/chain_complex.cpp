#include "splinefan/chain_complex.hpp"

#include <stdexcept>

#include "splinefan/monomials.hpp"

namespace splinefan {

ChainComplex::ChainComplex(const FaceLattice& lattice)
    : lattice_(lattice), d_(lattice.fan().dim()) {
  positions_.resize(d_ + 1);
  arrows_.resize(d_ + 1);
  span_coords_.resize(lattice.faces().size());

  std::vector<int> position_index(lattice.faces().size(), -1);
  for (int i = 1; i <= d_; ++i) {
    positions_[i] = lattice.interior_faces_of_dim(i);
    for (std::size_t s = 0; s < positions_[i].size(); ++s)
      position_index[positions_[i][s]] = static_cast<int>(s);
  }
  for (int i = 1; i <= d_; ++i) {
    for (int id : positions_[i]) {
      const Face& f = lattice.face(id);
      RatMatrix b(d_, f.dim);
      for (int c = 0; c < f.dim; ++c)
        for (int r = 0; r < d_; ++r) b(r, c) = f.orientation[c][r];
      span_coords_[id] = b;
    }
  }
  for (int i = 2; i <= d_; ++i) {
    for (std::size_t s = 0; s < positions_[i].size(); ++s) {
      const int alpha = positions_[i][s];
      for (int beta : lattice.facets_of(alpha)) {
        if (!lattice.face(beta).interior) continue;
        Arrow a;
        a.source_index = static_cast<int>(s);
        a.target_index = position_index[beta];
        a.sign = lattice.incidence_sign(alpha, beta);
        if (a.sign == 0) throw std::logic_error("facet without incidence sign");
        // Coordinates of beta's orientation basis inside alpha's.
        a.inclusion = solve_exact(span_coords_[alpha], span_coords_[beta]);
        arrows_[i].push_back(a);
      }
    }
  }
}

long ChainComplex::position_dimension(int i, int k) const {
  return static_cast<long>(positions_[i].size()) *
         static_cast<long>(forms_dimension(i, k).get_si());
}

RatMatrix ChainComplex::differential_block(int i, int k) const {
  if (i < 2 || i > d_) throw std::invalid_argument("differential position out of range");
  const std::size_t src_block = static_cast<std::size_t>(forms_dimension(i, k).get_si());
  const std::size_t tgt_block = static_cast<std::size_t>(forms_dimension(i - 1, k).get_si());
  RatMatrix m(positions_[i - 1].size() * tgt_block, positions_[i].size() * src_block);
  for (const Arrow& a : arrows_[i]) {
    RatMatrix sub = substitution_matrix(a.inclusion, k);  // tgt_block x src_block
    const std::size_t r0 = a.target_index * tgt_block;
    const std::size_t c0 = a.source_index * src_block;
    for (std::size_t r = 0; r < tgt_block; ++r)
      for (std::size_t c = 0; c < src_block; ++c)
        if (!sub(r, c).is_zero())
          m(r0 + r, c0 + c) = a.sign > 0 ? sub(r, c) : -sub(r, c);
  }
  return m;
}

HomologyTable homology_dimensions(const ChainComplex& complex, int max_degree) {
  const int d = complex.dim();
  HomologyTable t;
  t.dim = d;
  t.max_degree = max_degree;
  t.dims.assign(d + 1, std::vector<long>(max_degree + 1, 0));
  for (int k = 0; k <= max_degree; ++k) {
    // ranks[i] = rank of the degree-k differential leaving position i;
    // nothing leaves position 1 and nothing arrives above position d.
    std::vector<long> ranks(d + 2, 0);
    for (int i = 2; i <= d; ++i)
      ranks[i] = static_cast<long>(rank(complex.differential_block(i, k)));
    for (int i = 1; i <= d; ++i)
      t.dims[i][k] = complex.position_dimension(i, k) - ranks[i] - ranks[i + 1];
  }
  return t;
}

bool euler_identity_check(const FaceLattice& lattice, const HomologyTable& homology,
                          const GradedDimensionTable& c0_table) {
  const int d = lattice.fan().dim();
  const auto f0 = lattice.interior_f_vector();  // f0[i-1] counts interior i-faces
  const int K = std::min(homology.max_degree, c0_table.max_degree);
  for (int k = 0; k <= K; ++k) {
    Integer expect = 0;
    for (int i = 1; i <= d; ++i) {
      Integer term = Integer(f0[i - 1]) * forms_dimension(i, k);
      if ((d - i) % 2 == 0)
        expect += term;
      else
        expect -= term;
    }
    for (int i = 1; i < d; ++i) {
      Integer term = homology.dims[i][k];
      if ((d - 1 - i) % 2 == 0)
        expect += term;
      else
        expect -= term;
    }
    if (expect != Integer(c0_table.dims[k])) return false;
  }
  return true;
}

}  // namespace splinefan
