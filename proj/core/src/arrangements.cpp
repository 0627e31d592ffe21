#include "splinefan/arrangements.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "splinefan/monomials.hpp"

namespace splinefan {

Arrangement make_arrangement(int ambient_dim, const std::vector<RatVec>& forms) {
  Arrangement a;
  a.ambient_dim = ambient_dim;
  for (const auto& f : forms) {
    if (static_cast<int>(f.size()) != ambient_dim)
      throw std::invalid_argument("form has wrong ambient dimension");
    if (is_zero_vector(f)) throw std::invalid_argument("zero form in arrangement");
    a.forms.push_back(primitive_integer_vector(f, /*fix_sign=*/true));
  }
  std::sort(a.forms.begin(), a.forms.end());
  a.forms.erase(std::unique(a.forms.begin(), a.forms.end()), a.forms.end());
  return a;
}

IntersectionLattice intersection_lattice(const Arrangement& a) {
  const int d = a.ambient_dim;
  const int n = static_cast<int>(a.forms.size());

  auto vanishes_on = [&](const RatVec& form, const std::vector<RatVec>& basis) {
    for (const auto& v : basis)
      if (!dot(form, v).is_zero()) return false;
    return true;
  };
  auto hyperplane_set = [&](const std::vector<RatVec>& basis) {
    std::vector<int> s;
    for (int h = 0; h < n; ++h)
      if (vanishes_on(a.forms[h], basis)) s.push_back(h);
    return s;
  };

  IntersectionLattice lat;
  lat.ambient_dim = d;

  // BFS from the ambient space, intersecting each known flat with each
  // hyperplane; a flat is its set of containing hyperplanes.
  std::map<std::vector<int>, IntersectionLattice::Flat> seen;
  std::vector<RatVec> ambient_basis;
  for (int i = 0; i < d; ++i) {
    RatVec e(d, Rational(0));
    e[i] = 1;
    ambient_basis.push_back(e);
  }
  IntersectionLattice::Flat zero_hat{ambient_basis, 0, hyperplane_set(ambient_basis), 0};
  std::vector<std::vector<int>> queue{zero_hat.hyperplanes};
  seen.emplace(zero_hat.hyperplanes, zero_hat);
  while (!queue.empty()) {
    std::vector<int> key = queue.back();
    queue.pop_back();
    IntersectionLattice::Flat flat = seen.at(key);
    for (int h = 0; h < n; ++h) {
      if (std::binary_search(flat.hyperplanes.begin(), flat.hyperplanes.end(), h)) continue;
      std::vector<RatVec> cutting;
      for (int g : flat.hyperplanes) cutting.push_back(a.forms[g]);
      cutting.push_back(a.forms[h]);
      auto basis = nullspace_basis(RatMatrix::from_rows(cutting));
      auto hs = hyperplane_set(basis);
      if (seen.count(hs)) continue;
      IntersectionLattice::Flat next;
      next.basis = canonical_rowspace_basis(basis, d);
      next.rank = d - static_cast<int>(basis.size());
      next.hyperplanes = hs;
      seen.emplace(hs, next);
      queue.push_back(hs);
    }
  }

  for (auto& [key, flat] : seen) lat.flats.push_back(flat);
  std::sort(lat.flats.begin(), lat.flats.end(), [](const auto& x, const auto& y) {
    return std::tie(x.rank, x.hyperplanes) < std::tie(y.rank, y.hyperplanes);
  });

  // Mobius recursion in rank order; s < t iff hyperplanes(s) strictly
  // contained in hyperplanes(t).
  for (std::size_t t = 0; t < lat.flats.size(); ++t) {
    if (t == 0) {
      lat.flats[0].mobius = 1;
      continue;
    }
    long mu = 0;
    for (std::size_t s = 0; s < t; ++s)
      if (lat.flats[s].hyperplanes.size() < lat.flats[t].hyperplanes.size() &&
          std::includes(lat.flats[t].hyperplanes.begin(), lat.flats[t].hyperplanes.end(),
                        lat.flats[s].hyperplanes.begin(), lat.flats[s].hyperplanes.end()))
        mu += lat.flats[s].mobius;
    lat.flats[t].mobius = -mu;
  }
  return lat;
}

Polynomial poincare_polynomial(const Arrangement& a) {
  IntersectionLattice lat = intersection_lattice(a);
  RatVec coeffs(a.ambient_dim + 1, Rational(0));
  for (const auto& flat : lat.flats) {
    long signed_mu = flat.rank % 2 == 0 ? flat.mobius : -flat.mobius;
    coeffs[flat.rank] = coeffs[flat.rank] + Rational(signed_mu);
  }
  return Polynomial(coeffs);
}

long derivation_dimension(const Arrangement& a, int k) {
  const int d = a.ambient_dim;
  const int n = static_cast<int>(a.forms.size());
  const std::size_t nk = static_cast<std::size_t>(forms_dimension(d, k).get_si());
  const std::size_t nk1 =
      k >= 1 ? static_cast<std::size_t>(forms_dimension(d, k - 1).get_si()) : 0;
  RatMatrix m(n * nk, d * nk + n * nk1);
  for (int i = 0; i < n; ++i) {
    const std::size_t row0 = i * nk;
    // theta(l_i) = sum_j (l_i)_j theta_j, each theta_j a degree-k form.
    for (int j = 0; j < d; ++j) {
      if (a.forms[i][j].is_zero()) continue;
      for (std::size_t r = 0; r < nk; ++r) m(row0 + r, j * nk + r) = a.forms[i][j];
    }
    if (k >= 1) {
      RatMatrix mult = mult_by_linear_form(a.forms[i], k);
      const std::size_t col0 = d * nk + i * nk1;
      for (std::size_t r = 0; r < nk; ++r)
        for (std::size_t c = 0; c < nk1; ++c)
          if (!mult(r, c).is_zero()) m(row0 + r, col0 + c) = -mult(r, c);
    }
  }
  // The multipliers q_i are determined by theta (l_i q_i = theta(l_i)), so
  // the kernel of the block matrix projects bijectively onto D(A)_k.
  return static_cast<long>(nullity(m));
}

GradedDimensionTable derivation_table(const Arrangement& a, int max_degree) {
  GradedDimensionTable t;
  t.label = "D";
  t.max_degree = max_degree;
  t.dims.resize(max_degree + 1);
  for (int k = 0; k <= max_degree; ++k) t.dims[k] = derivation_dimension(a, k);
  return t;
}

bool terao_check(const Arrangement& a, const std::vector<int>& exponents) {
  Polynomial prod = Polynomial::constant(1);
  for (int e : exponents) prod = prod * Polynomial(RatVec{Rational(1), Rational(e)});
  return poincare_polynomial(a) == prod;
}

FreeDecompositionResult exponents_from_derivations(const Arrangement& a, int max_degree) {
  return free_decomposition(derivation_table(a, max_degree), a.ambient_dim, a.ambient_dim);
}

Arrangement braid_arrangement(int n, bool essential) {
  if (n < 1) throw std::invalid_argument("braid arrangement needs n >= 1");
  std::vector<RatVec> forms;
  if (essential) {
    for (int i = 0; i < n; ++i) {
      RatVec f(n, Rational(0));
      f[i] = 1;
      forms.push_back(f);
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        RatVec f(n, Rational(0));
        f[j] = 1;
        f[i] = -1;
        forms.push_back(f);
      }
    return make_arrangement(n, forms);
  }
  for (int i = 0; i < n + 1; ++i)
    for (int j = i + 1; j < n + 1; ++j) {
      RatVec f(n + 1, Rational(0));
      f[j] = 1;
      f[i] = -1;
      forms.push_back(f);
    }
  return make_arrangement(n + 1, forms);
}

Arrangement defining_arrangement(const FaceLattice& lattice) {
  const int d = lattice.fan().dim();
  std::vector<RatVec> forms;
  for (int wall : lattice.interior_faces_of_dim(d - 1)) forms.push_back(lattice.wall_form(wall));
  return make_arrangement(d, forms);
}

}  // namespace splinefan
