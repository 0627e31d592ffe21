#include "splinefan/supports.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "splinefan/monomials.hpp"

namespace splinefan {

namespace {

std::string basis_key(const std::vector<RatVec>& basis) {
  std::string key;
  for (const auto& v : basis) key += vec_str(v) + ";";
  return key;
}

std::vector<RatVec> span_intersection(const std::vector<RatVec>& b1,
                                      const std::vector<RatVec>& b2) {
  // Forms vanishing on each span, stacked; the common kernel is the
  // intersection.
  auto ann1 = nullspace_basis(RatMatrix::from_rows(b1));
  auto ann2 = nullspace_basis(RatMatrix::from_rows(b2));
  std::vector<RatVec> stacked = ann1;
  stacked.insert(stacked.end(), ann2.begin(), ann2.end());
  return nullspace_basis(RatMatrix::from_rows(stacked));
}

bool subspace_contains(const std::vector<RatVec>& outer, const std::vector<RatVec>& inner) {
  std::vector<RatVec> stacked = outer;
  stacked.insert(stacked.end(), inner.begin(), inner.end());
  return rank(RatMatrix::from_rows(stacked)) == outer.size();
}

std::size_t span_sum_dimension(const std::vector<RatVec>& b1, const std::vector<RatVec>& b2) {
  std::vector<RatVec> stacked = b1;
  stacked.insert(stacked.end(), b2.begin(), b2.end());
  return rank(RatMatrix::from_rows(stacked));
}

struct UF {
  std::vector<int> parent;
  explicit UF(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<FlatCandidate> candidate_flats(const FaceLattice& lattice, int i) {
  const int d = lattice.fan().dim();
  if (i < 1 || i > d - 1) throw std::invalid_argument("codimension index out of range");

  std::map<std::string, FlatCandidate> flats;
  auto add = [&](const std::vector<RatVec>& basis, const char* origin) {
    auto canon = canonical_rowspace_basis(basis, d);
    std::string key = basis_key(canon);
    auto it = flats.find(key);
    if (it == flats.end()) {
      FlatCandidate f;
      f.codim = i + 1;
      f.basis = std::move(canon);
      f.origin = origin;
      flats.emplace(std::move(key), std::move(f));
    } else if (it->second.origin.find(origin) == std::string::npos) {
      it->second.origin += "|";
      it->second.origin += origin;
    }
  };

  // Pairs of interior codim-i faces that are facets of a common cone; only
  // such pairs can carry a graph edge.
  for (int alpha : lattice.interior_faces_of_dim(d - i + 1)) {
    std::vector<int> interior_facets;
    for (int f : lattice.facets_of(alpha))
      if (lattice.face(f).interior) interior_facets.push_back(f);
    for (std::size_t a = 0; a < interior_facets.size(); ++a)
      for (std::size_t b = a + 1; b < interior_facets.size(); ++b) {
        auto meet = span_intersection(lattice.face(interior_facets[a]).span_basis,
                                      lattice.face(interior_facets[b]).span_basis);
        if (static_cast<int>(meet.size()) == d - i - 1) add(meet, "pair-intersection");
      }
  }
  for (int gamma : lattice.interior_faces_of_dim(d - i - 1))
    add(lattice.face(gamma).span_basis, "face-span");

  std::vector<FlatCandidate> out;
  out.reserve(flats.size());
  for (auto& [key, flat] : flats) out.push_back(std::move(flat));
  return out;
}

GxiGraph g_xi_graph(const FaceLattice& lattice, const FlatCandidate& xi, int i) {
  const int d = lattice.fan().dim();
  GxiGraph g;

  std::map<int, int> vertex_index;
  for (int beta : lattice.interior_faces_of_dim(d - i))
    if (subspace_contains(lattice.face(beta).span_basis, xi.basis)) {
      vertex_index[beta] = static_cast<int>(g.vertices.size());
      g.vertices.push_back(beta);
    }

  std::map<std::pair<int, int>, std::size_t> edge_index;
  for (int alpha : lattice.interior_faces_of_dim(d - i + 1)) {
    std::vector<int> facet_vertices;
    for (int f : lattice.facets_of(alpha)) {
      auto it = vertex_index.find(f);
      if (it != vertex_index.end()) facet_vertices.push_back(it->second);
    }
    for (std::size_t a = 0; a < facet_vertices.size(); ++a)
      for (std::size_t b = a + 1; b < facet_vertices.size(); ++b) {
        int v1 = std::min(facet_vertices[a], facet_vertices[b]);
        int v2 = std::max(facet_vertices[a], facet_vertices[b]);
        // The meet of two vertex spans contains xi; it equals xi exactly
        // when its dimension is dim(xi), read off from the span sum.
        std::size_t sum_dim = span_sum_dimension(lattice.face(g.vertices[v1]).span_basis,
                                                 lattice.face(g.vertices[v2]).span_basis);
        if (2 * (d - i) - sum_dim != static_cast<std::size_t>(d - i - 1)) continue;
        auto key = std::make_pair(v1, v2);
        auto it = edge_index.find(key);
        if (it == edge_index.end()) {
          edge_index.emplace(key, g.edges.size());
          g.edges.push_back({v1, v2, {alpha}});
        } else {
          g.edges[it->second].witnesses.push_back(alpha);
        }
      }
  }

  UF uf(static_cast<int>(g.vertices.size()));
  std::vector<long> valence(g.vertices.size(), 0);
  for (const auto& e : g.edges) {
    uf.unite(e.v1, e.v2);
    ++valence[e.v1];
    ++valence[e.v2];
  }

  std::map<int, int> comp_index;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    int root = uf.find(static_cast<int>(v));
    auto it = comp_index.find(root);
    if (it == comp_index.end()) {
      comp_index.emplace(root, static_cast<int>(g.components.size()));
      g.components.emplace_back();
      it = comp_index.find(root);
    }
    auto& comp = g.components[it->second];
    comp.vertex_indices.push_back(static_cast<int>(v));
    if (valence[v] == 1) comp.has_valence_one = true;
  }
  for (const auto& e : g.edges) ++g.components[comp_index[uf.find(e.v1)]].num_edges;

  // A component loops around gamma when some interior face gamma inside xi
  // is a face of every one of its vertices.
  std::vector<int> gammas_in_xi;
  for (int gamma : lattice.interior_faces_of_dim(d - i - 1))
    if (subspace_contains(xi.basis, lattice.face(gamma).span_basis))
      gammas_in_xi.push_back(gamma);
  for (auto& comp : g.components) {
    for (int gamma : gammas_in_xi) {
      bool common = true;
      for (int vi : comp.vertex_indices)
        if (!lattice.contains(g.vertices[vi], gamma)) {
          common = false;
          break;
        }
      if (common) comp.gammas.push_back(gamma);
    }
    comp.is_loop_around_gamma = !comp.gammas.empty();
  }
  return g;
}

long a_xi(const GxiGraph& g) {
  long count = 0;
  for (const auto& comp : g.components)
    if (comp.num_edges >= 1 && !comp.has_valence_one && !comp.is_loop_around_gamma) ++count;
  return count;
}

long alpha(const FaceLattice& lattice, int i) {
  long total = 0;
  for (const auto& flat : candidate_flats(lattice, i))
    total += a_xi(g_xi_graph(lattice, flat, i));
  return total;
}

long alpha1_via_h1(const FaceLattice& lattice) {
  const int d = lattice.fan().dim();
  long betti_total = 0;
  for (const auto& flat : candidate_flats(lattice, 1)) {
    GxiGraph g = g_xi_graph(lattice, flat, 1);
    betti_total += static_cast<long>(g.edges.size()) - static_cast<long>(g.vertices.size()) +
                   static_cast<long>(g.components.size());
  }
  return betti_total - static_cast<long>(lattice.interior_faces_of_dim(d - 2).size());
}

HilbertPolynomial hp3d(const FaceLattice& lattice) {
  if (lattice.fan().dim() != 3) throw std::invalid_argument("WrongDimension");
  const auto f0 = lattice.interior_f_vector();  // (f0_1, f0_2, f_3)
  const long a1 = alpha(lattice, 1);
  Polynomial p = Rational(f0[2]) * binomial_polynomial(2, 2) -
                 Rational(f0[1]) * binomial_polynomial(1, 1) +
                 Polynomial::constant(Rational(f0[0] + a1));
  return {p, -1};
}

std::vector<FlatCandidate> associated_prime_flats(const FaceLattice& lattice, int i) {
  std::vector<FlatCandidate> out;
  for (const auto& flat : candidate_flats(lattice, i))
    if (a_xi(g_xi_graph(lattice, flat, i)) > 0) out.push_back(flat);
  return out;
}

HilbertPolynomial euler2_prediction(const FaceLattice& lattice) {
  const int d = lattice.fan().dim();
  const auto f0 = lattice.interior_f_vector();
  std::vector<long> alpha_by_index(d, 0);  // alpha_j for j = 1..d-2
  for (int j = 1; j <= d - 2; ++j) alpha_by_index[j] = alpha(lattice, j);
  Polynomial p;
  for (int i = 1; i <= d; ++i) {
    long a = (d - 1 - i >= 1 && d - 1 - i <= d - 2) ? alpha_by_index[d - 1 - i] : 0;
    Rational coeff(f0[i - 1] + a);
    if ((d - i) % 2 != 0) coeff = -coeff;
    p = p + coeff * binomial_polynomial(i - 1, i - 1);
  }
  return {p, -1};
}

}  // namespace splinefan
