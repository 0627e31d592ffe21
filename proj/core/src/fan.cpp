#include "splinefan/fan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace splinefan {

namespace {

std::size_t rank_of_vectors(const std::vector<RatVec>& vectors, int dim) {
  if (vectors.empty()) return 0;
  RatMatrix m(vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = vectors[i][j];
  return rank(m);
}

// Greedy maximal independent subset in index order: the lexicographically
// earliest spanning subset.
std::vector<int> earliest_spanning_subset(const std::vector<int>& ray_indices,
                                          const std::vector<RatVec>& rays, int dim) {
  std::vector<int> chosen;
  std::vector<RatVec> vecs;
  std::size_t r = 0;
  for (int idx : ray_indices) {
    vecs.push_back(rays[idx]);
    std::size_t nr = rank_of_vectors(vecs, dim);
    if (nr > r) {
      r = nr;
      chosen.push_back(idx);
    } else {
      vecs.pop_back();
    }
  }
  return chosen;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::string FanError::message() const {
  switch (kind) {
    case Kind::NotPointed:
      return "NotPointed: maximal cone " + std::to_string(cone_a) + " contains a line";
    case Kind::NotFullDim:
      return "NotFullDim: maximal cone " + std::to_string(cone_a) +
             " is not full-dimensional";
    case Kind::BadIntersection:
      return "BadIntersection: maximal cones " + std::to_string(cone_a) + " and " +
             std::to_string(cone_b) + " do not meet in a common face";
  }
  return "unknown fan error";
}

Fan::Fan(int dim, std::vector<RatVec> rays, std::vector<std::vector<int>> maximal_cones)
    : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("Fan: dimension must be >= 1");
  for (auto& r : rays) {
    if (static_cast<int>(r.size()) != dim)
      throw std::invalid_argument("Fan: ray length does not match dimension");
    r = primitive_integer_vector(r);
  }
  // Canonical order: sort rays, remap cone indices, sort cones.
  std::vector<int> order(rays.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return rays[a] < rays[b]; });
  std::vector<int> position(rays.size());
  rays_.resize(rays.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rays_[i] = rays[order[i]];
    position[order[i]] = static_cast<int>(i);
  }
  for (std::size_t i = 1; i < rays_.size(); ++i)
    if (rays_[i] == rays_[i - 1]) throw std::invalid_argument("Fan: duplicate ray");
  std::vector<char> used(rays.size(), 0);
  for (auto& cone : maximal_cones) {
    for (auto& idx : cone) {
      if (idx < 0 || idx >= static_cast<int>(rays.size()))
        throw std::invalid_argument("Fan: cone references unknown ray");
      used[idx] = 1;
      idx = position[idx];
    }
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      throw std::invalid_argument("Fan: cone lists a ray twice");
  }
  for (char u : used)
    if (!u) throw std::invalid_argument("Fan: ray not used by any maximal cone");
  std::sort(maximal_cones.begin(), maximal_cones.end());
  maximal_cones_ = std::move(maximal_cones);
  if (maximal_cones_.empty()) throw std::invalid_argument("Fan: no maximal cones");
}

int Fan::ray_index(const RatVec& primitive_ray) const {
  auto it = std::lower_bound(rays_.begin(), rays_.end(), primitive_ray);
  if (it == rays_.end() || *it != primitive_ray)
    throw std::out_of_range("Fan: unknown ray");
  return static_cast<int>(it - rays_.begin());
}

std::vector<RatVec> cone_facet_normals(const std::vector<RatVec>& rays, int dim) {
  std::set<RatVec> found;
  const std::size_t n = rays.size();
  const int need = dim - 1;
  // Enumerate (dim-1)-element ray subsets; hyperplanes they span that have
  // all rays on one side are supporting.
  std::vector<int> idx(need);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == need) {
      RatMatrix m(need, dim);
      for (int i = 0; i < need; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = rays[idx[i]][j];
      if (need > 0 && rank(m) != static_cast<std::size_t>(need)) return;
      auto kernel = nullspace_basis(m);
      if (kernel.size() != 1) return;
      RatVec normal = primitive_integer_vector(kernel[0]);
      int pos = 0, neg = 0;
      for (const auto& r : rays) {
        int s = dot(normal, r).sign();
        if (s > 0) ++pos;
        if (s < 0) ++neg;
      }
      if (pos > 0 && neg > 0) return;
      if (neg > 0)
        for (auto& x : normal) x = -x;
      found.insert(normal);
      return;
    }
    for (int i = start; i <= static_cast<int>(n) - (need - depth); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  if (need == 0) {
    // dim = 1: the supporting "hyperplane" is the origin.
    RatVec normal{Rational(1)};
    int pos = 0, neg = 0;
    for (const auto& r : rays) {
      int s = dot(normal, r).sign();
      if (s > 0) ++pos;
      if (s < 0) ++neg;
    }
    if (!(pos > 0 && neg > 0)) {
      if (neg > 0) normal[0] = -normal[0];
      found.insert(normal);
    }
  } else {
    rec(0, 0);
  }
  return {found.begin(), found.end()};
}

namespace {

bool cone_is_pointed(const std::vector<RatVec>& rays, int dim) {
  auto normals = cone_facet_normals(rays, dim);
  if (normals.empty()) return false;
  // Sum of supporting normals lies interior to the dual cone iff it exists.
  RatVec w(dim, Rational(0));
  for (const auto& n : normals)
    for (int j = 0; j < dim; ++j) w[j] += n[j];
  for (const auto& r : rays)
    if (dot(w, r).sign() <= 0) return false;
  return true;
}

bool in_cone(const RatVec& x, const std::vector<RatVec>& facet_normals) {
  for (const auto& h : facet_normals)
    if (dot(h, x).sign() < 0) return false;
  return true;
}

// Extreme rays of the pointed cone {x : h x >= 0 for all h} by brute-force
// double description.
std::vector<RatVec> dual_extreme_rays(const std::vector<RatVec>& normals, int dim) {
  std::set<RatVec> rays_found;
  const int need = dim - 1;
  std::vector<int> idx(need);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == need) {
      RatMatrix m(need, dim);
      for (int i = 0; i < need; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = normals[idx[i]][j];
      auto kernel = nullspace_basis(m);
      if (kernel.size() != 1) return;
      RatVec v = primitive_integer_vector(kernel[0]);
      RatVec neg(v.size());
      for (std::size_t j = 0; j < v.size(); ++j) neg[j] = -v[j];
      if (in_cone(v, normals)) rays_found.insert(v);
      if (in_cone(neg, normals)) rays_found.insert(neg);
      return;
    }
    for (int i = start; i <= static_cast<int>(normals.size()) - (need - depth); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  if (need <= static_cast<int>(normals.size())) rec(0, 0);
  // A vector and its negation both inside means a lineality direction; the
  // callers only use this on intersections of pointed cones, where that
  // cannot happen.
  return {rays_found.begin(), rays_found.end()};
}

}  // namespace

std::optional<FanError> validate(const Fan& fan) {
  const int d = fan.dim();
  const auto& cones = fan.maximal_cones();
  std::vector<std::vector<RatVec>> cone_rays(cones.size());
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (int idx : cones[i]) cone_rays[i].push_back(fan.rays()[idx]);

  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (rank_of_vectors(cone_rays[i], d) != static_cast<std::size_t>(d))
      return FanError{FanError::Kind::NotFullDim, static_cast<int>(i), -1};
    if (!cone_is_pointed(cone_rays[i], d))
      return FanError{FanError::Kind::NotPointed, static_cast<int>(i), -1};
  }

  std::vector<std::vector<RatVec>> facet_normals(cones.size());
  for (std::size_t i = 0; i < cones.size(); ++i)
    facet_normals[i] = cone_facet_normals(cone_rays[i], d);

  for (std::size_t i = 0; i < cones.size(); ++i) {
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      std::set<RatVec> all(facet_normals[i].begin(), facet_normals[i].end());
      all.insert(facet_normals[j].begin(), facet_normals[j].end());
      std::vector<RatVec> stacked(all.begin(), all.end());
      auto gens = dual_extreme_rays(stacked, d);
      // F = C_i cap C_j must be a face of both cones: the smallest face of
      // each containing F may not pick up any ray outside the other cone.
      for (int side = 0; side < 2; ++side) {
        const std::size_t a = side == 0 ? i : j;
        const std::size_t b = side == 0 ? j : i;
        std::vector<RatVec> active;
        for (const auto& h : facet_normals[a]) {
          bool vanishes = true;
          for (const auto& g : gens)
            if (!dot(h, g).is_zero()) {
              vanishes = false;
              break;
            }
          if (vanishes) active.push_back(h);
        }
        for (const auto& r : cone_rays[a]) {
          bool on_face = true;
          for (const auto& h : active)
            if (!dot(h, r).is_zero()) {
              on_face = false;
              break;
            }
          if (on_face && !in_cone(r, facet_normals[b]))
            return FanError{FanError::Kind::BadIntersection, static_cast<int>(i),
                            static_cast<int>(j)};
        }
      }
    }
  }
  return std::nullopt;
}

FaceLattice::FaceLattice(const Fan& fan) : fan_(fan), by_dim_(fan.dim() + 1) {
  const int d = fan.dim();
  const auto& cones = fan.maximal_cones();

  std::set<std::vector<int>> face_sets;
  for (const auto& cone : cones) {
    std::vector<RatVec> crays;
    for (int idx : cone) crays.push_back(fan.rays()[idx]);
    auto normals = cone_facet_normals(crays, d);
    const std::size_t h = normals.size();
    if (h > 24) throw std::runtime_error("face_lattice: too many facets per cone");
    for (std::size_t mask = 0; mask < (std::size_t{1} << h); ++mask) {
      std::vector<int> on;
      for (std::size_t k = 0; k < cone.size(); ++k) {
        bool ok = true;
        for (std::size_t bi = 0; bi < h && ok; ++bi)
          if (mask & (std::size_t{1} << bi))
            if (!dot(normals[bi], crays[k]).is_zero()) ok = false;
        if (ok) on.push_back(cone[k]);
      }
      if (!on.empty()) face_sets.insert(on);
    }
  }

  faces_.reserve(face_sets.size());
  std::vector<std::pair<int, std::vector<int>>> keyed;  // (dim, rays)
  for (const auto& rs : face_sets) {
    std::vector<RatVec> vecs;
    for (int idx : rs) vecs.push_back(fan.rays()[idx]);
    keyed.emplace_back(static_cast<int>(rank_of_vectors(vecs, d)), rs);
  }
  std::sort(keyed.begin(), keyed.end());

  std::map<std::vector<int>, int> id_of;
  for (const auto& [fdim, rs] : keyed) {
    Face f;
    f.id = static_cast<int>(faces_.size());
    f.ray_indices = rs;
    f.dim = fdim;
    if (fdim == d) {
      // Top faces all share the standard orientation of Q^d, which makes the
      // two incidence signs of every wall opposite.
      for (int j = 0; j < d; ++j) {
        RatVec e(d, Rational(0));
        e[j] = 1;
        f.orientation.push_back(e);
      }
      f.span_basis = f.orientation;
    } else {
      auto subset = earliest_spanning_subset(rs, fan.rays(), d);
      for (int idx : subset) f.orientation.push_back(fan.rays()[idx]);
      f.span_basis = f.orientation;
    }
    id_of[rs] = f.id;
    by_dim_[fdim].push_back(f.id);
    faces_.push_back(std::move(f));
  }

  maximal_face_ids_.resize(cones.size());
  for (std::size_t i = 0; i < cones.size(); ++i)
    maximal_face_ids_[i] = id_of.at(cones[i]);

  for (int wid : by_dim_[d - 1]) {
    Face& wall = faces_[wid];
    for (std::size_t i = 0; i < cones.size(); ++i)
      if (std::includes(cones[i].begin(), cones[i].end(), wall.ray_indices.begin(),
                        wall.ray_indices.end()))
        wall.adjacent_maximal.push_back(static_cast<int>(i));
  }

  classify_interior();
}

void FaceLattice::classify_interior() {
  const int d = fan_.dim();
  std::vector<int> boundary_walls;
  for (int wid : by_dim_[d - 1])
    if (faces_[wid].adjacent_maximal.size() == 1) boundary_walls.push_back(wid);
  for (Face& f : faces_) {
    if (f.dim == d) {
      f.interior = true;
      continue;
    }
    f.interior = true;
    for (int wid : boundary_walls) {
      const Face& w = faces_[wid];
      if (std::includes(w.ray_indices.begin(), w.ray_indices.end(), f.ray_indices.begin(),
                        f.ray_indices.end())) {
        f.interior = false;
        break;
      }
    }
  }
}

std::vector<int> FaceLattice::interior_faces_of_dim(int dim) const {
  std::vector<int> out;
  for (int id : by_dim_[dim])
    if (faces_[id].interior) out.push_back(id);
  return out;
}

bool FaceLattice::contains(int outer_id, int inner_id) const {
  const auto& o = faces_[outer_id].ray_indices;
  const auto& i = faces_[inner_id].ray_indices;
  return std::includes(o.begin(), o.end(), i.begin(), i.end());
}

std::vector<int> FaceLattice::facets_of(int face_id) const {
  const Face& f = faces_[face_id];
  std::vector<int> out;
  if (f.dim == 0) return out;
  for (int id : by_dim_[f.dim - 1])
    if (contains(face_id, id)) out.push_back(id);
  return out;
}

int FaceLattice::incidence_sign(int alpha_id, int beta_id) const {
  const Face& alpha = faces_[alpha_id];
  const Face& beta = faces_[beta_id];
  if (beta.dim + 1 != alpha.dim || !contains(alpha_id, beta_id)) return 0;
  const int d = fan_.dim();
  const int k = alpha.dim;

  // Inward vector: any ray of alpha outside span(beta).
  RatMatrix span_rows(beta.dim, d);
  for (int i = 0; i < beta.dim; ++i)
    for (int j = 0; j < d; ++j) span_rows(i, j) = beta.span_basis[i][j];
  RatVec inward;
  for (int idx : alpha.ray_indices) {
    std::vector<RatVec> test = beta.span_basis;
    test.push_back(fan_.rays()[idx]);
    if (rank_of_vectors(test, d) == static_cast<std::size_t>(beta.dim) + 1) {
      inward = fan_.rays()[idx];
      break;
    }
  }

  // Express [orientation(beta), inward] in the orientation basis of alpha.
  RatMatrix basis(d, k), target(d, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < d; ++i) basis(i, j) = alpha.orientation[j][i];
  for (int j = 0; j < k - 1; ++j)
    for (int i = 0; i < d; ++i) target(i, j) = beta.orientation[j][i];
  for (int i = 0; i < d; ++i) target(i, k - 1) = inward[i];
  RatMatrix x = solve_exact(basis, target);
  return determinant(x).sign();
}

RatVec FaceLattice::wall_form(int wall_id) const {
  const Face& wall = faces_[wall_id];
  const int d = fan_.dim();
  if (wall.dim != d - 1) throw std::invalid_argument("wall_form: not a wall");
  RatMatrix m(wall.dim, d);
  for (int i = 0; i < wall.dim; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = wall.span_basis[i][j];
  auto kernel = nullspace_basis(m);
  RatVec form = primitive_integer_vector(kernel.at(0));
  // Positive on the first adjacent maximal cone in canonical order.
  const auto& cone = fan_.maximal_cones()[wall.adjacent_maximal.at(0)];
  for (int idx : cone) {
    int s = dot(form, fan_.rays()[idx]).sign();
    if (s < 0) {
      for (auto& x : form) x = -x;
      break;
    }
    if (s > 0) break;
  }
  return form;
}

std::vector<long> FaceLattice::interior_f_vector() const {
  const int d = fan_.dim();
  std::vector<long> out;
  for (int i = 1; i < d; ++i)
    out.push_back(static_cast<long>(interior_faces_of_dim(i).size()));
  out.push_back(static_cast<long>(by_dim_[d].size()));
  return out;
}

bool hereditary_check(const Fan& fan, const FaceLattice& lattice) {
  const int d = fan.dim();
  const auto& cones = fan.maximal_cones();
  const int n = static_cast<int>(cones.size());

  // Walls shared by two maximal cones, with the faces they contain.
  struct WallEdge {
    int a, b;
    const std::vector<int>* rays;
  };
  std::vector<WallEdge> edges;
  for (int wid : lattice.faces_of_dim(d - 1)) {
    const Face& w = lattice.face(wid);
    if (w.adjacent_maximal.size() == 2)
      edges.push_back({w.adjacent_maximal[0], w.adjacent_maximal[1], &w.ray_indices});
  }

  auto star_connected = [&](const std::vector<int>& sigma_rays) {
    UnionFind uf(n);
    std::vector<int> members;
    for (int c = 0; c < n; ++c)
      if (std::includes(cones[c].begin(), cones[c].end(), sigma_rays.begin(),
                        sigma_rays.end()))
        members.push_back(c);
    if (members.size() <= 1) return true;
    for (const auto& e : edges)
      if (std::includes(e.rays->begin(), e.rays->end(), sigma_rays.begin(),
                        sigma_rays.end()))
        uf.unite(e.a, e.b);
    for (std::size_t i = 1; i < members.size(); ++i)
      if (uf.find(members[i]) != uf.find(members[0])) return false;
    return true;
  };

  if (!star_connected({})) return false;  // the origin: the whole dual graph
  for (const Face& f : lattice.faces())
    if (!star_connected(f.ray_indices)) return false;
  return true;
}

}  // namespace splinefan
