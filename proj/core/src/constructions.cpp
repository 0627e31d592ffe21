#include "splinefan/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace splinefan {

namespace {

RatVec unit(int n, int i) {
  RatVec e(n, Rational(0));
  e[i] = 1;
  return e;
}

Fan build_p2(int n, const std::vector<RatVec>& v_override) {
  std::vector<RatVec> rays;
  for (int i = 0; i < n; ++i) rays.push_back(unit(n, i));
  for (int i = 0; i < n; ++i) {
    RatVec v(n, Rational(-1));
    v[i] = n;  // (n+1) e_i - sum e_j
    rays.push_back(v);
  }
  for (std::size_t i = 0; i < v_override.size(); ++i) rays[n + i] = v_override[i];
  std::vector<std::vector<int>> cones;
  std::vector<int> a0;
  for (int i = 0; i < n; ++i) a0.push_back(i);
  cones.push_back(a0);
  for (int i = 0; i < n; ++i) {
    std::vector<int> ai;
    for (int j = 0; j < n; ++j)
      if (j != i) {
        ai.push_back(j);      // e_j
        ai.push_back(n + j);  // v_j
      }
    cones.push_back(ai);
  }
  return Fan(n, rays, cones);
}

// Faces of a lattice as (mapped ray set, dim, interior) keys, with rays
// translated through the given vector-level bijection.
std::set<std::tuple<std::vector<int>, int, bool>> face_keys(
    const FaceLattice& lattice, const std::map<RatVec, RatVec>& ray_map, const Fan& target) {
  std::set<std::tuple<std::vector<int>, int, bool>> keys;
  for (const Face& f : lattice.faces()) {
    std::vector<int> mapped;
    for (int r : f.ray_indices) {
      const RatVec& ray = lattice.fan().rays()[r];
      auto it = ray_map.find(ray);
      mapped.push_back(target.ray_index(it == ray_map.end() ? ray : it->second));
    }
    std::sort(mapped.begin(), mapped.end());
    keys.emplace(std::move(mapped), f.dim, f.interior);
  }
  return keys;
}

}  // namespace

NamedFan p2_fan(int n) {
  if (n < 2) throw std::invalid_argument("p2_fan needs n >= 2");
  return {"p2_a" + std::to_string(n), "inner-simplex subdivision of cone(e_1..e_n)",
          build_p2(n, {})};
}

NamedFan p1_fan(int n) {
  if (n < 1) throw std::invalid_argument("p1_fan needs n >= 1");
  std::vector<RatVec> rays;
  for (int i = 0; i < n; ++i) rays.push_back(unit(n, i));
  rays.push_back(RatVec(n, Rational(-1)));
  std::vector<std::vector<int>> cones;
  for (int omit = 0; omit <= n; ++omit) {
    std::vector<int> cone;
    for (int i = 0; i <= n; ++i)
      if (i != omit) cone.push_back(i);
    cones.push_back(cone);
  }
  return {"p1_a" + std::to_string(n), "complete fan of projective n-space", Fan(n, rays, cones)};
}

NamedFan perturbed_p2a3() {
  // In the plane x+y+z=1 the fan is the triangle e1 e2 e3 inside the
  // triangle v1 v2 v3, quartered into the center and three quads. Moving
  // v1 = (3,-1,-1) to (4,-1,-2) keeps both quads at v1 convex (so the face
  // lattice is unchanged) while (1,1,1) leaves span{e1, v1}: the three
  // spoke walls no longer meet in a line.
  RatVec v1_old{3, -1, -1};
  RatVec v1_new{4, -1, -2};
  Fan fan = build_p2(3, {v1_new});
  if (auto err = validate(fan))
    throw std::runtime_error("InvalidPerturbation: " + err->message());

  // Combinatorial equivalence with p2_fan(3) under the ray bijection that
  // moves only v_1.
  Fan reference = build_p2(3, {});
  FaceLattice ref_lattice(reference);
  FaceLattice lattice(fan);
  std::map<RatVec, RatVec> forward{{v1_old, v1_new}};
  if (face_keys(ref_lattice, forward, fan) != face_keys(lattice, {}, fan))
    throw std::runtime_error("InvalidPerturbation: face lattice changed");

  // The three walls between outer cones must no longer share a line: their
  // normal forms must span all of Q^3.
  const int a0 = [&] {
    auto is_unit = [](const RatVec& ray) {
      int ones = 0;
      for (const auto& x : ray) {
        if (x == Rational(1))
          ++ones;
        else if (!x.is_zero())
          return false;
      }
      return ones == 1;
    };
    for (std::size_t i = 0; i < fan.maximal_cones().size(); ++i) {
      bool all_units = true;
      for (int r : fan.maximal_cones()[i])
        if (!is_unit(fan.rays()[r])) all_units = false;
      if (all_units) return static_cast<int>(i);
    }
    throw std::runtime_error("InvalidPerturbation: central cone not found");
  }();
  std::vector<RatVec> spoke_forms;
  for (int wall : lattice.interior_faces_of_dim(2)) {
    const auto& adj = lattice.face(wall).adjacent_maximal;
    if (adj[0] != a0 && adj[1] != a0) spoke_forms.push_back(lattice.wall_form(wall));
  }
  if (spoke_forms.size() != 3 || rank(RatMatrix::from_rows(spoke_forms)) != 3)
    throw std::runtime_error("InvalidPerturbation: spoke-wall concurrency not broken");

  return {"sigma_prime", "p2_a3 with v_1 moved to (4,-1,-2)", fan};
}

NamedFan nonfree_annulus_fan() {
  // Planar vertices, homogenized at height 1. The inner triangle is removed
  // and the ring between the triangles is split into 6 triangles.
  const std::vector<std::pair<long, long>> pts = {
      {0, 0}, {4, 0}, {2, 4},  // outer O1 O2 O3
      {1, 1}, {3, 1}, {2, 2},  // inner I1 I2 I3
  };
  std::vector<RatVec> rays;
  for (auto [x, y] : pts) rays.push_back(RatVec{Rational(x), Rational(y), Rational(1)});
  // Indices: O1=0 O2=1 O3=2 I1=3 I2=4 I3=5. I3 can only join O3 (the
  // segments O1-I3 and O2-I3 pass through I1 and I2), which fixes the fan
  // of this triangulation of the ring.
  std::vector<std::vector<int>> triangles = {
      {0, 1, 3}, {1, 4, 3}, {1, 2, 4}, {2, 4, 5}, {2, 5, 3}, {2, 3, 0},
  };
  return {"annulus", "cone over a triangulated triangular annulus", Fan(3, rays, triangles)};
}

}  // namespace splinefan
