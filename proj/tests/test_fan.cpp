#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "splinefan/constructions.hpp"
#include "splinefan/fan.hpp"

using namespace splinefan;

namespace {

RatVec v(std::initializer_list<long> xs) {
  RatVec out;
  for (long x : xs) out.push_back(Rational(x));
  return out;
}

}  // namespace

TEST_CASE("fan canonicalization and ray normalization") {
  Fan fan(2, {v({0, 2}), v({3, 0})}, {{1, 0}});
  CHECK(fan.rays()[0] == v({0, 1}));
  CHECK(fan.rays()[1] == v({1, 0}));
  CHECK(fan.maximal_cones() == std::vector<std::vector<int>>{{0, 1}});
  CHECK_THROWS(Fan(2, {v({1, 0}), v({2, 0})}, {{0, 1}}));  // duplicate ray
  CHECK_THROWS(Fan(2, {v({1, 0}), v({0, 1}), v({1, 1})}, {{0, 1}}));  // unused ray
}

TEST_CASE("validate rejects the documented failure modes") {
  // Not full-dimensional.
  Fan flat(2, {v({1, 0})}, {{0}});
  auto e1 = validate(flat);
  REQUIRE(e1.has_value());
  CHECK(e1->kind == FanError::Kind::NotFullDim);

  // Not pointed: contains the x-axis.
  Fan halfplane(2, {v({1, 0}), v({-1, 0}), v({0, 1})}, {{0, 1, 2}});
  auto e2 = validate(halfplane);
  REQUIRE(e2.has_value());
  CHECK(e2->kind == FanError::Kind::NotPointed);

  // Overlapping cones that do not meet in a common face.
  Fan overlap(2, {v({1, 0}), v({0, 1}), v({1, 1}), v({3, 1})}, {{0, 1}, {2, 3}});
  auto e3 = validate(overlap);
  REQUIRE(e3.has_value());
  CHECK(e3->kind == FanError::Kind::BadIntersection);
  CHECK_FALSE(e3->message().empty());

  CHECK_FALSE(validate(p2_fan(3).fan).has_value());
}

TEST_CASE("face lattice of the symmetric subdivision fan") {
  NamedFan nf = p2_fan(3);
  FaceLattice lattice(nf.fan);
  CHECK(nf.fan.rays().size() == 6);
  CHECK(nf.fan.maximal_cones().size() == 4);
  CHECK(lattice.faces_of_dim(3).size() == 4);
  CHECK(lattice.faces_of_dim(2).size() == 9);  // 6 interior + 3 boundary
  CHECK(lattice.interior_f_vector() == std::vector<long>{3, 6, 4});
  CHECK(hereditary_check(nf.fan, lattice));

  // Every interior wall has exactly two adjacent maximal cones and opposite
  // incidence signs with respect to them.
  for (int wid : lattice.interior_faces_of_dim(2)) {
    const Face& w = lattice.face(wid);
    REQUIRE(w.adjacent_maximal.size() == 2);
    int s1 = lattice.incidence_sign(lattice.maximal_face_ids()[w.adjacent_maximal[0]], wid);
    int s2 = lattice.incidence_sign(lattice.maximal_face_ids()[w.adjacent_maximal[1]], wid);
    CHECK(s1 * s2 == -1);
  }
}

TEST_CASE("wall forms of the symmetric subdivision fan are the braid forms") {
  FaceLattice lattice(p2_fan(3).fan);
  std::vector<RatVec> forms;
  for (int wid : lattice.interior_faces_of_dim(2))
    forms.push_back(primitive_integer_vector(lattice.wall_form(wid), true));
  std::sort(forms.begin(), forms.end());
  std::vector<RatVec> expect = {v({0, 0, 1}),  v({0, 1, -1}), v({0, 1, 0}),
                                v({1, -1, 0}), v({1, 0, -1}), v({1, 0, 0})};
  std::sort(expect.begin(), expect.end());
  CHECK(forms == expect);
}

TEST_CASE("containment and facets") {
  FaceLattice lattice(p2_fan(3).fan);
  for (int cid : lattice.maximal_face_ids()) {
    auto facets = lattice.facets_of(cid);
    for (int f : facets) {
      CHECK(lattice.contains(cid, f));
      CHECK_FALSE(lattice.contains(f, cid));
      CHECK(lattice.face(f).dim == 2);
    }
  }
}

TEST_CASE("incidence signs compose to zero boundary") {
  // For every 3-face alpha and interior 1-face gamma: the signed count of
  // chains alpha > beta > gamma vanishes (wall-crossing consistency).
  FaceLattice lattice(p2_fan(3).fan);
  for (int a : lattice.maximal_face_ids())
    for (int g : lattice.interior_faces_of_dim(1)) {
      int total = 0;
      for (int b : lattice.facets_of(a))
        if (lattice.contains(b, g))
          total += lattice.incidence_sign(a, b) * lattice.incidence_sign(b, g);
      CHECK(total == 0);
    }
}

TEST_CASE("hereditary check fails on a fan with a pinched star") {
  // Two 2D cones meeting only at the origin: the star of the origin has a
  // disconnected dual graph.
  Fan pinched(2, {v({1, 0}), v({0, 1}), v({-1, 0}), v({0, -1})}, {{0, 1}, {2, 3}});
  REQUIRE_FALSE(validate(pinched).has_value());
  FaceLattice lattice(pinched);
  CHECK_FALSE(hereditary_check(pinched, lattice));
}

TEST_CASE("cone facet normals of the first orthant") {
  auto normals = cone_facet_normals({v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})}, 3);
  CHECK(normals.size() == 3);
}
