#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "splinefan/constructions.hpp"
#include "splinefan/fan_io.hpp"
#include "splinefan/report.hpp"

using namespace splinefan;

TEST_CASE("built-in fans validate and are hereditary") {
  std::vector<NamedFan> fans = {p2_fan(2), p2_fan(3), p2_fan(4), p1_fan(2),
                                p1_fan(3), p1_fan(4), perturbed_p2a3(),
                                nonfree_annulus_fan()};
  for (const NamedFan& nf : fans) {
    CAPTURE(nf.name);
    CHECK_FALSE(validate(nf.fan).has_value());
    FaceLattice lattice(nf.fan);
    CHECK(hereditary_check(nf.fan, lattice));
  }
}

TEST_CASE("combinatorics of the builders") {
  NamedFan sym = p2_fan(3);
  CHECK(sym.fan.dim() == 3);
  CHECK(sym.fan.rays().size() == 6);
  CHECK(sym.fan.maximal_cones().size() == 4);

  NamedFan coarse = p1_fan(3);
  CHECK(coarse.fan.maximal_cones().size() == 1 + 3);

  NamedFan ann = nonfree_annulus_fan();
  CHECK(ann.fan.dim() == 3);
  CHECK(ann.fan.rays().size() == 6);
  CHECK(ann.fan.maximal_cones().size() == 6);
  FaceLattice lattice(ann.fan);
  // An annulus of triangles: no interior rays, 6 interior walls.
  CHECK(lattice.interior_f_vector() == std::vector<long>{0, 6, 6});
}

TEST_CASE("perturbed fan keeps the combinatorics, breaks the coincidence") {
  NamedFan pert = perturbed_p2a3();
  CHECK(pert.fan.rays().size() == 6);
  CHECK(pert.fan.maximal_cones().size() == 4);
  FaceLattice lattice(pert.fan);
  CHECK(lattice.interior_f_vector() == std::vector<long>{3, 6, 4});
  // The three spoke walls now span all of Q^3.
  std::vector<RatVec> spoke_forms;
  for (int wid : lattice.interior_faces_of_dim(2)) {
    const Face& w = lattice.face(wid);
    int a = lattice.maximal_face_ids()[w.adjacent_maximal[0]];
    int b = lattice.maximal_face_ids()[w.adjacent_maximal[1]];
    bool touches_central = false;
    for (int cid : {a, b}) {
      bool all_units = true;
      for (int r : lattice.face(cid).ray_indices) {
        int nonzero = 0;
        for (const auto& x : pert.fan.rays()[r])
          if (!x.is_zero()) ++nonzero;
        if (nonzero != 1) all_units = false;
      }
      if (all_units) touches_central = true;
    }
    if (!touches_central) spoke_forms.push_back(lattice.wall_form(wid));
  }
  REQUIRE(spoke_forms.size() == 3);
  CHECK(rank(RatMatrix::from_rows(spoke_forms)) == 3);
}

TEST_CASE("fan documents round-trip through json") {
  NamedFan nf = p2_fan(3);
  std::string text = fan_document_json(nf.fan, nf.name);
  FanDocument doc = parse_fan_document(text);
  CHECK(doc.name == nf.name);
  CHECK(doc.fan.rays() == nf.fan.rays());
  CHECK(doc.fan.maximal_cones() == nf.fan.maximal_cones());
  // Serialization is byte-deterministic.
  CHECK(fan_document_json(doc.fan, doc.name) == text);

  std::string path = "roundtrip_tmp.json";
  save_fan_document(nf.fan, nf.name, path);
  FanDocument loaded = load_fan_document(path);
  CHECK(loaded.fan.rays() == nf.fan.rays());
  std::remove(path.c_str());
}

TEST_CASE("rational ray entries are normalized to primitive vectors") {
  std::string text = R"({
    "dim": 2,
    "rays": [["1/2", "0"], [0, "3"], ["1", 1]],
    "maximal_cones": [[0, 2], [2, 1]]
  })";
  FanDocument doc = parse_fan_document(text);
  // Rays come back primitive and in the fan's canonical (sorted) order.
  std::vector<RatVec> expect = {RatVec{Rational(0), Rational(1)},
                                RatVec{Rational(1), Rational(0)},
                                RatVec{Rational(1), Rational(1)}};
  CHECK(doc.fan.rays() == expect);
}

TEST_CASE("parse and validation errors are distinguished") {
  CHECK_THROWS_AS(parse_fan_document("not json"), ParseError);
  CHECK_THROWS_AS(parse_fan_document("{\"dim\": 2}"), ParseError);
  CHECK_THROWS_AS(parse_fan_document(R"({
    "dim": 2, "rays": [["1", "0/0"]], "maximal_cones": [[0]]
  })"),
                  ParseError);
  CHECK_THROWS_AS(load_fan_document("no_such_file.json"), ParseError);
  // Structurally fine, geometrically invalid: cones overlap badly.
  std::string overlap = R"({
    "dim": 2,
    "rays": [[1, 0], [0, 1], [1, 1], [3, 1]],
    "maximal_cones": [[0, 1], [2, 3]]
  })";
  CHECK_THROWS_AS(parse_fan_document(overlap), ValidationError);
}

TEST_CASE("reports render deterministically") {
  FaceLattice lattice(p2_fan(3).fan);
  ReportDocument doc;
  doc.fan_summary = build_fan_summary("p2_a3", p2_fan(3).fan, lattice);
  doc.hilbert = build_hilbert_section(lattice, 6);
  doc.homology = build_homology_section(lattice, doc.hilbert->table);
  doc.alpha_section = build_alpha_section(lattice, 1);
  doc.assoc_primes = build_assoc_primes_section(lattice, 1);
  Arrangement a = defining_arrangement(lattice);
  doc.arrangement = build_arrangement_section("walls", a, 6);

  std::string t1 = report_text(doc), t2 = report_text(doc);
  std::string j1 = report_json(doc), j2 = report_json(doc);
  CHECK(t1 == t2);
  CHECK(j1 == j2);
  CHECK_FALSE(t1.empty());
  CHECK(j1.back() == '\n');
  CHECK(doc.hilbert->table.dims == std::vector<long>{1, 4, 10, 20, 34, 52, 74});
  CHECK(doc.hilbert->polynomial == "2k^2+2");
  CHECK(doc.homology->euler_ok);
  CHECK(doc.alpha_section->alpha == 1);
  CHECK(doc.alpha_section->alpha_via_h1.has_value());
  CHECK(*doc.alpha_section->alpha_via_h1 == 1);
  CHECK(doc.assoc_primes->flats.size() == 1);
  CHECK(doc.arrangement->terao_ok);
}
