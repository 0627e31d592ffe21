#include "splinefan/report.hpp"

#include <sstream>

#include "json.hpp"

namespace splinefan {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> basis_strings(const std::vector<RatVec>& basis) {
  std::vector<std::string> out;
  for (const auto& v : basis) out.push_back(vec_str(v));
  return out;
}

ReportDocument::FlatReport flat_report(const FaceLattice& lattice, const FlatCandidate& flat,
                                       int i) {
  GxiGraph g = g_xi_graph(lattice, flat, i);
  ReportDocument::FlatReport fr;
  fr.basis = basis_strings(flat.basis);
  fr.origin = flat.origin;
  fr.num_vertices = static_cast<long>(g.vertices.size());
  fr.num_edges = static_cast<long>(g.edges.size());
  fr.a = a_xi(g);
  for (const auto& comp : g.components)
    if (comp.is_loop_around_gamma) fr.any_loop_component = true;
  return fr;
}

std::string decomposition_str(const FreeDecompositionResult& r) {
  switch (r.status) {
    case FreeDecompositionResult::Status::NotFree: {
      std::ostringstream os;
      os << "not free (negative numerator coefficient at degree " << r.negative_index << ")";
      return os.str();
    }
    case FreeDecompositionResult::Status::Free: {
      std::ostringstream os;
      os << "free candidate, generator degrees {";
      for (std::size_t i = 0; i < r.generator_degrees.size(); ++i)
        os << (i ? "," : "") << r.generator_degrees[i];
      os << "}";
      return os.str();
    }
    default:
      return "inconclusive (window too short)";
  }
}

ordered_json decomposition_json(const FreeDecompositionResult& r) {
  ordered_json j;
  switch (r.status) {
    case FreeDecompositionResult::Status::NotFree:
      j["status"] = "not_free";
      j["negative_index"] = r.negative_index;
      break;
    case FreeDecompositionResult::Status::Free:
      j["status"] = "free";
      j["generator_degrees"] = r.generator_degrees;
      break;
    default:
      j["status"] = "inconclusive";
  }
  return j;
}

ordered_json table_json(const GradedDimensionTable& t) {
  ordered_json j;
  j["label"] = t.label;
  j["max_degree"] = t.max_degree;
  j["dims"] = t.dims;
  return j;
}

ordered_json flat_json(const ReportDocument::FlatReport& fr) {
  ordered_json j;
  j["basis"] = fr.basis;
  j["origin"] = fr.origin;
  j["vertices"] = fr.num_vertices;
  j["edges"] = fr.num_edges;
  j["a"] = fr.a;
  j["loop_component"] = fr.any_loop_component;
  return j;
}

void print_dims(std::ostringstream& os, const std::vector<long>& dims) {
  os << "[";
  for (std::size_t k = 0; k < dims.size(); ++k) os << (k ? "," : "") << dims[k];
  os << "]";
}

}  // namespace

ReportDocument::FanSummary build_fan_summary(const std::string& name, const Fan& fan,
                                             const FaceLattice& lattice) {
  ReportDocument::FanSummary s;
  s.name = name;
  s.dim = fan.dim();
  s.face_counts.resize(fan.dim() + 1, 0);
  for (int dim = 0; dim <= fan.dim(); ++dim)
    s.face_counts[dim] = static_cast<long>(lattice.faces_of_dim(dim).size());
  s.interior_f = lattice.interior_f_vector();
  s.hereditary = hereditary_check(fan, lattice);
  return s;
}

ReportDocument::HilbertSection build_hilbert_section(const FaceLattice& lattice,
                                                     int max_degree) {
  ReportDocument::HilbertSection h;
  h.table = hilbert_function(lattice, max_degree);
  const int d = lattice.fan().dim();
  try {
    HilbertPolynomial hp = interpolate_hilbert_polynomial(h.table, d);
    h.polynomial = hp.poly.str();
    h.stable_from = hp.stable_from;
  } catch (const std::exception&) {
    h.polynomial = "(not stabilized)";
    h.stable_from = -1;
  }
  h.decomposition = free_decomposition(
      h.table, d, static_cast<long>(lattice.maximal_face_ids().size()));
  return h;
}

ReportDocument::HomologySection build_homology_section(const FaceLattice& lattice,
                                                       const GradedDimensionTable& c0_table) {
  ReportDocument::HomologySection s;
  ChainComplex complex(lattice);
  s.table = homology_dimensions(complex, c0_table.max_degree);
  s.euler_ok = euler_identity_check(lattice, s.table, c0_table);
  return s;
}

ReportDocument::AlphaSection build_alpha_section(const FaceLattice& lattice, int i) {
  ReportDocument::AlphaSection s;
  s.codim_index = i;
  for (const auto& flat : candidate_flats(lattice, i)) {
    s.flats.push_back(flat_report(lattice, flat, i));
    s.alpha += s.flats.back().a;
  }
  if (i == 1 && lattice.fan().dim() >= 2) s.alpha_via_h1 = alpha1_via_h1(lattice);
  if (lattice.fan().dim() == 3) s.hp3d_poly = hp3d(lattice).poly.str();
  return s;
}

ReportDocument::AssocPrimesSection build_assoc_primes_section(const FaceLattice& lattice,
                                                              int i) {
  ReportDocument::AssocPrimesSection s;
  s.codim_index = i;
  for (const auto& flat : candidate_flats(lattice, i)) {
    auto fr = flat_report(lattice, flat, i);
    if (fr.a > 0) s.flats.push_back(fr);
  }
  return s;
}

ReportDocument::ArrangementSection build_arrangement_section(const std::string& name,
                                                             const Arrangement& a,
                                                             int max_degree) {
  ReportDocument::ArrangementSection s;
  s.name = name;
  s.ambient_dim = a.ambient_dim;
  s.forms = basis_strings(a.forms);
  IntersectionLattice lat = intersection_lattice(a);
  s.flats_per_rank.resize(a.ambient_dim + 1, 0);
  for (const auto& flat : lat.flats) {
    ++s.flats_per_rank[flat.rank];
    s.mobius.push_back(flat.mobius);
  }
  s.poincare = poincare_polynomial(a).str("t");
  s.derivations = derivation_table(a, max_degree);
  s.exponents = exponents_from_derivations(a, max_degree);
  s.terao_ok = s.exponents.status == FreeDecompositionResult::Status::Free &&
               terao_check(a, s.exponents.generator_degrees);
  return s;
}

std::string report_text(const ReportDocument& doc) {
  std::ostringstream os;
  if (doc.fan_summary) {
    const auto& s = *doc.fan_summary;
    os << "fan: " << (s.name.empty() ? "(unnamed)" : s.name) << "\n";
    os << "dim: " << s.dim << "\n";
    os << "faces by dim: ";
    print_dims(os, s.face_counts);
    os << "\ninterior f-vector: ";
    print_dims(os, s.interior_f);
    os << "\nhereditary: " << (s.hereditary ? "yes" : "no") << "\n";
  }
  if (doc.hilbert) {
    const auto& h = *doc.hilbert;
    os << "hilbert function (k=0.." << h.table.max_degree << "): ";
    print_dims(os, h.table.dims);
    os << "\nhilbert polynomial: " << h.polynomial;
    if (h.stable_from >= 0) os << " (agrees with table from k=" << h.stable_from << ")";
    os << "\nfree decomposition: " << decomposition_str(h.decomposition) << "\n";
  }
  if (doc.homology) {
    const auto& s = *doc.homology;
    for (int i = 1; i <= s.table.dim; ++i) {
      os << "H_" << i << " dims (k=0.." << s.table.max_degree << "): ";
      print_dims(os, s.table.dims[i]);
      os << "\n";
    }
    os << "euler identity: " << (s.euler_ok ? "holds" : "FAILS") << "\n";
  }
  if (doc.alpha_section) {
    const auto& s = *doc.alpha_section;
    os << "candidate flats of codim " << s.codim_index + 1 << ": " << s.flats.size() << "\n";
    for (const auto& f : s.flats) {
      os << "  flat {";
      for (std::size_t i = 0; i < f.basis.size(); ++i) os << (i ? "; " : "") << f.basis[i];
      os << "} [" << f.origin << "]: " << f.num_vertices << " vertices, " << f.num_edges
         << " edges, a=" << f.a;
      if (f.any_loop_component) os << " (loop component)";
      os << "\n";
    }
    os << "alpha_" << s.codim_index << " = " << s.alpha << "\n";
    if (s.alpha_via_h1) os << "alpha_1 via cycle ranks = " << *s.alpha_via_h1 << "\n";
    if (s.hp3d_poly) os << "closed-form d=3 hilbert polynomial: " << *s.hp3d_poly << "\n";
  }
  if (doc.assoc_primes) {
    const auto& s = *doc.assoc_primes;
    os << "associated-prime flats of codim " << s.codim_index + 1 << ": " << s.flats.size()
       << "\n";
    for (const auto& f : s.flats) {
      os << "  flat {";
      for (std::size_t i = 0; i < f.basis.size(); ++i) os << (i ? "; " : "") << f.basis[i];
      os << "} a=" << f.a << "\n";
    }
  }
  if (doc.arrangement) {
    const auto& s = *doc.arrangement;
    os << "arrangement: " << s.name << " (" << s.forms.size() << " hyperplanes in Q^"
       << s.ambient_dim << ")\n";
    os << "forms:";
    for (const auto& f : s.forms) os << " (" << f << ")";
    os << "\nflats per rank: ";
    print_dims(os, s.flats_per_rank);
    os << "\nmobius values: ";
    print_dims(os, s.mobius);
    os << "\npoincare polynomial: " << s.poincare << "\n";
    os << "derivation dims (k=0.." << s.derivations.max_degree << "): ";
    print_dims(os, s.derivations.dims);
    os << "\nexponents: " << decomposition_str(s.exponents) << "\n";
    os << "terao factorization: " << (s.terao_ok ? "consistent" : "not verified") << "\n";
  }
  return os.str();
}

std::string report_json(const ReportDocument& doc) {
  ordered_json j;
  if (doc.fan_summary) {
    const auto& s = *doc.fan_summary;
    ordered_json f;
    f["name"] = s.name;
    f["dim"] = s.dim;
    f["faces_by_dim"] = s.face_counts;
    f["interior_f_vector"] = s.interior_f;
    f["hereditary"] = s.hereditary;
    j["fan"] = f;
  }
  if (doc.hilbert) {
    const auto& h = *doc.hilbert;
    ordered_json f;
    f["table"] = table_json(h.table);
    f["polynomial"] = h.polynomial;
    f["stable_from"] = h.stable_from;
    f["free_decomposition"] = decomposition_json(h.decomposition);
    j["hilbert"] = f;
  }
  if (doc.homology) {
    const auto& s = *doc.homology;
    ordered_json f;
    f["max_degree"] = s.table.max_degree;
    ordered_json dims;
    for (int i = 1; i <= s.table.dim; ++i) dims["H_" + std::to_string(i)] = s.table.dims[i];
    f["dims"] = dims;
    f["euler_identity"] = s.euler_ok;
    j["homology"] = f;
  }
  if (doc.alpha_section) {
    const auto& s = *doc.alpha_section;
    ordered_json f;
    f["codim_index"] = s.codim_index;
    f["alpha"] = s.alpha;
    ordered_json flats = ordered_json::array();
    for (const auto& fr : s.flats) flats.push_back(flat_json(fr));
    f["flats"] = flats;
    if (s.alpha_via_h1) f["alpha_via_h1"] = *s.alpha_via_h1;
    if (s.hp3d_poly) f["hp3d"] = *s.hp3d_poly;
    j["alpha"] = f;
  }
  if (doc.assoc_primes) {
    const auto& s = *doc.assoc_primes;
    ordered_json f;
    f["codim_index"] = s.codim_index;
    ordered_json flats = ordered_json::array();
    for (const auto& fr : s.flats) flats.push_back(flat_json(fr));
    f["flats"] = flats;
    j["associated_primes"] = f;
  }
  if (doc.arrangement) {
    const auto& s = *doc.arrangement;
    ordered_json f;
    f["name"] = s.name;
    f["ambient_dim"] = s.ambient_dim;
    f["forms"] = s.forms;
    f["flats_per_rank"] = s.flats_per_rank;
    f["mobius"] = s.mobius;
    f["poincare"] = s.poincare;
    f["derivations"] = table_json(s.derivations);
    f["exponents"] = decomposition_json(s.exponents);
    f["terao_consistent"] = s.terao_ok;
    j["arrangement"] = f;
  }
  return j.dump(2) + "\n";
}

}  // namespace splinefan
