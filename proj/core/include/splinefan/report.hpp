#ifndef SPLINEFAN_REPORT_HPP
#define SPLINEFAN_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "splinefan/arrangements.hpp"
#include "splinefan/chain_complex.hpp"
#include "splinefan/fan.hpp"
#include "splinefan/splines.hpp"
#include "splinefan/supports.hpp"

namespace splinefan {

// Assembled results for one run. Sections are filled by the build_* helpers
// and emitted as text or JSON; both renderings are byte-deterministic.
struct ReportDocument {
  struct FanSummary {
    std::string name;
    int dim = 0;
    std::vector<long> face_counts;  // faces per dimension 0..d
    std::vector<long> interior_f;   // interior f-vector (f0_1..f0_{d-1}, f_d)
    bool hereditary = false;
  };
  struct HilbertSection {
    GradedDimensionTable table;
    std::string polynomial;
    int stable_from = 0;
    FreeDecompositionResult decomposition;
  };
  struct HomologySection {
    HomologyTable table;
    bool euler_ok = false;
  };
  struct FlatReport {
    std::vector<std::string> basis;  // canonical basis rows as strings
    std::string origin;
    long num_vertices = 0;
    long num_edges = 0;
    long a = 0;  // a_xi
    bool any_loop_component = false;
  };
  struct AlphaSection {
    int codim_index = 0;  // the i of alpha_i
    long alpha = 0;
    std::vector<FlatReport> flats;
    std::optional<long> alpha_via_h1;       // i = 1 only
    std::optional<std::string> hp3d_poly;   // d = 3 only
  };
  struct AssocPrimesSection {
    int codim_index = 0;
    std::vector<FlatReport> flats;  // only those with a_xi > 0
  };
  struct ArrangementSection {
    std::string name;
    int ambient_dim = 0;
    std::vector<std::string> forms;
    std::vector<long> flats_per_rank;
    std::vector<long> mobius;  // aligned with the lattice's canonical order
    std::string poincare;
    GradedDimensionTable derivations;
    FreeDecompositionResult exponents;
    bool terao_ok = false;  // poincare factors through the found exponents
  };

  std::optional<FanSummary> fan_summary;
  std::optional<HilbertSection> hilbert;
  std::optional<HomologySection> homology;
  std::optional<AlphaSection> alpha_section;
  std::optional<AssocPrimesSection> assoc_primes;
  std::optional<ArrangementSection> arrangement;
};

ReportDocument::FanSummary build_fan_summary(const std::string& name, const Fan& fan,
                                             const FaceLattice& lattice);
ReportDocument::HilbertSection build_hilbert_section(const FaceLattice& lattice,
                                                     int max_degree);
ReportDocument::HomologySection build_homology_section(const FaceLattice& lattice,
                                                       const GradedDimensionTable& c0_table);
ReportDocument::AlphaSection build_alpha_section(const FaceLattice& lattice, int i);
ReportDocument::AssocPrimesSection build_assoc_primes_section(const FaceLattice& lattice,
                                                              int i);
ReportDocument::ArrangementSection build_arrangement_section(const std::string& name,
                                                             const Arrangement& a,
                                                             int max_degree);

std::string report_text(const ReportDocument& doc);
std::string report_json(const ReportDocument& doc);

}  // namespace splinefan

#endif
