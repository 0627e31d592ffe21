// Command-line surface over the splinefan library. Subcommands compute one
// section each; --json swaps the text rendering for the documented JSON
// report. Exit codes: 0 success, 1 verification failure, 2 input error.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "splinefan/constructions.hpp"
#include "splinefan/fan_io.hpp"
#include "splinefan/reference_suite.hpp"
#include "splinefan/report.hpp"

namespace {

using namespace splinefan;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

struct LoadedFan {
  std::string name;
  std::unique_ptr<Fan> fan;
  std::unique_ptr<FaceLattice> lattice;
};

LoadedFan load(const std::string& path) {
  FanDocument doc = load_fan_document(path);
  LoadedFan out;
  out.name = doc.name;
  out.fan = std::make_unique<Fan>(doc.fan);
  out.lattice = std::make_unique<FaceLattice>(*out.fan);
  return out;
}

int default_window(const Fan& fan) { return 2 * fan.dim() + 4; }

void emit(const ReportDocument& doc, bool json) {
  std::cout << (json ? report_json(doc) : report_text(doc));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded invariants of piecewise polynomials on polyhedral fans"};
  app.require_subcommand(1);

  std::string fan_path, out_path, kind;
  int max_degree = -1;  // resolved to 2d+4 once the fan is known
  int codim = 1;
  int n = 3;
  bool json = false, essential = false, braid = false;
  int braid_n = 0;

  auto add_fan_arg = [&](CLI::App* cmd) {
    cmd->add_option("fan", fan_path, "fan document (JSON)")->required();
    cmd->add_flag("--json", json, "emit the JSON report");
  };

  auto* c_faces = app.add_subcommand("faces", "interior f-vector and face counts");
  add_fan_arg(c_faces);

  auto* c_hilbert = app.add_subcommand("hilbert", "spline dimensions by degree");
  add_fan_arg(c_hilbert);
  c_hilbert->add_option("--max-degree", max_degree, "top degree (default 2d+4)");

  auto* c_homology = app.add_subcommand("homology", "chain-complex homology dimensions");
  add_fan_arg(c_homology);
  c_homology->add_option("--max-degree", max_degree, "top degree (default 2d+4)");

  auto* c_alpha = app.add_subcommand("alpha", "flat graphs and the alpha invariant");
  add_fan_arg(c_alpha);
  c_alpha->add_option("--codim", codim, "index i of alpha_i (flats have codim i+1)");

  auto* c_primes = app.add_subcommand("assoc-primes", "flats supporting associated primes");
  add_fan_arg(c_primes);
  c_primes->add_option("--codim", codim, "index i (flats have codim i+1)");

  auto* c_arr = app.add_subcommand("arrangement",
                                   "intersection lattice, poincare polynomial, derivations");
  c_arr->add_option("fan", fan_path, "fan document (wall arrangement is used)");
  c_arr->add_option("--braid", braid_n, "use the braid arrangement a_n instead of a fan")
      ->check(CLI::PositiveNumber);
  c_arr->add_flag("--essential", essential, "essential braid variant (last variable = 0)");
  c_arr->add_option("--max-degree", max_degree, "top derivation degree (default 2d+4)");
  c_arr->add_flag("--json", json, "emit the JSON report");

  auto* c_construct = app.add_subcommand("construct", "write a built-in fan to a file");
  c_construct->add_option("kind", kind, "p1 | p2 | sigma-prime | annulus")->required();
  c_construct->add_option("--n", n, "family parameter for p1/p2");
  c_construct->add_option("-o,--output", out_path, "output path")->required();

  auto* c_verify = app.add_subcommand("verify-paper", "run the built-in verification suite");
  c_verify->add_flag("--json", json, "emit results as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (c_faces->parsed()) {
      LoadedFan f = load(fan_path);
      ReportDocument doc;
      doc.fan_summary = build_fan_summary(f.name, *f.fan, *f.lattice);
      emit(doc, json);
      return 0;
    }
    if (c_hilbert->parsed()) {
      LoadedFan f = load(fan_path);
      if (max_degree < 0) max_degree = default_window(*f.fan);
      ReportDocument doc;
      doc.hilbert = build_hilbert_section(*f.lattice, max_degree);
      emit(doc, json);
      return 0;
    }
    if (c_homology->parsed()) {
      LoadedFan f = load(fan_path);
      if (max_degree < 0) max_degree = default_window(*f.fan);
      ReportDocument doc;
      GradedDimensionTable c0 = hilbert_function(*f.lattice, max_degree);
      doc.homology = build_homology_section(*f.lattice, c0);
      emit(doc, json);
      return doc.homology->euler_ok ? 0 : kExitVerificationFailure;
    }
    if (c_alpha->parsed()) {
      LoadedFan f = load(fan_path);
      if (codim < 1 || codim > f.fan->dim() - 1) {
        std::cerr << "error: --codim must be between 1 and dim-1\n";
        return kExitInputError;
      }
      ReportDocument doc;
      doc.alpha_section = build_alpha_section(*f.lattice, codim);
      emit(doc, json);
      return 0;
    }
    if (c_primes->parsed()) {
      LoadedFan f = load(fan_path);
      if (codim < 1 || codim > f.fan->dim() - 1) {
        std::cerr << "error: --codim must be between 1 and dim-1\n";
        return kExitInputError;
      }
      ReportDocument doc;
      doc.assoc_primes = build_assoc_primes_section(*f.lattice, codim);
      emit(doc, json);
      return 0;
    }
    if (c_arr->parsed()) {
      Arrangement a;
      std::string name;
      if (braid_n > 0) {
        a = braid_arrangement(braid_n, essential);
        name = (essential ? "essential braid a_" : "braid a_") + std::to_string(braid_n);
      } else if (!fan_path.empty()) {
        LoadedFan f = load(fan_path);
        a = defining_arrangement(*f.lattice);
        name = "walls of " + (f.name.empty() ? fan_path : f.name);
      } else {
        std::cerr << "error: arrangement needs a fan file or --braid n\n";
        return kExitInputError;
      }
      if (max_degree < 0) max_degree = 2 * a.ambient_dim + 4;
      ReportDocument doc;
      doc.arrangement = build_arrangement_section(name, a, max_degree);
      emit(doc, json);
      return 0;
    }
    if (c_construct->parsed()) {
      NamedFan nf = [&] {
        if (kind == "p1") return p1_fan(n);
        if (kind == "p2") return p2_fan(n);
        if (kind == "sigma-prime") return perturbed_p2a3();
        if (kind == "annulus") return nonfree_annulus_fan();
        throw std::invalid_argument("unknown construction: " + kind);
      }();
      save_fan_document(nf.fan, nf.name, out_path);
      std::cout << "wrote " << nf.name << " to " << out_path << "\n";
      return 0;
    }
    if (c_verify->parsed()) {
      auto results = run_reference_suite();
      bool all = true;
      if (json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : results) {
          arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
          all = all && r.passed;
        }
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const auto& r : results) {
          std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  [" << r.detail
                    << "]\n";
          all = all && r.passed;
        }
      }
      return all ? 0 : kExitVerificationFailure;
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ValidationError& e) {
    std::cerr << "invalid fan: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return 0;
}
