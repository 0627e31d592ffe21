#include "splinefan/reference_suite.hpp"

#include <map>
#include <memory>
#include <sstream>

#include "splinefan/arrangements.hpp"
#include "splinefan/chain_complex.hpp"
#include "splinefan/constructions.hpp"
#include "splinefan/monomials.hpp"
#include "splinefan/splines.hpp"
#include "splinefan/supports.hpp"

namespace splinefan {

namespace {

// One constructed fan with everything the checks share, computed lazily.
struct Fixture {
  NamedFan named;
  int window;  // homology / cross-check degree window
  std::unique_ptr<FaceLattice> lattice;
  std::unique_ptr<ChainComplex> complex;
  GradedDimensionTable hilbert;       // degrees 0..hilbert_window
  int hilbert_window;
  HomologyTable homology;

  Fixture(NamedFan nf, int w, int hw) : named(std::move(nf)), window(w), hilbert_window(hw) {
    lattice = std::make_unique<FaceLattice>(named.fan);
    complex = std::make_unique<ChainComplex>(*lattice);
    hilbert = hilbert_function(*lattice, hilbert_window);
    homology = homology_dimensions(*complex, window);
  }
};

bool poly_equals(const Polynomial& p, std::initializer_list<long> ascending) {
  RatVec coeffs;
  for (long c : ascending) coeffs.push_back(Rational(c));
  return p == Polynomial(coeffs);
}

std::string dims_str(const std::vector<long>& dims) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
  os << "]";
  return os.str();
}

CheckResult check(const std::string& name, bool passed, const std::string& detail) {
  return {name, passed, detail};
}

bool is_unit_diagonal_flat(const FlatCandidate& f, int d) {
  if (f.basis.size() != 1) return false;
  for (const auto& x : f.basis[0])
    if (x != Rational(1)) return false;
  return static_cast<int>(f.basis[0].size()) == d;
}

}  // namespace

std::vector<CheckResult> run_reference_suite() {
  std::vector<CheckResult> results;

  // Fixtures. Degree windows trade runtime for coverage: the d=3 fans use
  // k <= 8, the two 4-dimensional subdivision fans use a shorter homology
  // window but the full k <= 10 Hilbert table where a check requires it.
  Fixture p2a3(p2_fan(3), 8, 8);
  Fixture sigma_prime(perturbed_p2a3(), 8, 8);
  Fixture annulus(nonfree_annulus_fan(), 8, 8);
  Fixture p2a4(p2_fan(4), 6, 10);
  Fixture p1a2(p1_fan(2), 8, 8);
  Fixture p1a3(p1_fan(3), 6, 8);
  Fixture p1a4(p1_fan(4), 5, 8);
  std::vector<Fixture*> fixtures = {&p2a3, &sigma_prime, &annulus, &p2a4,
                                    &p1a2, &p1a3, &p1a4};

  // 1. Hilbert function of the symmetric subdivision fan in Q^3.
  {
    bool ok = p2a3.hilbert.dims[0] == 1;
    for (int k = 1; k <= 8; ++k) ok = ok && p2a3.hilbert.dims[k] == 2 * k * k + 2;
    results.push_back(check("p2_a3 hilbert function 2k^2+2", ok,
                            "table " + dims_str(p2a3.hilbert.dims)));
  }

  // 2. Perturbed fan: 2k^2+1 from k=2 on.
  {
    bool ok = true;
    for (int k = 2; k <= 8; ++k) ok = ok && sigma_prime.hilbert.dims[k] == 2 * k * k + 1;
    std::string detail = "table " + dims_str(sigma_prime.hilbert.dims);
    try {
      HilbertPolynomial hp = interpolate_hilbert_polynomial(sigma_prime.hilbert, 3);
      ok = ok && poly_equals(hp.poly, {1, 0, 2});
      detail += ", stable_from=" + std::to_string(hp.stable_from);
    } catch (const std::exception& e) {
      ok = false;
      detail += std::string(", interpolation failed: ") + e.what();
    }
    results.push_back(check("sigma_prime hilbert function 2k^2+1", ok, detail));
  }

  // 3. alpha_1 values and the closed-form d=3 polynomials.
  {
    long a_sym = alpha(*p2a3.lattice, 1);
    long a_pert = alpha(*sigma_prime.lattice, 1);
    auto primes = associated_prime_flats(*p2a3.lattice, 1);
    bool unique_diag = primes.size() == 1 && is_unit_diagonal_flat(primes[0], 3);
    bool hp_ok = poly_equals(hp3d(*p2a3.lattice).poly, {2, 0, 2}) &&
                 poly_equals(hp3d(*sigma_prime.lattice).poly, {1, 0, 2});
    std::ostringstream os;
    os << "alpha_1(p2_a3)=" << a_sym << " with " << primes.size()
       << " contributing flat(s), alpha_1(sigma_prime)=" << a_pert;
    results.push_back(check("alpha_1 and closed-form d=3 polynomials",
                            a_sym == 1 && a_pert == 0 && unique_diag && hp_ok, os.str()));
  }

  // 4. Cycle-rank route to alpha_1 agrees with the graph count.
  {
    bool ok = true;
    std::ostringstream os;
    for (Fixture* f : {&p2a3, &sigma_prime, &annulus}) {
      long direct = alpha(*f->lattice, 1);
      long via_h1 = alpha1_via_h1(*f->lattice);
      if (direct != via_h1) ok = false;
      os << f->named.name << ":" << direct << "/" << via_h1 << " ";
    }
    results.push_back(check("alpha_1 = cycle-rank formula on d=3 fans", ok, os.str()));
  }

  // 5. The 4-dimensional subdivision fan: Hilbert table, generator degrees,
  // the tetrahedron graph at the diagonal flat, and constant H_2.
  {
    bool table_ok = true;
    for (int k = 0; k <= 10; ++k) {
      Integer expect = 0;
      for (int i = 0; i <= 4; ++i) expect += binomial(k - i + 3, 3);
      if (Integer(p2a4.hilbert.dims[k]) != expect) table_ok = false;
    }
    auto dec = free_decomposition(p2a4.hilbert, 4, 5);
    bool dec_ok = dec.status == FreeDecompositionResult::Status::Free &&
                  dec.generator_degrees == std::vector<int>{0, 1, 2, 3, 4};
    bool graph_ok = false;
    for (const auto& flat : candidate_flats(*p2a4.lattice, 2))
      if (is_unit_diagonal_flat(flat, 4)) {
        GxiGraph g = g_xi_graph(*p2a4.lattice, flat, 2);
        graph_ok = g.vertices.size() == 4 && g.edges.size() == 6;
      }
    // H_2 directly from the two adjacent differentials so the degree-10
    // window stays cheap. Its Hilbert polynomial is the constant 1; the
    // function itself is 0 in degree 0 and 1 from degree 1 on.
    bool h2_ok = true;
    std::vector<long> h2;
    for (int k = 0; k <= 10; ++k) {
      long dim = p2a4.complex->position_dimension(2, k) -
                 static_cast<long>(rank(p2a4.complex->differential_block(2, k))) -
                 static_cast<long>(rank(p2a4.complex->differential_block(3, k)));
      h2.push_back(dim);
      if (dim != (k == 0 ? 0 : 1)) h2_ok = false;
    }
    results.push_back(check("p2_a4 table, degrees {0,1,2,3,4}, tetrahedron graph, H_2 = 1",
                            table_ok && dec_ok && graph_ok && h2_ok,
                            "table " + dims_str(p2a4.hilbert.dims) + ", H_2 " + dims_str(h2)));
  }

  // 6. Degreewise Euler identity and d(d(x)) = 0 on every fixture.
  {
    bool ok = true;
    std::ostringstream os;
    for (Fixture* f : fixtures) {
      GradedDimensionTable c0 = f->hilbert;
      if (c0.max_degree > f->window) {
        c0.max_degree = f->window;
        c0.dims.resize(f->window + 1);
      }
      bool euler = euler_identity_check(*f->lattice, f->homology, c0);
      bool dd = true;
      const int d = f->named.fan.dim();
      for (int k = 0; k <= 3; ++k)
        for (int i = 2; i < d; ++i) {
          RatMatrix prod =
              f->complex->differential_block(i, k) * f->complex->differential_block(i + 1, k);
          for (std::size_t r = 0; r < prod.rows(); ++r)
            for (std::size_t c = 0; c < prod.cols(); ++c)
              if (!prod(r, c).is_zero()) dd = false;
        }
      if (!(euler && dd)) {
        ok = false;
        os << f->named.name << (euler ? "" : ":euler") << (dd ? "" : ":dd") << " ";
      }
    }
    results.push_back(
        check("euler identity and d(d(x))=0 on all fixtures", ok, ok ? "all fixtures" : os.str()));
  }

  // 7. Independent paths: Billera-Rose nullity vs top homology of the complex.
  {
    bool ok = true;
    std::ostringstream os;
    for (Fixture* f : fixtures) {
      const int d = f->named.fan.dim();
      for (int k = 0; k <= f->window; ++k)
        if (f->hilbert.dims[k] != f->homology.dims[d][k]) {
          ok = false;
          os << f->named.name << "@k=" << k << " ";
        }
    }
    results.push_back(check("spline dimension = top homology dimension", ok,
                            ok ? "all fixtures, all degrees in window" : os.str()));
  }

  // 8. Braid arrangements: lattice counts, Poincare factorization, exponents.
  {
    Arrangement a3e = braid_arrangement(3, true);
    IntersectionLattice lat = intersection_lattice(a3e);
    int rank2 = 0, mu2 = 0, mu1 = 0;
    for (const auto& flat : lat.flats)
      if (flat.rank == 2) {
        ++rank2;
        if (flat.mobius == 2) ++mu2;
        if (flat.mobius == 1) ++mu1;
      }
    bool lattice_ok = rank2 == 7 && mu2 == 4 && mu1 == 3;
    bool poincare_ok = poly_equals(poincare_polynomial(a3e), {1, 6, 11, 6});
    bool terao_ok = terao_check(a3e, {1, 2, 3}) &&
                    terao_check(braid_arrangement(3, false), {0, 1, 2, 3});
    bool exponents_ok = true;
    std::ostringstream os;
    for (int n = 2; n <= 4; ++n) {
      std::vector<int> essential_exp, full_exp;
      for (int i = 1; i <= n; ++i) essential_exp.push_back(i);
      for (int i = 0; i <= n; ++i) full_exp.push_back(i);
      auto re = exponents_from_derivations(braid_arrangement(n, true), n + 2);
      auto rf = exponents_from_derivations(braid_arrangement(n, false), n + 2);
      if (!(re.status == FreeDecompositionResult::Status::Free &&
            re.generator_degrees == essential_exp &&
            rf.status == FreeDecompositionResult::Status::Free &&
            rf.generator_degrees == full_exp)) {
        exponents_ok = false;
        os << "n=" << n << " ";
      }
    }
    results.push_back(check("braid arrangement lattice, poincare, exponents",
                            lattice_ok && poincare_ok && terao_ok && exponents_ok,
                            lattice_ok && poincare_ok && terao_ok && exponents_ok
                                ? "n=2,3,4 essential and nonessential"
                                : os.str()));
  }

  // 9. Complete projective-space fans: geometric-series Hilbert function and
  // the defining arrangement's Poincare polynomial.
  {
    bool ok = true;
    std::ostringstream os;
    for (Fixture* f : {&p1a2, &p1a3, &p1a4}) {
      const int n = f->named.fan.dim();
      for (int k = 0; k <= f->hilbert.max_degree; ++k) {
        Integer expect = 0;
        for (int i = 0; i <= n; ++i) expect += binomial(k - i + n - 1, n - 1);
        if (Integer(f->hilbert.dims[k]) != expect) {
          ok = false;
          os << f->named.name << "@k=" << k << " ";
        }
      }
      if (!(poincare_polynomial(defining_arrangement(*f->lattice)) ==
            poincare_polynomial(braid_arrangement(n, true)))) {
        ok = false;
        os << f->named.name << ":poincare ";
      }
    }
    results.push_back(check("p1_an hilbert series and defining arrangement", ok,
                            ok ? "n=2,3,4" : os.str()));
  }

  // 10. Same exponent multisets {0..n} on both sides: spline module of the
  // subdivision fan and derivations of the braid arrangement. The
  // correspondence needs the full C(n+1,2) walls and so first holds at n=3
  // (for n=2 the x_j-x_i spoke walls degenerate and the fan side is
  // honestly {0,1,1}); we assert equality for n=3,4 and pin the computed
  // n=2 values so any change is caught.
  {
    bool ok = true;
    std::ostringstream os;
    std::map<int, Fixture*> p2 = {{3, &p2a3}, {4, &p2a4}};
    for (int n = 3; n <= 4; ++n) {
      auto spline_side = free_decomposition(p2[n]->hilbert, n, n + 1);
      auto deriv_side = exponents_from_derivations(braid_arrangement(n, false), n + 2);
      std::vector<int> expect;
      for (int i = 0; i <= n; ++i) expect.push_back(i);
      if (!(spline_side.status == FreeDecompositionResult::Status::Free &&
            deriv_side.status == FreeDecompositionResult::Status::Free &&
            spline_side.generator_degrees == expect &&
            deriv_side.generator_degrees == expect)) {
        ok = false;
        os << "n=" << n << " ";
      }
    }
    Fixture p2a2(p2_fan(2), 6, 6);
    auto edge_spline = free_decomposition(p2a2.hilbert, 2, 3);
    auto edge_deriv = exponents_from_derivations(braid_arrangement(2, false), 4);
    bool edge_ok = edge_spline.status == FreeDecompositionResult::Status::Free &&
                   edge_spline.generator_degrees == std::vector<int>{0, 1, 1} &&
                   edge_deriv.status == FreeDecompositionResult::Status::Free &&
                   edge_deriv.generator_degrees == std::vector<int>{0, 1, 2};
    if (!edge_ok) {
      ok = false;
      os << "n=2-pinned-values ";
    }
    results.push_back(
        check("exponents of C0(p2_an) match derivations of braid a_n (n>=3)", ok,
              ok ? "{0..n} on both sides for n=3,4; n=2 fan side is {0,1,1} (2 walls only)"
                 : os.str()));
  }

  // 11. The annulus fan has nonzero H_2 in low degrees only.
  {
    const auto& h2 = annulus.homology.dims[2];
    bool some_positive = false;
    int last_nonzero = -1;
    for (int k = 0; k <= annulus.window; ++k)
      if (h2[k] > 0) {
        some_positive = true;
        last_nonzero = k;
      }
    bool vanishes_eventually = last_nonzero < annulus.window;
    results.push_back(check("annulus fan: H_2 nonzero and of finite length",
                            some_positive && vanishes_eventually, "H_2 " + dims_str(h2)));
  }

  // 12. Support codimension: the H_{d-i} growth is a polynomial of degree
  // at most d-i-2, with leading coefficient alpha_i/(d-i-2)! when
  // associated primes exist at that level.
  {
    bool ok = true;
    std::ostringstream os;
    for (Fixture* f : fixtures) {
      const int d = f->named.fan.dim();
      for (int i = 1; i <= d - 1; ++i) {
        GradedDimensionTable table;
        table.label = "H";
        table.max_degree = f->window;
        table.dims = f->homology.dims[d - i];
        Polynomial hp;
        try {
          hp = interpolate_hilbert_polynomial(table, d).poly;
        } catch (const std::exception&) {
          ok = false;
          os << f->named.name << ":H_" << d - i << ":not-stabilized ";
          continue;
        }
        if (hp.degree() > d - i - 2) {
          ok = false;
          os << f->named.name << ":H_" << d - i << ":deg=" << hp.degree() << " ";
        }
        if (!associated_prime_flats(*f->lattice, i).empty() && d - i - 2 >= 0) {
          // Leading coefficient of a * C(k+d-i-2, d-i-2) is a / (d-i-2)!.
          // For i = d-1 the predicted polynomial a*C(k-1,-1) is identically
          // zero (finite length), covered by the degree bound above.
          long a = alpha(*f->lattice, i);
          Integer fact = 1;
          for (int t = 2; t <= d - i - 2; ++t) fact *= t;
          Rational expect_lead(Integer(a), fact);
          if (hp.degree() != d - i - 2 || hp.leading_coefficient() != expect_lead) {
            ok = false;
            os << f->named.name << ":H_" << d - i << ":lead ";
          }
        }
      }
    }
    results.push_back(check("homology supported in expected codimension", ok,
                            ok ? "all fixtures, i=1..d-1" : os.str()));
  }

  return results;
}

}  // namespace splinefan
