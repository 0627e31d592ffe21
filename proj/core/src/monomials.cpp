#include "splinefan/monomials.hpp"

#include <stdexcept>

namespace splinefan {

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer forms_dimension(long num_vars, long degree) {
  if (degree < 0) return 0;
  if (num_vars == 0) return degree == 0 ? 1 : 0;
  return binomial(degree + num_vars - 1, num_vars - 1);
}

namespace {

void enumerate(int vars_left, int degree_left, std::vector<int>& prefix,
               std::vector<std::vector<int>>& out) {
  if (vars_left == 1) {
    prefix.push_back(degree_left);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = degree_left; e >= 0; --e) {
    prefix.push_back(e);
    enumerate(vars_left - 1, degree_left - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

MonomialBasis::MonomialBasis(int num_vars, int degree)
    : num_vars_(num_vars), degree_(degree) {
  if (num_vars < 1) throw std::invalid_argument("MonomialBasis: num_vars must be >= 1");
  if (degree < 0) return;  // empty basis for negative degree
  std::vector<int> prefix;
  enumerate(num_vars, degree, prefix, monomials_);
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_[monomials_[i]] = i;
}

std::size_t MonomialBasis::index_of(const std::vector<int>& exponents) const {
  auto it = index_.find(exponents);
  if (it == index_.end()) throw std::out_of_range("MonomialBasis: unknown monomial");
  return it->second;
}

RatMatrix mult_by_linear_form(const RatVec& l, int degree) {
  if (is_zero_vector(l)) throw std::invalid_argument("ZeroForm");
  if (degree < 1) throw std::invalid_argument("mult_by_linear_form: degree must be >= 1");
  const int n = static_cast<int>(l.size());
  MonomialBasis src(n, degree - 1), dst(n, degree);
  RatMatrix m(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    std::vector<int> e = src[j];
    for (int v = 0; v < n; ++v) {
      if (l[v].is_zero()) continue;
      ++e[v];
      m(dst.index_of(e), j) += l[v];
      --e[v];
    }
  }
  return m;
}

RatMatrix substitution_matrix(const RatMatrix& a, int degree) {
  const std::size_t d = a.rows(), e = a.cols();
  if (e == 0 || d == 0)
    throw std::invalid_argument("substitution_matrix: empty linear map");
  MonomialBasis src(static_cast<int>(d), degree);
  MonomialBasis dst(static_cast<int>(e), degree);
  RatMatrix m(dst.size(), src.size());

  // Dense polynomial coefficients over the degree-t bases in e variables,
  // one basis per intermediate degree.
  std::vector<MonomialBasis> level;
  level.reserve(degree + 1);
  for (int t = 0; t <= degree; ++t) level.emplace_back(static_cast<int>(e), t);

  for (std::size_t j = 0; j < src.size(); ++j) {
    const std::vector<int>& exp = src[j];
    RatVec poly{Rational(1)};  // the constant 1 at degree 0
    int t = 0;
    for (std::size_t var = 0; var < d; ++var) {
      for (int rep = 0; rep < exp[var]; ++rep) {
        RatVec next(level[t + 1].size());
        for (std::size_t p = 0; p < poly.size(); ++p) {
          if (poly[p].is_zero()) continue;
          std::vector<int> mono = level[t][p];
          for (std::size_t y = 0; y < e; ++y) {
            if (a(var, y).is_zero()) continue;
            ++mono[y];
            next[level[t + 1].index_of(mono)] += poly[p] * a(var, y);
            --mono[y];
          }
        }
        poly = std::move(next);
        ++t;
      }
    }
    for (std::size_t p = 0; p < poly.size(); ++p) m(p, j) = poly[p];
  }
  return m;
}

}  // namespace splinefan
