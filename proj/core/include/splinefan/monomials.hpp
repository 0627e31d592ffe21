#ifndef SPLINEFAN_MONOMIALS_HPP
#define SPLINEFAN_MONOMIALS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "splinefan/matrix.hpp"

namespace splinefan {

// Binomial coefficient C(n, k) as an exact integer; 0 for n < 0 or k < 0.
Integer binomial(long n, long k);

// Dimension of the space of degree-k forms in n variables: C(k+n-1, n-1).
Integer forms_dimension(long num_vars, long degree);

// All exponent vectors of a fixed total degree, in graded-lexicographic
// order (variables in index order, lexicographically descending). This is
// the one monomial order used everywhere in the library.
class MonomialBasis {
public:
  MonomialBasis(int num_vars, int degree);

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<int>& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<std::vector<int>>& monomials() const { return monomials_; }

  std::size_t index_of(const std::vector<int>& exponents) const;

private:
  int num_vars_, degree_;
  std::vector<std::vector<int>> monomials_;
  std::map<std::vector<int>, std::size_t> index_;
};

// Matrix of multiplication by a nonzero linear form l (coefficient vector),
// as a map (degree k-1 forms) -> (degree k forms) in the monomial bases.
// Throws std::invalid_argument("ZeroForm") if l = 0.
RatMatrix mult_by_linear_form(const RatVec& l, int degree);

// Matrix of substitution p(x) |-> p(A y) along a linear map A : Q^e -> Q^d
// (given as a d x e matrix), from degree-k forms in d variables to degree-k
// forms in e variables.
RatMatrix substitution_matrix(const RatMatrix& a, int degree);

}  // namespace splinefan

#endif
