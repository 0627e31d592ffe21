#ifndef SPLINEFAN_MATRIX_HPP
#define SPLINEFAN_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "splinefan/rational.hpp"

namespace splinefan {

// Dense row-major matrix over Q.
class RatMatrix {
public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  RatVec row(std::size_t i) const;
  RatMatrix transpose() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

// Exact rank via fraction-free (Bareiss) elimination with sparsity-aware
// full pivoting. Pure function, safe to call from parallel workers.
std::size_t rank(const RatMatrix& m);

inline std::size_t nullity(const RatMatrix& m) { return m.cols() - rank(m); }

// Reduced row echelon form with rational pivots (independent of the Bareiss
// path). Returns the RREF; pivot_cols, when non-null, receives pivot columns.
RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivot_cols = nullptr);

// Basis of the right kernel {x : m x = 0}, one vector per nullity.
std::vector<RatVec> nullspace_basis(const RatMatrix& m);

// Solves A X = B column by column; requires the system to be consistent and
// A to have full column rank. Throws std::domain_error otherwise.
RatMatrix solve_exact(const RatMatrix& a, const RatMatrix& b);

// Exact determinant of a square matrix (rational Gaussian elimination).
Rational determinant(const RatMatrix& m);

// Canonical basis of the row space: nonzero rows of the RREF. Equal
// subspaces yield identical results, so this is usable as a dictionary key.
std::vector<RatVec> canonical_rowspace_basis(const std::vector<RatVec>& vectors,
                                             std::size_t dim);

}  // namespace splinefan

#endif
