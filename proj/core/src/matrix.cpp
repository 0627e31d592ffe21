#include "splinefan/matrix.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace splinefan {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return RatMatrix();
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatVec RatMatrix::row(std::size_t i) const {
  RatVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j).is_zero()) continue;
        c(i, j) += a(i, k) * b(k, j);
      }
    }
  return c;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

namespace {

// Sparse integer row: sorted (column, value) pairs.
using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

const Integer* find_col(const SparseRow& r, std::size_t c) {
  auto it = std::lower_bound(r.begin(), r.end(), c,
                             [](const auto& e, std::size_t col) { return e.first < col; });
  if (it != r.end() && it->first == c) return &it->second;
  return nullptr;
}

// Approximate cost of an entry, for pivot tie-breaking.
std::size_t bit_size(const Integer& x) { return mpz_sizeinbase(x.get_mpz_t(), 2); }

}  // namespace

// Fraction-free one-step elimination (Bareiss): after step k the entries are
// (k+1)x(k+1) minors of the input, so the update
//   a_ij <- (p_k * a_ij - a_ic * a_rj) / p_{k-1}
// divides exactly and intermediate swell stays bounded. Pivots are chosen by
// a Markowitz-style score to limit fill-in on the sparse block matrices this
// library produces. Rows missed by a pivot column only pick up the scalar
// p_k / p_s (s = step of their last update), so their rescaling is delayed
// until they actually participate again; scaling never changes the zero
// pattern, hence never affects the rank.
std::size_t rank(const RatMatrix& m) {
  const std::size_t nrows = m.rows(), ncols = m.cols();
  if (nrows == 0 || ncols == 0) return 0;

  std::vector<SparseRow> rows;
  rows.reserve(nrows);
  for (std::size_t i = 0; i < nrows; ++i) {
    // Row contents scale freely: clear denominators row by row.
    Integer lcm_den = 1;
    for (std::size_t j = 0; j < ncols; ++j) lcm_den = lcm(lcm_den, m(i, j).den());
    SparseRow r;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (m(i, j).is_zero()) continue;
      r.emplace_back(j, m(i, j).num() * (lcm_den / m(i, j).den()));
    }
    if (!r.empty()) rows.push_back(std::move(r));
  }

  std::vector<std::size_t> col_count(ncols, 0);
  for (const auto& r : rows)
    for (const auto& [c, v] : r) ++col_count[c];

  std::vector<char> active(rows.size(), 1);
  std::size_t active_left = rows.size();
  std::vector<Integer> pivot_history{Integer(1)};  // p_0 = 1
  std::vector<std::size_t> row_state(rows.size(), 0);
  std::size_t rk = 0;

  // Brings a row up to the state after `step` eliminations.
  auto rescale = [&](std::size_t i, std::size_t step) {
    if (row_state[i] == step) return;
    const Integer& num = pivot_history[step];
    const Integer& den = pivot_history[row_state[i]];
    for (auto& [c, v] : rows[i]) {
      v *= num;
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), den.get_mpz_t());
    }
    row_state[i] = step;
  };

  while (active_left > 0) {
    // Pivot search: minimize (row_nnz - 1) * (col_count - 1), then entry size.
    std::size_t best_row = std::numeric_limits<std::size_t>::max();
    std::size_t best_col = 0;
    unsigned long long best_score = std::numeric_limits<unsigned long long>::max();
    std::size_t best_bits = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!active[i]) continue;
      const auto rn = rows[i].size();
      for (const auto& [c, v] : rows[i]) {
        unsigned long long score =
            static_cast<unsigned long long>(rn - 1) * (col_count[c] - 1);
        if (score > best_score) continue;
        std::size_t bits = bit_size(v);
        if (score < best_score || bits < best_bits) {
          best_score = score;
          best_bits = bits;
          best_row = i;
          best_col = c;
        }
      }
    }
    if (best_row == std::numeric_limits<std::size_t>::max()) break;  // all rows empty

    const std::size_t pr = best_row, pc = best_col;
    const std::size_t step = rk;  // both operands are brought to state `step`
    rescale(pr, step);
    const Integer pivot = *find_col(rows[pr], pc);
    const Integer& prev = pivot_history[step];

    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!active[i] || i == pr) continue;
      if (find_col(rows[i], pc) == nullptr) continue;  // rescaling delayed
      rescale(i, step);
      const Integer b = *find_col(rows[i], pc);
      SparseRow out;
      out.reserve(rows[i].size() + rows[pr].size());
      auto ai = rows[i].begin(), ae = rows[i].end();
      auto ki = rows[pr].begin(), ke = rows[pr].end();
      Integer t;
      while (ai != ae || ki != ke) {
        std::size_t c;
        bool has_a = false, has_k = false;
        if (ai != ae && (ki == ke || ai->first <= ki->first)) {
          c = ai->first;
          has_a = true;
          has_k = (ki != ke && ki->first == c);
        } else {
          c = ki->first;
          has_k = true;
        }
        if (has_a && has_k) {
          t = ai->second * pivot - b * ki->second;
        } else if (has_a) {
          t = ai->second * pivot;
        } else {
          t = -b * ki->second;
        }
        if (has_a) ++ai;
        if (has_k) ++ki;
        if (t != 0) {
          mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
          if (!has_a) ++col_count[c];
          out.emplace_back(c, std::move(t));
          t = 0;
        } else if (has_a) {
          --col_count[c];
        }
      }
      rows[i] = std::move(out);
      row_state[i] = step + 1;
      if (rows[i].empty()) {
        active[i] = 0;
        --active_left;
      }
    }

    for (const auto& [c, v] : rows[pr]) --col_count[c];
    active[pr] = 0;
    --active_left;
    pivot_history.push_back(pivot);
    ++rk;
  }
  return rk;
}

RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivot_cols) {
  RatMatrix a = m;
  const std::size_t nrows = a.rows(), ncols = a.cols();
  if (pivot_cols) pivot_cols->clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = nrows;
    for (std::size_t i = r; i < nrows; ++i) {
      if (!a(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p == nrows) continue;
    if (p != r)
      for (std::size_t j = 0; j < ncols; ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = Rational(1) / a(r, c);
    for (std::size_t j = c; j < ncols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < ncols; ++j) a(i, j) -= f * a(r, j);
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return a;
}

std::vector<RatVec> nullspace_basis(const RatMatrix& m) {
  std::vector<std::size_t> pivots;
  RatMatrix r = rref(m, &pivots);
  const std::size_t ncols = m.cols();
  std::vector<char> is_pivot(ncols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<RatVec> basis;
  for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec v(ncols);
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix solve_exact(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_exact: shape mismatch");
  const std::size_t n = a.cols(), k = b.cols();
  RatMatrix aug(a.rows(), n + k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
  }
  std::vector<std::size_t> pivots;
  RatMatrix r = rref(aug, &pivots);
  RatMatrix x(n, k);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= n) throw std::domain_error("solve_exact: inconsistent system");
    for (std::size_t j = 0; j < k; ++j) x(pivots[i], j) = r(i, n + j);
  }
  if (pivots.size() != n) throw std::domain_error("solve_exact: rank-deficient system");
  return x;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = n;
    for (std::size_t i = c; i < n; ++i) {
      if (!a(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const Rational inv = Rational(1) / a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Rational f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::vector<RatVec> canonical_rowspace_basis(const std::vector<RatVec>& vectors,
                                             std::size_t dim) {
  if (vectors.empty()) return {};
  RatMatrix m(vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = vectors[i][j];
  RatMatrix r = rref(m);
  std::vector<RatVec> basis;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    RatVec row = r.row(i);
    if (!is_zero_vector(row)) basis.push_back(std::move(row));
  }
  return basis;
}

}  // namespace splinefan
