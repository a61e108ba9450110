#pragma once

// Exact dense linear algebra over the rationals: reduced row echelon
// form, right null space, rank, and determinants.
//
// Determinants go through fraction-free Bareiss elimination on a
// denominator-cleared integer matrix, which keeps intermediate entries
// as single divisions of minors instead of accumulated fractions.

#include <span>
#include <vector>

#include "hilbkit/errors.hpp"
#include "hilbkit/rational.hpp"

namespace hilbkit {

struct RrefResult {
  RationalMatrix reduced;
  std::vector<Index> pivot_cols;
  Index rank = 0;
};

template <typename Derived>
RrefResult rref(const Eigen::MatrixBase<Derived>& input) {
  RrefResult res;
  RationalMatrix& m = res.reduced;
  m = input;
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = -1;
    for (Index i = r; i < rows; ++i)
      if (!is_zero(m(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    const Rational inv = 1 / m(r, c);
    for (Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Rational f = m(i, c);
      for (Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank;
}

/// Basis of the right null space of m, one basis vector per column.
/// Columns are produced in increasing free-column order; kernel dimension
/// is cols - rank.
template <typename Derived>
RationalMatrix kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  const RrefResult rr = rref(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (Index c : rr.pivot_cols) is_pivot[c] = true;

  RationalMatrix basis(cols, cols - rr.rank);
  basis.setConstant(Rational(0));
  Index out = 0;
  for (Index free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    basis(free_col, out) = 1;
    for (Index p = 0; p < rr.rank; ++p)
      basis(rr.pivot_cols[p], out) = -rr.reduced(p, free_col);
    ++out;
  }
  return basis;
}

/// Determinant by Bareiss elimination on the denominator-cleared integer
/// matrix; the row scalings are divided back out at the end.
template <typename Derived>
Rational determinant_bareiss(const Eigen::MatrixBase<Derived>& input) {
  const Index n = input.rows();
  if (input.cols() != n) throw DimensionMismatchError("determinant: matrix not square");
  if (n == 0) return 1;

  RationalMatrix m = input;
  std::vector<mpz_class> a(static_cast<std::size_t>(n * n));
  mpz_class scale = 1;
  for (Index i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (Index j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    scale *= l;
    for (Index j = 0; j < n; ++j) {
      Rational v = m(i, j) * Rational(l);
      a[static_cast<std::size_t>(i * n + j)] = v.get_num();
    }
  }

  auto at = [&](Index i, Index j) -> mpz_class& { return a[static_cast<std::size_t>(i * n + j)]; };
  mpz_class prev = 1;
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      Index piv = -1;
      for (Index i = k + 1; i < n; ++i)
        if (at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (Index j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        mpz_class t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = t;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Rational det(at(n - 1, n - 1), scale);
  det.canonicalize();
  return sign > 0 ? det : Rational(-det);
}

/// Exact determinant of the submatrix picked by the given row and column
/// index lists. Index lists must have equal size, be in range, and carry
/// no repeats.
template <typename Derived>
Rational minor_det(const Eigen::MatrixBase<Derived>& m, std::span<const Index> rows,
                   std::span<const Index> cols) {
  if (rows.size() != cols.size())
    throw DimensionMismatchError("minor: row/column subset sizes differ");
  auto check = [](std::span<const Index> idx, Index bound, const char* what) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] < 0 || idx[i] >= bound) throw DimensionMismatchError(std::string("minor: ") + what + " index out of range");
      for (std::size_t j = i + 1; j < idx.size(); ++j)
        if (idx[i] == idx[j]) throw DimensionMismatchError(std::string("minor: repeated ") + what + " index");
    }
  };
  check(rows, m.rows(), "row");
  check(cols, m.cols(), "column");
  const Index k = static_cast<Index>(rows.size());
  RationalMatrix sub(k, k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
  return determinant_bareiss(sub);
}

/// Solves A x = b exactly (A square nonsingular). Throws FixtureError on
/// a singular system.
inline RationalMatrix solve(const RationalMatrix& A, const RationalMatrix& b) {
  if (A.rows() != A.cols() || A.rows() != b.rows())
    throw DimensionMismatchError("solve: shape mismatch");
  RationalMatrix aug(A.rows(), A.cols() + b.cols());
  aug.leftCols(A.cols()) = A;
  aug.rightCols(b.cols()) = b;
  const RrefResult rr = rref(aug);
  if (rr.rank != A.cols() || (!rr.pivot_cols.empty() && rr.pivot_cols.back() >= A.cols()))
    throw FixtureError("solve: singular system");
  return rr.reduced.topRightCorner(A.cols(), b.cols());
}

}  // namespace hilbkit
