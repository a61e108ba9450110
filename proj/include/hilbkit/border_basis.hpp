#pragma once

// Border-basis chart machinery: formal multiplication matrices, the
// quadratic commutation equations cutting out the chart, and the normal
// form / ideal membership test at a commuting point.

#include <set>
#include <utility>
#include <vector>

#include "hilbkit/linalg.hpp"
#include "hilbkit/monomial.hpp"
#include "hilbkit/multipoly.hpp"
#include "hilbkit/xpoly.hpp"

namespace hilbkit {

/// Dense matrix of symbolic polynomials. Only storage and product are
/// needed; numeric matrices stay on Eigen.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Index rows, Index cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  MultiPoly& operator()(Index r, Index c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const MultiPoly& operator()(Index r, Index c) const {
    return data_[static_cast<std::size_t>(r * cols_ + c)];
  }

  PolyMatrix operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatchError("PolyMatrix product: shape mismatch");
    PolyMatrix r(rows_, o.cols_);
    for (Index i = 0; i < rows_; ++i)
      for (Index j = 0; j < o.cols_; ++j) {
        MultiPoly acc;
        for (Index k = 0; k < cols_; ++k) acc += (*this)(i, k) * o(k, j);
        r(i, j) = std::move(acc);
      }
    return r;
  }

  PolyMatrix operator-(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatchError("PolyMatrix difference: shape mismatch");
    PolyMatrix r(rows_, cols_);
    for (Index i = 0; i < rows_; ++i)
      for (Index j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j) - o(i, j);
    return r;
  }

 private:
  Index rows_ = 0, cols_ = 0;
  std::vector<MultiPoly> data_;
};

/// The n formal multiplication matrices M_{x_i}(z) on the basis B.
/// Column of M_{x_i} at beta: the unit vector when x_i*beta stays in B,
/// the z-column (z_{x_i beta, gamma})_gamma when it falls on the border.
struct FormalMultMatrices {
  BorderSet border;
  std::vector<PolyMatrix> mats;  // one per affine variable
};

inline FormalMultMatrices formal_mult_matrices(const MonomialBasis& B) {
  // MonomialBasis construction already guarantees connectedness to 1.
  FormalMultMatrices out;
  out.border = BorderSet(B);
  const Index mu = static_cast<Index>(B.mu());
  for (std::size_t i = 0; i < B.nvars(); ++i) {
    PolyMatrix m(mu, mu);
    for (Index c = 0; c < mu; ++c) {
      const Exponent target = B[static_cast<std::size_t>(c)].times_var(i);
      if (auto row = B.index_of(target)) {
        m(static_cast<Index>(*row), c) = MultiPoly(Rational(1));
      } else {
        for (Index r = 0; r < mu; ++r)
          m(r, c) = MultiPoly::variable(VarName::z(target, B[static_cast<std::size_t>(r)]));
      }
    }
    out.mats.push_back(std::move(m));
  }
  return out;
}

/// The defining equations of the chart: entries of all pairwise
/// commutators, degree <= 2 in z.
struct ChartEquations {
  BorderSet border;
  std::vector<MultiPoly> equations;
  std::size_t dropped_trivial = 0;
};

inline ChartEquations chart_equations(const MonomialBasis& B) {
  const FormalMultMatrices F = formal_mult_matrices(B);
  std::vector<MultiPoly> raw;
  const std::size_t n = B.nvars();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const PolyMatrix C = F.mats[i] * F.mats[j] - F.mats[j] * F.mats[i];
      for (Index r = 0; r < C.rows(); ++r)
        for (Index c = 0; c < C.cols(); ++c) raw.push_back(C(r, c));
    }
  NormalizedSet ns = normalize_and_dedup(raw);
  return ChartEquations{F.border, std::move(ns.equations), ns.dropped_trivial};
}

/// A complete numeric assignment z_{alpha,beta}, one row per border
/// monomial, one column per basis monomial.
struct BorderCoefficients {
  BorderSet border;
  RationalMatrix values;  // N x mu

  BorderCoefficients() = default;
  BorderCoefficients(BorderSet b, RationalMatrix v) : border(std::move(b)), values(std::move(v)) {
    if (values.rows() != static_cast<Index>(border.size()) ||
        values.cols() != static_cast<Index>(border.basis().mu()))
      throw IncompleteCoefficientsError("BorderCoefficients: value table has wrong shape");
  }

  static BorderCoefficients zero(const MonomialBasis& B) {
    BorderSet bs(B);
    RationalMatrix v(static_cast<Index>(bs.size()), static_cast<Index>(B.mu()));
    v.setConstant(Rational(0));
    return BorderCoefficients(std::move(bs), std::move(v));
  }

  const Rational& z(std::size_t alpha_idx, std::size_t beta_idx) const {
    return values(static_cast<Index>(alpha_idx), static_cast<Index>(beta_idx));
  }

  /// The border relation h_alpha = x^alpha - sum_beta z_{alpha,beta} x^beta.
  XPoly border_relation(std::size_t alpha_idx) const {
    XPoly h = XPoly::monomial(border.boundary()[alpha_idx]);
    for (std::size_t b = 0; b < border.basis().mu(); ++b)
      h.add_term(border.basis()[b], -z(alpha_idx, b));
    return h;
  }
};

/// Entrywise substitution of z into the formal matrices.
inline std::vector<RationalMatrix> instantiate(const FormalMultMatrices& F,
                                               const BorderCoefficients& z) {
  if (!(F.border.basis().elements() == z.border.basis().elements()))
    throw IncompleteCoefficientsError("instantiate: coefficient table built on another basis");
  std::map<VarName, Rational> sigma;
  for (std::size_t a = 0; a < z.border.size(); ++a)
    for (std::size_t b = 0; b < z.border.basis().mu(); ++b)
      sigma.emplace(VarName::z(z.border.boundary()[a], z.border.basis()[b]), z.z(a, b));

  std::vector<RationalMatrix> out;
  for (const auto& m : F.mats) {
    RationalMatrix num(m.rows(), m.cols());
    for (Index r = 0; r < m.rows(); ++r)
      for (Index c = 0; c < m.cols(); ++c) {
        const MultiPoly v = m(r, c).substitute(sigma);
        if (v.is_zero()) {
          num(r, c) = 0;
        } else if (v.terms().size() == 1 && v.terms().begin()->first.empty()) {
          num(r, c) = v.terms().begin()->second;
        } else {
          throw IncompleteCoefficientsError("instantiate: missing z entry for " +
                                            m(r, c).to_string());
        }
      }
    out.push_back(std::move(num));
  }
  return out;
}

inline std::vector<RationalMatrix> multiplication_matrices(const BorderCoefficients& z) {
  return instantiate(formal_mult_matrices(z.border.basis()), z);
}

/// True iff all pairwise commutators of the numeric matrices vanish.
inline bool is_border_basis(const BorderCoefficients& z) {
  const std::vector<RationalMatrix> M = multiplication_matrices(z);
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = i + 1; j < M.size(); ++j) {
      const RationalMatrix c = M[i] * M[j] - M[j] * M[i];
      for (Index r = 0; r < c.rows(); ++r)
        for (Index k = 0; k < c.cols(); ++k)
          if (!is_zero(c(r, k))) return false;
    }
  return true;
}

/// Coordinate vector of p over B: each monomial is factored into
/// variables (lowest index first) and pushed through the multiplication
/// matrices starting from the coordinate vector of 1. Refuses
/// non-commuting z, where the result would depend on the factorization.
inline RationalVector normal_form(const BorderCoefficients& z, const XPoly& p) {
  if (!is_border_basis(z))
    throw NotCommutingError("normal_form: multiplication matrices do not commute");
  const MonomialBasis& B = z.border.basis();
  const std::vector<RationalMatrix> M = multiplication_matrices(z);
  const std::size_t one = *B.index_of(Exponent::zero(B.nvars()));

  RationalVector acc(static_cast<Index>(B.mu()));
  acc.setConstant(Rational(0));
  for (const auto& [e, c] : p.terms()) {
    if (e.nvars() != B.nvars())
      throw DimensionMismatchError("normal_form: polynomial has wrong variable count");
    RationalVector v(static_cast<Index>(B.mu()));
    v.setConstant(Rational(0));
    v(static_cast<Index>(one)) = 1;
    for (std::size_t i = 0; i < e.nvars(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) v = (M[i] * v).eval();
    acc += c * v;
  }
  return acc;
}

inline bool ideal_membership(const BorderCoefficients& z, const XPoly& p) {
  const RationalVector v = normal_form(z, p);
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) return false;
  return true;
}

}  // namespace hilbkit
