#pragma once

// Zariski tangent space at a chart point: the exact linear system cut
// out by linearizing the commutators at z0, the point-motion oracle for
// configurations of simple points, and the syzygy-image criterion.

#include <vector>

#include "hilbkit/border_basis.hpp"
#include "hilbkit/fixtures.hpp"

namespace hilbkit {

/// Linear system in the unknowns h1_{alpha,beta}; column order is
/// (alpha in dB canonical) major, (beta in B canonical) minor. One row
/// per scalar entry of each linearized commutator, pairs (i,j) with
/// i < j in order, entries row-major.
struct TangentSystem {
  BorderCoefficients base_point;
  RationalMatrix matrix;  // rows x (N * mu)

  std::size_t unknowns() const { return static_cast<std::size_t>(matrix.cols()); }
};

inline TangentSystem tangent_system(const MonomialBasis& B, const BorderCoefficients& z0) {
  if (!(z0.border.basis().elements() == B.elements()))
    throw IncompleteCoefficientsError("tangent_system: base point on another basis");
  if (!is_border_basis(z0))
    throw NotCommutingError("tangent_system: base point off the chart");

  const std::size_t n = B.nvars();
  const std::size_t mu = B.mu();
  const BorderSet& border = z0.border;
  const std::size_t cols = border.size() * mu;

  const std::vector<RationalMatrix> M0 = multiplication_matrices(z0);
  auto col_of = [&](const Exponent& alpha, std::size_t beta_idx) {
    return *border.index_of(alpha) * mu + beta_idx;
  };

  // formal first-order matrices: zero columns inside B, h1 columns on dB
  std::vector<PolyMatrix> M1;
  for (std::size_t i = 0; i < n; ++i) {
    PolyMatrix m(static_cast<Index>(mu), static_cast<Index>(mu));
    for (std::size_t c = 0; c < mu; ++c) {
      const Exponent target = B[c].times_var(i);
      if (B.contains(target)) continue;
      for (std::size_t r = 0; r < mu; ++r)
        m(static_cast<Index>(r), static_cast<Index>(c)) =
            MultiPoly::variable(VarName::h1(target, B[r]));
    }
    M1.push_back(std::move(m));
  }
  std::vector<PolyMatrix> M0p;
  for (const auto& m : M0) {
    PolyMatrix p(m.rows(), m.cols());
    for (Index r = 0; r < m.rows(); ++r)
      for (Index c = 0; c < m.cols(); ++c) p(r, c) = MultiPoly(m(r, c));
    M0p.push_back(std::move(p));
  }

  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const PolyMatrix e =
          M1[i] * M0p[j] - M0p[j] * M1[i] - (M1[j] * M0p[i] - M0p[i] * M1[j]);
      for (Index r = 0; r < e.rows(); ++r)
        for (Index c = 0; c < e.cols(); ++c) {
          RationalVector row(static_cast<Index>(cols));
          row.setConstant(Rational(0));
          for (const auto& [m, coeff] : e(r, c).terms()) {
            if (m.size() != 1 || m.begin()->second != 1 ||
                m.begin()->first.family != VarFamily::H1)
              throw Error("tangent_system: linearization produced a non-linear term");
            const VarName& v = m.begin()->first;
            row(static_cast<Index>(col_of(v.index[0], *B.index_of(v.index[1])))) = coeff;
          }
          rows.push_back(std::move(row));
        }
    }

  TangentSystem out{z0, RationalMatrix(static_cast<Index>(rows.size()), static_cast<Index>(cols))};
  for (std::size_t r = 0; r < rows.size(); ++r)
    out.matrix.row(static_cast<Index>(r)) = rows[r].transpose();
  return out;
}

inline RationalMatrix tangent_kernel(const TangentSystem& t) { return kernel_basis(t.matrix); }

inline std::size_t tangent_dimension(const MonomialBasis& B, const BorderCoefficients& z0) {
  const TangentSystem t = tangent_system(B, z0);
  return static_cast<std::size_t>(t.matrix.cols() - rank(t.matrix));
}

/// Exact derivative of the interpolated border coefficients as one point
/// moves along one coordinate direction; n * mu vectors in the tangent
/// unknown order.
inline std::vector<RationalVector> point_motion_directions(const MonomialBasis& B,
                                                           const PointConfiguration& c) {
  c.validate();
  for (const auto& p : c.entries)
    if (p.is_double) throw FixtureError("point_motion_directions: simple points only");
  if (c.entries.size() != B.mu())
    throw FixtureError("point_motion_directions: point count != mu");

  const std::size_t n = B.nvars();
  const std::size_t mu = B.mu();
  const RationalMatrix e = basis_evaluation_matrix(B, c);
  if (rank(e) != static_cast<Index>(mu))
    throw FixtureError("point_motion_directions: singular evaluation matrix");

  const BorderCoefficients z = border_coeffs_from_points(B, c);
  const BorderSet& border = z.border;

  std::vector<RationalVector> out;
  for (std::size_t k = 0; k < mu; ++k) {
    const RationalVector pt = affine_coords(c.entries[k]);
    for (std::size_t dir = 0; dir < n; ++dir) {
      // dE/dt and dw/dt are supported on row k only
      RationalVector h1(static_cast<Index>(border.size() * mu));
      h1.setConstant(Rational(0));
      RationalMatrix edot(static_cast<Index>(mu), static_cast<Index>(mu));
      edot.setConstant(Rational(0));
      for (std::size_t b = 0; b < mu; ++b) {
        const Exponent& beta = B[b];
        if (beta[dir] == 0) continue;
        edot(static_cast<Index>(k), static_cast<Index>(b)) =
            Rational(static_cast<long>(beta[dir])) *
            detail::eval_monomial(*beta.div_var(dir), pt);
      }
      for (std::size_t a = 0; a < border.size(); ++a) {
        const Exponent& alpha = border.boundary()[a];
        RationalMatrix wdot(static_cast<Index>(mu), 1);
        wdot.setConstant(Rational(0));
        if (alpha[dir] > 0)
          wdot(static_cast<Index>(k), 0) = Rational(static_cast<long>(alpha[dir])) *
                                           detail::eval_monomial(*alpha.div_var(dir), pt);
        RationalMatrix zcol(static_cast<Index>(mu), 1);
        for (std::size_t b = 0; b < mu; ++b) zcol(static_cast<Index>(b), 0) = z.z(a, b);
        const RationalMatrix zdot = solve(e, RationalMatrix(wdot - edot * zcol));
        for (std::size_t b = 0; b < mu; ++b)
          h1(static_cast<Index>(a * mu + b)) = zdot(static_cast<Index>(b), 0);
      }
      out.push_back(std::move(h1));
    }
  }
  return out;
}

/// The projections N0 + H0 = Id on <B+>: H0 kills <B> and sends a border
/// monomial to its border relation.
struct ProjectionMaps {
  std::vector<Exponent> b_plus;
  RationalMatrix n0, h0;
};

inline ProjectionMaps projection_maps(const BorderCoefficients& z0) {
  const BorderSet& border = z0.border;
  const std::vector<Exponent> bp = border.b_plus();
  const Index m = static_cast<Index>(bp.size());
  RationalMatrix h0(m, m);
  h0.setConstant(Rational(0));
  for (std::size_t c = 0; c < bp.size(); ++c) {
    if (auto a = border.index_of(bp[c])) {
      const XPoly rel = z0.border_relation(*a);
      for (const auto& [e, coeff] : rel.terms())
        h0(static_cast<Index>(monomial_rank(bp, e)), static_cast<Index>(c)) = coeff;
    }
  }
  ProjectionMaps out;
  out.b_plus = bp;
  out.h0 = h0;
  out.n0 = RationalMatrix::Identity(m, m) - h0;
  return out;
}

namespace detail {

/// H1 applied to a polynomial supported on <B+>: border monomials map to
/// their candidate first-order relations, basis monomials to zero.
inline XPoly apply_h1(const BorderCoefficients& z0, const RationalVector& h1, const XPoly& p) {
  const BorderSet& border = z0.border;
  const std::size_t mu = border.basis().mu();
  XPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (border.basis().contains(e)) continue;
    const auto a = border.index_of(e);
    if (!a) throw DimensionMismatchError("apply_h1: monomial outside <B+>");
    for (std::size_t b = 0; b < mu; ++b)
      out.add_term(border.basis()[b], c * h1(static_cast<Index>(*a * mu + b)));
  }
  return out;
}

/// N0 applied to a polynomial supported on <B+>.
inline XPoly apply_n0(const BorderCoefficients& z0, const XPoly& p) {
  const BorderSet& border = z0.border;
  XPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (border.basis().contains(e)) {
      out.add_term(e, c);
      continue;
    }
    const auto a = border.index_of(e);
    if (!a) throw DimensionMismatchError("apply_n0: monomial outside <B+>");
    for (std::size_t b = 0; b < border.basis().mu(); ++b)
      out.add_term(border.basis()[b], c * z0.z(*a, b));
  }
  return out;
}

}  // namespace detail

/// True iff for every m in B and i < i', the syzygy image
///   x_i H1(x_i' m) - x_i' H1(x_i m) + H1(x_i N0(x_i' m)) - H1(x_i' N0(x_i m))
/// reduces to zero modulo the ideal of z0.
inline bool syzygy_images_vanish(const MonomialBasis& B, const BorderCoefficients& z0,
                                 const RationalVector& h1) {
  if (!is_border_basis(z0))
    throw NotCommutingError("syzygy_images_vanish: base point off the chart");
  if (h1.size() != static_cast<Index>(z0.border.size() * B.mu()))
    throw DimensionMismatchError("syzygy_images_vanish: wrong unknown count");

  const std::size_t n = B.nvars();
  for (std::size_t bm = 0; bm < B.mu(); ++bm)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const XPoly xi_m = XPoly::monomial(B[bm].times_var(i));
        const XPoly xj_m = XPoly::monomial(B[bm].times_var(j));
        XPoly img = detail::apply_h1(z0, h1, xj_m).shifted_by_var(i);
        img -= detail::apply_h1(z0, h1, xi_m).shifted_by_var(j);
        img += detail::apply_h1(z0, h1, detail::apply_n0(z0, xj_m).shifted_by_var(i));
        img -= detail::apply_h1(z0, h1, detail::apply_n0(z0, xi_m).shifted_by_var(j));
        if (!ideal_membership(z0, img)) return false;
      }
  return true;
}

}  // namespace hilbkit
