#pragma once

// Ground-truth construction: vanishing ideals of rational point
// configurations (simple points and first-order double points), border
// coefficients by interpolation, and seeded random sampling for the
// property suites. Everything is deterministic given the seed.

#include <cstdint>
#include <random>
#include <vector>

#include "hilbkit/border_basis.hpp"
#include "hilbkit/pluecker.hpp"

namespace hilbkit {

struct PointEntry {
  bool is_double = false;
  RationalVector coords;     // projective, length n+1
  RationalVector direction;  // affine tangent direction, length n (double only)
};

/// A configuration of points of P^n; total length counts a double point
/// twice. Underlying points must be pairwise distinct and direction
/// vectors nonzero.
struct PointConfiguration {
  std::size_t n = 0;
  std::vector<PointEntry> entries;

  std::size_t total_length() const {
    std::size_t mu = 0;
    for (const auto& e : entries) mu += e.is_double ? 2 : 1;
    return mu;
  }

  void validate() const {
    for (const auto& e : entries) {
      if (e.coords.size() != static_cast<Index>(n + 1))
        throw FixtureError("PointConfiguration: wrong coordinate length");
      bool nonzero = false;
      for (Index i = 0; i < e.coords.size(); ++i) nonzero = nonzero || !is_zero(e.coords(i));
      if (!nonzero) throw FixtureError("PointConfiguration: zero coordinate vector");
      if (e.is_double) {
        if (e.direction.size() != static_cast<Index>(n))
          throw FixtureError("PointConfiguration: wrong direction length");
        bool dir_nonzero = false;
        for (Index i = 0; i < e.direction.size(); ++i)
          dir_nonzero = dir_nonzero || !is_zero(e.direction(i));
        if (!dir_nonzero) throw FixtureError("PointConfiguration: zero direction");
      }
    }
    for (std::size_t a = 0; a < entries.size(); ++a)
      for (std::size_t b = a + 1; b < entries.size(); ++b) {
        // proportional projective vectors: all 2x2 minors vanish
        bool proportional = true;
        for (std::size_t i = 0; i <= n && proportional; ++i)
          for (std::size_t j = i + 1; j <= n && proportional; ++j) {
            const Rational m = entries[a].coords(static_cast<Index>(i)) *
                                   entries[b].coords(static_cast<Index>(j)) -
                               entries[a].coords(static_cast<Index>(j)) *
                                   entries[b].coords(static_cast<Index>(i));
            if (!is_zero(m)) proportional = false;
          }
        if (proportional) throw FixtureError("PointConfiguration: repeated point");
      }
  }
};

namespace detail {

inline Rational eval_monomial(const Exponent& e, const RationalVector& point) {
  Rational v = 1;
  for (std::size_t i = 0; i < e.nvars(); ++i)
    for (unsigned k = 0; k < e[i]; ++k) v *= point(static_cast<Index>(i));
  return v;
}

/// d/dt at t=0 of e evaluated at point + t*delta.
inline Rational eval_monomial_derivative(const Exponent& e, const RationalVector& point,
                                         const RationalVector& delta) {
  Rational acc = 0;
  for (std::size_t i = 0; i < e.nvars(); ++i) {
    if (e[i] == 0 || is_zero(delta(static_cast<Index>(i)))) continue;
    auto down = e.div_var(i);
    acc += Rational(static_cast<long>(e[i])) * delta(static_cast<Index>(i)) *
           eval_monomial(*down, point);
  }
  return acc;
}

}  // namespace detail

/// Rows spanning I_d: the kernel of the conditions matrix (an evaluation
/// row per simple point; for a double point the evaluation row plus the
/// directional derivative row). Requires d >= total length; the
/// conditions must be independent.
inline RationalMatrix vanishing_subspace(const PointConfiguration& c, unsigned d) {
  c.validate();
  const std::size_t mu = c.total_length();
  if (d < mu) throw FixtureError("vanishing_subspace: d < mu");
  const std::vector<Exponent> table = monomials_of_degree(c.n + 1, d);

  RationalMatrix cond(static_cast<Index>(mu), static_cast<Index>(table.size()));
  Index row = 0;
  for (const auto& p : c.entries) {
    for (std::size_t j = 0; j < table.size(); ++j)
      cond(row, static_cast<Index>(j)) = detail::eval_monomial(table[j], p.coords);
    ++row;
    if (p.is_double) {
      // derivative only along the affine directions x_1..x_n
      RationalVector delta(static_cast<Index>(c.n + 1));
      delta(0) = 0;
      for (std::size_t i = 0; i < c.n; ++i) delta(static_cast<Index>(i + 1)) = p.direction(static_cast<Index>(i));
      for (std::size_t j = 0; j < table.size(); ++j)
        cond(row, static_cast<Index>(j)) =
            detail::eval_monomial_derivative(table[j], p.coords, delta);
      ++row;
    }
  }
  if (rank(cond) != static_cast<Index>(mu))
    throw FixtureError("vanishing_subspace: degenerate configuration (conditions not independent)");
  return kernel_basis(cond).transpose();
}

/// Affine coordinates in the x0 = 1 chart; requires x0 != 0.
inline RationalVector affine_coords(const PointEntry& p) {
  if (is_zero(p.coords(0))) throw FixtureError("affine_coords: point at infinity");
  RationalVector out(p.coords.size() - 1);
  for (Index i = 1; i < p.coords.size(); ++i) out(i - 1) = p.coords(i) / p.coords(0);
  return out;
}

/// Evaluation matrix of B at the simple points of c (one row per point).
inline RationalMatrix basis_evaluation_matrix(const MonomialBasis& B,
                                              const PointConfiguration& c) {
  RationalMatrix e(static_cast<Index>(c.entries.size()), static_cast<Index>(B.mu()));
  for (std::size_t k = 0; k < c.entries.size(); ++k) {
    const RationalVector a = affine_coords(c.entries[k]);
    for (std::size_t b = 0; b < B.mu(); ++b)
      e(static_cast<Index>(k), static_cast<Index>(b)) = detail::eval_monomial(B[b], a);
  }
  return e;
}

/// Interpolation: for each border monomial alpha solve for z so that
/// x^alpha - sum_beta z_{alpha,beta} x^beta vanishes at every point.
inline BorderCoefficients border_coeffs_from_points(const MonomialBasis& B,
                                                    const PointConfiguration& c) {
  c.validate();
  for (const auto& p : c.entries)
    if (p.is_double) throw FixtureError("border_coeffs_from_points: simple points only");
  if (c.entries.size() != B.mu())
    throw FixtureError("border_coeffs_from_points: point count != mu");

  const RationalMatrix e = basis_evaluation_matrix(B, c);
  if (rank(e) != static_cast<Index>(B.mu()))
    throw FixtureError("border_coeffs_from_points: singular evaluation matrix");

  BorderSet bs(B);
  RationalMatrix values(static_cast<Index>(bs.size()), static_cast<Index>(B.mu()));
  for (std::size_t a = 0; a < bs.size(); ++a) {
    RationalMatrix rhs(static_cast<Index>(c.entries.size()), 1);
    for (std::size_t k = 0; k < c.entries.size(); ++k)
      rhs(static_cast<Index>(k), 0) =
          detail::eval_monomial(bs.boundary()[a], affine_coords(c.entries[k]));
    const RationalMatrix z = solve(e, rhs);
    for (std::size_t b = 0; b < B.mu(); ++b)
      values(static_cast<Index>(a), static_cast<Index>(b)) = z(static_cast<Index>(b), 0);
  }
  return BorderCoefficients(std::move(bs), std::move(values));
}

/// True iff the linear form u vanishes at no underlying point of c.
inline bool nonzerodivisor_check(const XPoly& u, const PointConfiguration& c) {
  c.validate();
  if (u.is_zero()) return false;
  for (const auto& p : c.entries) {
    Rational v = 0;
    for (const auto& [e, coeff] : u.terms()) {
      if (e.degree() != 1) throw DimensionMismatchError("nonzerodivisor_check: u not linear");
      v += coeff * detail::eval_monomial(e, p.coords);
    }
    if (is_zero(v)) return false;
  }
  return true;
}

inline QuotientPresentation quotient_fixture(const PointConfiguration& c, unsigned d) {
  return quotient_from_subspace(c.n, d, c.total_length(), vanishing_subspace(c, d));
}

/// A genuine Hilbert point in Pluecker coordinates.
inline PlueckerPoint plucker_fixture(const PointConfiguration& c, unsigned d) {
  return plucker_from_quotient(quotient_fixture(c, d));
}

/// Degree-d piece of the homogenized ideal at a commuting chart point,
/// presented by its annihilator functionals: column m of the functional
/// matrix is the normal form of the dehomogenized monomial.
inline QuotientPresentation quotient_from_chart(const BorderCoefficients& z, unsigned d) {
  if (!is_border_basis(z))
    throw NotCommutingError("quotient_from_chart: not a border basis");
  const MonomialBasis& B = z.border.basis();
  if (d < B.mu()) throw FixtureError("quotient_from_chart: d < mu");
  const std::size_t n = B.nvars();
  const std::vector<Exponent> table = monomials_of_degree(n + 1, d);
  const std::vector<RationalMatrix> M = multiplication_matrices(z);
  const std::size_t one = *B.index_of(Exponent::zero(n));

  RationalMatrix functionals(static_cast<Index>(B.mu()), static_cast<Index>(table.size()));
  for (std::size_t j = 0; j < table.size(); ++j) {
    const Exponent aff = dehomogenize(table[j]);
    RationalVector v(static_cast<Index>(B.mu()));
    v.setConstant(Rational(0));
    v(static_cast<Index>(one)) = 1;
    for (std::size_t i = 0; i < aff.nvars(); ++i)
      for (unsigned k = 0; k < aff[i]; ++k) v = (M[i] * v).eval();
    for (std::size_t b = 0; b < B.mu(); ++b)
      functionals(static_cast<Index>(b), static_cast<Index>(j)) = v(static_cast<Index>(b));
  }
  return quotient_from_functionals(n, d, B.mu(), functionals);
}

inline PlueckerPoint plucker_from_chart(const BorderCoefficients& z, unsigned d) {
  return plucker_from_quotient(quotient_from_chart(z, d));
}

/// Degree-d homogenizations of the multiples x^gamma h_alpha of the
/// border relations (those of degree <= d). At a commuting point these
/// rows span I_d; no commutation is assumed.
inline RationalMatrix chart_ideal_rows(const BorderCoefficients& z, unsigned d) {
  const MonomialBasis& B = z.border.basis();
  const std::size_t n = B.nvars();
  const std::vector<Exponent> table = monomials_of_degree(n + 1, d);
  std::vector<RationalVector> rows;
  for (std::size_t a = 0; a < z.border.size(); ++a) {
    const XPoly h = z.border_relation(a);
    const unsigned hdeg = h.max_degree();
    if (hdeg > d) continue;
    for (unsigned g = 0; g + hdeg <= d; ++g)
      for (const Exponent& gamma : monomials_of_degree(n, g)) {
        const XPoly f = h * XPoly::monomial(gamma);
        XPoly hom;
        for (const auto& [e, coeff] : f.terms()) hom.add_term(homogenize(e, d), coeff);
        rows.push_back(coeff_vector(hom, table));
      }
  }
  RationalMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(table.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Index>(i)) = rows[i].transpose();
  return m;
}

// ---------------------------------------------------------------------------
// Seeded random sampling

/// count distinct simple rational points with small integer affine
/// coordinates, resampled until all fixture preconditions hold.
inline PointConfiguration random_simple_points(std::size_t n, std::size_t count,
                                               std::uint64_t seed, long bound = 9) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-bound, bound);
  while (true) {
    PointConfiguration c;
    c.n = n;
    for (std::size_t k = 0; k < count; ++k) {
      PointEntry p;
      p.coords = RationalVector(static_cast<Index>(n + 1));
      p.coords(0) = 1;
      for (std::size_t i = 0; i < n; ++i) p.coords(static_cast<Index>(i + 1)) = coord(rng);
      c.entries.push_back(std::move(p));
    }
    try {
      c.validate();
    } catch (const FixtureError&) {
      continue;
    }
    return c;
  }
}

/// Adds a first-order double point to the sample (counts twice in mu).
inline PointConfiguration random_with_double_point(std::size_t n, std::size_t simple_count,
                                                   std::uint64_t seed, long bound = 9) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-bound, bound);
  while (true) {
    PointConfiguration c;
    c.n = n;
    PointEntry dp;
    dp.is_double = true;
    dp.coords = RationalVector(static_cast<Index>(n + 1));
    dp.coords(0) = 1;
    for (std::size_t i = 0; i < n; ++i) dp.coords(static_cast<Index>(i + 1)) = coord(rng);
    dp.direction = RationalVector(static_cast<Index>(n));
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      dp.direction(static_cast<Index>(i)) = coord(rng);
      nonzero = nonzero || !is_zero(dp.direction(static_cast<Index>(i)));
    }
    if (!nonzero) continue;
    c.entries.push_back(std::move(dp));
    for (std::size_t k = 0; k < simple_count; ++k) {
      PointEntry p;
      p.coords = RationalVector(static_cast<Index>(n + 1));
      p.coords(0) = 1;
      for (std::size_t i = 0; i < n; ++i) p.coords(static_cast<Index>(i + 1)) = coord(rng);
      c.entries.push_back(std::move(p));
    }
    try {
      c.validate();
    } catch (const FixtureError&) {
      continue;
    }
    return c;
  }
}

/// Random codimension-mu subspace of S_d with integer entries, resampled
/// until the rank is right. Not an ideal piece in general.
inline RationalMatrix random_subspace_rows(std::size_t n, unsigned d, std::size_t mu,
                                           std::uint64_t seed, long bound = 5) {
  const std::size_t s_d = monomials_of_degree(n + 1, d).size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-bound, bound);
  while (true) {
    RationalMatrix rows(static_cast<Index>(s_d - mu), static_cast<Index>(s_d));
    for (Index i = 0; i < rows.rows(); ++i)
      for (Index j = 0; j < rows.cols(); ++j) rows(i, j) = entry(rng);
    if (rank(rows) == static_cast<Index>(s_d - mu)) return rows;
  }
}

}  // namespace hilbkit
