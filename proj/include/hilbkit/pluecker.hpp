#pragma once

// Pluecker machinery for Gr^mu(S_d*): coordinates of a quotient point as
// maximal minors of annihilator functionals, signed index normalization,
// multilinear expansion of Delta over polynomial families, the Cramer
// relation, and the quadratic exchange relations.

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hilbkit/linalg.hpp"
#include "hilbkit/monomial.hpp"
#include "hilbkit/multipoly.hpp"
#include "hilbkit/xpoly.hpp"

namespace hilbkit {

/// A family of degree-d projective monomials indexing one Pluecker
/// coordinate. Stored keys are strictly increasing under the canonical
/// order.
using PlueckerKey = std::vector<Exponent>;

struct KeyLess {
  bool operator()(const PlueckerKey& a, const PlueckerKey& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), CanonicalLess{});
  }
};

/// Sorts an index family; returns the permutation signature, or 0 when an
/// entry repeats (the coordinate vanishes).
inline std::pair<int, PlueckerKey> normalize_index(PlueckerKey family) {
  int sign = 1;
  for (std::size_t i = 1; i < family.size(); ++i)
    for (std::size_t j = i; j > 0 && !canonical_less(family[j - 1], family[j]); --j) {
      if (family[j - 1] == family[j]) return {0, {}};
      std::swap(family[j - 1], family[j]);
      sign = -sign;
    }
  return {sign, std::move(family)};
}

/// Coefficient vector of a homogeneous polynomial over a monomial table.
inline RationalVector coeff_vector(const XPoly& p, const std::vector<Exponent>& table) {
  RationalVector v(static_cast<Index>(table.size()));
  v.setConstant(Rational(0));
  for (const auto& [e, c] : p.terms())
    v(static_cast<Index>(monomial_rank(table, e))) = c;
  return v;
}

/// A point of Gr^mu(S_d*): projective coordinates over sorted mu-tuples
/// of degree-d monomials, first nonzero coordinate scaled to 1, zeros
/// omitted.
class PlueckerPoint {
 public:
  using CoordMap = std::map<PlueckerKey, Rational, KeyLess>;

  PlueckerPoint() = default;
  PlueckerPoint(std::size_t n, unsigned d, std::size_t mu, CoordMap raw)
      : n_(n), d_(d), mu_(mu) {
    for (const auto& [key, value] : raw) {
      if (key.size() != mu_) throw DimensionMismatchError("PlueckerPoint: key size != mu");
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (key[i].nvars() != n_ + 1 || key[i].degree() != d_)
          throw DimensionMismatchError("PlueckerPoint: key entry not a degree-d monomial");
        if (i + 1 < key.size() && !canonical_less(key[i], key[i + 1]))
          throw DimensionMismatchError("PlueckerPoint: key not strictly increasing");
      }
      if (!is_zero(value)) coords_.emplace(key, value);
    }
    if (coords_.empty()) throw DimensionMismatchError("PlueckerPoint: all coordinates zero");
    const Rational lead = coords_.begin()->second;
    for (auto& [key, value] : coords_) value /= lead;
  }

  std::size_t n() const { return n_; }
  unsigned d() const { return d_; }
  std::size_t mu() const { return mu_; }
  const CoordMap& coords() const { return coords_; }

  /// Coordinate at a sorted key; zero when absent.
  Rational coordinate(const PlueckerKey& sorted_key) const {
    auto it = coords_.find(sorted_key);
    return it == coords_.end() ? Rational(0) : it->second;
  }

  /// Signed coordinate of an arbitrarily ordered monomial family.
  Rational delta(PlueckerKey family) const {
    auto [sign, key] = normalize_index(std::move(family));
    if (sign == 0) return 0;
    return sign * coordinate(key);
  }

  friend bool operator==(const PlueckerPoint& a, const PlueckerPoint& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.mu_ == b.mu_ && a.coords_ == b.coords_;
  }

 private:
  std::size_t n_ = 0;
  unsigned d_ = 0;
  std::size_t mu_ = 0;
  CoordMap coords_;
};

/// A concrete presentation of Delta = T_d/I_d: rows spanning I_d and mu
/// functional rows spanning its annihilator, over the canonical degree-d
/// monomial basis.
struct QuotientPresentation {
  std::size_t n = 0;
  unsigned d = 0;
  std::size_t mu = 0;
  RationalMatrix subspace;     // (s_d - mu) x s_d
  RationalMatrix functionals;  // mu x s_d
};

inline QuotientPresentation quotient_from_subspace(std::size_t n, unsigned d, std::size_t mu,
                                                   const RationalMatrix& rows) {
  const std::size_t s_d = monomials_of_degree(n + 1, d).size();
  if (rows.cols() != static_cast<Index>(s_d))
    throw DimensionMismatchError("quotient_from_subspace: wrong column count");
  if (rank(rows) != static_cast<Index>(s_d - mu))
    throw CodimensionError("quotient_from_subspace: subspace rank != s_d - mu");
  QuotientPresentation q;
  q.n = n;
  q.d = d;
  q.mu = mu;
  q.subspace = rows;
  q.functionals = kernel_basis(rows).transpose();
  return q;
}

inline QuotientPresentation quotient_from_functionals(std::size_t n, unsigned d, std::size_t mu,
                                                      const RationalMatrix& rows) {
  const std::size_t s_d = monomials_of_degree(n + 1, d).size();
  if (rows.cols() != static_cast<Index>(s_d))
    throw DimensionMismatchError("quotient_from_functionals: wrong column count");
  if (rank(rows) != static_cast<Index>(mu))
    throw CodimensionError("quotient_from_functionals: functional rank != mu");
  QuotientPresentation q;
  q.n = n;
  q.d = d;
  q.mu = mu;
  q.functionals = rows;
  q.subspace = kernel_basis(rows).transpose();
  return q;
}

namespace detail {

/// Visits all strictly increasing index tuples of the given size.
template <typename F>
void for_each_combination(std::size_t universe, std::size_t size, F&& visit) {
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  if (size > universe) return;
  while (true) {
    visit(idx);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == universe - size + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// Pluecker coordinates of a quotient: the maximal minors of the
/// functional matrix, one per sorted key.
inline PlueckerPoint plucker_from_quotient(const QuotientPresentation& q) {
  const std::vector<Exponent> table = monomials_of_degree(q.n + 1, q.d);
  PlueckerPoint::CoordMap coords;
  std::vector<Index> rows(q.mu);
  for (std::size_t i = 0; i < q.mu; ++i) rows[i] = static_cast<Index>(i);
  detail::for_each_combination(table.size(), q.mu, [&](const std::vector<std::size_t>& idx) {
    std::vector<Index> cols(idx.size());
    PlueckerKey key(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      cols[i] = static_cast<Index>(idx[i]);
      key[i] = table[idx[i]];
    }
    const Rational m = minor_det(q.functionals, rows, cols);
    if (!is_zero(m)) coords.emplace(std::move(key), m);
  });
  // rank(functionals) = mu guarantees a nonzero maximal minor
  return PlueckerPoint(q.n, q.d, q.mu, std::move(coords));
}

/// det(delta_i(p_j)) for a family of polynomials, straight from the
/// functionals (no expansion into coordinates).
inline Rational family_determinant(const QuotientPresentation& q, std::span<const XPoly> family) {
  if (family.size() != q.mu) throw DimensionMismatchError("family_determinant: family size != mu");
  const std::vector<Exponent> table = monomials_of_degree(q.n + 1, q.d);
  RationalMatrix m(static_cast<Index>(q.mu), static_cast<Index>(q.mu));
  for (std::size_t j = 0; j < family.size(); ++j) {
    if (!family[j].is_zero() && family[j].homogeneous_degree() != q.d)
      throw DimensionMismatchError("family_determinant: entry degree mismatch");
    const RationalVector col = q.functionals * coeff_vector(family[j], table);
    for (Index i = 0; i < col.size(); ++i) m(i, static_cast<Index>(j)) = col(i);
  }
  return determinant_bareiss(m);
}

/// Multilinear expansion of det(delta_i(p_j)) into signed sorted
/// coordinates of P, evaluated at P.
inline Rational delta_of_family(const PlueckerPoint& p, std::span<const XPoly> family) {
  if (family.size() != p.mu()) throw DimensionMismatchError("delta_of_family: family size != mu");
  for (const auto& f : family)
    if (!f.is_zero() && f.homogeneous_degree() != p.d())
      throw DimensionMismatchError("delta_of_family: entry degree mismatch");

  Rational acc = 0;
  PlueckerKey chosen(family.size());
  auto rec = [&](auto&& self, std::size_t pos, const Rational& coeff) -> void {
    if (pos == family.size()) {
      acc += coeff * p.delta(chosen);
      return;
    }
    for (const auto& [e, c] : family[pos].terms()) {
      chosen[pos] = e;
      self(self, pos + 1, Rational(coeff * c));
    }
  };
  rec(rec, 0, Rational(1));
  return acc;
}

/// Entry of a symbolic index family: a linear combination of monomials
/// whose coefficients are themselves polynomials (constants for a fixed
/// linear form, u-variables for the generic one).
struct SymEntry {
  std::vector<std::pair<MultiPoly, Exponent>> terms;

  static SymEntry monomial(const Exponent& e) { return SymEntry{{{MultiPoly(Rational(1)), e}}}; }
};

/// Multilinear expansion of a symbolic family into Delta variables of the
/// requested family, keeping the entry coefficients symbolic.
inline MultiPoly delta_expand(std::span<const SymEntry> family, VarFamily delta_family) {
  MultiPoly acc;
  PlueckerKey chosen(family.size());
  std::vector<const MultiPoly*> coeffs(family.size());
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == family.size()) {
      auto [sign, key] = normalize_index(chosen);
      if (sign == 0) return;
      MultiPoly term = MultiPoly::variable(delta_family == VarFamily::Delta
                                               ? VarName::delta(std::move(key))
                                               : VarName::delta_prime(std::move(key)));
      if (sign < 0) term = -term;
      for (const MultiPoly* c : coeffs) term = term * (*c);
      acc += term;
      return;
    }
    for (const auto& [c, e] : family[pos].terms) {
      chosen[pos] = e;
      coeffs[pos] = &c;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return acc;
}

/// Evaluates a polynomial in Delta variables at a point, reading absent
/// coordinates as zero. DeltaPrime variables are evaluated at p_prime.
inline Rational evaluate_at_point(const MultiPoly& poly, const PlueckerPoint& p,
                                  const PlueckerPoint* p_prime = nullptr) {
  Rational acc = 0;
  for (const auto& [m, c] : poly.terms()) {
    Rational v = c;
    for (const auto& [var, e] : m) {
      Rational base;
      if (var.family == VarFamily::Delta) {
        base = p.coordinate(var.index);
      } else if (var.family == VarFamily::DeltaPrime && p_prime != nullptr) {
        base = p_prime->coordinate(var.index);
      } else {
        throw DimensionMismatchError("evaluate_at_point: unexpected variable " + var.to_string());
      }
      for (unsigned k = 0; k < e; ++k) v *= base;
    }
    acc += v;
  }
  return acc;
}

/// The class of Delta_B a - sum_i Delta_{B[b_i|a]} b_i in T_d/I_d, as a
/// coefficient vector reduced against the subspace rows; exactly zero by
/// the Cramer relation.
inline RationalVector cramer_residual(const QuotientPresentation& q, std::span<const XPoly> family,
                                      const XPoly& a) {
  if (family.size() != q.mu) throw DimensionMismatchError("cramer_residual: family size != mu");
  const std::vector<Exponent> table = monomials_of_degree(q.n + 1, q.d);
  if (!a.is_zero() && a.homogeneous_degree() != q.d)
    throw DimensionMismatchError("cramer_residual: degree mismatch");

  XPoly r = a * family_determinant(q, family);
  std::vector<XPoly> replaced(family.begin(), family.end());
  for (std::size_t i = 0; i < family.size(); ++i) {
    replaced[i] = a;
    r -= family[i] * family_determinant(q, replaced);
    replaced[i] = family[i];
  }

  RationalVector v = coeff_vector(r, table);
  const RrefResult rr = rref(q.subspace);
  for (Index p = 0; p < rr.rank; ++p) {
    const Index col = rr.pivot_cols[static_cast<std::size_t>(p)];
    if (is_zero(v(col))) continue;
    const Rational f = v(col);
    for (Index j = 0; j < v.size(); ++j) v(j) -= f * rr.reduced(p, j);
  }
  return v;
}

/// The quadratic exchange relations: for every (mu-1)-tuple A and
/// (mu+1)-tuple C of degree-d monomials,
///   sum_l (-1)^(l-1) D_{A u C_l} D_{C \ C_l} = 0.
template <typename Visit>
void for_each_plucker_relation(std::size_t n, unsigned d, std::size_t mu, Visit&& visit) {
  if (mu < 1) return;
  const std::vector<Exponent> table = monomials_of_degree(n + 1, d);
  if (mu + 1 > table.size()) return;
  detail::for_each_combination(table.size(), mu - 1, [&](const std::vector<std::size_t>& a_idx) {
    detail::for_each_combination(table.size(), mu + 1, [&](const std::vector<std::size_t>& c_idx) {
      visit(a_idx, c_idx);
    });
  });
}

inline std::vector<MultiPoly> plucker_relations(std::size_t n, unsigned d, std::size_t mu) {
  const std::vector<Exponent> table = monomials_of_degree(n + 1, d);
  std::vector<MultiPoly> raw;
  for_each_plucker_relation(
      n, d, mu, [&](const std::vector<std::size_t>& a_idx, const std::vector<std::size_t>& c_idx) {
        MultiPoly rel;
        int sign = 1;
        for (std::size_t l = 0; l < c_idx.size(); ++l) {
          PlueckerKey left;
          for (std::size_t i : a_idx) left.push_back(table[i]);
          left.push_back(table[c_idx[l]]);
          auto [s1, k1] = normalize_index(std::move(left));
          if (s1 != 0) {
            PlueckerKey right;
            for (std::size_t i = 0; i < c_idx.size(); ++i)
              if (i != l) right.push_back(table[c_idx[i]]);
            MultiPoly term = MultiPoly::variable(VarName::delta(std::move(k1))) *
                             MultiPoly::variable(VarName::delta(std::move(right)));
            rel += (sign * s1 > 0) ? term : -term;
          }
          sign = -sign;
        }
        raw.push_back(std::move(rel));
      });
  std::set<MultiPoly> seen;
  std::vector<MultiPoly> out;
  for (const auto& r : raw) {
    if (r.is_zero()) continue;
    const MultiPoly norm = r.normalized();
    if (seen.insert(norm).second) out.push_back(norm);
  }
  return out;
}

/// Evaluates every exchange relation at P. Trivially true for mu = 1.
inline bool check_plucker(const PlueckerPoint& p) {
  if (p.mu() <= 1) return true;
  const std::vector<Exponent> table = monomials_of_degree(p.n() + 1, p.d());
  bool ok = true;
  for_each_plucker_relation(
      p.n(), p.d(), p.mu(),
      [&](const std::vector<std::size_t>& a_idx, const std::vector<std::size_t>& c_idx) {
        if (!ok) return;
        Rational acc = 0;
        int sign = 1;
        for (std::size_t l = 0; l < c_idx.size(); ++l) {
          PlueckerKey left;
          for (std::size_t i : a_idx) left.push_back(table[i]);
          left.push_back(table[c_idx[l]]);
          PlueckerKey right;
          for (std::size_t i = 0; i < c_idx.size(); ++i)
            if (i != l) right.push_back(table[c_idx[i]]);
          acc += sign * p.delta(std::move(left)) * p.coordinate(right);
          sign = -sign;
        }
        if (!is_zero(acc)) ok = false;
      });
  return ok;
}

}  // namespace hilbkit
