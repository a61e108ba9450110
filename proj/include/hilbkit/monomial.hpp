#pragma once

// Exponent-vector arithmetic, monomial enumeration and border combinatorics.
//
// One total order is used everywhere (enumeration, key sorting, term
// normalization): degree ascending, ties broken so that the x0-richest
// monomial comes first. For fixed degree this enumerates e.g.
//   x^2, xy, xz, y^2, yz, z^2.

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <optional>
#include <set>
#include <vector>

#include "hilbkit/errors.hpp"

namespace hilbkit {

/// Monomial exponent vector. Length n for affine monomials, n+1 for
/// projective ones (entry 0 is the homogenization variable x0).
struct Exponent {
  std::vector<unsigned> exps;

  Exponent() = default;
  explicit Exponent(std::vector<unsigned> e) : exps(std::move(e)) {}
  static Exponent zero(std::size_t nvars) { return Exponent(std::vector<unsigned>(nvars, 0)); }

  std::size_t nvars() const { return exps.size(); }

  unsigned degree() const {
    unsigned long d = 0;
    for (unsigned e : exps) {
      d += e;
      assert(d <= 0xffffffffUL && "exponent degree overflow");
    }
    return static_cast<unsigned>(d);
  }

  bool is_zero() const {
    return std::all_of(exps.begin(), exps.end(), [](unsigned e) { return e == 0; });
  }

  unsigned operator[](std::size_t i) const { return exps[i]; }

  /// this * x_i
  Exponent times_var(std::size_t i) const {
    Exponent r = *this;
    r.exps.at(i) += 1;
    return r;
  }

  /// this / x_i, or nullopt if x_i does not divide.
  std::optional<Exponent> div_var(std::size_t i) const {
    if (exps.at(i) == 0) return std::nullopt;
    Exponent r = *this;
    r.exps[i] -= 1;
    return r;
  }

  Exponent operator*(const Exponent& o) const {
    if (exps.size() != o.exps.size())
      throw DimensionMismatchError("Exponent product: mixed lengths");
    Exponent r = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
    return r;
  }

  bool operator==(const Exponent& o) const { return exps == o.exps; }
  bool operator!=(const Exponent& o) const { return exps != o.exps; }
};

/// The canonical order. Throws on mixed lengths.
inline bool canonical_less(const Exponent& a, const Exponent& b) {
  if (a.nvars() != b.nvars())
    throw DimensionMismatchError("canonical_less: mixed exponent lengths");
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // x0-richest first: a precedes b iff a is lexicographically larger.
  return std::lexicographical_compare(b.exps.begin(), b.exps.end(), a.exps.begin(), a.exps.end());
}

struct CanonicalLess {
  bool operator()(const Exponent& a, const Exponent& b) const { return canonical_less(a, b); }
};

/// All exponents of total degree d in nvars variables, canonically ordered.
/// Count is C(d + nvars - 1, nvars - 1).
inline std::vector<Exponent> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Exponent> out;
  if (nvars == 0) {
    if (d == 0) out.push_back(Exponent());
    return out;
  }
  std::vector<unsigned> cur(nvars, 0);
  // First coordinate descending gives the canonical order directly.
  auto rec = [&](auto&& self, std::size_t pos, unsigned rem) -> void {
    if (pos + 1 == nvars) {
      cur[pos] = rem;
      out.push_back(Exponent(cur));
      return;
    }
    for (unsigned e = rem + 1; e-- > 0;) {
      cur[pos] = e;
      self(self, pos + 1, rem - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// Position of a degree-d monomial in monomials_of_degree's output.
inline std::size_t monomial_rank(const std::vector<Exponent>& table, const Exponent& e) {
  auto it = std::lower_bound(table.begin(), table.end(), e, CanonicalLess{});
  if (it == table.end() || !(*it == e))
    throw DimensionMismatchError("monomial_rank: exponent not in table");
  return static_cast<std::size_t>(it - table.begin());
}

/// True iff 0 is in B and every nonzero member reaches 0 by repeated
/// single-coordinate decrements staying inside B.
inline bool is_connected_to_one(const std::vector<Exponent>& B) {
  if (B.empty()) return false;
  const std::size_t n = B[0].nvars();
  for (const auto& e : B)
    if (e.nvars() != n) throw DimensionMismatchError("is_connected_to_one: mixed exponent lengths");

  std::set<Exponent, CanonicalLess> members(B.begin(), B.end());
  if (members.find(Exponent::zero(n)) == members.end()) return false;

  std::set<Exponent, CanonicalLess> reached;
  reached.insert(Exponent::zero(n));
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& e : members) {
      if (reached.count(e)) continue;
      for (std::size_t i = 0; i < n; ++i) {
        auto pred = e.div_var(i);
        if (pred && reached.count(*pred)) {
          reached.insert(e);
          grew = true;
          break;
        }
      }
    }
  }
  return reached.size() == members.size();
}

/// A set B of mu distinct affine exponents connected to 1. Elements are
/// kept in canonical order; the zero exponent is always first.
class MonomialBasis {
 public:
  MonomialBasis() = default;
  MonomialBasis(std::size_t nvars, std::vector<Exponent> elements)
      : n_(nvars), elements_(std::move(elements)) {
    for (const auto& e : elements_)
      if (e.nvars() != n_)
        throw DimensionMismatchError("MonomialBasis: exponent length != nvars");
    std::sort(elements_.begin(), elements_.end(), CanonicalLess{});
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
      throw InvalidBasisError("MonomialBasis: repeated monomial");
    if (!is_connected_to_one(elements_))
      throw InvalidBasisError("MonomialBasis: not connected to 1");
  }

  std::size_t nvars() const { return n_; }
  std::size_t mu() const { return elements_.size(); }
  const std::vector<Exponent>& elements() const { return elements_; }
  const Exponent& operator[](std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const Exponent& e) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), e, CanonicalLess{});
    if (it != elements_.end() && *it == e) return static_cast<std::size_t>(it - elements_.begin());
    return std::nullopt;
  }

  bool contains(const Exponent& e) const { return index_of(e).has_value(); }

  /// Maximal total degree over the elements.
  unsigned max_degree() const {
    unsigned d = 0;
    for (const auto& e : elements_) d = std::max(d, e.degree());
    return d;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Exponent> elements_;
};

/// B together with its border dB = B+ \ B, both canonically ordered.
class BorderSet {
 public:
  BorderSet() = default;
  explicit BorderSet(MonomialBasis basis) : basis_(std::move(basis)) {
    std::set<Exponent, CanonicalLess> plus(basis_.elements().begin(), basis_.elements().end());
    for (const auto& b : basis_.elements())
      for (std::size_t i = 0; i < basis_.nvars(); ++i) plus.insert(b.times_var(i));
    for (const auto& e : plus)
      if (!basis_.contains(e)) boundary_.push_back(e);
  }

  const MonomialBasis& basis() const { return basis_; }
  const std::vector<Exponent>& boundary() const { return boundary_; }
  std::size_t size() const { return boundary_.size(); }

  std::optional<std::size_t> index_of(const Exponent& e) const {
    auto it = std::lower_bound(boundary_.begin(), boundary_.end(), e, CanonicalLess{});
    if (it != boundary_.end() && *it == e) return static_cast<std::size_t>(it - boundary_.begin());
    return std::nullopt;
  }

  bool contains(const Exponent& e) const { return index_of(e).has_value(); }

  /// B+ = B u dB in canonical order.
  std::vector<Exponent> b_plus() const {
    std::vector<Exponent> all = basis_.elements();
    all.insert(all.end(), boundary_.begin(), boundary_.end());
    std::sort(all.begin(), all.end(), CanonicalLess{});
    return all;
  }

 private:
  MonomialBasis basis_;
  std::vector<Exponent> boundary_;
};

inline BorderSet border(const MonomialBasis& B) { return BorderSet(B); }

/// Prepends the x0 exponent d - deg(e). Throws DegreeOverflowError if
/// deg(e) > d.
inline Exponent homogenize(const Exponent& e, unsigned d) {
  const unsigned deg = e.degree();
  if (deg > d) throw DegreeOverflowError("homogenize: monomial degree exceeds target");
  std::vector<unsigned> v;
  v.reserve(e.nvars() + 1);
  v.push_back(d - deg);
  v.insert(v.end(), e.exps.begin(), e.exps.end());
  return Exponent(std::move(v));
}

/// Drops the x0 entry.
inline Exponent dehomogenize(const Exponent& e) {
  if (e.nvars() == 0) throw DimensionMismatchError("dehomogenize: empty exponent");
  return Exponent(std::vector<unsigned>(e.exps.begin() + 1, e.exps.end()));
}

inline mpz_class binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace hilbkit
