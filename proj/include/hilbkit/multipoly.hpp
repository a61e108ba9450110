#pragma once

// Sparse multivariate polynomials over the rationals in the symbolic
// variable families used by the equation generators:
//
//   z[alpha|beta]   border coefficients (alpha in dB, beta in B, affine)
//   D[m1,...,mk]    Pluecker coordinates, sorted projective keys
//   Dp[m1,...,mk]   Pluecker coordinates on the second Grassmannian
//   u[i]            coefficients of the generic linear form
//   h1[alpha|beta]  tangent-space unknowns
//
// Canonical form: no zero coefficients, no zero exponents, terms ordered
// by the variable order (family tag, then index).

#include <compare>
#include <set>
#include <map>
#include <string>
#include <vector>

#include "hilbkit/monomial.hpp"
#include "hilbkit/rational.hpp"
#include "hilbkit/xpoly.hpp"

namespace hilbkit {

enum class VarFamily : unsigned char { Z = 0, Delta = 1, DeltaPrime = 2, U = 3, H1 = 4 };

struct VarName {
  VarFamily family = VarFamily::Z;
  std::vector<Exponent> index;  // Z/H1: {alpha, beta}; Delta*: sorted key
  unsigned uindex = 0;          // U only

  static VarName z(const Exponent& alpha, const Exponent& beta) {
    return VarName{VarFamily::Z, {alpha, beta}, 0};
  }
  static VarName h1(const Exponent& alpha, const Exponent& beta) {
    return VarName{VarFamily::H1, {alpha, beta}, 0};
  }
  static VarName delta(std::vector<Exponent> sorted_key) {
    return VarName{VarFamily::Delta, std::move(sorted_key), 0};
  }
  static VarName delta_prime(std::vector<Exponent> sorted_key) {
    return VarName{VarFamily::DeltaPrime, std::move(sorted_key), 0};
  }
  static VarName u(unsigned i) { return VarName{VarFamily::U, {}, i}; }

  friend bool operator==(const VarName& a, const VarName& b) {
    return a.family == b.family && a.uindex == b.uindex && a.index == b.index;
  }

  friend bool operator<(const VarName& a, const VarName& b) {
    if (a.family != b.family) return a.family < b.family;
    if (a.family == VarFamily::U) return a.uindex < b.uindex;
    return std::lexicographical_compare(a.index.begin(), a.index.end(), b.index.begin(),
                                        b.index.end(), CanonicalLess{});
  }

  std::string to_string() const {
    switch (family) {
      case VarFamily::Z:
        return "z[" + monomial_to_string_affine(index[0]) + "|" +
               monomial_to_string_affine(index[1]) + "]";
      case VarFamily::H1:
        return "h1[" + monomial_to_string_affine(index[0]) + "|" +
               monomial_to_string_affine(index[1]) + "]";
      case VarFamily::U:
        return "u[" + std::to_string(uindex) + "]";
      case VarFamily::Delta:
      case VarFamily::DeltaPrime: {
        std::string s = family == VarFamily::Delta ? "D[" : "Dp[";
        for (std::size_t i = 0; i < index.size(); ++i) {
          if (i) s += ",";
          s += monomial_to_string_projective(index[i]);
        }
        return s + "]";
      }
    }
    return "?";
  }
};

/// Power product of named variables; exponents are always positive.
using VarMonomial = std::map<VarName, unsigned>;

class MultiPoly {
 public:
  using Terms = std::map<VarMonomial, Rational>;

  MultiPoly() = default;
  /*implicit*/ MultiPoly(const Rational& c) {
    if (!hilbkit::is_zero(c)) terms_.emplace(VarMonomial{}, c);
  }
  /*implicit*/ MultiPoly(long c) : MultiPoly(Rational(c)) {}

  static MultiPoly variable(const VarName& v) {
    MultiPoly p;
    p.terms_.emplace(VarMonomial{{v, 1}}, Rational(1));
    return p;
  }

  static MultiPoly term(VarMonomial m, const Rational& c) {
    MultiPoly p;
    p.add_term(std::move(m), c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(VarMonomial m, const Rational& c) {
    if (hilbkit::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (hilbkit::is_zero(it->second)) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MultiPoly operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
  }
  MultiPoly operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
  }
  MultiPoly operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  MultiPoly operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) {
        VarMonomial m = m1;
        for (const auto& [v, e] : m2) m[v] += e;
        r.add_term(std::move(m), c1 * c2);
      }
    return r;
  }

  MultiPoly operator*(const Rational& c) const {
    MultiPoly r;
    if (hilbkit::is_zero(c)) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
  }

  /// Evaluates the listed variables, keeps the others symbolic.
  MultiPoly substitute(const std::map<VarName, Rational>& sigma) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
      Rational coeff = c;
      VarMonomial rest;
      for (const auto& [v, e] : m) {
        auto it = sigma.find(v);
        if (it == sigma.end()) {
          rest.emplace(v, e);
        } else {
          Rational p = 1;
          for (unsigned k = 0; k < e; ++k) p *= it->second;
          coeff *= p;
        }
      }
      r.add_term(std::move(rest), coeff);
    }
    return r;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
      unsigned t = 0;
      for (const auto& [v, e] : m) t += e;
      d = std::max(d, t);
    }
    return d;
  }

  /// Max degree counting only variables of the given family.
  unsigned degree_in_family(VarFamily f) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
      unsigned t = 0;
      for (const auto& [v, e] : m)
        if (v.family == f) t += e;
      d = std::max(d, t);
    }
    return d;
  }

  /// True when every term has the same degree in the given family.
  bool homogeneous_in_family(VarFamily f, unsigned deg) const {
    for (const auto& [m, c] : terms_) {
      unsigned t = 0;
      for (const auto& [v, e] : m)
        if (v.family == f) t += e;
      if (t != deg) return false;
    }
    return true;
  }

  /// Divides by the leading coefficient (largest term under the term
  /// order), so p and -p share one normal form.
  MultiPoly normalized() const {
    if (terms_.empty()) return MultiPoly();
    const Rational& lead = terms_.rbegin()->second;
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c / lead);
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      std::string t;
      if (m.empty()) {
        t = hilbkit::to_string(c);
      } else {
        if (c == -1) {
          t = "-";
        } else if (c != 1) {
          t = hilbkit::to_string(c) + "*";
        }
        bool first = true;
        for (const auto& [v, e] : m) {
          if (!first) t += "*";
          first = false;
          t += v.to_string();
          if (e > 1) t += "^" + std::to_string(e);
        }
      }
      if (!s.empty() && !t.empty() && t[0] != '-') s += "+";
      s += t;
    }
    return s;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const MultiPoly& a, const MultiPoly& b) { return a.terms_ < b.terms_; }

 private:
  Terms terms_;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

/// Normalizes (monic leading coefficient), drops zero polynomials and
/// deduplicates; p and -p collapse to one representative.
struct NormalizedSet {
  std::vector<MultiPoly> equations;
  std::size_t dropped_trivial = 0;
};

inline NormalizedSet normalize_and_dedup(const std::vector<MultiPoly>& raw) {
  NormalizedSet out;
  std::set<MultiPoly> seen;
  for (const auto& p : raw) {
    if (p.is_zero()) {
      ++out.dropped_trivial;
      continue;
    }
    seen.insert(p.normalized());
  }
  out.equations.assign(seen.begin(), seen.end());
  return out;
}

}  // namespace hilbkit
