#pragma once

// Sparse polynomials in the ambient x-variables (affine or projective,
// decided by the exponent length), plus the monomial string syntax used
// by the CLI: '*' separators, '^' powers. Affine charts spell x1,x2,x3
// as x,y,z; projective monomials are spelled x0..xn and also accept the
// letters x,y,z,w for x0..x3.

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hilbkit/monomial.hpp"
#include "hilbkit/rational.hpp"

namespace hilbkit {

/// Polynomial with rational coefficients, keyed by exponent. Zero
/// coefficients are never stored.
class XPoly {
 public:
  using Terms = std::map<Exponent, Rational, CanonicalLess>;

  XPoly() = default;
  static XPoly monomial(const Exponent& e, Rational c = 1) {
    XPoly p;
    p.add_term(e, std::move(c));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponent& e, const Rational& c) {
    if (hilbkit::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (hilbkit::is_zero(it->second)) terms_.erase(it);
    }
  }

  XPoly& operator+=(const XPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  XPoly& operator-=(const XPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  XPoly operator+(const XPoly& o) const {
    XPoly r = *this;
    r += o;
    return r;
  }

  XPoly operator-(const XPoly& o) const {
    XPoly r = *this;
    r -= o;
    return r;
  }

  XPoly operator-() const {
    XPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  XPoly operator*(const Rational& c) const {
    XPoly r;
    if (hilbkit::is_zero(c)) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
  }

  XPoly operator*(const XPoly& o) const {
    XPoly r;
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) r.add_term(e1 * e2, c1 * c2);
    return r;
  }

  /// this * x_i
  XPoly shifted_by_var(std::size_t i) const {
    XPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e.times_var(i), c);
    return r;
  }

  Rational coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  unsigned max_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
    return d;
  }

  /// Common degree of all terms; throws if not homogeneous.
  unsigned homogeneous_degree() const {
    if (terms_.empty()) throw DimensionMismatchError("homogeneous_degree: zero polynomial");
    unsigned d = terms_.begin()->first.degree();
    for (const auto& [e, c] : terms_)
      if (e.degree() != d) throw DimensionMismatchError("homogeneous_degree: not homogeneous");
    return d;
  }

  bool operator==(const XPoly& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

inline XPoly operator*(const Rational& c, const XPoly& p) { return p * c; }

namespace detail {

inline std::string power_string(const std::string& var, unsigned e) {
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

inline std::string render_monomial(const Exponent& e,
                                   const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.nvars(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += power_string(names[i], e[i]);
  }
  return out.empty() ? "1" : out;
}

inline std::vector<std::string> affine_names(std::size_t n) {
  static const char* alias[] = {"x", "y", "z"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(i < 3 ? alias[i] : "x" + std::to_string(i + 1));
  return names;
}

inline std::vector<std::string> projective_names(std::size_t n_plus_1) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n_plus_1; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

}  // namespace detail

inline std::string monomial_to_string_affine(const Exponent& e) {
  return detail::render_monomial(e, detail::affine_names(e.nvars()));
}

inline std::string monomial_to_string_projective(const Exponent& e) {
  return detail::render_monomial(e, detail::projective_names(e.nvars()));
}

namespace detail {

/// Resolves a variable token to its index, or throws.
inline std::size_t var_index(const std::string& tok, std::size_t nvars, bool affine) {
  static const std::string letters = "xyzw";
  if (tok.size() == 1) {
    auto p = letters.find(tok[0]);
    if (p != std::string::npos) {
      // Affine charts: x,y,z are x1,x2,x3. Projective: x,y,z,w are x0..x3.
      if (affine && p < 3 && p < nvars) return p;
      if (!affine && p < nvars) return p;
    }
  }
  if (tok.size() >= 2 && tok[0] == 'x') {
    bool digits = true;
    for (std::size_t i = 1; i < tok.size(); ++i) digits = digits && std::isdigit((unsigned char)tok[i]);
    if (digits) {
      const long k = std::stol(tok.substr(1));
      if (affine) {
        if (k >= 1 && static_cast<std::size_t>(k) <= nvars) return static_cast<std::size_t>(k - 1);
      } else {
        if (k >= 0 && static_cast<std::size_t>(k) < nvars) return static_cast<std::size_t>(k);
      }
    }
  }
  throw std::invalid_argument("unknown variable '" + tok + "'");
}

inline Exponent parse_monomial(std::string_view s, std::size_t nvars, bool affine) {
  Exponent e = Exponent::zero(nvars);
  std::string cur;
  std::vector<std::string> factors;
  for (char c : s) {
    if (std::isspace((unsigned char)c)) continue;
    if (c == '*') {
      factors.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  factors.push_back(cur);
  for (const auto& f : factors) {
    if (f.empty()) throw std::invalid_argument("empty factor in monomial");
    if (f == "1") continue;
    auto caret = f.find('^');
    std::string name = f.substr(0, caret);
    unsigned pow = 1;
    if (caret != std::string::npos) {
      const std::string ps = f.substr(caret + 1);
      if (ps.empty()) throw std::invalid_argument("missing power in '" + f + "'");
      pow = static_cast<unsigned>(std::stoul(ps));
    }
    e.exps[var_index(name, nvars, affine)] += pow;
  }
  return e;
}

}  // namespace detail

inline Exponent monomial_from_string_affine(std::string_view s, std::size_t nvars) {
  return detail::parse_monomial(s, nvars, /*affine=*/true);
}

inline Exponent monomial_from_string_projective(std::string_view s, std::size_t nvars_plus_1) {
  return detail::parse_monomial(s, nvars_plus_1, /*affine=*/false);
}

/// Parses sums like "y^3 - 2*x*y + 1/2" over affine variables.
inline XPoly poly_from_string_affine(std::string_view s, std::size_t nvars) {
  XPoly p;
  std::string term;
  Rational sign = 1;
  auto flush = [&]() {
    std::string t;
    for (char c : term)
      if (!std::isspace((unsigned char)c)) t += c;
    term.clear();
    if (t.empty()) return;
    // Split a leading numeric coefficient (digits and '/') from the rest.
    std::size_t i = 0;
    while (i < t.size() && (std::isdigit((unsigned char)t[i]) || t[i] == '/')) ++i;
    Rational coeff = sign;
    std::string mono = t;
    if (i > 0 && (i == t.size() || t[i] == '*')) {
      coeff *= rational_from_string(t.substr(0, i));
      mono = (i == t.size()) ? "1" : t.substr(i + 1);
    }
    p.add_term(monomial_from_string_affine(mono, nvars), coeff);
  };
  for (char c : s) {
    if (c == '+' || c == '-') {
      flush();
      sign = (c == '-') ? -1 : 1;
    } else {
      term += c;
    }
  }
  flush();
  return p;
}

}  // namespace hilbkit
