#pragma once

// Global equations of the punctual Hilbert scheme inside one (or two)
// Grassmannians, quadratic in the Pluecker coordinates:
//
//  - two-Grassmannian equations linking Gr^mu(S_d*) and Gr^mu(S_{d+1}*),
//  - commutation-type equations for a linear form u,
//  - generation-type equations for a linear form u,
//  - their u-free forms, obtained by expanding u symbolically and
//    collecting the coefficient of every u-monomial,
//
// plus the pointwise membership test they induce on Gr^mu(S_d*).

#include <memory>
#include <mutex>
#include <optional>
#include <tuple>

#include "hilbkit/pluecker.hpp"

namespace hilbkit {

enum class EquationMode { UFixed, FullK };

struct EquationContext {
  std::size_t n = 0;
  unsigned d = 0;
  std::size_t mu = 0;
  EquationMode mode = EquationMode::UFixed;
  XPoly u;  // the fixed linear form (UFixed only)
};

struct EquationSet {
  EquationContext context;
  std::vector<MultiPoly> equations;
  std::size_t dropped_trivial = 0;
};

/// All non-decreasing tuples of the given size over the canonical
/// degree-deg monomial table.
inline std::vector<std::vector<Exponent>> monomial_multisets(std::size_t nvars_plus_1,
                                                             unsigned deg, std::size_t size) {
  const std::vector<Exponent> table = monomials_of_degree(nvars_plus_1, deg);
  std::vector<std::vector<Exponent>> out;
  std::vector<std::size_t> idx(size, 0);
  if (size == 0) {
    out.push_back({});
    return out;
  }
  while (true) {
    std::vector<Exponent> fam(size);
    for (std::size_t i = 0; i < size; ++i) fam[i] = table[idx[i]];
    out.push_back(std::move(fam));
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == table.size() - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[i - 1];
  }
  return out;
}

namespace detail {

inline void require_global_context(std::size_t mu, unsigned d) {
  if (d < mu) throw Error("global equations require d >= mu");
  if (mu == 0) throw Error("global equations require mu >= 1");
}

/// The family entry u * b: numeric coefficients when u is fixed,
/// u-variables when it is symbolic (u == nullptr).
inline SymEntry u_times(const XPoly* u, std::size_t n, const Exponent& b) {
  SymEntry e;
  if (u != nullptr) {
    for (const auto& [lin, c] : u->terms()) {
      if (lin.degree() != 1) throw DimensionMismatchError("u must be a linear form");
      e.terms.push_back({MultiPoly(c), lin * b});
    }
  } else {
    for (std::size_t i = 0; i <= n; ++i)
      e.terms.push_back({MultiPoly::variable(VarName::u(static_cast<unsigned>(i))), b.times_var(i)});
  }
  return e;
}

/// Commutation relations: for every family B of degree-(d-1) monomials,
/// every pair of entries (b, b'') and every 1 <= i < j <= n,
///   sum_{b'} ( D_{uB[ub'|x_i b]} D_{uB[ub''|x_j b']}
///            - D_{uB[ub'|x_j b]} D_{uB[ub''|x_i b']} ).
inline std::vector<MultiPoly> commutation_raw(std::size_t n, unsigned d, std::size_t mu,
                                              const XPoly* u,
                                              const std::vector<std::vector<Exponent>>& families) {
  std::vector<MultiPoly> raw;
  for (const auto& fam : families) {
    std::vector<SymEntry> base;
    for (const auto& b : fam) base.push_back(u_times(u, n, b));
    for (std::size_t pb = 0; pb < mu; ++pb)
      for (std::size_t pb2 = 0; pb2 < mu; ++pb2)
        for (std::size_t i = 1; i <= n; ++i)
          for (std::size_t j = i + 1; j <= n; ++j) {
            MultiPoly acc;
            for (std::size_t pp = 0; pp < mu; ++pp) {
              std::vector<SymEntry> left = base;
              left[pp] = SymEntry::monomial(fam[pb].times_var(i));
              std::vector<SymEntry> right = base;
              right[pb2] = SymEntry::monomial(fam[pp].times_var(j));
              acc += delta_expand(left, VarFamily::Delta) * delta_expand(right, VarFamily::Delta);

              left = base;
              left[pp] = SymEntry::monomial(fam[pb].times_var(j));
              right = base;
              right[pb2] = SymEntry::monomial(fam[pp].times_var(i));
              acc -= delta_expand(left, VarFamily::Delta) * delta_expand(right, VarFamily::Delta);
            }
            raw.push_back(std::move(acc));
          }
  }
  return raw;
}

/// Generation relations: for every family B, entry b, degree-(d-1)
/// monomial a and 0 <= k <= n,
///   D_{uB[ub|x_k a]} D_{uB} - sum_{b'} D_{uB[ub|x_k b']} D_{uB[ub'|u a]}.
inline std::vector<MultiPoly> generation_raw(std::size_t n, unsigned d, std::size_t mu,
                                             const XPoly* u,
                                             const std::vector<std::vector<Exponent>>& families) {
  const std::vector<Exponent> amons = monomials_of_degree(n + 1, d - 1);
  std::vector<MultiPoly> raw;
  for (const auto& fam : families) {
    std::vector<SymEntry> base;
    for (const auto& b : fam) base.push_back(u_times(u, n, b));
    const MultiPoly whole = delta_expand(base, VarFamily::Delta);
    for (std::size_t pb = 0; pb < mu; ++pb)
      for (const auto& a : amons)
        for (std::size_t k = 0; k <= n; ++k) {
          std::vector<SymEntry> lead = base;
          lead[pb] = SymEntry::monomial(a.times_var(k));
          MultiPoly acc = delta_expand(lead, VarFamily::Delta) * whole;
          for (std::size_t pp = 0; pp < mu; ++pp) {
            std::vector<SymEntry> left = base;
            left[pb] = SymEntry::monomial(fam[pp].times_var(k));
            std::vector<SymEntry> right = base;
            right[pp] = u_times(u, n, a);
            acc -= delta_expand(left, VarFamily::Delta) * delta_expand(right, VarFamily::Delta);
          }
          raw.push_back(std::move(acc));
        }
  }
  return raw;
}

/// Splits a symbolic polynomial into the Delta-coefficients of its
/// u-monomials, in u-monomial order.
inline std::vector<MultiPoly> split_by_u_monomial(const MultiPoly& q) {
  std::map<VarMonomial, MultiPoly> groups;
  for (const auto& [m, c] : q.terms()) {
    VarMonomial upart, rest;
    for (const auto& [v, e] : m)
      (v.family == VarFamily::U ? upart : rest).emplace(v, e);
    groups[upart].add_term(std::move(rest), c);
  }
  std::vector<MultiPoly> out;
  out.reserve(groups.size());
  for (auto& [um, poly] : groups) out.push_back(std::move(poly));
  return out;
}

inline EquationSet finish(EquationContext ctx, const std::vector<MultiPoly>& raw) {
  NormalizedSet ns = normalize_and_dedup(raw);
  return EquationSet{std::move(ctx), std::move(ns.equations), ns.dropped_trivial};
}

inline EquationSet finish_full(EquationContext ctx, const std::vector<MultiPoly>& symbolic) {
  std::vector<MultiPoly> raw;
  for (const auto& q : symbolic) {
    auto parts = split_by_u_monomial(q);
    raw.insert(raw.end(), parts.begin(), parts.end());
    if (parts.empty()) raw.push_back(MultiPoly());  // keep the dropped count honest
  }
  return finish(std::move(ctx), raw);
}

inline void require_linear_form(const XPoly& u, std::size_t n) {
  if (u.is_zero()) throw Error("u must be a nonzero linear form");
  for (const auto& [e, c] : u.terms())
    if (e.nvars() != n + 1 || e.degree() != 1)
      throw DimensionMismatchError("u must be a projective linear form");
}

}  // namespace detail

inline EquationSet commutation_equations_u(std::size_t n, unsigned d, std::size_t mu,
                                           const XPoly& u,
                                           std::optional<std::vector<Exponent>> family = {}) {
  detail::require_global_context(mu, d);
  detail::require_linear_form(u, n);
  const auto families =
      family ? std::vector<std::vector<Exponent>>{*family} : monomial_multisets(n + 1, d - 1, mu);
  return detail::finish({n, d, mu, EquationMode::UFixed, u},
                        detail::commutation_raw(n, d, mu, &u, families));
}

inline EquationSet generation_equations_u(std::size_t n, unsigned d, std::size_t mu, const XPoly& u,
                                          std::optional<std::vector<Exponent>> family = {}) {
  detail::require_global_context(mu, d);
  detail::require_linear_form(u, n);
  const auto families =
      family ? std::vector<std::vector<Exponent>>{*family} : monomial_multisets(n + 1, d - 1, mu);
  return detail::finish({n, d, mu, EquationMode::UFixed, u},
                        detail::generation_raw(n, d, mu, &u, families));
}

/// Per-generator-index expansions in U and Delta variables, before
/// coefficient extraction. Exposed for the specialization tests.
inline std::vector<MultiPoly> commutation_symbolic(std::size_t n, unsigned d, std::size_t mu,
                                                   std::optional<std::vector<Exponent>> family = {}) {
  detail::require_global_context(mu, d);
  const auto families =
      family ? std::vector<std::vector<Exponent>>{*family} : monomial_multisets(n + 1, d - 1, mu);
  return detail::commutation_raw(n, d, mu, nullptr, families);
}

inline std::vector<MultiPoly> generation_symbolic(std::size_t n, unsigned d, std::size_t mu,
                                                  std::optional<std::vector<Exponent>> family = {}) {
  detail::require_global_context(mu, d);
  const auto families =
      family ? std::vector<std::vector<Exponent>>{*family} : monomial_multisets(n + 1, d - 1, mu);
  return detail::generation_raw(n, d, mu, nullptr, families);
}

inline EquationSet commutation_equations_full(std::size_t n, unsigned d, std::size_t mu,
                                              std::optional<std::vector<Exponent>> family = {}) {
  return detail::finish_full({n, d, mu, EquationMode::FullK, {}},
                             commutation_symbolic(n, d, mu, std::move(family)));
}

inline EquationSet generation_equations_full(std::size_t n, unsigned d, std::size_t mu,
                                             std::optional<std::vector<Exponent>> family = {}) {
  return detail::finish_full({n, d, mu, EquationMode::FullK, {}},
                             generation_symbolic(n, d, mu, std::move(family)));
}

/// Equations on Gr^mu(S_d*) x Gr^mu(S_{d+1}*):
///   D_B Dp_{B',x_k a} - sum_{b in B} D_{B[b|a]} Dp_{B',x_k b} = 0
/// over families B (mu monomials of degree d), B' (mu-1 monomials of
/// degree d+1), monomials a of degree d and k = 0..n.
inline EquationSet two_grassmannian_equations(std::size_t n, unsigned d, std::size_t mu) {
  detail::require_global_context(mu, d);
  const auto bfams = monomial_multisets(n + 1, d, mu);
  const auto bprimefams = monomial_multisets(n + 1, d + 1, mu - 1);
  const auto amons = monomials_of_degree(n + 1, d);

  std::vector<MultiPoly> raw;
  for (const auto& bfam : bfams) {
    std::vector<SymEntry> bsym;
    for (const auto& b : bfam) bsym.push_back(SymEntry::monomial(b));
    const MultiPoly delta_b = delta_expand(bsym, VarFamily::Delta);
    for (const auto& bp : bprimefams)
      for (const auto& a : amons)
        for (std::size_t k = 0; k <= n; ++k) {
          auto prime_family = [&](const Exponent& last) {
            std::vector<SymEntry> fam;
            for (const auto& m : bp) fam.push_back(SymEntry::monomial(m));
            fam.push_back(SymEntry::monomial(last.times_var(k)));
            return delta_expand(fam, VarFamily::DeltaPrime);
          };
          MultiPoly acc = delta_b * prime_family(a);
          for (std::size_t pos = 0; pos < mu; ++pos) {
            std::vector<SymEntry> replaced = bsym;
            replaced[pos] = SymEntry::monomial(a);
            acc -= delta_expand(replaced, VarFamily::Delta) * prime_family(bfam[pos]);
          }
          raw.push_back(std::move(acc));
        }
  }
  return detail::finish({n, d, mu, EquationMode::UFixed, {}}, raw);
}

// ---------------------------------------------------------------------------
// Membership

struct MembershipResult {
  bool member = false;
  std::optional<MultiPoly> witness;  // one non-vanishing equation on failure
};

namespace detail {

/// Equations compiled to interned-key form for fast pointwise evaluation.
struct CompiledEquations {
  struct Term {
    Rational coeff;
    std::size_t a, b;  // key indices; a == b for squares
  };
  std::vector<PlueckerKey> keys;
  std::vector<std::vector<Term>> equations;
  std::vector<MultiPoly> originals;
};

inline std::shared_ptr<const CompiledEquations> compile_membership_equations(std::size_t n,
                                                                             unsigned d,
                                                                             std::size_t mu) {
  auto out = std::make_shared<CompiledEquations>();
  std::map<PlueckerKey, std::size_t, KeyLess> intern;
  auto key_id = [&](const PlueckerKey& k) {
    auto [it, inserted] = intern.emplace(k, out->keys.size());
    if (inserted) out->keys.push_back(k);
    return it->second;
  };

  const EquationSet comm = commutation_equations_full(n, d, mu);
  const EquationSet gen = generation_equations_full(n, d, mu);
  for (const EquationSet* set : {&comm, &gen})
    for (const MultiPoly& eq : set->equations) {
      std::vector<CompiledEquations::Term> terms;
      for (const auto& [m, c] : eq.terms()) {
        std::vector<std::size_t> ids;
        for (const auto& [v, e] : m) {
          if (v.family != VarFamily::Delta)
            throw DimensionMismatchError("membership: unexpected variable family");
          for (unsigned k = 0; k < e; ++k) ids.push_back(key_id(v.index));
        }
        if (ids.size() != 2)
          throw DimensionMismatchError("membership: equation not quadratic");
        terms.push_back({c, ids[0], ids[1]});
      }
      out->equations.push_back(std::move(terms));
      out->originals.push_back(eq);
    }
  return out;
}

inline std::shared_ptr<const CompiledEquations> membership_equations_cached(std::size_t n,
                                                                            unsigned d,
                                                                            std::size_t mu) {
  static std::mutex m;
  static std::map<std::tuple<std::size_t, unsigned, std::size_t>,
                  std::shared_ptr<const CompiledEquations>>
      cache;
  std::lock_guard<std::mutex> lock(m);
  auto& slot = cache[{n, d, mu}];
  if (!slot) slot = compile_membership_equations(n, d, mu);
  return slot;
}

}  // namespace detail

/// Pointwise membership in the Hilbert scheme: true iff every u-free
/// commutation and generation equation vanishes at p. Requires d >= mu
/// and a genuine Grassmannian point.
inline MembershipResult membership(const PlueckerPoint& p) {
  detail::require_global_context(p.mu(), p.d());
  if (!check_plucker(p))
    throw NotAGrassmannianPointError("membership: coordinates violate the Pluecker relations");

  const auto compiled = detail::membership_equations_cached(p.n(), p.d(), p.mu());
  std::vector<Rational> value(compiled->keys.size());
  for (std::size_t i = 0; i < compiled->keys.size(); ++i)
    value[i] = p.coordinate(compiled->keys[i]);

  for (std::size_t e = 0; e < compiled->equations.size(); ++e) {
    Rational acc = 0;
    for (const auto& t : compiled->equations[e]) acc += t.coeff * value[t.a] * value[t.b];
    if (!is_zero(acc)) return {false, compiled->originals[e]};
  }
  return {true, std::nullopt};
}

}  // namespace hilbkit
