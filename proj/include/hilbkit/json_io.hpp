#pragma once

// JSON encodings of the library types. Exponents encode as arrays of
// naturals with a "space" field on the enclosing object; rationals are
// always "p/q" strings; Pluecker keys render as monomial strings.

#include <json.hpp>

#include "hilbkit/border_basis.hpp"
#include "hilbkit/fixtures.hpp"
#include "hilbkit/hilbert_equations.hpp"
#include "hilbkit/pluecker.hpp"

namespace hilbkit {

using Json = nlohmann::ordered_json;

inline Json exponent_to_json(const Exponent& e) {
  Json a = Json::array();
  for (unsigned k : e.exps) a.push_back(k);
  return a;
}

inline Exponent exponent_from_json(const Json& j) {
  std::vector<unsigned> e;
  for (const auto& v : j) e.push_back(v.get<unsigned>());
  return Exponent(std::move(e));
}

inline Json poly_to_json(const MultiPoly& p) {
  Json terms = Json::array();
  const auto& ts = p.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    Json mono = Json::object();
    for (const auto& [v, e] : it->first) mono[v.to_string()] = e;
    terms.push_back(Json{{"coeff", to_string(it->second)}, {"monomial", std::move(mono)}});
  }
  return terms;
}

inline Json chart_equations_to_json(const ChartEquations& c) {
  Json j;
  j["space"] = "affine";
  j["nvars"] = c.border.basis().nvars();
  Json basis = Json::array();
  for (const auto& e : c.border.basis().elements()) basis.push_back(exponent_to_json(e));
  j["basis"] = std::move(basis);
  Json boundary = Json::array();
  for (const auto& e : c.border.boundary()) boundary.push_back(exponent_to_json(e));
  j["border"] = std::move(boundary);
  Json eqs = Json::array();
  for (const auto& e : c.equations) eqs.push_back(poly_to_json(e));
  j["equations"] = std::move(eqs);
  j["dropped_trivial"] = c.dropped_trivial;
  return j;
}

inline Json equation_set_to_json(const EquationSet& s) {
  Json ctx;
  ctx["n"] = s.context.n;
  ctx["mu"] = s.context.mu;
  ctx["d"] = s.context.d;
  ctx["mode"] = s.context.mode == EquationMode::FullK ? "full_k" : "u_fixed";
  if (s.context.mode == EquationMode::UFixed && !s.context.u.is_zero()) {
    std::string u;
    for (const auto& [e, c] : s.context.u.terms()) {
      if (!u.empty()) u += " + ";
      if (c != 1) u += to_string(c) + "*";
      u += monomial_to_string_projective(e);
    }
    ctx["u"] = u;
  }
  Json j;
  j["context"] = std::move(ctx);
  Json eqs = Json::array();
  for (const auto& e : s.equations) eqs.push_back(poly_to_json(e));
  j["equations"] = std::move(eqs);
  j["dropped_trivial"] = s.dropped_trivial;
  return j;
}

inline Json plucker_to_json(const PlueckerPoint& p) {
  Json j;
  j["n"] = p.n();
  j["d"] = p.d();
  j["mu"] = p.mu();
  Json coords = Json::array();
  for (const auto& [key, value] : p.coords()) {
    Json k = Json::array();
    for (const auto& m : key) k.push_back(monomial_to_string_projective(m));
    coords.push_back(Json{{"key", std::move(k)}, {"value", to_string(value)}});
  }
  j["coords"] = std::move(coords);
  return j;
}

inline PlueckerPoint plucker_from_json(const Json& in) {
  const Json& j = in.contains("point") ? in.at("point") : in;
  const std::size_t n = j.at("n").get<std::size_t>();
  const unsigned d = j.at("d").get<unsigned>();
  const std::size_t mu = j.at("mu").get<std::size_t>();
  PlueckerPoint::CoordMap coords;
  for (const auto& c : j.at("coords")) {
    PlueckerKey key;
    for (const auto& ks : c.at("key"))
      key.push_back(monomial_from_string_projective(ks.get<std::string>(), n + 1));
    coords.emplace(std::move(key), rational_from_string(c.at("value").get<std::string>()));
  }
  return PlueckerPoint(n, d, mu, std::move(coords));
}

inline Json point_configuration_to_json(const PointConfiguration& c, std::uint64_t seed,
                                        unsigned d) {
  Json j;
  j["seed"] = seed;
  j["n"] = c.n;
  Json pts = Json::array();
  for (const auto& p : c.entries) {
    Json e;
    e["type"] = p.is_double ? "double" : "simple";
    Json coords = Json::array();
    for (Index i = 0; i < p.coords.size(); ++i) coords.push_back(to_string(p.coords(i)));
    e["coords"] = std::move(coords);
    if (p.is_double) {
      Json dir = Json::array();
      for (Index i = 0; i < p.direction.size(); ++i) dir.push_back(to_string(p.direction(i)));
      e["direction"] = std::move(dir);
    }
    pts.push_back(std::move(e));
  }
  j["points"] = std::move(pts);
  j["d"] = d;
  return j;
}

inline PointConfiguration point_configuration_from_json(const Json& in) {
  const Json& j = in.contains("fixture") ? in.at("fixture") : in;
  PointConfiguration c;
  c.n = j.at("n").get<std::size_t>();
  for (const auto& e : j.at("points")) {
    PointEntry p;
    p.is_double = e.at("type").get<std::string>() == "double";
    const auto& coords = e.at("coords");
    p.coords = RationalVector(static_cast<Index>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i)
      p.coords(static_cast<Index>(i)) = rational_from_string(coords[i].get<std::string>());
    if (p.is_double) {
      const auto& dir = e.at("direction");
      p.direction = RationalVector(static_cast<Index>(dir.size()));
      for (std::size_t i = 0; i < dir.size(); ++i)
        p.direction(static_cast<Index>(i)) = rational_from_string(dir[i].get<std::string>());
    }
    c.entries.push_back(std::move(p));
  }
  c.validate();
  return c;
}

/// Border coefficients from either an explicit value table
/// ({"n":..,"values":[{"alpha":..,"beta":..,"value":..}]}) or a point
/// fixture (interpolated on the given basis).
inline BorderCoefficients border_coeffs_from_json(const Json& in, const MonomialBasis& B) {
  const Json& j = in.contains("fixture") ? in.at("fixture") : in;
  if (j.contains("points"))
    return border_coeffs_from_points(B, point_configuration_from_json(j));
  if (!j.contains("values"))
    throw Error("border coefficients: expected a \"points\" fixture or a \"values\" table");
  BorderCoefficients z = BorderCoefficients::zero(B);
  std::vector<bool> assigned(z.border.size() * B.mu(), false);
  for (const auto& v : j.at("values")) {
    const Exponent alpha = monomial_from_string_affine(v.at("alpha").get<std::string>(), B.nvars());
    const Exponent beta = monomial_from_string_affine(v.at("beta").get<std::string>(), B.nvars());
    const auto a = z.border.index_of(alpha);
    const auto b = B.index_of(beta);
    if (!a || !b) throw Error("border coefficients: index outside dB x B");
    z.values(static_cast<Index>(*a), static_cast<Index>(*b)) =
        rational_from_string(v.at("value").get<std::string>());
    assigned[*a * B.mu() + *b] = true;
  }
  for (bool got : assigned)
    if (!got) throw IncompleteCoefficientsError("border coefficients: missing entries");
  return z;
}

inline Json border_coeffs_to_json(const BorderCoefficients& z) {
  Json j;
  j["n"] = z.border.basis().nvars();
  Json basis = Json::array();
  for (const auto& e : z.border.basis().elements())
    basis.push_back(monomial_to_string_affine(e));
  j["basis"] = std::move(basis);
  Json values = Json::array();
  for (std::size_t a = 0; a < z.border.size(); ++a)
    for (std::size_t b = 0; b < z.border.basis().mu(); ++b)
      values.push_back(Json{{"alpha", monomial_to_string_affine(z.border.boundary()[a])},
                            {"beta", monomial_to_string_affine(z.border.basis()[b])},
                            {"value", to_string(z.z(a, b))}});
  j["values"] = std::move(values);
  return j;
}

}  // namespace hilbkit
