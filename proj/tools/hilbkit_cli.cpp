// hilbkit command line: chart and global Hilbert-scheme equations,
// membership checks, tangent dimensions, fixtures and normal forms, all
// as JSON on standard output.
//
// Exit codes: 0 success, 1 domain error ({"error": ...} on stdout),
// 2 usage error (bad flags or malformed JSON).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hilbkit/json_io.hpp"
#include "hilbkit/tangent.hpp"

namespace {

using namespace hilbkit;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int thread_cap() {
  // Caps internal parallelism. Generation and evaluation currently run
  // on one thread, which trivially respects any positive cap.
  const char* v = std::getenv("HILBKIT_THREADS");
  if (v == nullptr) return 1;
  const int k = std::atoi(v);
  return k >= 1 ? k : 1;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("malformed JSON in '" + path + "': " + e.what());
  }
}

void emit(const Json& j, bool pretty, const std::string& out_path) {
  const std::string text = pretty ? j.dump(2) : j.dump();
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write '" + out_path + "'");
    out << text << "\n";
  }
  std::cout << text << "\n";
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

MonomialBasis parse_affine_basis(const std::string& basis, std::size_t nvars) {
  std::vector<Exponent> elems;
  for (const auto& tok : split_list(basis)) {
    try {
      elems.push_back(monomial_from_string_affine(tok, nvars));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad basis monomial: ") + e.what());
    }
  }
  return MonomialBasis(nvars, elems);
}

XPoly parse_linear_form(const std::string& s, std::size_t n) {
  XPoly u;
  try {
    // sums of signed monomial tokens, e.g. "x0 + 2*x1 - x2"
    std::string term;
    Rational sign = 1;
    auto flush = [&]() {
      std::string t;
      for (char c : term)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
      term.clear();
      if (t.empty()) return;
      std::size_t i = 0;
      while (i < t.size() && (std::isdigit(static_cast<unsigned char>(t[i])) || t[i] == '/')) ++i;
      Rational coeff = sign;
      std::string mono = t;
      if (i > 0 && (i == t.size() || t[i] == '*')) {
        coeff *= rational_from_string(t.substr(0, i));
        mono = (i == t.size()) ? "1" : t.substr(i + 1);
      }
      if (mono == "1") throw std::invalid_argument("constant term in linear form");
      u.add_term(monomial_from_string_projective(mono, n + 1), coeff);
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
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad linear form: ") + e.what());
  }
  return u;
}

int run(int argc, char** argv) {
  CLI::App app{"defining equations of the punctual Hilbert scheme over exact rationals"};
  app.require_subcommand(1);
  (void)thread_cap();

  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  // chart-eqs
  auto* chart = app.add_subcommand("chart-eqs", "commutation equations of a border chart");
  std::string chart_basis = "1,x";
  std::string chart_vars = "x,y";
  chart->add_option("--basis", chart_basis, "basis monomials, comma separated");
  chart->add_option("--vars", chart_vars, "affine variables, comma separated");

  // global-eqs
  auto* global = app.add_subcommand("global-eqs", "quadratic equations on the Grassmannian");
  std::size_t g_n = 2, g_mu = 2;
  unsigned g_d = 2;
  std::string g_u, g_basis, g_out;
  bool g_full = false;
  global->add_option("--n", g_n, "projective dimension")->required();
  global->add_option("--mu", g_mu, "length")->required();
  global->add_option("--d", g_d, "degree (>= mu)")->required();
  global->add_option("--u", g_u, "fixed linear form, e.g. x0");
  global->add_flag("--full-k", g_full, "u-free equations (all u-monomial coefficients)");
  global->add_option("--basis", g_basis, "restrict to one family of degree-(d-1) monomials");
  global->add_option("--out", g_out, "also write the JSON to this file");

  // check-membership
  auto* member = app.add_subcommand("check-membership", "Hilbert-scheme membership of a point");
  std::string m_point;
  member->add_option("--point", m_point, "PlueckerPoint JSON file")->required();

  // tangent-dim
  auto* tangent = app.add_subcommand("tangent-dim", "dimension of the tangent space at a chart point");
  std::string t_basis = "1,x", t_z;
  bool t_kernel = false;
  tangent->add_option("--basis", t_basis, "basis monomials");
  tangent->add_option("--z", t_z, "border coefficients (fixture or values JSON)")->required();
  tangent->add_flag("--kernel", t_kernel, "also emit a kernel basis");

  // make-fixture
  auto* fixture = app.add_subcommand("make-fixture", "seeded random point configuration");
  std::size_t f_n = 2, f_mu = 2, f_doubles = 0;
  unsigned f_d = 2;
  std::uint64_t f_seed = 1;
  fixture->add_option("--n", f_n, "projective dimension");
  fixture->add_option("--mu", f_mu, "total length (doubles count twice)");
  fixture->add_option("--doubles", f_doubles, "number of first-order double points");
  fixture->add_option("--d", f_d, "degree of the Grassmannian embedding");
  fixture->add_option("--seed", f_seed, "random seed");

  // normal-form
  auto* nf = app.add_subcommand("normal-form", "coordinate vector of a polynomial over B");
  std::string nf_basis = "1,x", nf_z, nf_poly;
  nf->add_option("--basis", nf_basis, "basis monomials");
  nf->add_option("--z", nf_z, "border coefficients (fixture or values JSON)")->required();
  nf->add_option("--poly", nf_poly, "affine polynomial, e.g. y^3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*chart) {
      const std::size_t nvars = split_list(chart_vars).size();
      const MonomialBasis B = parse_affine_basis(chart_basis, nvars);
      emit(chart_equations_to_json(chart_equations(B)), pretty, "");
      return 0;
    }

    if (*global) {
      if (g_full && !g_u.empty()) throw UsageError("--u and --full-k are mutually exclusive");
      std::optional<std::vector<Exponent>> family;
      if (!g_basis.empty()) {
        std::vector<Exponent> fam;
        for (const auto& tok : split_list(g_basis))
          fam.push_back(monomial_from_string_projective(tok, g_n + 1));
        family = std::move(fam);
      }
      EquationSet result;
      if (g_full) {
        EquationSet comm = commutation_equations_full(g_n, g_d, g_mu, family);
        const EquationSet gen = generation_equations_full(g_n, g_d, g_mu, family);
        std::vector<MultiPoly> all = comm.equations;
        all.insert(all.end(), gen.equations.begin(), gen.equations.end());
        NormalizedSet ns = normalize_and_dedup(all);
        result = EquationSet{comm.context, std::move(ns.equations),
                             comm.dropped_trivial + gen.dropped_trivial};
      } else {
        // default: union over the coordinate forms u = x0..xn
        std::vector<XPoly> forms;
        if (!g_u.empty()) {
          forms.push_back(parse_linear_form(g_u, g_n));
        } else {
          for (std::size_t i = 0; i <= g_n; ++i)
            forms.push_back(XPoly::monomial(Exponent::zero(g_n + 1).times_var(i)));
        }
        std::vector<MultiPoly> all;
        std::size_t dropped = 0;
        EquationContext ctx;
        for (const XPoly& u : forms) {
          const EquationSet comm = commutation_equations_u(g_n, g_d, g_mu, u, family);
          const EquationSet gen = generation_equations_u(g_n, g_d, g_mu, u, family);
          all.insert(all.end(), comm.equations.begin(), comm.equations.end());
          all.insert(all.end(), gen.equations.begin(), gen.equations.end());
          dropped += comm.dropped_trivial + gen.dropped_trivial;
          ctx = comm.context;
        }
        if (forms.size() > 1) ctx.u = XPoly();  // union over all coordinate forms
        NormalizedSet ns = normalize_and_dedup(all);
        result = EquationSet{ctx, std::move(ns.equations), dropped};
      }
      emit(equation_set_to_json(result), pretty, g_out);
      return 0;
    }

    if (*member) {
      PlueckerPoint p = plucker_from_json(load_json(m_point));
      const MembershipResult r = membership(p);
      Json j;
      j["member"] = r.member;
      j["witness"] = r.witness ? poly_to_json(*r.witness) : Json(nullptr);
      emit(j, pretty, "");
      return 0;
    }

    if (*tangent) {
      const Json zjson = load_json(t_z);
      const Json& inner = zjson.contains("fixture") ? zjson.at("fixture") : zjson;
      const std::size_t nvars = inner.at("n").get<std::size_t>();
      const MonomialBasis B = parse_affine_basis(t_basis, nvars);
      const BorderCoefficients z = border_coeffs_from_json(zjson, B);
      const TangentSystem t = tangent_system(B, z);
      Json j;
      j["dimension"] = static_cast<std::size_t>(t.matrix.cols() - rank(t.matrix));
      if (t_kernel) {
        const RationalMatrix ker = tangent_kernel(t);
        Json basis = Json::array();
        for (Index c = 0; c < ker.cols(); ++c) {
          Json v = Json::array();
          for (Index r = 0; r < ker.rows(); ++r) v.push_back(to_string(ker(r, c)));
          basis.push_back(std::move(v));
        }
        j["kernel"] = std::move(basis);
      }
      emit(j, pretty, "");
      return 0;
    }

    if (*fixture) {
      if (f_mu < 2 * f_doubles) throw UsageError("--mu must cover the double points");
      const std::size_t simple = f_mu - 2 * f_doubles;
      PointConfiguration c;
      if (f_doubles == 0) {
        c = random_simple_points(f_n, simple, f_seed);
      } else if (f_doubles == 1) {
        c = random_with_double_point(f_n, simple, f_seed);
      } else {
        throw UsageError("--doubles supports at most one double point");
      }
      if (f_d < c.total_length()) throw UsageError("--d must be at least mu");
      Json j;
      j["fixture"] = point_configuration_to_json(c, f_seed, f_d);
      j["point"] = plucker_to_json(plucker_fixture(c, f_d));
      emit(j, pretty, "");
      return 0;
    }

    if (*nf) {
      const Json zjson = load_json(nf_z);
      const Json& inner = zjson.contains("fixture") ? zjson.at("fixture") : zjson;
      const std::size_t nvars = inner.at("n").get<std::size_t>();
      const MonomialBasis B = parse_affine_basis(nf_basis, nvars);
      const BorderCoefficients z = border_coeffs_from_json(zjson, B);
      XPoly p;
      try {
        p = poly_from_string_affine(nf_poly, nvars);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad polynomial: ") + e.what());
      }
      const RationalVector v = normal_form(z, p);
      Json j;
      Json basis = Json::array();
      for (const auto& e : B.elements()) basis.push_back(monomial_to_string_affine(e));
      j["basis"] = std::move(basis);
      Json vec = Json::array();
      for (Index i = 0; i < v.size(); ++i) vec.push_back(to_string(v(i)));
      j["vector"] = std::move(vec);
      emit(j, pretty, "");
      return 0;
    }
  } catch (const UsageError& e) {
    std::cout << Json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cout << Json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cout << Json{{"error", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cout << Json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
