#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbkit/multipoly.hpp"
#include "test_util.hpp"

using namespace hilbkit;
using hktest::exp_of;

namespace {

VarName zvar(const char* alpha, const char* beta) {
  return VarName::z(monomial_from_string_affine(alpha, 2),
                    monomial_from_string_affine(beta, 2));
}

MultiPoly random_poly(hktest::Rng& rng, const std::vector<VarName>& pool) {
  std::uniform_int_distribution<int> nterms(0, 5);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<unsigned> expd(1, 2);
  std::uniform_int_distribution<int> nvars(0, 2);
  MultiPoly p;
  const int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    VarMonomial m;
    const int v = nvars(rng);
    for (int k = 0; k < v; ++k) m[pool[pick(rng)]] += expd(rng);
    p.add_term(std::move(m), hktest::random_rational(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("basic identities") {
  const MultiPoly z1 = MultiPoly::variable(zvar("y", "1"));
  const MultiPoly z2 = MultiPoly::variable(zvar("y", "x"));
  CHECK((z1 + z2) * (z1 - z2) == z1 * z1 - z2 * z2);
  CHECK((z1 - z1).is_zero());
  CHECK((z1 * MultiPoly(Rational(0))).is_zero());
}

TEST_CASE("substitution") {
  // z_{xy,1} - z_{x^2,1} z_{y,x} vanishes at z = 0
  const MultiPoly p = MultiPoly::variable(zvar("x*y", "1")) -
                      MultiPoly::variable(zvar("x^2", "1")) * MultiPoly::variable(zvar("y", "x"));
  std::map<VarName, Rational> zero{{zvar("x*y", "1"), 0}, {zvar("x^2", "1"), 0}, {zvar("y", "x"), 0}};
  CHECK(p.substitute(zero).is_zero());

  // two-point fixture values on z_{xy,x} - z_{y,1} - z_{y,x} z_{x^2,x}
  const MultiPoly q = MultiPoly::variable(zvar("x*y", "x")) - MultiPoly::variable(zvar("y", "1")) -
                      MultiPoly::variable(zvar("y", "x")) * MultiPoly::variable(zvar("x^2", "x"));
  std::map<VarName, Rational> fixture{{zvar("x*y", "x"), 1},
                                      {zvar("y", "1"), 0},
                                      {zvar("y", "x"), 1},
                                      {zvar("x^2", "x"), 1}};
  CHECK(q.substitute(fixture).is_zero());
}

TEST_CASE("partial substitution keeps symbols") {
  const VarName a = zvar("y", "1");
  const VarName b = zvar("y", "x");
  const MultiPoly p = MultiPoly::variable(a) * MultiPoly::variable(b) + MultiPoly::variable(b);
  const MultiPoly s = p.substitute({{a, frac(3)}});
  CHECK(s == MultiPoly::variable(b) * MultiPoly(frac(4)));
  CHECK(s.degree_in_family(VarFamily::Z) == 1);
}

TEST_CASE("ring axioms on random polynomials") {
  hktest::Rng rng(29);
  const std::vector<VarName> pool{zvar("y", "1"), zvar("y", "x"), zvar("x^2", "1"),
                                  zvar("x^2", "x"), VarName::u(0), VarName::u(1)};
  for (int iter = 0; iter < 60; ++iter) {
    const MultiPoly p = random_poly(rng, pool);
    const MultiPoly q = random_poly(rng, pool);
    const MultiPoly r = random_poly(rng, pool);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) * r == p * r + q * r);
    CHECK((p - p).is_zero());
    CHECK((p * (q * r)) == ((p * q) * r));
  }
}

TEST_CASE("normalization is sign-blind") {
  hktest::Rng rng(31);
  const std::vector<VarName> pool{zvar("y", "1"), zvar("y", "x"), zvar("x^2", "1")};
  for (int iter = 0; iter < 40; ++iter) {
    const MultiPoly p = random_poly(rng, pool);
    if (p.is_zero()) continue;
    CHECK(p.normalized() == (-p).normalized());
    CHECK(p.normalized() == (p * frac(3, 7)).normalized());
  }
}

TEST_CASE("variable order and rendering") {
  CHECK(zvar("y", "1").to_string() == "z[y|1]");
  CHECK(VarName::u(0).to_string() == "u[0]");
  CHECK(VarName::h1(monomial_from_string_affine("y", 2), monomial_from_string_affine("x", 2))
            .to_string() == "h1[y|x]");
  const VarName d = VarName::delta({exp_of({2, 0, 0}), exp_of({1, 1, 0})});
  CHECK(d.to_string() == "D[x0^2,x0*x1]");
  CHECK(VarName::u(0) < VarName::u(1));
  CHECK(zvar("y", "1") < VarName::u(0));  // family tag order
  CHECK(d < VarName::u(0));
  const MultiPoly p = MultiPoly::variable(zvar("x^2", "1")) * MultiPoly::variable(zvar("y", "x")) -
                      MultiPoly::variable(zvar("x*y", "1"));
  CHECK(p.to_string() == "-z[x*y|1]+z[y|x]*z[x^2|1]");
}
