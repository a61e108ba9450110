#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hilbkit/border_basis.hpp"
#include "test_util.hpp"

using namespace hilbkit;
using hktest::exp_of;

namespace {

MonomialBasis basis_1x() { return MonomialBasis(2, {exp_of({0, 0}), exp_of({1, 0})}); }

VarName zvar(const char* alpha, const char* beta) {
  return VarName::z(monomial_from_string_affine(alpha, 2),
                    monomial_from_string_affine(beta, 2));
}

MultiPoly zv(const char* alpha, const char* beta) { return MultiPoly::variable(zvar(alpha, beta)); }

// Border coefficients of the vanishing ideal of {(0,0),(1,1)} on B=(1,x):
// z_{y,1}=0, z_{y,x}=1, z_{x^2,1}=0, z_{x^2,x}=1, z_{xy,1}=0, z_{xy,x}=1.
BorderCoefficients two_point_fixture() {
  BorderSet bs(basis_1x());
  RationalMatrix v(3, 2);
  v.setConstant(Rational(0));
  for (std::size_t a = 0; a < 3; ++a) v(static_cast<Index>(a), 1) = 1;
  return BorderCoefficients(bs, v);
}

// The four raw commutator entries for B=(1,x) in k[x,y]; the first
// and fourth differ only by sign.
std::vector<MultiPoly> reference_chart_equations() {
  return {
      zv("x*y", "1") - zv("x^2", "1") * zv("y", "x"),
      zv("x*y", "x") - zv("y", "1") - zv("y", "x") * zv("x^2", "x"),
      zv("x^2", "1") * zv("y", "1") + zv("x^2", "x") * zv("x*y", "1") - zv("x*y", "x") * zv("x^2", "1"),
      zv("x^2", "1") * zv("y", "x") - zv("x*y", "1"),
  };
}

bool contains_up_to_sign(const std::vector<MultiPoly>& set, const MultiPoly& p) {
  const MultiPoly n = p.normalized();
  return std::any_of(set.begin(), set.end(),
                     [&](const MultiPoly& q) { return q.normalized() == n; });
}

// Substitutes a variable by a polynomial (test-side helper; the library
// only substitutes by scalars).
MultiPoly subst_poly(const MultiPoly& p, const VarName& v, const MultiPoly& rep) {
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    MultiPoly t(c);
    for (const auto& [var, e] : m) {
      MultiPoly f = (var == v) ? rep : MultiPoly::variable(var);
      for (unsigned k = 0; k < e; ++k) t = t * f;
    }
    out += t;
  }
  return out;
}

}  // namespace

TEST_CASE("formal multiplication matrices for B=(1,x)") {
  const FormalMultMatrices F = formal_mult_matrices(basis_1x());
  REQUIRE(F.mats.size() == 2);
  const PolyMatrix& mx = F.mats[0];
  CHECK(mx(0, 0).is_zero());
  CHECK(mx(1, 0) == MultiPoly(Rational(1)));
  CHECK(mx(0, 1) == zv("x^2", "1"));
  CHECK(mx(1, 1) == zv("x^2", "x"));
  const PolyMatrix& my = F.mats[1];
  CHECK(my(0, 0) == zv("y", "1"));
  CHECK(my(1, 0) == zv("y", "x"));
  CHECK(my(0, 1) == zv("x*y", "1"));
  CHECK(my(1, 1) == zv("x*y", "x"));
}

TEST_CASE("formal matrices, small cases") {
  const MonomialBasis b1(1, {exp_of({0})});
  const FormalMultMatrices F1 = formal_mult_matrices(b1);
  REQUIRE(F1.mats.size() == 1);
  CHECK(F1.mats[0](0, 0) == MultiPoly::variable(VarName::z(exp_of({1}), exp_of({0}))));

  // B=(1,x,y): unit column at 1 -> x, z-columns at x -> x^2 and y -> xy.
  const MonomialBasis bxy(2, {exp_of({0, 0}), exp_of({1, 0}), exp_of({0, 1})});
  const FormalMultMatrices F = formal_mult_matrices(bxy);
  const std::size_t cx = *bxy.index_of(exp_of({1, 0}));
  const std::size_t c1 = *bxy.index_of(exp_of({0, 0}));
  const PolyMatrix& mx = F.mats[0];
  CHECK(mx(static_cast<Index>(cx), static_cast<Index>(c1)) == MultiPoly(Rational(1)));
  for (std::size_t r = 0; r < 3; ++r) {
    CHECK(mx(static_cast<Index>(r), static_cast<Index>(cx)) ==
          MultiPoly::variable(VarName::z(exp_of({2, 0}), bxy[r])));
  }
  // linearity: every entry has z-degree <= 1
  for (const auto& m : F.mats)
    for (Index r = 0; r < m.rows(); ++r)
      for (Index c = 0; c < m.cols(); ++c) CHECK(m(r, c).degree_in_family(VarFamily::Z) <= 1);
}

TEST_CASE("chart equations match the reference set for B=(1,x)") {
  const ChartEquations eqs = chart_equations(basis_1x());
  const auto reference = reference_chart_equations();

  // mutual containment up to sign and order
  for (const auto& p : reference) CHECK(contains_up_to_sign(eqs.equations, p));
  for (const auto& e : eqs.equations) CHECK(contains_up_to_sign(reference, e));

  // the first and fourth reference equations differ only by sign, so the
  // deduplicated chart set has three members
  CHECK(eqs.equations.size() == 3);

  for (const auto& e : eqs.equations) {
    CHECK(e.degree_in_family(VarFamily::Z) <= 2);
    CHECK(e.degree_in_family(VarFamily::Z) >= 1);
  }

  // reduction modulo the two binding relations kills every equation
  const MultiPoly rep_xy1 = zv("x^2", "1") * zv("y", "x");
  const MultiPoly rep_xyx = zv("y", "1") + zv("y", "x") * zv("x^2", "x");
  for (const auto& e : eqs.equations) {
    MultiPoly r = subst_poly(e, zvar("x*y", "1"), rep_xy1);
    r = subst_poly(r, zvar("x*y", "x"), rep_xyx);
    CHECK(r.is_zero());
  }
  // and the two relations themselves are in the generated set
  CHECK(contains_up_to_sign(eqs.equations, zv("x*y", "1") - rep_xy1));
  CHECK(contains_up_to_sign(eqs.equations, zv("x*y", "x") - rep_xyx));
}

TEST_CASE("chart equations, degenerate cases") {
  // 1x1 matrices commute
  const ChartEquations e1 = chart_equations(MonomialBasis(2, {exp_of({0, 0})}));
  CHECK(e1.equations.empty());
  CHECK(e1.dropped_trivial > 0);

  // single variable: no pairs at all
  const ChartEquations e2 =
      chart_equations(MonomialBasis(1, {exp_of({0}), exp_of({1}), exp_of({2})}));
  CHECK(e2.equations.empty());
  CHECK(e2.dropped_trivial == 0);
}

TEST_CASE("instantiate") {
  const FormalMultMatrices F = formal_mult_matrices(basis_1x());
  const BorderCoefficients zero = BorderCoefficients::zero(basis_1x());
  const auto M0 = instantiate(F, zero);
  CHECK(M0[0](0, 0) == 0);
  CHECK(M0[0](1, 0) == 1);
  CHECK(M0[0](0, 1) == 0);
  CHECK(M0[0](1, 1) == 0);
  CHECK(hktest::matrix_is_zero(M0[1]));

  const auto Mf = instantiate(F, two_point_fixture());
  for (int i : {0, 1}) {
    CHECK(Mf[i](0, 0) == 0);
    CHECK(Mf[i](0, 1) == 0);
    CHECK(Mf[i](1, 0) == 1);
    CHECK(Mf[i](1, 1) == 1);
  }

  BorderCoefficients ones = BorderCoefficients::zero(basis_1x());
  ones.values.setConstant(Rational(1));
  const auto M1 = instantiate(F, ones);
  CHECK(M1[0](0, 1) == 1);
  CHECK(M1[0](1, 0) == 1);  // unit column untouched
  CHECK(M1[0](0, 0) == 0);
}

TEST_CASE("is_border_basis") {
  CHECK(is_border_basis(two_point_fixture()));
  CHECK(is_border_basis(BorderCoefficients::zero(basis_1x())));

  BorderCoefficients bad = two_point_fixture();
  const std::size_t xy = *bad.border.index_of(exp_of({1, 1}));
  bad.values(static_cast<Index>(xy), 0) += 1;  // z_{xy,1} += 1
  CHECK_FALSE(is_border_basis(bad));
}

TEST_CASE("normal form") {
  const BorderCoefficients z = two_point_fixture();
  const MonomialBasis& B = z.border.basis();

  for (std::size_t b = 0; b < B.mu(); ++b) {
    const RationalVector v = normal_form(z, XPoly::monomial(B[b]));
    for (std::size_t r = 0; r < B.mu(); ++r) CHECK(v(static_cast<Index>(r)) == (r == b ? 1 : 0));
  }
  for (std::size_t a = 0; a < z.border.size(); ++a) {
    const RationalVector v = normal_form(z, XPoly::monomial(z.border.boundary()[a]));
    for (std::size_t b = 0; b < B.mu(); ++b) CHECK(v(static_cast<Index>(b)) == z.z(a, b));
  }

  // y^3 = x on the two-point fixture
  const RationalVector v = normal_form(z, poly_from_string_affine("y^3", 2));
  CHECK(v(0) == 0);
  CHECK(v(1) == 1);

  BorderCoefficients bad = z;
  bad.values(static_cast<Index>(*bad.border.index_of(exp_of({1, 1}))), 0) += 1;
  CHECK_THROWS_AS(normal_form(bad, poly_from_string_affine("y", 2)), NotCommutingError);

  // idempotence on <B+>: reducing the reduction changes nothing
  hktest::Rng rng(47);
  for (int iter = 0; iter < 20; ++iter) {
    XPoly p;
    for (const auto& e : z.border.b_plus()) p.add_term(e, hktest::random_rational(rng));
    const RationalVector once = normal_form(z, p);
    XPoly q;
    for (std::size_t b = 0; b < B.mu(); ++b) q.add_term(B[b], once(static_cast<Index>(b)));
    CHECK(normal_form(z, q) == once);
  }
}

TEST_CASE("instantiate rejects coefficients from another basis") {
  const FormalMultMatrices F = formal_mult_matrices(basis_1x());
  const BorderCoefficients other =
      BorderCoefficients::zero(MonomialBasis(2, {exp_of({0, 0})}));
  CHECK_THROWS_AS(instantiate(F, other), IncompleteCoefficientsError);
}

TEST_CASE("ideal membership") {
  const BorderCoefficients z = two_point_fixture();
  for (std::size_t a = 0; a < z.border.size(); ++a)
    CHECK(ideal_membership(z, z.border_relation(a)));
  CHECK(ideal_membership(z, poly_from_string_affine("y - x", 2)));
  CHECK_FALSE(ideal_membership(z, poly_from_string_affine("x", 2)));
}

TEST_CASE("factorization order does not matter on the chart") {
  const BorderCoefficients z = two_point_fixture();
  const auto M = multiplication_matrices(z);
  hktest::Rng rng(41);
  std::uniform_int_distribution<unsigned> dd(0, 6);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<std::size_t> factors;
    for (std::size_t i = 0; i < 2; ++i) {
      const unsigned e = dd(rng) / 2;
      for (unsigned k = 0; k < e; ++k) factors.push_back(i);
    }
    RationalVector v1(2), v2(2);
    v1 << Rational(1), Rational(0);
    v2 = v1;
    for (std::size_t f : factors) v1 = (M[f] * v1).eval();
    std::shuffle(factors.begin(), factors.end(), rng);
    for (std::size_t f : factors) v2 = (M[f] * v2).eval();
    CHECK(v1 == v2);
  }
}

TEST_CASE("chart equations vanish at the fixture point") {
  const ChartEquations eqs = chart_equations(basis_1x());
  const BorderCoefficients z = two_point_fixture();
  std::map<VarName, Rational> sigma;
  for (std::size_t a = 0; a < z.border.size(); ++a)
    for (std::size_t b = 0; b < 2; ++b)
      sigma.emplace(VarName::z(z.border.boundary()[a], z.border.basis()[b]), z.z(a, b));
  for (const auto& e : eqs.equations) CHECK(e.substitute(sigma).is_zero());
}
