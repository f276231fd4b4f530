#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lbiso/isotropy.hpp"
#include "test_util.hpp"

#include <string>
#include <vector>

using namespace lbiso;

namespace {

OpMatrix zero_op(int d, int deg) { return OpMatrix(d + 1, d + 1, d, deg); }

HomPoly dvar(int d, int a) { return HomPoly::variable(d, a); }

HomPoly lap2d() {
  HomPoly p(2, 2);
  p.add_term({2, 0, 0, 0}, Rational(1));
  p.add_term({0, 2, 0, 0}, Rational(1));
  return p;
}

std::vector<std::string> labels(const IsotropicBasis& b) {
  std::vector<std::string> out;
  for (const auto& e : b.elements()) out.push_back(e.label);
  return out;
}

ParamPoint d2q9_order2_point() {
  ParamPoint p = testutil::generic_point(builtin_scheme("d2q9"));
  p.set("alpha", Rational(1));
  p.set("xx_eq", Rational(0));
  p.set("xy_eq", Rational(0));
  p.set("sigma3", Rational(1, 3));
  p.set("sigma4", Rational(1, 2));
  p.set("sigma5", Rational(2));
  p.set("q_eq", Rational(-5, 3));  // (sigma4 - 4 sigma5) / (sigma4 + 2 sigma5)
  return p;
}

ParamPoint d2q9_order3_point() {
  ParamPoint p = testutil::generic_point(builtin_scheme("d2q9"));
  p.set("alpha", Rational(1));
  p.set("xx_eq", Rational(0));
  p.set("xy_eq", Rational(0));
  p.set("sigma3", Rational(1, 2));
  p.set("sigma4", Rational(1));
  p.set("sigma5", Rational(1));
  p.set("q_eq", Rational(-1));
  p.set("eps2_eq", Rational(-7, 2));  // -(3 alpha + 4)/2
  return p;
}

std::vector<IsotropicDecomposition> decompose_orders(const Scheme& s, const ParamPoint& p,
                                                     int levels) {
  Expansion ex = expand_ladder(s, p, levels);
  std::vector<IsotropicDecomposition> decs;
  for (int j = 1; j <= levels; ++j)
    decs.push_back(decompose(ex.a(j), IsotropicBasis(s.d(), j)));
  return decs;
}

}  // namespace

TEST_CASE("basis sizes and canonical labels") {
  CHECK(labels(IsotropicBasis(2, 1)) ==
        std::vector<std::string>{"beta_0", "gamma_0", "delta_0", "epsilon_0"});
  CHECK(labels(IsotropicBasis(2, 2)) ==
        std::vector<std::string>{"alpha_1", "mu_1", "zeta_0", "nu_1", "eta_0"});
  CHECK(labels(IsotropicBasis(2, 3)) ==
        std::vector<std::string>{"beta_1", "gamma_1", "delta_1", "epsilon_1"});
  CHECK(labels(IsotropicBasis(2, 4)) ==
        std::vector<std::string>{"alpha_2", "mu_2", "zeta_1", "nu_2", "eta_1"});
  CHECK(labels(IsotropicBasis(3, 1)) ==
        std::vector<std::string>{"beta_0", "delta_0", "phi_0"});
  CHECK(labels(IsotropicBasis(3, 2)) ==
        std::vector<std::string>{"alpha_1", "mu_1", "eta_0"});
  CHECK(labels(IsotropicBasis(3, 3)) ==
        std::vector<std::string>{"beta_1", "delta_1", "phi_1"});
  CHECK(labels(IsotropicBasis(3, 4)) ==
        std::vector<std::string>{"alpha_2", "mu_2", "eta_1"});
  CHECK(IsotropicBasis(2, 4).find(Family::lap_rho, 2) != nullptr);
  CHECK(IsotropicBasis(2, 4).find(Family::lap_rho, 1) == nullptr);
  CHECK_THROWS_AS(IsotropicBasis(4, 1), Error);
  CHECK_THROWS_AS(IsotropicBasis(2, 5), Error);
  CHECK_THROWS_AS(IsotropicBasis(2, 0), Error);
}

TEST_CASE("test rotations are exactly orthogonal") {
  for (int d : {2, 3})
    for (const RMatrix& r : test_rotations(d))
      CHECK(r.transpose() * r == RMatrix::identity(d));
}

TEST_CASE("rotation action is multiplicative and detects anisotropy") {
  const RMatrix& r = test_rotations(2)[0];
  // two sample degree-1 operator blocks
  OpMatrix a = zero_op(2, 1), b = zero_op(2, 1);
  a.at(0, 1) = dvar(2, 0);
  a.at(1, 0) = dvar(2, 1);
  a.at(2, 2) = dvar(2, 0) - dvar(2, 1);
  b.at(0, 2) = dvar(2, 1);
  b.at(1, 1) = dvar(2, 0);
  b.at(2, 0) = dvar(2, 0);
  CHECK(rotate_operator(a * b, r) == rotate_operator(a, r) * rotate_operator(b, r));

  OpMatrix m = zero_op(2, 2);
  m.at(0, 0) = dvar(2, 0) * dvar(2, 0);
  CHECK(rotate_operator(m, r) != m);

  OpMatrix iso = zero_op(2, 2);
  iso.at(0, 0) = lap2d();
  CHECK(rotate_operator(iso, r) == iso);
}

TEST_CASE("families are complete: invariant space dimension equals basis size") {
  for (int d : {2, 3})
    for (int ell = 1; ell <= 4; ++ell) {
      IsotropicBasis b(d, ell);
      INFO("d=" << d << " ell=" << ell);
      CHECK(b.invariant_space_dimension() == b.size());
    }
}

TEST_CASE("decompose recovers span coefficients exactly") {
  IsotropicBasis basis(2, 2);
  const std::vector<Rational> c{Rational(3), Rational(-1, 2), Rational(7, 3), Rational(1, 5),
                                Rational(-2)};
  OpMatrix combo = zero_op(2, 2);
  for (int i = 0; i < basis.size(); ++i)
    combo += c[static_cast<std::size_t>(i)] * basis.elements()[static_cast<std::size_t>(i)].op;
  IsotropicDecomposition dec = decompose(combo, basis);
  CHECK(dec.isotropic());
  for (int i = 0; i < basis.size(); ++i)
    CHECK(dec.terms[static_cast<std::size_t>(i)].coeff == c[static_cast<std::size_t>(i)]);
}

TEST_CASE("projection remainder is the exact non-invariant part") {
  IsotropicBasis basis(2, 2);
  OpMatrix m = zero_op(2, 2);
  m.at(0, 0) = dvar(2, 0) * dvar(2, 0);
  IsotropicDecomposition dec = decompose(m, basis);
  CHECK_FALSE(dec.isotropic());
  CHECK(dec.coefficient(Family::lap_rho, 1) == Rational(1, 2));
  HomPoly expect = dvar(2, 0) * dvar(2, 0) - dvar(2, 1) * dvar(2, 1);
  CHECK(dec.residual.at(0, 0) == Rational(1, 2) * expect);
}

TEST_CASE("axis-aligned second derivatives are anisotropic") {
  IsotropicBasis basis(2, 2);
  OpMatrix m = zero_op(2, 2);
  m.at(1, 1) = dvar(2, 0) * dvar(2, 0);
  m.at(2, 2) = dvar(2, 1) * dvar(2, 1);
  IsotropicDecomposition dec = decompose(m, basis);
  CHECK_FALSE(dec.isotropic());
  CHECK(dec.coefficient(Family::lap_j, 1) == Rational(1, 3));
  CHECK(dec.coefficient(Family::grad_div_lap_j, 0) == Rational(1, 3));
  CHECK(dec.coefficient(Family::lap_jperp, 1) == Rational(0));
  CHECK(dec.coefficient(Family::grad_div_lap_jperp, 0) == Rational(0));
}

TEST_CASE("reflection-odd families decompose cleanly") {
  IsotropicBasis basis(2, 2);
  OpMatrix combo = Rational(2) * basis.find(Family::lap_jperp, 1)->op;
  combo += Rational(-3) * basis.find(Family::grad_div_lap_jperp, 0)->op;
  IsotropicDecomposition dec = decompose(combo, basis);
  CHECK(dec.isotropic());
  CHECK(dec.coefficient(Family::lap_jperp, 1) == Rational(2));
  CHECK(dec.coefficient(Family::grad_div_lap_jperp, 0) == Rational(-3));
  CHECK(dec.coefficient(Family::lap_j, 1) == Rational(0));
  CHECK(dec.coefficient(Family::grad_div_lap_j, 0) == Rational(0));
  CHECK(dec.coefficient(Family::lap_rho, 1) == Rational(0));
}

TEST_CASE("decompose rejects mismatched shapes") {
  IsotropicBasis basis(2, 1);
  CHECK_THROWS_AS(decompose(zero_op(2, 2), basis), Error);
  CHECK_THROWS_AS(decompose(zero_op(3, 1), basis), Error);
}

TEST_CASE("d2q9 second-order point: engine coefficients") {
  const Scheme& s = builtin_scheme("d2q9");
  ParamPoint p = d2q9_order2_point();
  auto decs = decompose_orders(s, p, 2);
  REQUIRE(decs[0].isotropic());
  REQUIRE(decs[1].isotropic());
  CHECK(decs[0].coefficient(Family::lap_div_j, 0) == Rational(-1));
  CHECK(decs[0].coefficient(Family::lap_div_jperp, 0) == Rational(0));
  CHECK(decs[0].coefficient(Family::gradperp_lap_rho, 0) == Rational(0));
  CHECK(decs[1].coefficient(Family::lap_jperp, 1) == Rational(0));
  CHECK(decs[1].coefficient(Family::grad_div_lap_jperp, 0) == Rational(0));

  PhysicalCoefficients phys = extract_physical(decs, p);
  CHECK(*phys.c0_sq == Rational(5, 6));
  CHECK(*phys.mu == Rational(2, 9));
  CHECK(*phys.zeta == Rational(-5, 54));
  CHECK(*phys.gamma == Rational(7, 108));
  CHECK_FALSE(phys.xi.has_value());
}

TEST_CASE("d2q9 third-order point: engine coefficients") {
  const Scheme& s = builtin_scheme("d2q9");
  ParamPoint p = d2q9_order3_point();
  auto decs = decompose_orders(s, p, 3);
  for (const auto& dec : decs) REQUIRE(dec.isotropic());

  PhysicalCoefficients phys = extract_physical(decs, p);
  CHECK(*phys.c0_sq == Rational(5, 6));
  CHECK(*phys.mu == Rational(1, 3));
  CHECK(*phys.zeta == Rational(-1, 12));
  CHECK(*phys.gamma == Rational(1, 8));
  CHECK(*phys.xi == Rational(-1, 72));
  CHECK(*phys.chi == Rational(-95, 432));

  // order-4 invariance needs more: sigma3 = sigma4 fails here
  Expansion ex = expand_ladder(s, p, 4);
  CHECK_FALSE(decompose(ex.a(4), IsotropicBasis(2, 4)).isotropic());
}

TEST_CASE("physical coefficients follow the lambda and dt grading") {
  const Scheme& s = builtin_scheme("d2q9");
  ParamPoint p = testutil::generic_point(s);
  p.set("xx_eq", Rational(0));
  p.set("xy_eq", Rational(0));
  p.set("lambda", Rational(2));
  auto decs = decompose_orders(s, p, 1);
  PhysicalCoefficients phys = extract_physical(decs, p);
  // c0^2 = lambda^2 (4 + alpha) / 6 at alpha = 2
  CHECK(*phys.c0_sq == Rational(4));

  ParamPoint q = d2q9_order3_point();
  q.set("dt", Rational(1, 2));
  PhysicalCoefficients ph3 = extract_physical(decompose_orders(s, q, 3), q);
  CHECK(*ph3.mu == Rational(1, 6));      // (1/3) sigma4 lambda dx, dx = 1/2
  CHECK(*ph3.xi == Rational(-1, 288));   // (1/72)(alpha - 2) dx^2
}

TEST_CASE("extract_physical refuses anisotropic input") {
  const Scheme& s = builtin_scheme("d2q9");
  ParamPoint p = testutil::generic_point(s);  // xx_eq nonzero: anisotropic at order 1
  auto decs = decompose_orders(s, p, 1);
  CHECK_FALSE(decs[0].isotropic());
  CHECK_THROWS_WITH_AS(extract_physical(decs, p),
                       "extract_physical: nonzero residual at order 1", Error);
}
