#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lbiso/hompoly.hpp"
#include "lbiso/opmatrix.hpp"
#include "lbiso/rmatrix.hpp"

using namespace lbiso;

namespace {

HomPoly dx2() { return HomPoly::variable(2, 0); }
HomPoly dy2() { return HomPoly::variable(2, 1); }

Rational Q(const char* s) { return Rational::parse(s); }

}  // namespace

TEST_CASE("rational parse and canonical form") {
  CHECK(Q("5/10") == Q("1/2"));
  CHECK(Q("-4/6").to_string() == "-2/3");
  CHECK(Q("7").to_string() == "7");
  CHECK(Q("-0") == Rational(0));
  CHECK(Q("1/-2") == Q("-1/2"));
  CHECK(Q("123456789123456789/3") * Rational(3) == Q("123456789123456789"));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("a"), Error);
  CHECK_THROWS_AS(Rational::parse("1.5"), Error);
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK_THROWS_AS(Rational::parse("1/ 2"), Error);
}

TEST_CASE("rational arithmetic") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Q("1/2"));
  CHECK(a - b == Q("1/6"));
  CHECK(a * b == Q("1/18"));
  CHECK(a / b == Rational(2));
  CHECK((-a).to_string() == "-1/3");
  CHECK(a.pow(3) == Q("1/27"));
  CHECK(Q("-2/3").pow(-2) == Q("9/4"));
  CHECK(Q("3/4").inverse() == Q("4/3"));
  CHECK_THROWS_AS(Rational(0).inverse(), Error);
  CHECK_THROWS_AS(a / Rational(0), Error);
  CHECK(Q("1/3") < Q("1/2"));
  CHECK(Q("-5").abs() == Rational(5));
}

TEST_CASE("rational parse round trip") {
  for (const char* s : {"0", "1", "-1", "22/7", "-355/113", "123456789123456789123456789/2"}) {
    CHECK(Rational::parse(s).to_string() == s);
  }
}

TEST_CASE("hompoly difference of squares") {
  HomPoly sum = dx2() + dy2();
  HomPoly diff = dx2() - dy2();
  HomPoly expect = dx2() * dx2() - dy2() * dy2();
  CHECK(sum * diff == expect);
  CHECK((sum * diff).degree() == 2);
}

TEST_CASE("hompoly invariants") {
  HomPoly p(2, 2);
  CHECK(p.is_zero());
  p.add_term(Exp{2, 0, 0, 0}, Rational(1));
  p.add_term(Exp{2, 0, 0, 0}, Rational(-1));
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
  CHECK_THROWS_AS(p.add_term(Exp{1, 0, 0, 0}, Rational(1)), Error);
  HomPoly q(2, 3);
  CHECK_THROWS_AS(p += q, Error);
  CHECK((dx2() + dx2()).to_string(deriv_names(2)) == "2*dx");
}

TEST_CASE("hompoly substitution preserves degree") {
  // Rotation by the 3-4-5 angle: dx -> 3/5 dx - 4/5 dy, dy -> 4/5 dx + 3/5 dy.
  std::vector<std::vector<Rational>> R{{Q("3/5"), Q("-4/5")}, {Q("4/5"), Q("3/5")}};
  HomPoly lap = dx2() * dx2() + dy2() * dy2();
  CHECK(lap.substitute_linear(R) == lap);
  HomPoly xx = dx2() * dx2() - dy2() * dy2();
  CHECK(xx.substitute_linear(R) != xx);
  CHECK(xx.substitute_linear(R).degree() == 2);
}

TEST_CASE("hompoly eval") {
  HomPoly p = dx2() * dx2() - dy2() * dy2();
  CHECK(p.eval({Rational(3), Rational(2)}) == Rational(5));
  std::array<std::complex<double>, 4> x{{{0.0, 1.0}, {1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}};
  auto v = p.eval(x);
  CHECK(v.real() == doctest::Approx(-2.0));
  CHECK(v.imag() == doctest::Approx(0.0));
}

TEST_CASE("opmatrix non-commutativity witness") {
  OpMatrix A(2, 2, 2, 1), B(2, 2, 2, 1);
  A.at(0, 0) = dx2();
  A.at(1, 1) = dy2();
  B.at(0, 1) = dx2();
  B.at(1, 0) = dy2();
  OpMatrix comm = A * B - B * A;
  CHECK_FALSE(comm.is_zero());
  CHECK(comm.at(0, 1) == dx2() * dx2() - dx2() * dy2());
  CHECK(comm.at(1, 0) == dy2() * dy2() - dx2() * dy2());
  CHECK(comm.at(0, 0).is_zero());
  CHECK(comm.at(1, 1).is_zero());
}

TEST_CASE("opmatrix degree bookkeeping") {
  OpMatrix I = OpMatrix::identity(3, 2);
  CHECK(I.degree() == 0);
  OpMatrix G(3, 3, 2, 1);
  G.at(0, 1) = dx2();
  CHECK((G * G).degree() == 2);
  CHECK((I * G) == G);
  OpMatrix H(3, 3, 2, 2);
  CHECK_THROWS_AS(G += H, Error);
}

TEST_CASE("rmatrix inverse") {
  RMatrix m(2, 2);
  m.at(0, 0) = Rational(1);
  m.at(0, 1) = Rational(1);
  m.at(1, 0) = Rational(1);
  m.at(1, 1) = Rational(-1);
  RMatrix inv = m.inverse();
  CHECK(inv.at(0, 0) == Q("1/2"));
  CHECK(inv.at(0, 1) == Q("1/2"));
  CHECK(inv.at(1, 0) == Q("1/2"));
  CHECK(inv.at(1, 1) == Q("-1/2"));
  CHECK(m * inv == RMatrix::identity(2));
}

TEST_CASE("rmatrix singular pivot reporting") {
  RMatrix m(2, 2);
  m.at(0, 0) = Rational(1);
  m.at(0, 1) = Rational(2);
  m.at(1, 0) = Rational(2);
  m.at(1, 1) = Rational(4);
  try {
    m.inverse();
    FAIL("expected SingularMatrixError");
  } catch (const SingularMatrixError& e) {
    CHECK(e.stage == 1);
  }
  CHECK(m.kernel_dimension() == 1);
}

TEST_CASE("rmatrix rref pivots") {
  RMatrix m(3, 4);
  // rows: x + y = 1-ish pattern with a dependent row
  m.at(0, 0) = Rational(1);
  m.at(0, 1) = Rational(2);
  m.at(0, 3) = Rational(1);
  m.at(1, 0) = Rational(2);
  m.at(1, 1) = Rational(4);
  m.at(1, 3) = Rational(2);
  m.at(2, 2) = Rational(5);
  auto pivots = m.rref();
  CHECK(pivots == std::vector<int>{0, 2});
  CHECK(m.kernel_dimension() == 2);
}

TEST_CASE("algebra property spot checks") {
  // Deterministic low-denominator streams, exercising ring laws exactly.
  auto val = [](int i) { return Rational(2 * i - 7, 1 + (i * i) % 5); };
  for (int i = 0; i < 16; ++i) {
    Rational a = val(i), b = val(i + 1), c = val(i + 2);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    CHECK(Rational::parse(a.to_string()) == a);
  }
  // Polynomial ring laws on a small basis.
  HomPoly x = dx2(), y = dy2();
  HomPoly p = Rational(3) * x + Rational(-2) * y;
  HomPoly q = Rational(1, 2) * x + Rational(5) * y;
  HomPoly r = x - y;
  CHECK(p * (q + r) == p * q + p * r);
  CHECK((p * q) * r == p * (q * r));
  CHECK(p * q == q * p);
}
