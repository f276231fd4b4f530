#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lbiso/builtin_schemes.hpp"

using namespace lbiso;

namespace {

Rational Q(const char* s) { return Rational::parse(s); }

// Inner product of moment rows k and l over the velocity set at lambda = 1.
Rational row_dot(const Scheme& s, const char* a, const char* b) {
  RMatrix m = s.moment_matrix(Rational(1));
  int ka = s.row_index(a), kb = s.row_index(b);
  Rational acc(0);
  for (int j = 0; j < s.q(); ++j) acc += m.at(ka, j) * m.at(kb, j);
  return acc;
}

}  // namespace

TEST_CASE("param point rate derivation") {
  ParamPoint p;
  p.set("sigma4", Q("1/2"));
  CHECK(p.s(4) == Rational(1));
  p.set("s4", Q("1/2"));  // overwrite drops the sigma spelling
  CHECK(p.sigma(4) == Q("3/2"));
  CHECK(p.get("lambda") == Rational(1));
  CHECK_THROWS_AS(p.get("nope"), Error);
  CHECK_THROWS_AS(p.set("lambda", Rational(0)), Error);
}

TEST_CASE("expr parse eval print") {
  ParamPoint p;
  p.set("alpha", Rational(2));
  p.set("sigma4", Q("1/3"));
  Expr e = Expr::parse("(42 + 9*alpha)/9 * lambda^2");
  CHECK(e.eval(p) == Q("20/3"));
  CHECK(Expr::parse(e.to_string()) == e);
  Expr r = Expr::parse("1/(2*sigma4) - 3");
  CHECK(r.eval(p) == Q("-3/2"));
  CHECK(Expr::parse("2 - 3 - 4").eval(p) == Rational(-5));
  CHECK(Expr::parse("2 - (3 - 4)").eval(p) == Rational(3));
  CHECK(Expr::parse("-alpha^2").eval(p) == Rational(-4));
  CHECK(Expr::parse("s4").eval(p) == Q("6/5"));  // derived from sigma4
  CHECK_THROWS_AS(Expr::parse("1 +"), Error);
  CHECK_THROWS_AS(Expr::parse("()"), Error);
  CHECK_THROWS_AS(Expr::parse("1/0"), Error);
}

TEST_CASE("expr round trip of nontrivial formulas") {
  for (const char* text : {
           "(sigma4 - 4*sigma5)/(sigma4 + 2*sigma5)",
           "-(3*alpha + 4)/2",
           "1/(6*sigma4)",
           "sigma5*(6*psi^5 - 24*psi^4 + 100*psi^3 - 267*psi^2 + 506*psi - 364)"
           "/((4*psi - 7)*(3*psi^3 - 22*psi^2 + 23*psi + 14))",
       }) {
    Expr e = Expr::parse(text);
    CHECK(Expr::parse(e.to_string()) == e);
  }
}

TEST_CASE("builtin schemes validate") {
  for (const auto& name : builtin_scheme_names()) {
    const Scheme& s = builtin_scheme(name);
    CHECK(s.q() == static_cast<int>(s.rows().size()));
    CHECK(s.ncons() == s.d() + 1);
    CHECK_NOTHROW(s.moment_matrix(Q("2")).inverse());
  }
  CHECK_THROWS_AS(builtin_scheme("d5q99"), Error);
}

TEST_CASE("d2q9 moment matrix matches the classical integer table") {
  const Scheme& s = builtin_scheme("d2q9");
  RMatrix m = s.moment_matrix(Rational(1));
  // velocity order: rest, 4 axis, 4 diagonal
  const int expect[9][9] = {
      {1, 1, 1, 1, 1, 1, 1, 1, 1},
      {0, 1, 0, -1, 0, 1, -1, -1, 1},
      {0, 0, 1, 0, -1, 1, 1, -1, -1},
      {-4, -1, -1, -1, -1, 2, 2, 2, 2},
      {0, 1, -1, 1, -1, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 1, -1, 1, -1},
      {0, -2, 0, 2, 0, 1, -1, -1, 1},
      {0, 0, -2, 0, 2, 1, 1, -1, -1},
      {4, -2, -2, -2, -2, 1, 1, 1, 1},
  };
  for (int k = 0; k < 9; ++k)
    for (int j = 0; j < 9; ++j) CHECK(m.at(k, j) == Rational(expect[k][j]));
}

TEST_CASE("moment rows scale with lambda by their degree") {
  for (const auto& name : builtin_scheme_names()) {
    const Scheme& s = builtin_scheme(name);
    RMatrix m1 = s.moment_matrix(Rational(1));
    RMatrix m3 = s.moment_matrix(Rational(3));
    for (int k = 0; k < s.q(); ++k) {
      Rational f = Rational(3).pow(s.row(k).degree());
      for (int j = 0; j < s.q(); ++j) CHECK(m3.at(k, j) == f * m1.at(k, j));
    }
  }
}

TEST_CASE("moment ladder orthogonality within symmetry channels") {
  struct Pair {
    const char *scheme, *a, *b;
  };
  const Pair pairs[] = {
      {"d2q9", "eps", "rho"},   {"d2q9", "eps2", "rho"},  {"d2q9", "eps2", "eps"},
      {"d2q9", "qx", "jx"},     {"d2q13", "eps", "rho"},  {"d2q13", "eps2", "rho"},
      {"d2q13", "eps2", "eps"}, {"d2q13", "eps3", "rho"}, {"d2q13", "eps3", "eps"},
      {"d2q13", "eps3", "eps2"}, {"d2q13", "qx", "jx"},   {"d2q13", "rx", "jx"},
      {"d2q13", "rx", "qx"},    {"d2q13", "xxe", "xx"},   {"d3q19", "eps", "rho"},
      {"d3q19", "eps2", "rho"}, {"d3q19", "eps2", "eps"}, {"d3q19", "qx", "jx"},
      {"d3q19", "xxe", "xx"},   {"d3q19", "wwe", "ww"},   {"d3q27", "eps", "rho"},
      {"d3q27", "eps2", "rho"}, {"d3q27", "eps2", "eps"}, {"d3q27", "eps3", "rho"},
      {"d3q27", "eps3", "eps"}, {"d3q27", "eps3", "eps2"}, {"d3q27", "qx", "jx"},
      {"d3q27", "rx", "jx"},    {"d3q27", "rx", "qx"},    {"d3q27", "xxe", "xx"},
      {"d3q27", "xye", "xy"},
  };
  for (const auto& p : pairs) {
    INFO(p.scheme << ": " << p.a << " . " << p.b);
    CHECK(row_dot(builtin_scheme(p.scheme), p.a, p.b) == Rational(0));
  }
}

TEST_CASE("moment values are primitive integers") {
  for (const auto& name : builtin_scheme_names()) {
    const Scheme& s = builtin_scheme(name);
    RMatrix m = s.moment_matrix(Rational(1));
    for (int k = 0; k < s.q(); ++k) {
      mpz_class g = 0;
      for (int j = 0; j < s.q(); ++j) {
        CHECK(m.at(k, j).is_integer());
        mpz_class n = m.at(k, j).numerator();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
      }
      CAPTURE(name);
      CAPTURE(k);
      CHECK(g == 1);
    }
  }
}

TEST_CASE("j0 structure at a sample point") {
  const Scheme& s = builtin_scheme("d2q9");
  ParamPoint p;
  p.set("alpha", Rational(2));
  p.set("q_eq", Q("-1"));
  p.set("eps2_eq", Q("1/3"));
  p.set("xx_eq", Rational(0));
  p.set("xy_eq", Rational(0));
  for (int k = 3; k <= 8; ++k) p.set("s" + std::to_string(k), Q("4/3"));
  RMatrix J = s.j0(p);
  CHECK(J.at(0, 0) == Rational(1));
  CHECK(J.at(1, 1) == Rational(1));
  CHECK(J.at(3, 3) == Q("-1/3"));             // 1 - s
  CHECK(J.at(3, 0) == Q("4/3") * Rational(2));  // s * alpha * lambda^2
  CHECK(J.at(6, 1) == Q("4/3") * Q("-1"));      // s * q_eq
  CHECK(J.at(6, 0) == Rational(0));
  CHECK(J.at(8, 0) == Q("4/3") * Q("1/3"));
}

TEST_CASE("scheme validation rejects bad structure") {
  const Scheme& s = builtin_scheme("d2q9");
  // duplicate velocity
  VelocitySet vel = s.velocities();
  vel.c[1] = vel.c[2];
  CHECK_THROWS_AS(Scheme("bad", vel, s.rows(), s.equilibrium(), s.rate_exprs()), Error);
  // conserved row not the bare component
  auto rows = s.rows();
  rows[1].poly = rows[3].poly;
  CHECK_THROWS_AS(Scheme("bad2", s.velocities(), rows, s.equilibrium(), s.rate_exprs()), Error);
}
