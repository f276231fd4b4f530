#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace lbiso;
using testutil::generic_point;

namespace {

Rational factorial(int n) {
  Rational f(1);
  for (int i = 2; i <= n; ++i) f *= Rational(i);
  return f;
}

void compositions(int n, int j, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (j == 0) {
    if (n == 0) out.push_back(cur);
    return;
  }
  for (int first = 1; first <= n - (j - 1); ++first) {
    cur.push_back(first);
    compositions(n - first, j - 1, cur, out);
    cur.pop_back();
  }
}

/// Composition-sum Gamma^j_n computed by direct enumeration of ordered
/// factorizations, independent of the engine's recursion.
OpMatrix gamma_brute(const Expansion& e, int dim, int ncons, int j, int n) {
  OpMatrix g(ncons, ncons, dim, n);
  std::vector<int> cur;
  std::vector<std::vector<int>> comps;
  compositions(n, j, cur, comps);
  for (const auto& c : comps) {
    OpMatrix prod = e.a(c[0]);
    for (std::size_t i = 1; i < c.size(); ++i) prod = prod * e.a(c[i]);
    g += prod;
  }
  return g;
}

/// Checks the defining identity of the expansion against the exact one-step
/// Taylor blocks: for each total order n, the expansion of exp(dt * D) acting
/// on the conserved fields, stacked with the slaved-moment expansion, must
/// reproduce the blocks of the one-step operator applied to the stack.
void check_defining_identity(const Scheme& s, const ParamPoint& p, int order) {
  DerivativeBlocks bl = derivative_blocks(s, p, order);
  Expansion e = expand(s, p, order);
  const int dim = s.d(), N = s.ncons();

  for (int n = 1; n <= order; ++n) {
    // top rows: sum_j (1/j!) Gamma^j_n  ==  A_n + sum_m B_{n-m} beta_m
    OpMatrix lhs(N, N, dim, n);
    for (int j = 1; j <= n; ++j)
      lhs += factorial(j).inverse() * gamma_brute(e, dim, N, j, n);
    OpMatrix rhs = bl.A(n);
    for (int m = 0; m < n && m < static_cast<int>(e.beta.size()); ++m)
      rhs += bl.B(n - m) * e.beta[m];
    INFO(s.name() << " top identity at order " << n);
    CHECK(lhs == rhs);
  }

  for (int n = 1; n + 1 <= order; ++n) {
    // bottom rows: beta_n + sum_j (1/j!) K^j_n  ==  C_n + sum_m D_{n-m} beta_m
    OpMatrix lhs = e.beta[n];
    for (int j = 1; j <= n; ++j) {
      OpMatrix k(s.nslave(), N, dim, n);
      for (int m = 0; m + j <= n; ++m)
        k += e.beta[m] * gamma_brute(e, dim, N, j, n - m);
      lhs += factorial(j).inverse() * k;
    }
    OpMatrix rhs = bl.C(n);
    for (int m = 0; m <= n; ++m) rhs += bl.D(n - m) * e.beta[m];
    INFO(s.name() << " bottom identity at order " << n);
    CHECK(lhs == rhs);
  }
}

}  // namespace

TEST_CASE("order zero block is the one step moment update") {
  const Scheme& s = builtin_scheme("d2q9");
  ParamPoint p = generic_point(s);
  DerivativeBlocks bl = derivative_blocks(s, p, 0);
  CHECK(bl.F[0] == OpMatrix::from_rational(s.j0(p), 2));
}

TEST_CASE("ladder and recurrence agree") {
  for (const auto& name : builtin_scheme_names()) {
    const Scheme& s = builtin_scheme(name);
    ParamPoint p = generic_point(s);
    const int order = s.q() <= 13 ? 4 : 3;
    Expansion a = expand(s, p, order);
    Expansion b = expand_ladder(s, p, order);
    REQUIRE(a.alpha.size() == b.alpha.size());
    REQUIRE(a.beta.size() == b.beta.size());
    for (std::size_t i = 0; i < a.alpha.size(); ++i) {
      INFO(name << " alpha_" << i + 1);
      CHECK(a.alpha[i] == b.alpha[i]);
    }
    for (std::size_t i = 0; i < a.beta.size(); ++i) {
      INFO(name << " beta_" << i);
      CHECK(a.beta[i] == b.beta[i]);
    }
  }
}

TEST_CASE("defining identity holds at generic points") {
  check_defining_identity(builtin_scheme("d2q9"), generic_point(builtin_scheme("d2q9")), 4);
  check_defining_identity(builtin_scheme("d2q13"), generic_point(builtin_scheme("d2q13")), 3);
  check_defining_identity(builtin_scheme("d3q19"), generic_point(builtin_scheme("d3q19")), 3);
  check_defining_identity(builtin_scheme("d3q27"), generic_point(builtin_scheme("d3q27")), 2);
  // scale dependence exercised once on the smallest scheme
  ParamPoint p = generic_point(builtin_scheme("d2q9"));
  p.set("lambda", Rational(3, 2));
  check_defining_identity(builtin_scheme("d2q9"), p, 4);
}

TEST_CASE("mass row of alpha_1 is minus the momentum divergence") {
  for (const auto& name : builtin_scheme_names()) {
    const Scheme& s = builtin_scheme(name);
    Expansion e = expand(s, generic_point(s), 1);
    const OpMatrix& a1 = e.a(1);
    CHECK(a1.at(0, 0).is_zero());
    for (int a = 0; a < s.d(); ++a) {
      INFO(name << " component " << a);
      CHECK(a1.at(0, 1 + a) == -HomPoly::variable(s.d(), a));
    }
  }
}

TEST_CASE("momentum row of alpha_1 carries the sound speed") {
  // For d2q9 the acoustic coefficient is lambda^2 (4 + alpha)/6.
  const Scheme& s = builtin_scheme("d2q9");
  for (const Rational& lambda : {Rational(1), Rational(2)}) {
    ParamPoint p = generic_point(s);
    p.set("lambda", lambda);
    p.set("xx_eq", Rational(0));
    p.set("xy_eq", Rational(0));
    Expansion e = expand(s, p, 1);
    Rational c0sq = lambda * lambda * (Rational(4) + p.get("alpha")) / Rational(6);
    for (int a = 0; a < 2; ++a) {
      HomPoly expect = -c0sq * HomPoly::variable(2, a);
      INFO("lambda = " << lambda << " component " << a);
      CHECK(e.a(1).at(1 + a, 0) == expect);
    }
  }
}

TEST_CASE("expansion does not depend on the time step") {
  const Scheme& s = builtin_scheme("d2q9");
  ParamPoint p1 = generic_point(s);
  ParamPoint p2 = generic_point(s);
  p2.set("dt", Rational(1, 2));
  Expansion e1 = expand(s, p1, 3), e2 = expand(s, p2, 3);
  for (int j = 1; j <= 3; ++j) CHECK(e1.a(j) == e2.a(j));
}

TEST_CASE("alpha entries scale with lambda by row and column grading") {
  const Scheme& s = builtin_scheme("d2q9");
  ParamPoint p1 = generic_point(s);
  ParamPoint p3 = generic_point(s);
  p3.set("lambda", Rational(3));
  Expansion e1 = expand(s, p1, 3), e3 = expand(s, p3, 3);
  // Conserved component degrees: rho 0, momentum 1.
  auto wdeg = [](int i) { return i == 0 ? 0 : 1; };
  for (int j = 1; j <= 3; ++j)
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        Rational f = Rational(3).pow(wdeg(r) - wdeg(c) + j);
        INFO("alpha_" << j << " entry " << r << "," << c);
        CHECK(e3.a(j).at(r, c) == f * e1.a(j).at(r, c));
      }
}

TEST_CASE("expansion rejects bad input") {
  const Scheme& s = builtin_scheme("d2q9");
  CHECK_THROWS_AS(expand(s, generic_point(s), 0), Error);
  CHECK_THROWS_AS(expand_ladder(s, generic_point(s), 5), Error);
  ParamPoint p = generic_point(s);
  p.set("s4", Rational(0));
  CHECK_THROWS_AS(expand(s, p, 1), Error);
}
