#pragma once

#include "lbiso/rational.hpp"

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

namespace lbiso {

/// Exponent multi-index over at most four variables; unused slots stay zero.
using Exp = std::array<int, 4>;

inline int exp_total(const Exp& e) { return e[0] + e[1] + e[2] + e[3]; }

/// Homogeneous polynomial with exact rational coefficients in up to four
/// commuting variables.  Used both for constant-coefficient derivative symbols
/// (variables dx, dy, dz) and for moment polynomials (variables X, Y, Z, L
/// where L is the lattice velocity scale).
///
/// Invariants: every stored exponent sums to degree(); zero coefficients are
/// never stored, so the zero polynomial has an empty term map and equality is
/// structural.  Terms are kept in a sorted map, which makes iteration order
/// and all printed output deterministic.
class HomPoly {
 public:
  HomPoly(int nvars, int degree);

  static HomPoly monomial(int nvars, const Exp& e, const Rational& c);
  /// The degree-1 polynomial consisting of a single variable.
  static HomPoly variable(int nvars, int axis);
  static HomPoly constant(int nvars, const Rational& c);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exp, Rational>& terms() const { return terms_; }

  Rational coefficient(const Exp& e) const;
  /// Adds c * x^e into the polynomial; throws if the monomial degree differs.
  void add_term(const Exp& e, const Rational& c);

  HomPoly& operator+=(const HomPoly& o);
  HomPoly& operator-=(const HomPoly& o);
  friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
  friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
  HomPoly operator-() const;

  /// Product; degrees add.
  friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
  friend HomPoly operator*(const Rational& c, HomPoly p);
  HomPoly pow(int n) const;

  friend bool operator==(const HomPoly& a, const HomPoly& b);
  friend bool operator!=(const HomPoly& a, const HomPoly& b) { return !(a == b); }

  /// Substitutes variable a with the linear form sum_b R[a][b] * x_b.
  /// Degree is preserved.  R must be nvars x nvars.
  HomPoly substitute_linear(const std::vector<std::vector<Rational>>& R) const;

  Rational eval(const std::vector<Rational>& x) const;
  std::complex<double> eval(const std::array<std::complex<double>, 4>& x) const;

  /// Deterministic rendering such as "3*dx^2*dy - 1/2*dy^3".
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  int degree_;
  std::map<Exp, Rational> terms_;
};

/// Variable names used for derivative symbols in printed operators.
const std::vector<std::string>& deriv_names(int dim);
/// Variable names used for moment polynomials (velocity components and scale).
const std::vector<std::string>& moment_names(int dim);

}  // namespace lbiso
