#pragma once

#include "lbiso/params.hpp"
#include "lbiso/rational.hpp"

#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace lbiso {

struct ExprNode;

/// Immutable arithmetic expression over named rational parameters.
///
/// Used for equilibrium coefficients, relaxation rates, condition-set
/// substitutions and reference coefficient formulas.  Operations on constants
/// fold, so to_string/parse round-trips are structural identities.
class Expr {
 public:
  Expr();

  static Expr constant(const Rational& c);
  static Expr constant(long n) { return constant(Rational(n)); }
  static Expr param(const std::string& name);

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  Expr operator-() const;
  Expr pow(int e) const;

  bool is_constant() const;
  /// The constant's value; throws unless is_constant().
  Rational constant_value() const;

  Rational eval(const ParamPoint& p) const;
  std::set<std::string> params() const;

  std::string to_string() const;
  /// Grammar: usual precedence with + - * / ^ and parentheses; atoms are
  /// unsigned integers and identifiers.  Throws Error with position info.
  static Expr parse(std::string_view text);

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

 private:
  explicit Expr(std::shared_ptr<const ExprNode> n) : n_(std::move(n)) {}
  std::shared_ptr<const ExprNode> n_;
};

/// Convenience: lambda^e as an expression.
Expr lambda_pow(int e);

}  // namespace lbiso
