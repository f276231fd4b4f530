#pragma once

#include "lbiso/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace lbiso {

/// Named rational parameter assignment for one evaluation point: equilibrium
/// coefficients, relaxation data, the velocity scale "lambda" and time step
/// "dt".
///
/// Relaxation data may be given per moment k either as the rate "sK" or as the
/// Henon parameter "sigmaK" with sigma = 1/s - 1/2; lookups derive the missing
/// form on the fly and setting one form drops a previously stored other form.
class ParamPoint {
 public:
  ParamPoint();

  void set(const std::string& name, const Rational& value);
  bool has(const std::string& name) const;
  /// Throws Error naming the parameter when it is absent and not derivable.
  Rational get(const std::string& name) const;
  std::optional<Rational> find(const std::string& name) const;

  Rational lambda() const { return get("lambda"); }
  Rational dt() const { return get("dt"); }
  Rational dx() const { return lambda() * dt(); }

  Rational s(int k) const;
  Rational sigma(int k) const;
  bool has_rate(int k) const;

  const std::map<std::string, Rational>& values() const { return v_; }

  friend bool operator==(const ParamPoint& a, const ParamPoint& b) { return a.v_ == b.v_; }

 private:
  /// Parses "sigma<k>" or "s<k>"; returns k or nullopt.
  static std::optional<int> rate_index(const std::string& name, bool& is_sigma);

  std::map<std::string, Rational> v_;
};

}  // namespace lbiso
