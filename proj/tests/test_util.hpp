#pragma once

#include "lbiso/builtin_schemes.hpp"
#include "lbiso/expansion.hpp"

namespace lbiso::testutil {

/// A fully generic parameter point: every equilibrium hook nonzero, all
/// relaxation parameters distinct.  No isotropy condition holds here.
inline ParamPoint generic_point(const Scheme& s) {
  ParamPoint p;
  p.set("alpha", Rational(2));
  p.set("q_eq", Rational(-2, 3));
  p.set("r_eq", Rational(1, 4));
  p.set("eps2_eq", Rational(1, 2));
  p.set("eps3_eq", Rational(1, 3));
  p.set("xx_eq", Rational(1, 5));
  p.set("xy_eq", Rational(-1, 7));
  p.set("xxe_eq", Rational(2, 7));
  p.set("xye_eq", Rational(-1, 9));
  p.set("t_eq", Rational(1, 11));
  for (int k = s.ncons(); k < s.q(); ++k)
    p.set("sigma" + std::to_string(k), Rational(k + 2, 2 * k + 1));
  return p;
}

}  // namespace lbiso::testutil
