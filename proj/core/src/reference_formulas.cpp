#include "lbiso/conditions.hpp"

// Closed-form coefficient displays, one transcription site.  Every formula is
// kept as a parse string in the variables of the corresponding condition set;
// dx is always spelled (lambda*dt).  Formulas valid only under the stronger
// conditions of a higher order are entered in that order's branch, so each
// branch evaluates correctly on its own family.

namespace lbiso {

namespace {

Rational ev(const ParamPoint& p, std::string_view s) { return Expr::parse(s).eval(p); }

PhysicalCoefficients d2q9_ref(int order, const ParamPoint& p) {
  PhysicalCoefficients c;
  c.d = 2;
  c.c0_sq = ev(p, "lambda^2*(4 + alpha)/6");
  if (order == 2) {
    c.mu = ev(p, "(sigma4*sigma5/(sigma4 + 2*sigma5))*lambda*(lambda*dt)");
    c.zeta = ev(p,
                "sigma3*((2*sigma4 - 2*sigma5 - alpha*sigma4 - 2*alpha*sigma5)"
                "/(6*(sigma4 + 2*sigma5)))*lambda*(lambda*dt)");
  } else if (order >= 3) {
    c.mu = ev(p, "(1/3)*sigma4*lambda*(lambda*dt)");
    c.zeta = ev(p, "-(1/6)*sigma3*alpha*lambda*(lambda*dt)");
    c.xi = ev(p, "(1/72)*(alpha - 2)*(lambda*dt)^2");
    c.chi = ev(p,
               "(1/216)*(alpha + 4)*(2 + 6*alpha*sigma3^2 - alpha - 12*sigma4^2)"
               "*lambda^2*(lambda*dt)^2");
  }
  if (order >= 2) c.gamma = (*c.mu + *c.zeta) / 2;
  if (order == 4) {
    c.eta4 = ev(p, "(sigma4*lambda*(lambda*dt)^3/432)*(alpha + 4)*(alpha - 2)");
    c.mu4 = ev(p, "(sigma4*lambda*(lambda*dt)^3/108)*(12*sigma4^2 - 1)");
    c.zeta4 = ev(p,
                 "(lambda*(lambda*dt)^3/216)*sigma4"
                 "*(12 - alpha - 2*alpha^2 + 12*sigma4^2*(alpha^2 - alpha - 4))");
  }
  return c;
}

PhysicalCoefficients d2q13_ref(int order, const ParamPoint& p) {
  PhysicalCoefficients c;
  c.d = 2;
  c.c0_sq = ev(p, "(lambda^2/26)*(28 + alpha)");
  if (order == 2) {
    c.mu = ev(p, "(lambda*(lambda*dt)/2)*(sigma4*sigma5/(sigma4 + sigma5))*(3 + q_eq)");
    c.zeta = ev(p, "(lambda*(lambda*dt)/26)*sigma3*(11 + 13*q_eq - alpha)");
  } else if (order == 3) {
    c.mu = ev(p, "(1/4)*sigma5*(3 + q_eq)*lambda*(lambda*dt)");
    c.zeta = ev(p, "(1/26)*sigma3*(11 + 13*q_eq - alpha)*lambda*(lambda*dt)");
    c.xi = ev(p, "(1/624)*(2*alpha - 39*q_eq - 61)*(lambda*dt)^2");
    c.chi = ev(p,
               "(1/8112)*(28 + alpha)"
               "*(61 + 39*q_eq + 12*alpha*sigma3^2 - 2*alpha - 78*q_eq*sigma4^2"
               " - 156*q_eq*sigma3^2 - 234*sigma4^2 - 132*sigma3^2)"
               "*lambda^2*(lambda*dt)^2");
  } else if (order == 4) {
    c.mu = ev(p, "(2/5)*sigma4*lambda*(lambda*dt)");
    c.zeta = ev(p, "-(1/130)*sigma3*(36 + 5*alpha)*lambda*(lambda*dt)");
    c.xi = ev(p, "((5*alpha - 16)/1560)*(lambda*dt)^2");
    c.chi = ev(p,
               "(1/20280)*(28 + alpha)"
               "*(16 - 5*alpha + 216*sigma3^2 - 312*sigma4^2 + 30*alpha*sigma3^2)"
               "*lambda^2*(lambda*dt)^2");
    c.eta4 = ev(p,
                "((alpha + 28)/40560)*(36*sigma3 + 5*sigma3*alpha - 52*sigma4)"
                "*lambda*(lambda*dt)^3");
    c.mu4 = ev(p,
               "sigma4*lambda*(lambda*dt)^3/(300*sigma3*(a - 308))"
               "*(4483*sigma4 - 5099*sigma3 - 23*a*sigma4 + 25*a*sigma3"
               " - 14784*sigma3*sigma4^2 + 48*a*sigma3*sigma4^2)");
    c.zeta4 = ev(p,
                 "sigma4*lambda*(lambda*dt)^3/(56581200*sigma3*(89*a - 20680))*("
                 "525433428*a*sigma3*sigma4 + 576972000*alpha^2*sigma3^2"
                 " + 18001526400*alpha*sigma3^3*sigma4 + 18001526400*alpha*sigma3*sigma4^3"
                 " + 65975*a^2*alpha*sigma3*sigma4 + 170558856*a*sigma4^2"
                 " - 334055628*a*sigma3^2 - 858312*a^2*sigma4^2"
                 " - 159243217380*sigma3*sigma4 + 75143778660*sigma3^2"
                 " + 18001526400*alpha*sigma3^2*sigma4^2 - 77472720*a*alpha*sigma3^3*sigma4"
                 " - 77472720*a*alpha*sigma3^2*sigma4^2 - 77472720*a*alpha*sigma3*sigma4^3"
                 " + 504042739200*sigma3*sigma4^3 + 129610990080*sigma3^3*sigma4"
                 " + 129610990080*sigma3^2*sigma4^2 + 858312*a^2*sigma3*sigma4"
                 " + 22940190*a*alpha*sigma3*sigma4 + 17841109925*alpha*sigma3^2"
                 " - 65975*a^2*alpha*sigma4^2 + 13110175*a*alpha*sigma4^2"
                 " - 3461832000*alpha^2*sigma3^4 - 85853433600*alpha*sigma3^4"
                 " - 2483100*a*alpha^2*sigma3^2 - 78263065*a*alpha*sigma3^2"
                 " - 438683351040*sigma3^4 + 369485280*a*alpha*sigma3^4"
                 " + 14898600*a*alpha^2*sigma3^4 + 1887950592*a*sigma3^4"
                 " - 557803584*a*sigma3^2*sigma4^2 - 2169236160*a*sigma3*sigma4^3"
                 " - 557803584*a*sigma3^3*sigma4 - 8032585925*alpha*sigma3*sigma4)");
  }
  if (order >= 2) c.gamma = (*c.mu + *c.zeta) / 2;
  return c;
}

PhysicalCoefficients d3q19_ref(int order, bool variant_b, const ParamPoint& p) {
  PhysicalCoefficients c;
  c.d = 3;
  c.c0_sq = ev(p, "((alpha + 30)/57)*lambda^2");
  if (order == 2) {
    c.mu = ev(p, "(sigma5*sigma7/(sigma5 + 2*sigma7))*lambda*(lambda*dt)");
    c.zeta = ev(p,
                "(lambda*(lambda*dt)/(57*(sigma5 + 2*sigma7)))"
                "*(27*sigma4*sigma5 + 19*sigma5*sigma7 - 22*sigma4*sigma7"
                " - alpha*sigma4*sigma5 - 2*alpha*sigma4*sigma7)");
    c.zeta_b = Rational(3) * *c.zeta - *c.mu;
  } else if (order >= 3) {
    c.mu = ev(p, "(1/3)*sigma5*lambda*(lambda*dt)");
    c.zeta = ev(p, "(lambda*(lambda*dt)/171)*(5*sigma4 + 19*sigma5 - 3*alpha*sigma4)");
    c.zeta_b = ev(p, "(lambda*sigma4*(lambda*dt)/57)*(5 - 3*alpha)");
    c.xi = ev(p, "((lambda*dt)^2/684)*(alpha - 27)");
    if (variant_b) {
      c.chi = ev(p,
                 "(lambda^2*(lambda*dt)^2/(409374*sigma5))"
                 "*(16212*sigma5 + 126*alpha^2*sigma4^2*sigma5 + 3570*alpha*sigma4^2*sigma5"
                 " - 6300*sigma4^2*sigma5 - 21*sigma5*alpha^2 - 234*alpha*sigma5"
                 " + 361*beta*sigma4 + 171*alpha*sigma4 + 798*sigma4"
                 " - 3192*alpha*sigma5^3 - 95760*sigma5^3 - 361*beta*sigma5)");
    } else {
      c.chi = ev(p,
                 "(lambda^2*(lambda*dt)^2/19494)*(alpha + 30)"
                 "*(27 + 6*alpha*sigma4^2 - 10*sigma4^2 - 152*sigma5^2 - alpha)");
    }
  }
  if (order == 4) {
    c.eta4 = ev(p, "((alpha + 30)*(alpha - 27)/38988)*sigma5*lambda*(lambda*dt)^3");
    c.mu4 = ev(p, "((12*sigma5^2 - 1)/108)*sigma5*lambda*(lambda*dt)^3");
    c.zeta4 = ev(p,
                 "(sigma5*lambda*(lambda*dt)^3/38988)"
                 "*(2062 + 45*alpha - 4*alpha^2 - 5304*sigma5^2 - 612*alpha*sigma5^2"
                 " + 24*alpha^2*sigma5^2)");
  }
  return c;
}

PhysicalCoefficients d3q27_ref(int order, bool variant_b, const ParamPoint& p) {
  PhysicalCoefficients c;
  c.d = 3;
  c.c0_sq = ev(p, "((alpha + 2)/3)*lambda^2");
  if (order == 2) {
    c.mu = ev(p, "(sigma5*sigma7/(sigma5 + 2*sigma7))*lambda*(lambda*dt)");
    c.zeta_b = ev(p,
                  "(lambda*sigma4*(lambda*dt)/(sigma5 + 2*sigma7))"
                  "*(sigma5 - 2*sigma7 - alpha*sigma5 - 2*alpha*sigma7)");
  } else if (order >= 3) {
    c.mu = ev(p, "(1/3)*sigma5*lambda*(lambda*dt)");
    c.zeta_b = ev(p, "-(1/3)*sigma4*(1 + 3*alpha)*lambda*(lambda*dt)");
    c.xi = ev(p, "(1/36)*(alpha - 1)*(lambda*dt)^2");
    if (variant_b) {
      c.chi = ev(p,
                 "(1/(162*sigma5))"
                 "*(4*sigma5 + 2*sigma4 + 3*alpha*sigma4 - 6*alpha*sigma5 - 3*alpha^2*sigma5"
                 " + 18*alpha^2*sigma4^2*sigma5 + 42*alpha*sigma4^2*sigma5 + 12*sigma4^2*sigma5"
                 " - 24*alpha*sigma5^3 - 48*sigma5^3 + beta*sigma4 - beta*sigma5)"
                 "*lambda^2*(lambda*dt)^2");
    } else {
      c.chi = ev(p,
                 "(1/54)*(alpha + 2)"
                 "*(1 - alpha + 2*(3*alpha + 1)*sigma4^2 - 8*sigma5^2)"
                 "*lambda^2*(lambda*dt)^2");
    }
  }
  if (order >= 2) c.zeta = (*c.zeta_b + *c.mu) / 3;
  if (order == 4) {
    c.eta4 = ev(p,
                "(sigma5*lambda*(lambda*dt)^3/108)*(alpha + 2)"
                "*(32*alpha - 8 - 13*alpha*psi - 35*psi - 4*alpha*psi^2 + 28*psi^2"
                " + 3*alpha*psi^3 - 3*psi^3)"
                "/(14 + 23*psi - 22*psi^2 + 3*psi^3)");
    c.mu4 = ev(p,
               "(sigma5*lambda*(lambda*dt)^3/108)"
               "*(132*psi*sigma5^2 - psi + 36*psi^2*sigma5^2 + 168*sigma6^2 + 3*psi^2 - 8)"
               "/(3*psi^2 - 11*psi + 14)");
    c.zeta4 = ev(p,
                 "(1/108)*sigma5*lambda*(lambda*dt)^3"
                 "/((4*psi - 7)*(3*psi^2 - 11*psi + 14)*(14 + 23*psi - 22*psi^2 + 3*psi^3)^3)"
                 "*((-526848 - 6082272*psi - 3413088*psi^2 + 29925576*psi^3 - 12827088*psi^4"
                 " - 46884384*psi^5 + 76942908*psi^6 - 56568924*psi^7 + 24275088*psi^8"
                 " - 6400920*psi^9 + 1015308*psi^10 - 88452*psi^11 + 3240*psi^12)"
                 " + alpha*(2458624 + 803992*psi - 16250948*psi^2 + 15057742*psi^3"
                 " + 22678777*psi^4 - 58798343*psi^5 + 56334931*psi^6 - 30298973*psi^7"
                 " + 9787591*psi^8 - 1834629*psi^9 + 169965*psi^10 - 3429*psi^11 - 324*psi^12)"
                 " + alpha^2*(2458624 + 3742816*psi - 12657680*psi^2 - 1230152*psi^3"
                 " + 25708132*psi^4 - 29063324*psi^5 + 13802956*psi^6 - 1316084*psi^7"
                 " - 1805156*psi^8 + 989292*psi^9 - 235980*psi^10 + 27756*psi^11 - 1296*psi^12)"
                 " + sigma5^2*(-13105344 + 100016448*psi - 131926368*psi^2 - 10762392*psi^3"
                 " + 102921792*psi^4 - 287184*psi^5 - 117365232*psi^6 + 116153808*psi^7"
                 " - 56871552*psi^8 + 16213680*psi^9 - 2696976*psi^10 + 236520*psi^11"
                 " - 7776*psi^12)"
                 " + alpha*sigma5^2*(-78989568 + 316283520*psi - 421440000*psi^2"
                 " + 148286280*psi^3 + 151481100*psi^4 - 141331668*psi^5 - 12989436*psi^6"
                 " + 75338436*psi^7 - 48491916*psi^8 + 15619428*psi^9 - 2725812*psi^10"
                 " + 223236*psi^11 - 3888*psi^12)"
                 " + alpha^2*sigma5^2*(-77070336 + 198524928*psi - 187851264*psi^2"
                 " + 44310000*psi^3 + 55400808*psi^4 - 47554008*psi^5 + 8771448*psi^6"
                 " + 5924856*psi^7 - 3520104*psi^8 + 414648*psi^9 + 195048*psi^10"
                 " - 73224*psi^11 + 7776*psi^12))");
  }
  return c;
}

}  // namespace

PhysicalCoefficients reference_coefficients(const ConditionSet& cs, const ParamPoint& p) {
  bool variant_b = !cs.name().empty() && cs.name().back() == 'b';
  if (cs.scheme() == "d2q9") return d2q9_ref(cs.order(), p);
  if (cs.scheme() == "d2q13") return d2q13_ref(cs.order(), p);
  if (cs.scheme() == "d3q19") return d3q19_ref(cs.order(), variant_b, p);
  if (cs.scheme() == "d3q27") return d3q27_ref(cs.order(), variant_b, p);
  throw Error("reference_coefficients: no table for " + cs.name());
}

PhysicalCoefficients reference_coefficients(const std::string& scheme, int order,
                                            const ParamPoint& p) {
  return reference_coefficients(
      condition_set(scheme + ".order" + std::to_string(order)), p);
}

}  // namespace lbiso
