#include "lbiso/builtin_schemes.hpp"
#include "lbiso/conditions.hpp"
#include "lbiso/expansion.hpp"

#include <array>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace lbiso;

namespace {

void survey(int nsamples) {
  for (const auto& name : condition_set_names()) {
    const ConditionSet& cs = condition_set(name);
    const Scheme& s = builtin_scheme(cs.scheme());
    std::cout << "=== " << name << " ===\n";
    try {
      auto pts = sample_points(cs, nsamples);
      auto rep = verify_order(s, cs, pts);
      for (const auto& smp : rep.samples) {
        std::cout << "  sample lambda=" << smp.free_point.lambda().to_string()
                  << " dt=" << smp.free_point.dt().to_string();
        if (smp.first_anisotropic_order != 0) {
          std::cout << "  ANISO@" << smp.first_anisotropic_order << "\n";
          std::cout << "    point:";
          for (const auto& [k, v] : smp.free_point.values())
            std::cout << " " << k << "=" << v.to_string();
          std::cout << "\n    residual:\n" << smp.residual_text << "\n";
        } else {
          std::cout << "  iso";
          bool all = true;
          for (const auto& c : smp.checks) {
            if (!c.equal) {
              all = false;
              std::cout << "\n    MISMATCH " << c.name << " engine=" << c.engine.to_string()
                        << " ref=" << c.reference.to_string();
            }
          }
          if (all) std::cout << "  all " << smp.checks.size() << " coeffs match";
          if (!smp.stability.pass) std::cout << "  STAB-FAIL";
          for (const auto& b : smp.boundary_notes) std::cout << "\n    note: " << b;
          std::cout << "\n";
        }
      }
      std::cout << "  " << rep.control_note << "\n";
      std::cout << "  verified: " << (rep.verified() ? "YES" : "no") << "\n";
    } catch (const Error& e) {
      std::cout << "  ERROR: " << e.what() << "\n";
    }
  }
}

// order-2 dependence on t_eq (d3q19): is t_eq = 0 forced?
void t19() {
  const ConditionSet& cs = condition_set("d3q19.order2");
  const Scheme& s = builtin_scheme("d3q19");
  auto pts = sample_points(cs, 2);
  for (const auto& fp : pts) {
    ParamPoint p = apply_conditions(cs, fp);
    for (const Rational& tv : {Rational(0), Rational(1, 7), Rational(-2, 5)}) {
      p.set("t_eq", tv);
      auto decs = isotropy_ladder(s, p, 2);
      std::cout << "t_eq=" << tv.to_string() << " lambda=" << p.lambda().to_string() << ": ";
      for (int j = 0; j < 2; ++j)
        std::cout << "o" << (j + 1) << (decs[j].isotropic() ? " iso " : " ANISO ");
      std::cout << "\n";
    }
  }
}

// grading probe: multiply a rho-hook equilibrium value by lambda^2 and see
// which convention keeps the stated order isotropic at lambda != 1.
void grading(const std::string& scheme, const std::string& pname, int order) {
  const Scheme& s = builtin_scheme(scheme);
  std::string setname = scheme + ".order" + std::to_string(order);
  const ConditionSet& cs = condition_set(setname);
  auto pts = sample_points(cs, 4);
  for (const auto& fp : pts) {
    if (fp.lambda() == Rational(1)) continue;
    ParamPoint p = apply_conditions(cs, fp);
    Rational printed = p.get(pname);
    auto probe = [&](const char* tag, const Rational& v) {
      p.set(pname, v);
      auto decs = isotropy_ladder(s, p, order);
      int first = 0;
      for (int j = 0; j < order; ++j)
        if (!decs[j].isotropic()) { first = j + 1; break; }
      std::cout << "  " << tag << " lambda=" << p.lambda().to_string() << " " << pname << "="
                << v.to_string() << " -> "
                << (first == 0 ? "iso" : "ANISO@" + std::to_string(first)) << "\n";
    };
    std::cout << setname << ":\n";
    probe("printed ", printed);
    probe("xlam^2  ", printed * fp.lambda() * fp.lambda());
    probe("/lam^2  ", printed / (fp.lambda() * fp.lambda()));
    break;
  }
}

Rational parse_rat(const std::string& t) {
  auto slash = t.find('/');
  if (slash == std::string::npos) return Rational(mpz_class(t));
  return Rational(mpz_class(t.substr(0, slash)), mpz_class(t.substr(slash + 1)));
}

// Lagrange interpolation through (xs[i], ys[i]); monomial coefficients, low first.
std::vector<Rational> interp(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  std::size_t n = xs.size();
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> b = {Rational(1)};
    Rational denom(1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> nb(b.size() + 1, Rational(0));
      for (std::size_t k = 0; k < b.size(); ++k) {
        nb[k + 1] += b[k];
        nb[k] -= xs[j] * b[k];
      }
      b = nb;
      denom *= xs[i] - xs[j];
    }
    for (std::size_t k = 0; k < b.size(); ++k) c[k] += ys[i] * b[k] / denom;
  }
  return c;
}

int poly_degree(const std::vector<Rational>& c) {
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
    if (!c[static_cast<std::size_t>(k)].is_zero()) return k;
  return -1;
}

std::vector<Rational> rational_roots(const std::vector<Rational>& c) {
  int deg = poly_degree(c);
  std::vector<Rational> roots;
  if (deg == 1) {
    roots.push_back(-c[0] / c[1]);
  } else if (deg == 2) {
    Rational disc = c[1] * c[1] - Rational(4) * c[2] * c[0];
    if (disc.sign() >= 0) {
      mpz_class n = disc.numerator(), d = disc.denominator();
      mpz_class sn, sd;
      mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
      mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
      if (sn * sn == n && sd * sd == d) {
        Rational sq(sn, sd);
        roots.push_back((-c[1] + sq) / (Rational(2) * c[2]));
        roots.push_back((-c[1] - sq) / (Rational(2) * c[2]));
      }
    }
  }
  return roots;
}

// Deterministic generic (window-free) base point: free params from a fixed
// list of distinct rationals, then the set's program, no window checks.
ParamPoint manual_base(const ConditionSet& cs, const std::map<std::string, Rational>& over) {
  static const std::vector<Rational> gen = {
      {2, 3},  {5, 7},   {3, 4},  {4, 7},   {5, 6},  {7, 9},   {5, 8},  {7, 10},
      {9, 11}, {8, 9},   {6, 7},  {10, 13}, {7, 8},  {11, 13}, {9, 10}, {12, 13},
      {11, 12}, {13, 14}, {3, 5},  {4, 5},   {7, 11}, {8, 11},  {9, 13}, {10, 11}};
  ParamPoint p;
  p.set("lambda", over.count("lambda") ? over.at("lambda") : Rational(1));
  p.set("dt", over.count("dt") ? over.at("dt") : Rational(1));
  std::size_t gi = 0;
  for (const auto& f : cs.free_params()) {
    p.set(f, over.count(f) ? over.at(f) : gen[gi % gen.size()]);
    ++gi;
  }
  for (const auto& st : cs.program()) p.set(st.param, st.value.eval(p));
  for (const auto& [k, v] : over)
    if (!p.has(k)) p.set(k, v);
  return p;
}

bool rate_like(const std::string& n) {
  return n.rfind("sigma", 0) == 0 || (n.size() > 1 && n[0] == 's' && std::isdigit(n[1]));
}

// sigma = 1/s - 1/2 so that binding in s keeps residual slots polynomial.
void bind_to(ParamPoint& p, const std::vector<std::string>& names, const Rational& x,
             bool srate) {
  for (const auto& n : names)
    p.set(n, srate ? Rational(1) / x - Rational(1, 2) : x);
}

int first_aniso(const Scheme& s, const ParamPoint& p, int maxo) {
  auto decs = isotropy_ladder(s, p, maxo);
  for (int j = 0; j < maxo; ++j)
    if (!decs[j].isotropic()) return j + 1;
  return 0;
}

struct BindSolve {
  int max_degree = -1;  // -1: identically zero; 0: nonzero, independent of x
  std::optional<Rational> root;  // in bind space (s for rates)
  int root_first_aniso = -1;     // ladder status at root up to check_to
  int best_deg = 0;
};

BindSolve solve_binding(const Scheme& sch, const ParamPoint& base,
                        const std::vector<std::string>& names, int target, int check_to,
                        const ParamPoint* base2 = nullptr) {
  bool srate = rate_like(names[0]);
  std::vector<Rational> xs;
  for (int i = 1; i <= 18; ++i) xs.push_back(srate ? Rational(i, 2) : Rational(i - 3));
  auto resid_plain = [&](const ParamPoint& q) {
    auto decs = isotropy_ladder(sch, q, target);
    for (int j = 0; j + 1 < target; ++j)
      if (!decs[j].isotropic())
        throw Error("binding broke order " + std::to_string(j + 1));
    return decs[target - 1].residual;
  };
  // with base2: slots of R(base2) - R(base) — the residual's dependence on a
  // direction that the solution family is supposed to leave free
  auto resid = [&](const Rational& x) {
    ParamPoint q = base;
    bind_to(q, names, x, srate);
    if (!base2) return resid_plain(q);
    ParamPoint q2 = *base2;
    bind_to(q2, names, x, srate);
    return resid_plain(q2) - resid_plain(q);
  };
  std::vector<OpMatrix> rs;
  for (const auto& x : xs) rs.push_back(resid(x));
  std::map<std::array<int, 6>, std::vector<Rational>> slots;
  for (std::size_t t = 0; t < rs.size(); ++t)
    for (int i = 0; i < rs[t].rows(); ++i)
      for (int j = 0; j < rs[t].cols(); ++j)
        for (const auto& [e, coef] : rs[t].at(i, j).terms()) {
          auto& v = slots[{i, j, e[0], e[1], e[2], e[3]}];
          v.resize(xs.size(), Rational(0));
          v[t] = coef;
        }
  BindSolve out;
  std::vector<std::vector<Rational>> fits;
  int best_deg = 1 << 20;
  for (auto& [key, vals] : slots) {
    vals.resize(xs.size(), Rational(0));
    auto c = interp(xs, vals);
    int deg = poly_degree(c);
    out.max_degree = std::max(out.max_degree, deg);
    if (deg >= 1) {
      fits.push_back(c);
      best_deg = std::min(best_deg, deg);
    }
  }
  if (fits.empty()) return out;
  out.best_deg = best_deg;
  std::vector<Rational> cands;
  for (const auto& c : fits) {
    if (poly_degree(c) > 2) continue;
    for (const auto& r : rational_roots(c)) {
      if (srate && r.sign() <= 0) continue;
      bool seen = false;
      for (const auto& c2 : cands) seen = seen || c2 == r;
      if (!seen) cands.push_back(r);
    }
  }
  for (const auto& r : cands) {
    if (resid(r).is_zero()) {
      out.root = r;
      break;
    }
  }
  if (out.root) {
    ParamPoint q = base;
    bind_to(q, names, *out.root, srate);
    out.root_first_aniso = first_aniso(sch, q, check_to);
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  return out;
}

void report_solve(const Scheme& sch, const ParamPoint& base, const std::string& group,
                  int target, int check_to, const ParamPoint* base2 = nullptr,
                  const std::string& diff_tag = {}) {
  auto names = split_commas(group);
  bool srate = rate_like(names[0]);
  std::cout << "  solve [" << group << "] @order " << target
            << (diff_tag.empty() ? "" : " diff(" + diff_tag + ")") << ": ";
  try {
    auto r = solve_binding(sch, base, names, target, check_to, base2);
    if (r.max_degree <= 0) {
      std::cout << (r.max_degree < 0 ? "residual already zero at probes"
                                     : "residual INDEPENDENT of binding")
                << "\n";
      return;
    }
    std::cout << "deg<=" << r.max_degree << " (best slot deg " << r.best_deg << ") ";
    if (!r.root) {
      std::cout << "NO rational root\n";
      return;
    }
    if (srate) {
      Rational sig = Rational(1) / *r.root - Rational(1, 2);
      std::cout << "root s=" << r.root->to_string() << " sigma=" << sig.to_string();
      if (base.has(names[0])) {
        std::cout << " (printed sigma=" << base.get(names[0]).to_string() << ")";
      }
    } else {
      std::cout << "root value=" << r.root->to_string();
      if (base.has(names[0]))
        std::cout << " (printed=" << base.get(names[0]).to_string() << ")";
    }
    std::cout << " -> ladder@root "
              << (r.root_first_aniso == 0 ? "iso to " + std::to_string(check_to)
                                          : "ANISO@" + std::to_string(r.root_first_aniso))
              << "\n";
  } catch (const Error& e) {
    std::cout << "error: " << e.what() << "\n";
  }
}

std::map<std::string, Rational> parse_overrides(int argc, char** argv, int from) {
  std::map<std::string, Rational> over;
  for (int i = from; i < argc; ++i) {
    std::string a = argv[i];
    auto eq = a.find('=');
    if (eq == std::string::npos) continue;
    over[a.substr(0, eq)] = parse_rat(a.substr(eq + 1));
  }
  return over;
}

void probe_mode(const std::string& setname, const std::vector<std::string>& params,
                const std::map<std::string, Rational>& over) {
  const ConditionSet& cs = condition_set(setname);
  const Scheme& sch = builtin_scheme(cs.scheme());
  ParamPoint base = manual_base(cs, over);
  int maxo = std::max(cs.order(), 4);
  std::cout << setname << " baseline: ";
  int fa = first_aniso(sch, base, maxo);
  std::cout << (fa == 0 ? "iso to " + std::to_string(maxo) : "ANISO@" + std::to_string(fa))
            << "\n";
  for (const auto& pn : params) {
    ParamPoint q = base;
    if (!q.has(pn)) {
      std::cout << "  " << pn << ": not in point\n";
      continue;
    }
    q.set(pn, q.get(pn) + Rational(1, 7));
    int f = first_aniso(sch, q, maxo);
    std::cout << "  " << pn << " +1/7: "
              << (f == 0 ? "iso to " + std::to_string(maxo) : "ANISO@" + std::to_string(f))
              << "\n";
  }
}

// d3q19 order-3 closure structure
void x19() {
  const Scheme& sch = builtin_scheme("d3q19");
  {
    std::cout << "--- probes from passing 3b base ---\n";
    probe_mode("d3q19.order3b",
               {"sigma10", "sigma11", "sigma12", "sigma13", "sigma14", "sigma15", "sigma16",
                "sigma17", "sigma18", "eps2_eq", "q_eq", "sigma4"},
               {});
  }
  {
    std::cout << "--- 3a generic base: single-binding solves at order 3 ---\n";
    const ConditionSet& cs = condition_set("d3q19.order3a");
    ParamPoint base = manual_base(cs, {});
    std::cout << "  base sigma5=" << base.get("sigma5").to_string() << "\n";
    report_solve(sch, base, "sigma10,sigma11,sigma12", 3, 4);
    report_solve(sch, base, "sigma10", 3, 4);
    report_solve(sch, base, "sigma16", 3, 4);
    report_solve(sch, base, "sigma17", 3, 4);
    report_solve(sch, base, "sigma18", 3, 4);
    report_solve(sch, base, "sigma13", 3, 4);
    report_solve(sch, base, "sigma14", 3, 4);
    report_solve(sch, base, "eps2_eq", 3, 4);
  }
  {
    std::cout << "--- eps2* on slices (3a generic base) ---\n";
    const ConditionSet& cs = condition_set("d3q19.order3a");
    ParamPoint base = manual_base(cs, {});
    Rational s5 = base.get("sigma5");
    auto eps2_star = [&](ParamPoint b, const std::string& tag) {
      auto r = solve_binding(sch, b, {"eps2_eq"}, 3, 4);
      std::cout << "  " << tag << ": ";
      if (r.max_degree <= 0) {
        std::cout << (r.max_degree < 0 ? "residual zero for all eps2" : "independent of eps2")
                  << "\n";
        return;
      }
      if (!r.root) {
        std::cout << "no rational eps2 root (deg " << r.best_deg << ")\n";
        return;
      }
      std::cout << "eps2* = " << r.root->to_string() << " ladder@root "
                << (r.root_first_aniso == 0 ? "iso" : "ANISO@" + std::to_string(r.root_first_aniso))
                << "\n";
    };
    // uniform slice sigma10=sigma11=sigma12, several values (s-space)
    for (int us = 1; us <= 4; ++us) {
      ParamPoint b = base;
      bind_to(b, {"sigma10", "sigma11", "sigma12"}, Rational(us), true);
      eps2_star(b, "uniform s10..12=" + std::to_string(us));
    }
    // vary s10 alone, s11/s12 at generic base values
    for (int xs10 = 1; xs10 <= 3; ++xs10) {
      ParamPoint b = base;
      bind_to(b, {"sigma10"}, Rational(xs10), true);
      eps2_star(b, "s10=" + std::to_string(xs10) + " (s11,s12 generic)");
    }
    // does sigma16 matter on the uniform slice away from the 3b point?
    {
      ParamPoint b = base;
      bind_to(b, {"sigma10", "sigma11", "sigma12"}, Rational(1), true);
      b.set("eps2_eq", Rational(16, 3));
      std::cout << "  on uniform slice s=1, eps2=16/3:\n  ";
      report_solve(sch, b, "sigma16", 3, 4);
    }
    // u-binding with t-pins at 3b values and printed eps2
    {
      ParamPoint b = base;
      b.set("sigma16", Rational(1) / (Rational(8) * s5));
      b.set("sigma17", Rational(1) / (Rational(4) * s5));
      b.set("sigma18", Rational(1) / (Rational(12) * s5));
      std::cout << "  u-solve with 3b t-pins, printed eps2:\n  ";
      report_solve(sch, b, "sigma10,sigma11,sigma12", 3, 4);
    }
  }
  {
    std::cout << "--- 3a second base (different alpha, sigma4, sigma5) ---\n";
    const ConditionSet& cs = condition_set("d3q19.order3a");
    ParamPoint base = manual_base(
        cs, {{"alpha", Rational(-3, 5)}, {"sigma4", Rational(9, 5)}, {"sigma5", Rational(6, 7)}});
    ParamPoint b = base;
    bind_to(b, {"sigma10", "sigma11", "sigma12"}, Rational(2), true);
    auto r = solve_binding(sch, b, {"eps2_eq"}, 3, 4);
    std::cout << "  uniform s=2, eps2* = " << (r.root ? r.root->to_string() : "none")
              << "  printed=" << base.get("eps2_eq").to_string() << "\n";
  }
}

// d3q19 order-4: find what closes orders 3 and 4
void x19o4() {
  const Scheme& sch = builtin_scheme("d3q19");
  const ConditionSet& cs = condition_set("d3q19.order4");
  ParamPoint base = manual_base(cs, {});
  Rational alpha = base.get("alpha"), s5 = base.get("sigma5");
  Rational eps2_true = -(Rational(42) + Rational(9) * alpha) / Rational(19);
  std::cout << "base sigma5=" << s5.to_string() << " alpha=" << alpha.to_string()
            << " printed eps2=" << base.get("eps2_eq").to_string()
            << " corrected eps2=" << eps2_true.to_string() << "\n";
  std::cout << "baseline: first aniso = " << first_aniso(sch, base, 4) << "\n";
  {
    ParamPoint b = base;
    b.set("eps2_eq", eps2_true);
    std::cout << "(a) eps2 corrected only: first aniso = " << first_aniso(sch, b, 4) << "\n";
  }
  {
    ParamPoint b = base;
    bind_to(b, {"sigma10", "sigma11", "sigma12"}, Rational(1) / (Rational(12) * s5), false);
    std::cout << "(b) sigma10..12 = 1/(12 sigma5) only: first aniso = "
              << first_aniso(sch, b, 4) << "\n";
  }
  {
    ParamPoint b = base;
    b.set("eps2_eq", eps2_true);
    bind_to(b, {"sigma10", "sigma11", "sigma12"}, Rational(1) / (Rational(12) * s5), false);
    std::cout << "(c) both: first aniso = " << first_aniso(sch, b, 4) << "\n";
  }
  // stage 2: from the eps2-corrected point, which remaining pins does order 4 need?
  ParamPoint b2 = base;
  b2.set("eps2_eq", eps2_true);
  if (first_aniso(sch, b2, 4) == 4) {
    report_solve(sch, b2, "sigma16,sigma17,sigma18", 4, 4);
    report_solve(sch, b2, "sigma13,sigma14,sigma15", 4, 4);
    report_solve(sch, b2, "sigma10,sigma11,sigma12", 4, 4);
  }
}

// d2q13 order-4: locate the wrong pin
void x13() {
  const Scheme& sch = builtin_scheme("d2q13");
  const ConditionSet& cs = condition_set("d2q13.order4");
  ParamPoint base = manual_base(cs, {});
  std::cout << "base sigma3=" << base.get("sigma3").to_string()
            << " sigma4=" << base.get("sigma4").to_string() << " a=" << base.get("a").to_string()
            << " alpha=" << base.get("alpha").to_string() << "\n";
  std::cout << "baseline: first aniso = " << first_aniso(sch, base, 4) << "\n";
  report_solve(sch, base, "sigma6,sigma7", 4, 4);
  report_solve(sch, base, "sigma8,sigma9", 4, 4);
  report_solve(sch, base, "sigma10", 4, 4);
  report_solve(sch, base, "sigma11", 4, 4);
  report_solve(sch, base, "sigma12", 4, 4);
  report_solve(sch, base, "eps2_eq", 4, 4);
  report_solve(sch, base, "eps3_eq", 4, 4);
  report_solve(sch, base, "r_eq", 4, 4);
  Rational s4 = base.get("sigma4");
  ParamPoint b2 = base;
  bind_to(b2, {"sigma6", "sigma7"}, Rational(1) / (Rational(6) * s4), false);
  std::cout << "with sigma6=sigma7=1/(6 sigma4): first aniso = " << first_aniso(sch, b2, 4)
            << "\n";
  {
    ParamPoint b = manual_base(cs, {{"sigma3", Rational(4, 7)}, {"sigma4", Rational(4, 7)}});
    std::cout << "with sigma3=sigma4: first aniso = " << first_aniso(sch, b, 4) << "\n";
  }
  std::cout << "--- difference systems: dependence on the free params must cancel ---\n";
  for (const std::string& dp : {"sigma12", "sigma3", "a", "alpha"}) {
    std::map<std::string, Rational> over2;
    over2[dp] = manual_base(cs, {}).get(dp) + Rational(1);
    ParamPoint base2 = manual_base(cs, over2);
    report_solve(sch, base, "sigma6,sigma7", 4, 4, &base2, dp);
    report_solve(sch, base, "sigma8,sigma9", 4, 4, &base2, dp);
    report_solve(sch, base, "sigma10", 4, 4, &base2, dp);
    report_solve(sch, base, "sigma11", 4, 4, &base2, dp);
  }
}

// d3q27 order-4: spare dependence + per-psi sigma16 solve + numerator fit
void x27(const Rational& alpha, const Rational& sigma5) {
  const Scheme& sch = builtin_scheme("d3q27");
  const ConditionSet& cs = condition_set("d3q27.order4");
  {
    ParamPoint base = manual_base(cs, {{"psi", Rational(1, 2)},
                                       {"alpha", alpha},
                                       {"sigma5", sigma5}});
    std::cout << "spare dependence at psi=1/2 (alpha=" << alpha.to_string()
              << " sigma5=" << sigma5.to_string() << "), baseline aniso@"
              << first_aniso(sch, base, 4) << "\n";
    report_solve(sch, base, "sigma13,sigma14,sigma15", 4, 4);
    report_solve(sch, base, "sigma17", 4, 4);
    report_solve(sch, base, "sigma20,sigma21,sigma22", 4, 4);
    report_solve(sch, base, "eps3_eq", 4, 4);
    report_solve(sch, base, "sigma16", 4, 4);
  }
  std::vector<Rational> psis = {{1, 4}, {1, 3}, {1, 2}, {2, 3}, {3, 4},
                                {1},    {9, 8}, {5, 4}, {11, 8}, {7, 5}};
  std::vector<Rational> xs, ys;
  for (const auto& psi : psis) {
    ParamPoint base = manual_base(cs, {{"psi", psi}, {"alpha", alpha}, {"sigma5", sigma5}});
    auto r = solve_binding(sch, base, {"sigma16"}, 4, 4);
    std::cout << "psi=" << psi.to_string() << ": ";
    if (!r.root) {
      std::cout << "no root (maxdeg " << r.max_degree << ")\n";
      continue;
    }
    Rational sig = Rational(1) / *r.root - Rational(1, 2);
    std::cout << "sigma16=" << sig.to_string()
              << " printed=" << base.get("sigma16").to_string()
              << (sig == base.get("sigma16") ? " (match)" : " (DIFFERS)") << " ladder@root "
              << (r.root_first_aniso == 0 ? "iso" : "ANISO") << "\n";
    Rational den = (Rational(4) * psi - Rational(7)) *
                   (Rational(3) * psi * psi * psi - Rational(22) * psi * psi +
                    Rational(23) * psi + Rational(14));
    xs.push_back(psi);
    ys.push_back(sig * den / sigma5);
  }
  if (xs.size() >= 7) {
    auto c = interp(xs, ys);
    std::cout << "numerator poly coeffs (psi^0 up):";
    for (const auto& ck : c) std::cout << " " << ck.to_string();
    std::cout << "\n";
  }
}

mpz_class rfloor(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
  return q;
}

// simplest rational in the open interval (lo, hi); requires 0 <= lo < hi
Rational simplest_pos(const Rational& lo, const Rational& hi) {
  mpz_class a = rfloor(lo);
  Rational fa(a);
  if (fa + Rational(1) < hi) return fa + Rational(1);
  if (lo == fa) {
    mpz_class n = rfloor(Rational(1) / (hi - fa)) + 1;
    return fa + Rational(1) / Rational(n);
  }
  return fa + Rational(1) / simplest_pos(Rational(1) / (hi - fa), Rational(1) / (lo - fa));
}

Rational peval(const std::vector<Rational>& c, const Rational& x) {
  Rational acc(0);
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
    acc = acc * x + c[static_cast<std::size_t>(k)];
  return acc;
}

// rational roots of c on (0, hi_int) via sign-change bisection + continued
// fraction reconstruction; irrational roots are skipped
std::vector<Rational> poly_roots_pos(const std::vector<Rational>& c, int hi_int) {
  std::vector<Rational> roots;
  int grid = hi_int * 8;
  Rational prev_x(1, 8);
  Rational prev_f = peval(c, prev_x);
  if (prev_f.is_zero()) roots.push_back(prev_x);
  for (int i = 2; i <= grid; ++i) {
    Rational x(i, 8);
    Rational f = peval(c, x);
    if (f.is_zero()) {
      roots.push_back(x);
    } else if (!prev_f.is_zero() && f.sign() != prev_f.sign()) {
      Rational lo = prev_x, hi = x, flo = prev_f;
      bool found = false;
      for (int round = 0; round < 15 && !found; ++round) {
        for (int it = 0; it < 20; ++it) {
          Rational mid = (lo + hi) / 2;
          Rational fm = peval(c, mid);
          if (fm.is_zero()) {
            roots.push_back(mid);
            found = true;
            break;
          }
          if (fm.sign() == flo.sign()) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        if (found) break;
        Rational cand = simplest_pos(lo, hi);
        if (peval(c, cand).is_zero()) {
          roots.push_back(cand);
          found = true;
        }
      }
    }
    prev_x = x;
    prev_f = f;
  }
  return roots;
}

// 1D exact solve of the order-4 residual for one knob (others at printed
// values): per-slot fits after s^24 premultiplication, root histogram, and
// full verification of any common root.  Returns the verified bind-space root.
std::optional<Rational> histo_solve(const Scheme& sch, const ParamPoint& base,
                                    const std::vector<std::string>& names, int npts,
                                    bool quiet = false) {
  bool srate = rate_like(names[0]);
  std::vector<Rational> xs;
  for (int i = 1; i <= npts; ++i) xs.push_back(srate ? Rational(i, 2) : Rational(i - 3));
  std::vector<OpMatrix> rs;
  for (const auto& x : xs) {
    ParamPoint q = base;
    bind_to(q, names, x, srate);
    auto decs = isotropy_ladder(sch, q, 4);
    for (int j = 0; j + 1 < 4; ++j)
      if (!decs[j].isotropic()) {
        std::cout << "binding broke order " << j + 1 << "\n";
        return std::nullopt;
      }
    rs.push_back(decs[3].residual);
  }
  std::map<std::array<int, 6>, std::vector<Rational>> slots;
  for (std::size_t t = 0; t < rs.size(); ++t)
    for (int i = 0; i < rs[t].rows(); ++i)
      for (int j = 0; j < rs[t].cols(); ++j)
        for (const auto& [e, coef] : rs[t].at(i, j).terms()) {
          auto& v = slots[{i, j, e[0], e[1], e[2], e[3]}];
          v.resize(xs.size(), Rational(0));
          v[t] = coef;
        }
  std::vector<std::vector<Rational>> fits;
  int best_deg = 1 << 20, max_deg = -1;
  bool capped = false;
  for (auto& [key, vals] : slots) {
    vals.resize(xs.size(), Rational(0));
    if (srate)
      for (std::size_t t = 0; t < vals.size(); ++t) {
        Rational xp(1);
        for (int e = 0; e < 24; ++e) xp *= xs[t];
        vals[t] *= xp;
      }
    auto c = interp(xs, vals);
    int deg = poly_degree(c);
    max_deg = std::max(max_deg, deg);
    if (deg > npts - 3) capped = true;
    if (deg >= 1) {
      best_deg = std::min(best_deg, deg);
      fits.push_back(c);
    }
  }
  if (fits.empty()) {
    std::cout << "independent\n";
    return std::nullopt;
  }
  if (capped) {
    std::cout << "fit capped (max deg " << max_deg << " from " << npts << " points)\n";
    return std::nullopt;
  }
  std::cout << "degs " << best_deg << ".." << max_deg << ", " << fits.size() << " slots; ";
  std::map<std::string, int> hist;
  std::vector<Rational> distinct;
  for (const auto& c : fits) {
    int d = poly_degree(c);
    int low = 0;
    while (low < d && c[static_cast<std::size_t>(low)].is_zero()) ++low;
    std::vector<Rational> defl(c.begin() + low, c.end());
    auto rr = poly_degree(defl) <= 2 ? rational_roots(defl) : poly_roots_pos(defl, 24);
    for (const auto& r : rr)
      if (++hist[r.to_string()] == 1) distinct.push_back(r);
  }
  if (!quiet)
    for (const auto& [k, n] : hist) std::cout << k << " x" << n << "  ";
  for (const auto& s : distinct) {
    if (srate && s.sign() <= 0) continue;
    ParamPoint q = base;
    bind_to(q, names, s, srate);
    auto decs = isotropy_ladder(sch, q, 4);
    bool iso = true;
    for (int j = 0; j < 4; ++j) iso = iso && decs[j].isotropic();
    if (!iso) continue;
    Rational v = srate ? Rational(1) / s - Rational(1, 2) : s;
    std::cout << "VERIFIED " << names[0] << "=" << v.to_string()
              << " printed=" << base.get(names[0]).to_string()
              << (v == base.get(names[0]) ? " (match)" : " (DIFFERS)") << "\n";
    return s;
  }
  std::cout << "none verified\n";
  return std::nullopt;
}

// order-4 residual as aligned slot vectors over a list of points
std::vector<std::vector<Rational>> slot_table(const Scheme& sch,
                                              const std::vector<ParamPoint>& pts) {
  std::vector<OpMatrix> rs;
  for (const auto& q : pts) {
    auto decs = isotropy_ladder(sch, q, 4);
    for (int j = 0; j + 1 < 4; ++j)
      if (!decs[j].isotropic()) throw Error("point broke order " + std::to_string(j + 1));
    rs.push_back(decs[3].residual);
  }
  std::map<std::array<int, 6>, std::vector<Rational>> slots;
  for (std::size_t t = 0; t < rs.size(); ++t)
    for (int i = 0; i < rs[t].rows(); ++i)
      for (int j = 0; j < rs[t].cols(); ++j)
        for (const auto& [e, coef] : rs[t].at(i, j).terms()) {
          auto& v = slots[{i, j, e[0], e[1], e[2], e[3]}];
          v.resize(pts.size(), Rational(0));
          v[t] = coef;
        }
  std::vector<std::vector<Rational>> out;
  for (auto& [k, v] : slots) {
    v.resize(pts.size(), Rational(0));
    out.push_back(v);
  }
  return out;
}

struct Bilinear {  // c00 + c10 x + c01 y + c11 x y
  Rational c00, c10, c01, c11;
  bool trivial() const {
    return c00.is_zero() && c10.is_zero() && c01.is_zero() && c11.is_zero();
  }
  Rational at(const Rational& x, const Rational& y) const {
    return c00 + c10 * x + c01 * y + c11 * x * y;
  }
};

// joint 2D solve of the order-4 residual for knob groups A and B bound in
// sigma/value space; reports every exactly verified common zero
void pair_solve(const Scheme& sch, const ParamPoint& base,
                const std::vector<std::string>& A, const std::vector<std::string>& B,
                std::vector<std::pair<Rational, Rational>>* found = nullptr) {
  Rational pa = base.get(A[0]), pb = base.get(B[0]);
  std::vector<Rational> xs = {pa, pa + Rational(1, 4), pa - Rational(1, 3)};
  std::vector<Rational> ys = {pb, pb + Rational(1, 4), pb - Rational(1, 3)};
  std::vector<ParamPoint> pts;
  for (const auto& x : xs)
    for (const auto& y : ys) {
      ParamPoint q = base;
      bind_to(q, A, x, false);
      bind_to(q, B, y, false);
      pts.push_back(q);
    }
  std::vector<std::vector<Rational>> tab;
  try {
    tab = slot_table(sch, pts);
  } catch (const Error& e) {
    std::cout << "lower order broke: " << e.what() << "\n";
    return;
  }
  std::vector<Bilinear> eqs;
  bool nonbilinear = false;
  for (const auto& v : tab) {
    // tensor Lagrange on the 3x3 grid, then demand degree <= 1 per axis
    std::vector<std::vector<Rational>> cy(3);  // per x-node: poly in y
    for (int i = 0; i < 3; ++i)
      cy[i] = interp(ys, {v[3 * i], v[3 * i + 1], v[3 * i + 2]});
    Bilinear bl;
    for (int k = 0; k < 3; ++k) {
      auto cx = interp(xs, {cy[0].size() > static_cast<std::size_t>(k) ? cy[0][k] : Rational(0),
                            cy[1].size() > static_cast<std::size_t>(k) ? cy[1][k] : Rational(0),
                            cy[2].size() > static_cast<std::size_t>(k) ? cy[2][k] : Rational(0)});
      cx.resize(3, Rational(0));
      if (k == 0) {
        bl.c00 = cx[0];
        bl.c10 = cx[1];
      } else if (k == 1) {
        bl.c01 = cx[0];
        bl.c11 = cx[1];
      }
      if (!cx[2].is_zero() || (k == 2 && !(cx[0].is_zero() && cx[1].is_zero())))
        nonbilinear = true;
    }
    if (nonbilinear) break;
    if (!bl.trivial()) eqs.push_back(bl);
  }
  if (nonbilinear) {
    std::cout << "NOT bilinear on the grid\n";
    return;
  }
  if (eqs.empty()) {
    std::cout << "residual vanishes on the whole grid?!\n";
    return;
  }
  // dedupe proportional equations
  std::vector<Bilinear> uniq;
  for (const auto& e : eqs) {
    bool dup = false;
    for (const auto& u : uniq) {
      // proportional iff all 2x2 minors of the coefficient vectors vanish
      bool prop = (e.c00 * u.c10 - e.c10 * u.c00).is_zero() &&
                  (e.c00 * u.c01 - e.c01 * u.c00).is_zero() &&
                  (e.c00 * u.c11 - e.c11 * u.c00).is_zero() &&
                  (e.c10 * u.c01 - e.c01 * u.c10).is_zero() &&
                  (e.c10 * u.c11 - e.c11 * u.c10).is_zero() &&
                  (e.c01 * u.c11 - e.c11 * u.c01).is_zero();
      if (prop) {
        dup = true;
        break;
      }
    }
    if (!dup) uniq.push_back(e);
  }
  std::cout << eqs.size() << " slots, " << uniq.size() << " distinct; ";
  // candidates from resultants of equation pairs
  std::vector<std::pair<Rational, Rational>> cands;
  auto add_cand = [&](const Rational& x, const Rational& y) {
    for (const auto& c : cands)
      if (c.first == x && c.second == y) return;
    cands.push_back({x, y});
  };
  for (std::size_t i = 0; i < uniq.size(); ++i)
    for (std::size_t j = i + 1; j < uniq.size(); ++j) {
      const auto& e1 = uniq[i];
      const auto& e2 = uniq[j];
      // eliminate y: (e1.c00 + e1.c10 x)(e2.c01 + e2.c11 x) = (e1.c01 + e1.c11 x)(e2.c00 + e2.c10 x)
      std::vector<Rational> q = {e1.c00 * e2.c01 - e1.c01 * e2.c00,
                                 e1.c00 * e2.c11 + e1.c10 * e2.c01 - e1.c01 * e2.c10 -
                                     e1.c11 * e2.c00,
                                 e1.c10 * e2.c11 - e1.c11 * e2.c10};
      for (const auto& x : rational_roots(q)) {
        Rational dy = e1.c01 + e1.c11 * x;
        if (!dy.is_zero()) {
          add_cand(x, -(e1.c00 + e1.c10 * x) / dy);
          continue;
        }
        Rational dy2 = e2.c01 + e2.c11 * x;
        if (!dy2.is_zero()) add_cand(x, -(e2.c00 + e2.c10 * x) / dy2);
      }
    }
  int shown = 0;
  for (const auto& [x, y] : cands) {
    bool all = true;
    for (const auto& e : uniq) all = all && e.at(x, y).is_zero();
    if (!all) continue;
    ParamPoint q = base;
    bind_to(q, A, x, false);
    bind_to(q, B, y, false);
    auto decs = isotropy_ladder(sch, q, 4);
    bool iso = true;
    for (int j = 0; j < 4; ++j) iso = iso && decs[j].isotropic();
    std::cout << "[" << A[0] << "=" << x.to_string() << " " << B[0] << "=" << y.to_string()
              << (iso ? " LADDER-VERIFIED" : " (fits only)") << "] ";
    ++shown;
    if (iso && found) found->push_back({x, y});
  }
  if (!shown) std::cout << "no common zero";
  std::cout << "\n";
}

// which single printed pin, when freed, closes fourth order?
void x27k(const Rational& psi, const Rational& alpha, const Rational& sigma5, int npts) {
  const Scheme& sch = builtin_scheme("d3q27");
  const ConditionSet& cs = condition_set("d3q27.order4");
  ParamPoint base = manual_base(cs, {{"psi", psi}, {"alpha", alpha}, {"sigma5", sigma5}});
  std::vector<std::vector<std::string>> knobs = {
      {"sigma4"},  {"sigma10", "sigma11", "sigma12"},  {"sigma16"},
      {"sigma23", "sigma24", "sigma25"},  {"sigma26"},  {"r_eq"}};
  for (const auto& k : knobs) {
    std::cout << "free [" << k[0] << (k.size() > 1 ? "..x" + std::to_string(k.size()) : "")
              << "]: " << std::flush;
    histo_solve(sch, base, k, npts);
  }
}

// psi sweep of the joint (sigma16, sigma26) solve + numerator reconstruction
void x27q(const Rational& alpha, const Rational& sigma5) {
  const Scheme& sch = builtin_scheme("d3q27");
  const ConditionSet& cs = condition_set("d3q27.order4");
  std::vector<Rational> psis = {{1, 4}, {1, 3}, {1, 2},  {2, 3}, {3, 4}, {1},
                                {9, 8}, {5, 4}, {11, 8}, {7, 5}, {3, 2}, {2}};
  std::vector<Rational> xs, n16, n26;
  for (const auto& psi : psis) {
    ParamPoint base = manual_base(cs, {{"psi", psi}, {"alpha", alpha}, {"sigma5", sigma5}});
    std::cout << "psi=" << psi.to_string() << ": " << std::flush;
    std::vector<std::pair<Rational, Rational>> found;
    pair_solve(sch, base, {"sigma16"}, {"sigma26"}, &found);
    if (found.size() != 1) continue;
    Rational d16 = (Rational(4) * psi - Rational(7)) *
                   (Rational(3) * psi * psi * psi - Rational(22) * psi * psi +
                    Rational(23) * psi + Rational(14));
    Rational d26 = Rational(3) * psi * psi - Rational(11) * psi + Rational(14);
    xs.push_back(psi);
    n16.push_back(found[0].first * d16 / sigma5);
    n26.push_back(found[0].second * Rational(18) * sigma5 * d26);
  }
  if (xs.size() >= 7) {
    auto c16 = interp(xs, n16);
    auto c26 = interp(xs, n26);
    std::cout << "N16 coeffs (psi^0 up):";
    for (const auto& c : c16) std::cout << " " << c.to_string();
    std::cout << "\n  N16(3/2) = " << peval(c16, Rational(3, 2)).to_string() << "\n";
    std::cout << "N26 coeffs (psi^0 up):";
    for (const auto& c : c26) std::cout << " " << c.to_string();
    std::cout << "\n  N26(1) = " << peval(c26, Rational(1)).to_string() << "\n";
  }
}

// (alpha, sigma5) structure of the joint solve at fixed psi
void x27a(const Rational& psi) {
  const Scheme& sch = builtin_scheme("d3q27");
  const ConditionSet& cs = condition_set("d3q27.order4");
  std::vector<std::pair<Rational, Rational>> bases = {
      {{1, 3}, {5, 7}}, {{-2, 5}, {6, 5}}, {{1, 3}, {6, 5}}, {{-2, 5}, {5, 7}},
      {{0}, {1}},       {{1}, {1}},        {{2}, {1}},        {{5}, {1}},
      {{0}, {1, 2}},    {{0}, {2}},        {{-1}, {1}},       {{3}, {1}}};
  for (const auto& [alpha, sigma5] : bases) {
    ParamPoint base = manual_base(cs, {{"psi", psi}, {"alpha", alpha}, {"sigma5", sigma5}});
    std::cout << "alpha=" << alpha.to_string() << " sigma5=" << sigma5.to_string() << ": "
              << std::flush;
    std::vector<std::pair<Rational, Rational>> found;
    pair_solve(sch, base, {"sigma16"}, {"sigma26"}, &found);
    if (found.size() == 1) {
      std::cout << "    sigma16/sigma5=" << (found[0].first / sigma5).to_string()
                << "  sigma26*sigma5=" << (found[0].second * sigma5).to_string() << "\n";
    }
  }
}

// pairwise joint solves over every knob/spare pair
void x27p(const Rational& psi, const Rational& alpha, const Rational& sigma5) {
  const Scheme& sch = builtin_scheme("d3q27");
  const ConditionSet& cs = condition_set("d3q27.order4");
  ParamPoint base = manual_base(cs, {{"psi", psi}, {"alpha", alpha}, {"sigma5", sigma5}});
  std::vector<std::vector<std::string>> groups = {
      {"sigma4"},  {"sigma10", "sigma11", "sigma12"},  {"sigma16"},
      {"sigma23", "sigma24", "sigma25"},  {"sigma26"},  {"r_eq"},
      {"sigma13", "sigma14", "sigma15"},  {"sigma17"},  {"sigma20", "sigma21", "sigma22"}};
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      std::cout << groups[i][0] << " x " << groups[j][0] << ": " << std::flush;
      pair_solve(sch, base, groups[i], groups[j]);
    }
}

// per-psi exact solve for the sigma16 closing fourth order, with enough probe
// points to validate the slot fits, then numerator reconstruction
void x27c(const Rational& alpha, const Rational& sigma5, int npts) {
  const Scheme& sch = builtin_scheme("d3q27");
  const ConditionSet& cs = condition_set("d3q27.order4");
  std::vector<Rational> psis = {{1, 4}, {1, 3}, {1, 2},  {2, 3}, {3, 4}, {1},
                                {9, 8}, {5, 4}, {11, 8}, {7, 5}, {3, 2}, {2}};
  std::vector<Rational> xs2, ys2;
  for (const auto& psi : psis) {
    ParamPoint base = manual_base(cs, {{"psi", psi}, {"alpha", alpha}, {"sigma5", sigma5}});
    std::cout << "psi=" << psi.to_string() << ": " << std::flush;
    std::vector<Rational> xs;
    for (int i = 1; i <= npts; ++i) xs.push_back(Rational(i, 2));
    std::vector<OpMatrix> rs;
    bool broke = false;
    for (const auto& x : xs) {
      ParamPoint q = base;
      bind_to(q, {"sigma16"}, x, true);
      auto decs = isotropy_ladder(sch, q, 4);
      for (int j = 0; j + 1 < 4; ++j)
        if (!decs[j].isotropic()) broke = true;
      if (broke) break;
      rs.push_back(decs[3].residual);
    }
    if (broke) {
      std::cout << "binding broke a lower order\n";
      continue;
    }
    std::map<std::array<int, 6>, std::vector<Rational>> slots;
    for (std::size_t t = 0; t < rs.size(); ++t)
      for (int i = 0; i < rs[t].rows(); ++i)
        for (int j = 0; j < rs[t].cols(); ++j)
          for (const auto& [e, coef] : rs[t].at(i, j).terms()) {
            auto& v = slots[{i, j, e[0], e[1], e[2], e[3]}];
            v.resize(xs.size(), Rational(0));
            v[t] = coef;
          }
    std::vector<std::vector<Rational>> fits;
    int best_deg = 1 << 20, max_deg = -1;
    bool capped = false;
    for (auto& [key, vals] : slots) {
      vals.resize(xs.size(), Rational(0));
      // slot values are rational in s with denominator a power of s (finite at
      // every probe, including s = 1 and s = 2): premultiply by s^24 to fit a
      // polynomial; extra factors of s are stripped with the deflation below
      for (std::size_t t = 0; t < vals.size(); ++t) {
        Rational xp(1);
        for (int e = 0; e < 24; ++e) xp *= xs[t];
        vals[t] *= xp;
      }
      auto c = interp(xs, vals);
      int deg = poly_degree(c);
      max_deg = std::max(max_deg, deg);
      if (deg > npts - 3) capped = true;
      if (deg >= 1) {
        best_deg = std::min(best_deg, deg);
        fits.push_back(c);
      }
    }
    if (fits.empty()) {
      std::cout << "residual independent of sigma16\n";
      continue;
    }
    if (capped) {
      std::cout << "fit capped (max deg " << max_deg << " from " << npts << " points)\n";
      continue;
    }
    std::cout << "slot degs " << best_deg << ".." << max_deg << ", " << fits.size()
              << " dependent slots; roots: " << std::flush;
    std::map<std::string, int> hist;
    std::vector<Rational> distinct;
    for (const auto& c : fits) {
      int d = poly_degree(c);
      int low = 0;
      while (low < d && c[static_cast<std::size_t>(low)].is_zero()) ++low;
      std::vector<Rational> defl(c.begin() + low, c.end());
      auto rr = poly_degree(defl) <= 2 ? rational_roots(defl) : poly_roots_pos(defl, 24);
      for (const auto& r : rr) {
        if (++hist[r.to_string()] == 1) distinct.push_back(r);
      }
    }
    for (const auto& [k, n] : hist) std::cout << k << " x" << n << "  ";
    bool found = false;
    for (const auto& s : distinct) {
      if (s.sign() <= 0) continue;
      ParamPoint q = base;
      bind_to(q, {"sigma16"}, s, true);
      auto decs = isotropy_ladder(sch, q, 4);
      bool iso = true;
      for (int j = 0; j < 4; ++j) iso = iso && decs[j].isotropic();
      if (!iso) continue;
      Rational sig = Rational(1) / s - Rational(1, 2);
      std::cout << "VERIFIED sigma16=" << sig.to_string()
                << " printed=" << base.get("sigma16").to_string()
                << (sig == base.get("sigma16") ? " (match)" : " (DIFFERS)");
      Rational den = (Rational(4) * psi - Rational(7)) *
                     (Rational(3) * psi * psi * psi - Rational(22) * psi * psi +
                      Rational(23) * psi + Rational(14));
      xs2.push_back(psi);
      ys2.push_back(sig * den / sigma5);
      found = true;
      break;
    }
    if (!found) std::cout << "none verified";
    std::cout << "\n";
  }
  if (xs2.size() >= 7) {
    auto c = interp(xs2, ys2);
    std::cout << "numerator poly coeffs (psi^0 up):";
    for (const auto& ck : c) std::cout << " " << ck.to_string();
    std::cout << "\nvalue at 3/2: " << peval(c, Rational(3, 2)).to_string() << "\n";
  }
}

void fig1() {
  std::vector<Rational> grid;
  for (int i = 1; i <= 13; ++i) grid.push_back(Rational(i, 8));
  auto data = figure1_data(grid);
  for (const auto& row : data.rows) {
    std::cout << "psi=" << row.psi.to_string() << " s16/s5=" << row.s16_over_s5.to_string()
              << " s4/s5=" << row.s4_over_s5.to_string()
              << " 12s10s5=" << row.s10_s5_x12.to_string()
              << " s26s5=" << row.s26_s5.to_string() << "\n";
  }
  if (data.s16_bracket)
    std::cout << "bracket [" << data.s16_bracket->first.to_string() << ", "
              << data.s16_bracket->second.to_string() << "]\n";
  if (data.s16_root) std::cout << "root " << data.s16_root->to_string() << "\n";
}

// ---------------------------------------------------------------- tensor fits
using Tensor3 = std::vector<std::vector<std::vector<Rational>>>;

Tensor3 tri_fit(const std::vector<Rational>& xs, const std::vector<Rational>& ys,
                const std::vector<Rational>& zs,
                const std::function<Rational(const Rational&, const Rational&,
                                             const Rational&)>& val) {
  std::size_t nx = xs.size(), ny = ys.size(), nz = zs.size();
  Tensor3 V(nx, std::vector<std::vector<Rational>>(ny, std::vector<Rational>(nz, Rational(0))));
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j)
      for (std::size_t k = 0; k < nz; ++k) V[i][j][k] = val(xs[i], ys[j], zs[k]);
  Tensor3 A = V;
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t k = 0; k < nz; ++k) {
      std::vector<Rational> col(nx);
      for (std::size_t i = 0; i < nx; ++i) col[i] = V[i][j][k];
      auto c = interp(xs, col);
      for (std::size_t p = 0; p < nx; ++p) A[p][j][k] = c[p];
    }
  Tensor3 B = A;
  for (std::size_t p = 0; p < nx; ++p)
    for (std::size_t k = 0; k < nz; ++k) {
      std::vector<Rational> col(ny);
      for (std::size_t j = 0; j < ny; ++j) col[j] = A[p][j][k];
      auto c = interp(ys, col);
      for (std::size_t q = 0; q < ny; ++q) B[p][q][k] = c[q];
    }
  Tensor3 C = B;
  for (std::size_t p = 0; p < nx; ++p)
    for (std::size_t q = 0; q < ny; ++q) {
      std::vector<Rational> col(nz);
      for (std::size_t k = 0; k < nz; ++k) col[k] = B[p][q][k];
      auto c = interp(zs, col);
      for (std::size_t r = 0; r < nz; ++r) C[p][q][r] = c[r];
    }
  return C;
}

Rational tensor_eval(const Tensor3& C, const Rational& x, const Rational& y,
                     const Rational& z) {
  Rational acc(0), xp(1);
  for (std::size_t p = 0; p < C.size(); ++p) {
    Rational yq(1);
    for (std::size_t q = 0; q < C[p].size(); ++q) {
      Rational zr(1);
      for (std::size_t r = 0; r < C[p][q].size(); ++r) {
        acc += C[p][q][r] * xp * yq * zr;
        zr *= z;
      }
      yq *= y;
    }
    xp *= x;
  }
  return acc;
}

void tensor_print(const Tensor3& C, const char* nx, const char* ny, const char* nz) {
  for (std::size_t p = 0; p < C.size(); ++p)
    for (std::size_t q = 0; q < C[p].size(); ++q)
      for (std::size_t r = 0; r < C[p][q].size(); ++r)
        if (!C[p][q][r].is_zero())
          std::cout << "  " << nx << "^" << p << " " << ny << "^" << q << " " << nz << "^"
                    << r << " : " << C[p][q][r].to_string() << "\n";
}

// d2q13.order4 zeta4: fit T = zeta4 * 56581200*(89a - 20680) / (lam*Dx^3) over
// (s = sigma4 = sigma3, a, alpha) and diff against the registered display.
void fit13() {
  const ConditionSet& cs = condition_set("d2q13.order4");
  const Scheme& sch = builtin_scheme(cs.scheme());
  auto zeta4_at = [&](const Rational& s, const Rational& a, const Rational& al,
                      const Rational& lam, const Rational& dt) {
    ParamPoint p = manual_base(cs, {{"sigma4", s}, {"a", a}, {"alpha", al},
                                    {"lambda", lam}, {"dt", dt}});
    auto decs = isotropy_ladder(sch, p, 4);
    return *extract_physical(decs, p).zeta4;
  };
  {
    ParamPoint p1 = manual_base(cs, {{"sigma12", Rational(4, 7)}});
    ParamPoint p2 = manual_base(cs, {{"sigma12", Rational(5, 9)}});
    Rational z1 = *extract_physical(isotropy_ladder(sch, p1, 4), p1).zeta4;
    Rational z2 = *extract_physical(isotropy_ladder(sch, p2, 4), p2).zeta4;
    std::cout << "sigma12 inert for zeta4: " << (z1 == z2 ? "yes" : "NO") << "\n";
  }
  {
    Rational z11 = zeta4_at(Rational(3, 4), Rational(180), Rational(-16), Rational(1), Rational(1));
    Rational z23 = zeta4_at(Rational(3, 4), Rational(180), Rational(-16), Rational(2), Rational(1, 3));
    std::cout << "grading lam*(lam*dt)^3: "
              << (z23 == z11 * Rational(16, 27) ? "yes" : "NO") << "\n";
  }
  auto T = [&](const Rational& s, const Rational& a, const Rational& al) {
    return zeta4_at(s, a, al, Rational(1), Rational(1)) * Rational(56581200) *
           (Rational(89) * a - Rational(20680));
  };
  std::vector<Rational> ss = {{1, 2}, {2, 3}, {3, 4}, {1}, {5, 4}, {4, 3}, {3, 2}};
  std::vector<Rational> as = {{160}, {175}, {190}, {196}};
  std::vector<Rational> als = {{-14}, {-16}, {-20}, {-24}, {-27}};
  Tensor3 C = tri_fit(ss, as, als, T);
  Rational direct = T(Rational(6, 5), Rational(183), Rational(-15));
  Rational fitted = tensor_eval(C, Rational(6, 5), Rational(183), Rational(-15));
  std::cout << "extra point: " << (direct == fitted ? "FIT CONFIRMED" : "FIT FAILED") << "\n";
  std::cout << "engine tensor:\n";
  tensor_print(C, "s", "a", "al");
  // registered display under the sigma3 = sigma4 tie
  Tensor3 C0(7, std::vector<std::vector<Rational>>(4, std::vector<Rational>(5, Rational(0))));
  C0[2][0][0] = Rational(-84099438720);
  C0[2][0][1] = Rational(9808524000);
  C0[2][0][2] = Rational(576972000);
  C0[2][1][0] = Rational(361936656);
  C0[2][1][1] = Rational(-42212700);
  C0[2][1][2] = Rational(-2483100);
  C0[4][0][0] = Rational(324581368320);
  C0[4][0][1] = Rational(-31848854400);
  C0[4][0][2] = Rational(-3461832000);
  C0[4][1][0] = Rational(-1396892736);
  C0[4][1][1] = Rational(137067120);
  C0[4][1][2] = Rational(14898600);
  std::cout << "diff engine - display:\n";
  for (std::size_t p = 0; p < 7; ++p)
    for (std::size_t q = 0; q < 4; ++q)
      for (std::size_t r = 0; r < 5; ++r) {
        Rational d = C[p][q][r] - C0[p][q][r];
        if (!d.is_zero())
          std::cout << "  s^" << p << " a^" << q << " al^" << r << " : "
                    << d.to_string() << "\n";
      }
}

// d3q27.order4 mu4: fit T = mu4 * 108 * (3psi^2 - 11psi + 14) / (sigma5*lam*Dx^3)
// over (psi, sigma5, alpha) and diff against the registered display.
void fit27mu() {
  const ConditionSet& cs = condition_set("d3q27.order4");
  const Scheme& sch = builtin_scheme(cs.scheme());
  auto mu4_at = [&](const Rational& ps, const Rational& s5, const Rational& al,
                    const Rational& lam, const Rational& dt) {
    ParamPoint p = manual_base(cs, {{"psi", ps}, {"sigma5", s5}, {"alpha", al},
                                    {"lambda", lam}, {"dt", dt}});
    auto decs = isotropy_ladder(sch, p, 4);
    return *extract_physical(decs, p).mu4;
  };
  {
    Rational m11 = mu4_at(Rational(3, 4), Rational(5, 7), Rational(2, 3), Rational(1), Rational(1));
    Rational m23 = mu4_at(Rational(3, 4), Rational(5, 7), Rational(2, 3), Rational(2), Rational(1, 3));
    std::cout << "grading lam*(lam*dt)^3: "
              << (m23 == m11 * Rational(16, 27) ? "yes" : "NO") << "\n";
  }
  auto T = [&](const Rational& ps, const Rational& s5, const Rational& al) {
    Rational d2 = Rational(3) * ps * ps - Rational(11) * ps + Rational(14);
    return mu4_at(ps, s5, al, Rational(1), Rational(1)) * Rational(108) * d2 / s5;
  };
  std::vector<Rational> pss = {{1, 2}, {3, 5}, {2, 3}, {3, 4}, {1}, {6, 5}, {4, 3}};
  std::vector<Rational> s5s = {{1, 2}, {5, 7}, {1}, {6, 5}};
  std::vector<Rational> als = {{0}, {2, 3}, {-1, 2}, {1}};
  Tensor3 C = tri_fit(pss, s5s, als, T);
  Rational direct = T(Rational(7, 5), Rational(8, 7), Rational(1, 3));
  Rational fitted = tensor_eval(C, Rational(7, 5), Rational(8, 7), Rational(1, 3));
  std::cout << "extra point: " << (direct == fitted ? "FIT CONFIRMED" : "FIT FAILED") << "\n";
  std::cout << "engine tensor:\n";
  tensor_print(C, "psi", "s5", "al");
  Tensor3 C0(7, std::vector<std::vector<Rational>>(4, std::vector<Rational>(4, Rational(0))));
  C0[0][0][0] = Rational(-8);
  C0[0][2][0] = Rational(168);
  C0[1][0][0] = Rational(-1);
  C0[1][2][0] = Rational(132);
  C0[2][0][0] = Rational(3);
  C0[2][2][0] = Rational(36);
  std::cout << "diff engine - display:\n";
  for (std::size_t p = 0; p < 7; ++p)
    for (std::size_t q = 0; q < 4; ++q)
      for (std::size_t r = 0; r < 4; ++r) {
        Rational d = C[p][q][r] - C0[p][q][r];
        if (!d.is_zero())
          std::cout << "  psi^" << p << " s5^" << q << " al^" << r << " : "
                    << d.to_string() << "\n";
      }
}

}  // namespace

int main(int argc, char** argv) {
  std::string mode = argc > 1 ? argv[1] : "survey";
  try {
    if (mode == "survey") survey(argc > 2 ? std::atoi(argv[2]) : 3);
    else if (mode == "t19") t19();
    else if (mode == "grading") grading(argv[2], argv[3], std::atoi(argv[4]));
    else if (mode == "x19") x19();
    else if (mode == "x19o4") x19o4();
    else if (mode == "x13") x13();
    else if (mode == "x27") x27(argc > 2 ? parse_rat(argv[2]) : Rational(1, 3),
                                argc > 3 ? parse_rat(argv[3]) : Rational(5, 7));
    else if (mode == "x27a") x27a(argc > 2 ? parse_rat(argv[2]) : Rational(1, 2));
    else if (mode == "x27q") x27q(argc > 2 ? parse_rat(argv[2]) : Rational(1, 3),
                                  argc > 3 ? parse_rat(argv[3]) : Rational(5, 7));
    else if (mode == "x27p") x27p(argc > 2 ? parse_rat(argv[2]) : Rational(1, 2),
                                  argc > 3 ? parse_rat(argv[3]) : Rational(1, 3),
                                  argc > 4 ? parse_rat(argv[4]) : Rational(5, 7));
    else if (mode == "x27k") x27k(argc > 2 ? parse_rat(argv[2]) : Rational(1, 2),
                                  argc > 3 ? parse_rat(argv[3]) : Rational(1, 3),
                                  argc > 4 ? parse_rat(argv[4]) : Rational(5, 7),
                                  argc > 5 ? std::atoi(argv[5]) : 36);
    else if (mode == "x27c") x27c(argc > 2 ? parse_rat(argv[2]) : Rational(1, 3),
                                  argc > 3 ? parse_rat(argv[3]) : Rational(5, 7),
                                  argc > 4 ? std::atoi(argv[4]) : 40);
    else if (mode == "fit13") fit13();
    else if (mode == "fit27mu") fit27mu();
    else if (mode == "fig1") fig1();
    else if (mode == "probe") {
      std::vector<std::string> params;
      for (int i = 3; i < argc; ++i)
        if (std::string(argv[i]).find('=') == std::string::npos) params.push_back(argv[i]);
      probe_mode(argv[2], params, parse_overrides(argc, argv, 3));
    } else if (mode == "solve") {
      const ConditionSet& cs = condition_set(argv[2]);
      const Scheme& sch = builtin_scheme(cs.scheme());
      ParamPoint base = manual_base(cs, parse_overrides(argc, argv, 5));
      report_solve(sch, base, argv[4], std::atoi(argv[3]), 4);
    } else if (mode == "one") {
      const ConditionSet& cs = condition_set(argv[2]);
      const Scheme& s = builtin_scheme(cs.scheme());
      auto pts = sample_points(cs, argc > 3 ? std::atoi(argv[3]) : 3);
      auto rep = verify_order(s, cs, pts);
      for (const auto& smp : rep.samples) {
        std::cout << "lambda=" << smp.free_point.lambda().to_string()
                  << " aniso=" << smp.first_anisotropic_order << "\n";
        for (const auto& [k, v] : smp.free_point.values())
          std::cout << "  " << k << "=" << v.to_string();
        std::cout << "\n";
        for (const auto& c : smp.checks)
          std::cout << "  " << c.name << ": engine=" << c.engine.to_string()
                    << " ref=" << c.reference.to_string() << (c.equal ? " ok" : " MISMATCH")
                    << "\n";
        if (smp.first_anisotropic_order) std::cout << smp.residual_text << "\n";
      }
      std::cout << rep.control_note << "\n";
      std::cout << "  verified: " << (rep.verified() ? "YES" : "no") << "\n";
    }
  } catch (const std::exception& e) {
    std::cout << "fatal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
