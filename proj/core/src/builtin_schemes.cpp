#include "lbiso/builtin_schemes.hpp"

#include <map>

namespace lbiso {

namespace {

// Shorthand builders for moment polynomials in the variables X, Y, (Z), L.

HomPoly var(int d, int a) { return HomPoly::variable(d + 1, a); }
HomPoly scale(int d) { return HomPoly::variable(d + 1, d); }

HomPoly speed2(int d) {
  HomPoly w(d + 1, 2);
  for (int a = 0; a < d; ++a) w += var(d, a) * var(d, a);
  return w;
}

Expr hook(const char* pname, int lpow) { return Expr::param(pname) * lambda_pow(lpow); }

/// Equilibrium table builder: rows indexed by slave moment name.
class EqTable {
 public:
  EqTable(const std::vector<MomentRow>& rows, int ncons)
      : rows_(rows), ncons_(ncons),
        table_(rows.size() - ncons, std::vector<Expr>(ncons, Expr::constant(0))) {}

  /// Couples a scalar-channel slave row to the density column.
  void on_rho(const std::string& row, const char* pname, int lpow) {
    table_[slave(row)][0] = hook(pname, lpow);
  }
  /// Couples a vector-channel slave triple/pair diagonally to momentum.
  void on_j(const std::vector<std::string>& names, const char* pname, int lpow) {
    for (std::size_t a = 0; a < names.size(); ++a)
      table_[slave(names[a])][1 + a] = hook(pname, lpow);
  }

  std::vector<std::vector<Expr>> take() { return std::move(table_); }

 private:
  int slave(const std::string& name) const {
    for (std::size_t k = ncons_; k < rows_.size(); ++k)
      if (rows_[k].name == name) return static_cast<int>(k) - ncons_;
    throw Error("EqTable: no slave row named " + name);
  }

  const std::vector<MomentRow>& rows_;
  int ncons_;
  std::vector<std::vector<Expr>> table_;
};

std::vector<Expr> default_rates(int ncons, int q) {
  std::vector<Expr> r;
  for (int k = ncons; k < q; ++k) r.push_back(Expr::param("s" + std::to_string(k)));
  return r;
}

std::vector<std::array<int, 3>> velocities_2d(bool extended) {
  std::vector<std::array<int, 3>> c{{0, 0, 0},  {1, 0, 0}, {0, 1, 0},  {-1, 0, 0}, {0, -1, 0},
                                    {1, 1, 0},  {-1, 1, 0}, {-1, -1, 0}, {1, -1, 0}};
  if (extended) {
    c.push_back({2, 0, 0});
    c.push_back({0, 2, 0});
    c.push_back({-2, 0, 0});
    c.push_back({0, -2, 0});
  }
  return c;
}

std::vector<std::array<int, 3>> velocities_3d(bool corners) {
  std::vector<std::array<int, 3>> c{{0, 0, 0}};
  // axes
  c.insert(c.end(), {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
  // edges
  c.insert(c.end(), {{1, 1, 0}, {-1, 1, 0}, {1, -1, 0}, {-1, -1, 0},
                     {0, 1, 1}, {0, -1, 1}, {0, 1, -1}, {0, -1, -1},
                     {1, 0, 1}, {-1, 0, 1}, {1, 0, -1}, {-1, 0, -1}});
  if (corners)
    c.insert(c.end(), {{1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {-1, -1, 1},
                       {1, 1, -1}, {-1, 1, -1}, {1, -1, -1}, {-1, -1, -1}});
  return c;
}

Scheme make_d2q9() {
  const int d = 2;
  HomPoly X = var(d, 0), Y = var(d, 1), L = scale(d);
  HomPoly w = speed2(d), L2 = L * L, L4 = L2 * L2;

  std::vector<MomentRow> rows{
      {"rho", HomPoly::constant(d + 1, Rational(1))},
      {"jx", X},
      {"jy", Y},
      {"eps", Rational(3) * w - Rational(4) * L2},
      {"xx", X * X - Y * Y},
      {"xy", X * Y},
      {"qx", (Rational(3) * w - Rational(5) * L2) * X},
      {"qy", (Rational(3) * w - Rational(5) * L2) * Y},
      {"eps2", Rational(1, 2) * (Rational(9) * w * w - Rational(21) * L2 * w + Rational(8) * L4)},
  };

  EqTable eq(rows, d + 1);
  eq.on_rho("eps", "alpha", 2);
  eq.on_rho("xx", "xx_eq", 2);
  eq.on_rho("xy", "xy_eq", 2);
  eq.on_j({"qx", "qy"}, "q_eq", 2);
  eq.on_rho("eps2", "eps2_eq", 4);

  VelocitySet vel{d, velocities_2d(false)};
  return Scheme("d2q9", vel, rows, eq.take(), default_rates(d + 1, 9));
}

Scheme make_d2q13() {
  const int d = 2;
  HomPoly X = var(d, 0), Y = var(d, 1), L = scale(d);
  HomPoly w = speed2(d), L2 = L * L, L4 = L2 * L2, L6 = L4 * L2;

  HomPoly r_radial = Rational(1, 12) * (Rational(35) * w * w - Rational(189) * L2 * w +
                                        Rational(202) * L4);
  std::vector<MomentRow> rows{
      {"rho", HomPoly::constant(d + 1, Rational(1))},
      {"jx", X},
      {"jy", Y},
      {"eps", Rational(13) * w - Rational(28) * L2},
      {"xx", X * X - Y * Y},
      {"xy", X * Y},
      {"qx", (w - Rational(3) * L2) * X},
      {"qy", (w - Rational(3) * L2) * Y},
      {"rx", r_radial * X},
      {"ry", r_radial * Y},
      {"eps2",
       Rational(1, 2) * (Rational(77) * w * w - Rational(361) * L2 * w + Rational(280) * L4)},
      {"eps3", Rational(1, 24) * (Rational(137) * w * w * w - Rational(819) * L2 * w * w +
                                  Rational(1162) * L4 * w - Rational(288) * L6)},
      {"xxe", Rational(1, 12) * ((Rational(17) * w - Rational(65) * L2) * (X * X - Y * Y))},
  };

  EqTable eq(rows, d + 1);
  eq.on_rho("eps", "alpha", 2);
  eq.on_rho("xx", "xx_eq", 2);
  eq.on_rho("xy", "xy_eq", 2);
  eq.on_j({"qx", "qy"}, "q_eq", 2);
  eq.on_j({"rx", "ry"}, "r_eq", 4);
  eq.on_rho("eps2", "eps2_eq", 4);
  eq.on_rho("eps3", "eps3_eq", 6);
  eq.on_rho("xxe", "xxe_eq", 4);

  VelocitySet vel{d, velocities_2d(true)};
  return Scheme("d2q13", vel, rows, eq.take(), default_rates(d + 1, 13));
}

Scheme make_d3q19() {
  const int d = 3;
  HomPoly X = var(d, 0), Y = var(d, 1), Z = var(d, 2), L = scale(d);
  HomPoly w = speed2(d), L2 = L * L, L4 = L2 * L2;

  HomPoly xx_dir = Rational(2) * X * X - Y * Y - Z * Z;
  HomPoly ww_dir = Y * Y - Z * Z;
  HomPoly q_radial = Rational(5) * w - Rational(9) * L2;
  HomPoly e_radial = Rational(3) * w - Rational(5) * L2;

  std::vector<MomentRow> rows{
      {"rho", HomPoly::constant(d + 1, Rational(1))},
      {"jx", X},
      {"jy", Y},
      {"jz", Z},
      {"eps", Rational(19) * w - Rational(30) * L2},
      {"xx", xx_dir},
      {"ww", ww_dir},
      {"xy", X * Y},
      {"yz", Y * Z},
      {"zx", Z * X},
      {"qx", q_radial * X},
      {"qy", q_radial * Y},
      {"qz", q_radial * Z},
      {"eps2",
       Rational(1, 2) * (Rational(21) * w * w - Rational(53) * L2 * w + Rational(24) * L4)},
      {"xxe", e_radial * xx_dir},
      {"wwe", e_radial * ww_dir},
      {"tx", (Y * Y - Z * Z) * X},
      {"ty", (Z * Z - X * X) * Y},
      {"tz", (X * X - Y * Y) * Z},
  };

  EqTable eq(rows, d + 1);
  eq.on_rho("eps", "alpha", 2);
  eq.on_rho("xx", "xx_eq", 2);
  eq.on_rho("ww", "xx_eq", 2);
  eq.on_rho("xy", "xy_eq", 2);
  eq.on_rho("yz", "xy_eq", 2);
  eq.on_rho("zx", "xy_eq", 2);
  eq.on_j({"qx", "qy", "qz"}, "q_eq", 2);
  eq.on_rho("eps2", "eps2_eq", 4);
  eq.on_rho("xxe", "xxe_eq", 4);
  eq.on_rho("wwe", "xxe_eq", 4);
  eq.on_j({"tx", "ty", "tz"}, "t_eq", 2);

  VelocitySet vel{d, velocities_3d(false)};
  return Scheme("d3q19", vel, rows, eq.take(), default_rates(d + 1, 19));
}

Scheme make_d3q27() {
  const int d = 3;
  HomPoly X = var(d, 0), Y = var(d, 1), Z = var(d, 2), L = scale(d);
  HomPoly w = speed2(d), L2 = L * L, L4 = L2 * L2, L6 = L4 * L2;

  HomPoly xx_dir = Rational(2) * X * X - Y * Y - Z * Z;
  HomPoly ww_dir = Y * Y - Z * Z;
  HomPoly q_radial = Rational(3) * w - Rational(7) * L2;
  HomPoly r_radial =
      Rational(1, 2) * (Rational(9) * w * w - Rational(39) * L2 * w + Rational(38) * L4);
  HomPoly e_radial = Rational(3) * w - Rational(5) * L2;
  HomPoly c_radial = Rational(3) * w - Rational(8) * L2;

  std::vector<MomentRow> rows{
      {"rho", HomPoly::constant(d + 1, Rational(1))},
      {"jx", X},
      {"jy", Y},
      {"jz", Z},
      {"eps", w - Rational(2) * L2},
      {"xx", xx_dir},
      {"ww", ww_dir},
      {"xy", X * Y},
      {"yz", Y * Z},
      {"zx", Z * X},
      {"qx", q_radial * X},
      {"qy", q_radial * Y},
      {"qz", q_radial * Z},
      {"rx", r_radial * X},
      {"ry", r_radial * Y},
      {"rz", r_radial * Z},
      {"eps2",
       Rational(1, 2) * (Rational(3) * w * w - Rational(11) * L2 * w + Rational(8) * L4)},
      {"eps3", Rational(1, 2) * (Rational(9) * w * w * w - Rational(45) * L2 * w * w +
                                 Rational(60) * L4 * w - Rational(16) * L6)},
      {"xxe", e_radial * xx_dir},
      {"wwe", e_radial * ww_dir},
      {"xye", c_radial * X * Y},
      {"yze", c_radial * Y * Z},
      {"zxe", c_radial * Z * X},
      {"tx", (Y * Y - Z * Z) * X},
      {"ty", (Z * Z - X * X) * Y},
      {"tz", (X * X - Y * Y) * Z},
      {"xyz", X * Y * Z},
  };

  EqTable eq(rows, d + 1);
  eq.on_rho("eps", "alpha", 2);
  eq.on_rho("xx", "xx_eq", 2);
  eq.on_rho("ww", "xx_eq", 2);
  eq.on_rho("xy", "xy_eq", 2);
  eq.on_rho("yz", "xy_eq", 2);
  eq.on_rho("zx", "xy_eq", 2);
  eq.on_j({"qx", "qy", "qz"}, "q_eq", 2);
  eq.on_j({"rx", "ry", "rz"}, "r_eq", 4);
  eq.on_rho("eps2", "eps2_eq", 4);
  eq.on_rho("eps3", "eps3_eq", 6);
  eq.on_rho("xxe", "xxe_eq", 4);
  eq.on_rho("wwe", "xxe_eq", 4);
  eq.on_rho("xye", "xye_eq", 4);
  eq.on_rho("yze", "xye_eq", 4);
  eq.on_rho("zxe", "xye_eq", 4);
  eq.on_j({"tx", "ty", "tz"}, "t_eq", 2);
  // xyz couples to nothing; cubic symmetry forbids it.

  VelocitySet vel{d, velocities_3d(true)};
  return Scheme("d3q27", vel, rows, eq.take(), default_rates(d + 1, 27));
}

const std::map<std::string, Scheme>& registry() {
  static const std::map<std::string, Scheme> reg = [] {
    std::map<std::string, Scheme> m;
    m.emplace("d2q9", make_d2q9());
    m.emplace("d2q13", make_d2q13());
    m.emplace("d3q19", make_d3q19());
    m.emplace("d3q27", make_d3q27());
    return m;
  }();
  return reg;
}

}  // namespace

const std::vector<std::string>& builtin_scheme_names() {
  static const std::vector<std::string> names{"d2q9", "d2q13", "d3q19", "d3q27"};
  return names;
}

const Scheme& builtin_scheme(const std::string& name) {
  const auto& reg = registry();
  auto it = reg.find(name);
  if (it == reg.end()) throw Error("unknown scheme '" + name + "'");
  return it->second;
}

}  // namespace lbiso
