#include "lbiso/scheme.hpp"

#include <set>

namespace lbiso {

void VelocitySet::validate() const {
  if (d != 2 && d != 3) throw Error("VelocitySet: dimension must be 2 or 3");
  if (c.empty()) throw Error("VelocitySet: empty");
  std::set<std::array<int, 3>> seen;
  for (const auto& v : c) {
    if (d == 2 && v[2] != 0) throw Error("VelocitySet: z component in 2-D set");
    if (!seen.insert(v).second) throw Error("VelocitySet: duplicate velocity");
  }
}

Scheme::Scheme(std::string name, VelocitySet vel, std::vector<MomentRow> rows,
               std::vector<std::vector<Expr>> equilibrium, std::vector<Expr> rates)
    : name_(std::move(name)), vel_(std::move(vel)), rows_(std::move(rows)),
      eq_(std::move(equilibrium)), rate_(std::move(rates)) {
  validate();
}

int Scheme::row_index(const std::string& name) const {
  for (int k = 0; k < static_cast<int>(rows_.size()); ++k)
    if (rows_[k].name == name) return k;
  throw Error("Scheme: no moment row named '" + name + "'");
}

RMatrix Scheme::moment_matrix(const Rational& lambda) const {
  if (lambda.sign() <= 0) throw Error("Scheme: lambda must be positive");
  RMatrix m(q(), q());
  for (int k = 0; k < q(); ++k)
    for (int j = 0; j < q(); ++j) {
      std::vector<Rational> x;
      for (int a = 0; a < d(); ++a) x.push_back(lambda * Rational(vel_.c[j][a]));
      x.push_back(lambda);
      m.at(k, j) = rows_[k].poly.eval(x);
    }
  return m;
}

RMatrix Scheme::equilibrium_matrix(const ParamPoint& p) const {
  RMatrix e(nslave(), ncons());
  for (int i = 0; i < nslave(); ++i)
    for (int j = 0; j < ncons(); ++j) e.at(i, j) = eq_[i][j].eval(p);
  return e;
}

std::vector<Rational> Scheme::rates(const ParamPoint& p) const {
  std::vector<Rational> s;
  s.reserve(rate_.size());
  for (const auto& e : rate_) s.push_back(e.eval(p));
  return s;
}

RMatrix Scheme::j0(const ParamPoint& p) const {
  const int n = ncons();
  RMatrix J(q(), q());
  for (int i = 0; i < n; ++i) J.at(i, i) = Rational(1);
  RMatrix E = equilibrium_matrix(p);
  std::vector<Rational> s = rates(p);
  for (int i = 0; i < nslave(); ++i) {
    for (int j = 0; j < n; ++j) J.at(n + i, j) = s[i] * E.at(i, j);
    J.at(n + i, n + i) = Rational(1) - s[i];
  }
  return J;
}

void Scheme::validate() const {
  vel_.validate();
  const int n = ncons();
  if (static_cast<int>(rows_.size()) != q()) throw Error("Scheme: need q moment rows");
  if (static_cast<int>(eq_.size()) != nslave()) throw Error("Scheme: equilibrium shape");
  for (const auto& r : eq_)
    if (static_cast<int>(r.size()) != n) throw Error("Scheme: equilibrium shape");
  if (static_cast<int>(rate_.size()) != nslave()) throw Error("Scheme: relaxation shape");

  std::set<std::string> names;
  for (const auto& r : rows_) {
    if (r.poly.nvars() != d() + 1) throw Error("Scheme: moment polynomial variable count");
    if (!names.insert(r.name).second) throw Error("Scheme: duplicate moment name " + r.name);
  }

  // Conserved rows must be exactly density and momentum.
  if (!(rows_[0].poly == HomPoly::constant(d() + 1, Rational(1))))
    throw Error("Scheme: row 0 must be the density moment 1");
  for (int a = 0; a < d(); ++a)
    if (!(rows_[1 + a].poly == HomPoly::variable(d() + 1, a)))
      throw Error("Scheme: momentum rows must be the bare velocity components");

  moment_matrix(Rational(1)).inverse();  // throws SingularMatrixError when dependent
}

}  // namespace lbiso
