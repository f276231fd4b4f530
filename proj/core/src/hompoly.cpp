#include "lbiso/hompoly.hpp"

#include <sstream>

namespace lbiso {

HomPoly::HomPoly(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (nvars < 1 || nvars > 4) throw Error("HomPoly: nvars out of range");
  if (degree < 0) throw Error("HomPoly: negative degree");
}

HomPoly HomPoly::monomial(int nvars, const Exp& e, const Rational& c) {
  HomPoly p(nvars, exp_total(e));
  p.add_term(e, c);
  return p;
}

HomPoly HomPoly::variable(int nvars, int axis) {
  Exp e{0, 0, 0, 0};
  if (axis < 0 || axis >= nvars) throw Error("HomPoly: variable axis out of range");
  e[axis] = 1;
  return monomial(nvars, e, Rational(1));
}

HomPoly HomPoly::constant(int nvars, const Rational& c) {
  HomPoly p(nvars, 0);
  p.add_term(Exp{0, 0, 0, 0}, c);
  return p;
}

Rational HomPoly::coefficient(const Exp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HomPoly::add_term(const Exp& e, const Rational& c) {
  if (exp_total(e) != degree_) throw Error("HomPoly: monomial degree mismatch");
  for (int a = nvars_; a < 4; ++a)
    if (e[a] != 0) throw Error("HomPoly: exponent on unused variable");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
  if (o.nvars_ != nvars_ || o.degree_ != degree_)
    throw Error("HomPoly: shape mismatch in addition");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) {
  if (o.nvars_ != nvars_ || o.degree_ != degree_)
    throw Error("HomPoly: shape mismatch in subtraction");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

HomPoly HomPoly::operator-() const {
  HomPoly r(nvars_, degree_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
  if (a.nvars_ != b.nvars_) throw Error("HomPoly: nvars mismatch in product");
  HomPoly r(a.nvars_, a.degree_ + b.degree_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
      r.add_term(e, ca * cb);
    }
  return r;
}

HomPoly operator*(const Rational& c, HomPoly p) {
  if (c.is_zero()) return HomPoly(p.nvars_, p.degree_);
  for (auto& [e, v] : p.terms_) v *= c;
  return p;
}

HomPoly HomPoly::pow(int n) const {
  if (n < 0) throw Error("HomPoly: negative power");
  HomPoly acc = constant(nvars_, Rational(1));
  for (int i = 0; i < n; ++i) acc = acc * *this;
  return acc;
}

bool operator==(const HomPoly& a, const HomPoly& b) {
  return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

HomPoly HomPoly::substitute_linear(const std::vector<std::vector<Rational>>& R) const {
  if (static_cast<int>(R.size()) != nvars_) throw Error("HomPoly: substitution size");
  HomPoly result(nvars_, degree_);
  for (const auto& [e, c] : terms_) {
    HomPoly term = constant(nvars_, c);
    for (int a = 0; a < nvars_; ++a) {
      if (e[a] == 0) continue;
      HomPoly lin(nvars_, 1);
      for (int b = 0; b < nvars_; ++b) {
        Exp eb{0, 0, 0, 0};
        eb[b] = 1;
        lin.add_term(eb, R[a][b]);
      }
      term = term * lin.pow(e[a]);
    }
    result += term;
  }
  return result;
}

Rational HomPoly::eval(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) < nvars_) throw Error("HomPoly: eval size");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int a = 0; a < nvars_; ++a)
      if (e[a] != 0) t *= x[a].pow(e[a]);
    sum += t;
  }
  return sum;
}

std::complex<double> HomPoly::eval(const std::array<std::complex<double>, 4>& x) const {
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.to_double();
    for (int a = 0; a < nvars_; ++a)
      for (int i = 0; i < e[a]; ++i) t *= x[a];
    sum += t;
  }
  return sum;
}

std::string HomPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool need_coeff = !a.is_one() || exp_total(e) == 0;
    if (need_coeff) os << a.to_string();
    bool any_var = false;
    for (int v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      if (need_coeff || any_var) os << "*";
      os << names.at(v);
      if (e[v] > 1) os << "^" << e[v];
      any_var = true;
    }
  }
  return os.str();
}

const std::vector<std::string>& deriv_names(int dim) {
  static const std::vector<std::string> two{"dx", "dy"};
  static const std::vector<std::string> three{"dx", "dy", "dz"};
  return dim == 2 ? two : three;
}

const std::vector<std::string>& moment_names(int dim) {
  static const std::vector<std::string> two{"X", "Y", "L"};
  static const std::vector<std::string> three{"X", "Y", "Z", "L"};
  return dim == 2 ? two : three;
}

}  // namespace lbiso
