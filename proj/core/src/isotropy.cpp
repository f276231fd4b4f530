#include "lbiso/isotropy.hpp"

#include <map>
#include <utility>

namespace lbiso {

namespace {

HomPoly laplacian_pow(int d, int k) {
  HomPoly lap(d, 2);
  for (int a = 0; a < d; ++a) {
    Exp e{};
    e[a] = 2;
    lap.add_term(e, Rational(1));
  }
  return lap.pow(k);
}

HomPoly dv(int d, int a) { return HomPoly::variable(d, a); }

int family_degree(Family f, int k) {
  switch (f) {
    case Family::lap_rho:
    case Family::lap_j:
    case Family::lap_jperp:
      return 2 * k;
    case Family::lap_div_j:
    case Family::lap_div_jperp:
    case Family::grad_lap_rho:
    case Family::gradperp_lap_rho:
    case Family::curl_lap_j:
      return 2 * k + 1;
    case Family::grad_div_lap_j:
    case Family::grad_div_lap_jperp:
      return 2 * k + 2;
  }
  throw Error("family_degree: unknown family");
}

OpMatrix family_op(int d, Family f, int k) {
  const int n = d + 1;
  OpMatrix out(n, n, d, family_degree(f, k));
  const HomPoly lk = laplacian_pow(d, k);
  switch (f) {
    case Family::lap_rho:
      out.at(0, 0) = lk;
      break;
    case Family::lap_div_j:
      for (int a = 0; a < d; ++a) out.at(0, 1 + a) = lk * dv(d, a);
      break;
    case Family::lap_div_jperp:
      // div Jperp = dx Jy - dy Jx
      out.at(0, 1) = -(lk * dv(d, 1));
      out.at(0, 2) = lk * dv(d, 0);
      break;
    case Family::grad_lap_rho:
      for (int a = 0; a < d; ++a) out.at(1 + a, 0) = dv(d, a) * lk;
      break;
    case Family::lap_j:
      for (int a = 0; a < d; ++a) out.at(1 + a, 1 + a) = lk;
      break;
    case Family::grad_div_lap_j:
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) out.at(1 + a, 1 + b) = dv(d, a) * dv(d, b) * lk;
      break;
    case Family::gradperp_lap_rho:
      // gradperp = (dy, -dx)
      out.at(1, 0) = dv(d, 1) * lk;
      out.at(2, 0) = -(dv(d, 0) * lk);
      break;
    case Family::lap_jperp:
      // Jperp = (Jy, -Jx)
      out.at(1, 2) = lk;
      out.at(2, 1) = -lk;
      break;
    case Family::grad_div_lap_jperp:
      for (int a = 0; a < d; ++a) {
        out.at(1 + a, 1) = -(dv(d, a) * dv(d, 1) * lk);
        out.at(1 + a, 2) = dv(d, a) * dv(d, 0) * lk;
      }
      break;
    case Family::curl_lap_j:
      out.at(1, 2) = -(dv(d, 2) * lk);
      out.at(1, 3) = dv(d, 1) * lk;
      out.at(2, 1) = dv(d, 2) * lk;
      out.at(2, 3) = -(dv(d, 0) * lk);
      out.at(3, 1) = -(dv(d, 1) * lk);
      out.at(3, 2) = dv(d, 0) * lk;
      break;
  }
  return out;
}

RMatrix extend_scalar(const RMatrix& rot) {
  RMatrix dd(rot.rows() + 1, rot.cols() + 1);
  dd.at(0, 0) = Rational(1);
  for (int a = 0; a < rot.rows(); ++a)
    for (int b = 0; b < rot.cols(); ++b) dd.at(1 + a, 1 + b) = rot.at(a, b);
  return dd;
}

std::vector<std::vector<Rational>> as_rows(const RMatrix& m) {
  std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
  return rows;
}

std::vector<Exp> monomials(int d, int deg) {
  std::vector<Exp> out;
  if (d == 2) {
    for (int i = deg; i >= 0; --i) {
      Exp e{};
      e[0] = i;
      e[1] = deg - i;
      out.push_back(e);
    }
  } else {
    for (int i = deg; i >= 0; --i)
      for (int j = deg - i; j >= 0; --j) {
        Exp e{};
        e[0] = i;
        e[1] = j;
        e[2] = deg - i - j;
        out.push_back(e);
      }
  }
  return out;
}

/// Row index assignment for the coefficient-vector representation of an
/// operator block: one row per (matrix entry, derivative monomial) pair.
struct KeyIndex {
  std::map<std::pair<int, Exp>, int> idx;

  void collect(const OpMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        for (const auto& [e, c] : m.at(i, j).terms()) {
          (void)c;
          idx.emplace(std::make_pair(i * m.cols() + j, e), 0);
        }
  }
  void number() {
    int r = 0;
    for (auto& [k, v] : idx) v = r++;
  }
  int size() const { return static_cast<int>(idx.size()); }
  int row(int entry, const Exp& e) const { return idx.at({entry, e}); }
};

void fill_column(RMatrix& a, int col, const OpMatrix& m, const KeyIndex& keys) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      for (const auto& [e, c] : m.at(i, j).terms())
        a.at(keys.row(i * m.cols() + j, e), col) = c;
}

}  // namespace

std::string family_symbol(int d, Family f) {
  if (d == 2) {
    switch (f) {
      case Family::lap_rho: return "alpha";
      case Family::lap_div_j: return "beta";
      case Family::lap_div_jperp: return "gamma";
      case Family::grad_lap_rho: return "delta";
      case Family::lap_j: return "mu";
      case Family::grad_div_lap_j: return "zeta";
      case Family::gradperp_lap_rho: return "epsilon";
      case Family::lap_jperp: return "nu";
      case Family::grad_div_lap_jperp: return "eta";
      default: break;
    }
  } else if (d == 3) {
    switch (f) {
      case Family::lap_rho: return "alpha";
      case Family::lap_div_j: return "beta";
      case Family::grad_lap_rho: return "delta";
      case Family::lap_j: return "mu";
      case Family::grad_div_lap_j: return "eta";
      case Family::curl_lap_j: return "phi";
      default: break;
    }
  }
  throw Error("family_symbol: family not available in dimension " + std::to_string(d));
}

std::string family_text(Family f, int k) {
  const std::string lap = k == 0 ? "" : k == 1 ? "lap " : "lap^" + std::to_string(k) + " ";
  switch (f) {
    case Family::lap_rho: return lap + "rho";
    case Family::lap_div_j: return lap + "div J";
    case Family::lap_div_jperp: return lap + "div Jperp";
    case Family::grad_lap_rho: return "grad " + lap + "rho";
    case Family::lap_j: return lap + "J";
    case Family::grad_div_lap_j: return "grad div " + lap + "J";
    case Family::gradperp_lap_rho: return "gradperp " + lap + "rho";
    case Family::lap_jperp: return lap + "Jperp";
    case Family::grad_div_lap_jperp: return "grad div " + lap + "Jperp";
    case Family::curl_lap_j: return "curl " + lap + "J";
  }
  throw Error("family_text: unknown family");
}

const std::vector<RMatrix>& test_rotations(int d) {
  static const std::vector<RMatrix> two = [] {
    RMatrix r(2, 2);
    r.at(0, 0) = Rational(3, 5);
    r.at(0, 1) = Rational(-4, 5);
    r.at(1, 0) = Rational(4, 5);
    r.at(1, 1) = Rational(3, 5);
    return std::vector<RMatrix>{r};
  }();
  static const std::vector<RMatrix> three = [] {
    RMatrix rz(3, 3), rx(3, 3);
    rz.at(0, 0) = Rational(3, 5);
    rz.at(0, 1) = Rational(-4, 5);
    rz.at(1, 0) = Rational(4, 5);
    rz.at(1, 1) = Rational(3, 5);
    rz.at(2, 2) = Rational(1);
    rx.at(0, 0) = Rational(1);
    rx.at(1, 1) = Rational(3, 5);
    rx.at(1, 2) = Rational(-4, 5);
    rx.at(2, 1) = Rational(4, 5);
    rx.at(2, 2) = Rational(3, 5);
    return std::vector<RMatrix>{rz, rx};
  }();
  if (d == 2) return two;
  if (d == 3) return three;
  throw Error("test_rotations: dimension must be 2 or 3");
}

OpMatrix rotate_operator(const OpMatrix& op, const RMatrix& rot) {
  const int d = rot.rows();
  if (rot.cols() != d || op.dim() != d || op.rows() != d + 1 || op.cols() != d + 1)
    throw Error("rotate_operator: operator must be (d+1)x(d+1) over d derivatives");
  const auto rows = as_rows(rot);
  OpMatrix sub(op.rows(), op.cols(), d, op.degree());
  for (int i = 0; i < op.rows(); ++i)
    for (int j = 0; j < op.cols(); ++j) sub.at(i, j) = op.at(i, j).substitute_linear(rows);
  const RMatrix dd = extend_scalar(rot);
  return OpMatrix::from_rational(dd.inverse(), d) * sub * OpMatrix::from_rational(dd, d);
}

IsotropicBasis::IsotropicBasis(int d, int ell) : d_(d), ell_(ell) {
  if (d != 2 && d != 3) throw Error("IsotropicBasis: dimension must be 2 or 3");
  if (ell < 1 || ell > 4) throw Error("IsotropicBasis: order must be between 1 and 4");
  std::vector<std::pair<Family, int>> plan;
  if (d == 2) {
    if (ell % 2 == 1) {
      const int k = (ell - 1) / 2;
      plan = {{Family::lap_div_j, k},
              {Family::lap_div_jperp, k},
              {Family::grad_lap_rho, k},
              {Family::gradperp_lap_rho, k}};
    } else {
      const int k = ell / 2;
      plan = {{Family::lap_rho, k},
              {Family::lap_j, k},
              {Family::grad_div_lap_j, k - 1},
              {Family::lap_jperp, k},
              {Family::grad_div_lap_jperp, k - 1}};
    }
  } else {
    if (ell % 2 == 1) {
      const int k = (ell - 1) / 2;
      plan = {{Family::lap_div_j, k}, {Family::grad_lap_rho, k}, {Family::curl_lap_j, k}};
    } else {
      const int k = ell / 2;
      plan = {{Family::lap_rho, k}, {Family::lap_j, k}, {Family::grad_div_lap_j, k - 1}};
    }
  }
  for (const auto& [f, k] : plan) {
    BasisElement e{f, k, family_symbol(d, f) + "_" + std::to_string(k), family_text(f, k),
                   family_op(d, f, k)};
    elems_.push_back(std::move(e));
  }
  for (const RMatrix& r : test_rotations(d))
    for (const BasisElement& e : elems_)
      if (rotate_operator(e.op, r) != e.op)
        throw Error("IsotropicBasis: element " + e.label + " is not rotation invariant");
  KeyIndex keys;
  for (const BasisElement& e : elems_) keys.collect(e.op);
  keys.number();
  RMatrix a(keys.size(), size());
  for (int c = 0; c < size(); ++c) fill_column(a, c, elems_[static_cast<std::size_t>(c)].op, keys);
  if (a.kernel_dimension() != 0)
    throw Error("IsotropicBasis: dependent elements at d=" + std::to_string(d) +
                ", ell=" + std::to_string(ell));
}

const BasisElement* IsotropicBasis::find(Family f, int k) const {
  for (const BasisElement& e : elems_)
    if (e.family == f && e.k == k) return &e;
  return nullptr;
}

int IsotropicBasis::invariant_space_dimension() const {
  const int n = d_ + 1;
  const std::vector<Exp> mons = monomials(d_, ell_);
  std::map<Exp, int> midx;
  for (std::size_t i = 0; i < mons.size(); ++i) midx[mons[i]] = static_cast<int>(i);
  const int nm = static_cast<int>(mons.size());
  const int total = n * n * nm;
  const auto& rots = test_rotations(d_);
  RMatrix stacked(static_cast<int>(rots.size()) * total, total);
  for (std::size_t r = 0; r < rots.size(); ++r) {
    const int base = static_cast<int>(r) * total;
    const RMatrix dd = extend_scalar(rots[r]);
    const RMatrix ddinv = dd.inverse();
    const auto rows = as_rows(rots[r]);
    std::vector<HomPoly> sub;
    sub.reserve(mons.size());
    for (const Exp& m : mons)
      sub.push_back(HomPoly::monomial(d_, m, Rational(1)).substitute_linear(rows));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int mi = 0; mi < nm; ++mi) {
          const int col = (i * n + j) * nm + mi;
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
              const Rational c = ddinv.at(a, i) * dd.at(j, b);
              if (c.is_zero()) continue;
              for (const auto& [e, q] : sub[static_cast<std::size_t>(mi)].terms())
                stacked.at(base + (a * n + b) * nm + midx.at(e), col) += c * q;
            }
          stacked.at(base + col, col) -= Rational(1);
        }
  }
  return stacked.kernel_dimension();
}

const Rational& IsotropicDecomposition::coefficient(Family f, int k) const {
  const Rational* c = find(f, k);
  if (!c)
    throw Error("IsotropicDecomposition: no coefficient for " + family_text(f, k));
  return *c;
}

const Rational* IsotropicDecomposition::find(Family f, int k) const {
  for (const DecomposedTerm& t : terms)
    if (t.family == f && t.k == k) return &t.coeff;
  return nullptr;
}

IsotropicDecomposition decompose(const OpMatrix& op, const IsotropicBasis& basis) {
  const int d = basis.dimension();
  const int n = d + 1;
  if (op.rows() != n || op.cols() != n || op.dim() != d || op.degree() != basis.order())
    throw Error("decompose: operator shape does not match basis");
  KeyIndex keys;
  for (const BasisElement& e : basis.elements()) keys.collect(e.op);
  keys.collect(op);
  keys.number();
  RMatrix a(keys.size(), basis.size());
  for (int c = 0; c < basis.size(); ++c)
    fill_column(a, c, basis.elements()[static_cast<std::size_t>(c)].op, keys);
  RMatrix b(keys.size(), 1);
  fill_column(b, 0, op, keys);
  const RMatrix at = a.transpose();
  const RMatrix coef = (at * a).inverse() * (at * b);

  IsotropicDecomposition out{d, basis.order(), {}, op};
  for (int c = 0; c < basis.size(); ++c) {
    const BasisElement& e = basis.elements()[static_cast<std::size_t>(c)];
    out.terms.push_back({e.family, e.k, e.label, coef.at(c, 0)});
    out.residual -= coef.at(c, 0) * e.op;
  }
  OpMatrix back = out.residual;
  for (int c = 0; c < basis.size(); ++c)
    back += coef.at(c, 0) * basis.elements()[static_cast<std::size_t>(c)].op;
  if (back != op) throw Error("decompose: reconstruction identity failed");
  return out;
}

PhysicalCoefficients extract_physical(const std::vector<IsotropicDecomposition>& decs,
                                      const ParamPoint& p) {
  if (decs.empty() || decs.size() > 4)
    throw Error("extract_physical: supply decompositions for orders 1..4");
  const int d = decs.front().d;
  for (std::size_t j = 0; j < decs.size(); ++j) {
    if (decs[j].d != d || decs[j].ell != static_cast<int>(j) + 1)
      throw Error("extract_physical: decomposition " + std::to_string(j + 1) +
                  " out of order");
    if (!decs[j].isotropic())
      throw Error("extract_physical: nonzero residual at order " + std::to_string(j + 1));
  }
  const std::size_t levels = decs.size();
  const Rational dt = p.dt();
  auto coeff = [&](std::size_t order, Family f, int k) {
    const Rational* c = decs[order - 1].find(f, k);
    return c ? *c : Rational(0);
  };

  PhysicalCoefficients out;
  out.d = d;
  out.c0_sq = -coeff(1, Family::grad_lap_rho, 0);
  if (levels >= 2) {
    out.mu = dt * coeff(2, Family::lap_j, 1);
    out.zeta = dt * coeff(2, Family::grad_div_lap_j, 0);
    if (d == 2)
      out.gamma = (*out.mu + *out.zeta) / Rational(2);
    else
      out.zeta_b = Rational(3) * *out.zeta - *out.mu;
  }
  if (levels >= 3) {
    const Rational dt2 = dt * dt;
    out.xi = -(dt2 * coeff(3, Family::lap_div_j, 1));
    out.chi = -(dt2 * coeff(3, Family::grad_lap_rho, 1));
  }
  if (levels >= 4) {
    const Rational dt3 = dt * dt * dt;
    out.eta4 = -(dt3 * coeff(4, Family::lap_rho, 2));
    out.mu4 = -(dt3 * coeff(4, Family::lap_j, 2));
    out.zeta4 = -(dt3 * coeff(4, Family::grad_div_lap_j, 1));
  }
  return out;
}

}  // namespace lbiso
