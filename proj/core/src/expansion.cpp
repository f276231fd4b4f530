#include "lbiso/expansion.hpp"

#include <map>

namespace lbiso {

namespace {

Rational factorial(int n) {
  Rational f(1);
  for (int i = 2; i <= n; ++i) f *= Rational(i);
  return f;
}

std::vector<Rational> slave_rate_inverses(const Scheme& s, const ParamPoint& p) {
  std::vector<Rational> inv;
  for (const Rational& rate : s.rates(p)) {
    if (rate.is_zero()) throw Error("expansion: relaxation rate is zero");
    inv.push_back(rate.inverse());
  }
  return inv;
}

}  // namespace

DerivativeBlocks derivative_blocks(const Scheme& s, const ParamPoint& p, int order) {
  if (order < 0) throw Error("derivative_blocks: negative order");
  const int q = s.q(), d = s.d();
  const Rational lambda = p.lambda();

  RMatrix M = s.moment_matrix(lambda);
  RMatrix Minv = M.inverse();
  RMatrix J0 = s.j0(p);
  OpMatrix J0op = OpMatrix::from_rational(J0, d);

  // transport[j] = -v_j . del, degree 1
  std::vector<HomPoly> transport;
  transport.reserve(q);
  for (int j = 0; j < q; ++j) {
    HomPoly t(d, 1);
    for (int a = 0; a < d; ++a) {
      Exp e{0, 0, 0, 0};
      e[a] = 1;
      t.add_term(e, -lambda * Rational(s.velocities().c[j][a]));
    }
    transport.push_back(t);
  }

  DerivativeBlocks out;
  out.ncons = s.ncons();
  out.nslave = s.nslave();
  out.F.reserve(order + 1);
  out.F.push_back(J0op);

  std::vector<HomPoly> power(q, HomPoly::constant(d, Rational(1)));
  for (int n = 1; n <= order; ++n) {
    for (int j = 0; j < q; ++j) power[j] = power[j] * transport[j];
    // G = M diag(power) M^{-1}, assembled without forming the diagonal matrix.
    OpMatrix G(q, q, d, n);
    for (int i = 0; i < q; ++i)
      for (int jcol = 0; jcol < q; ++jcol) {
        HomPoly& acc = G.at(i, jcol);
        for (int j = 0; j < q; ++j) {
          const Rational& mij = M.at(i, j);
          if (mij.is_zero()) continue;
          const Rational& mj = Minv.at(j, jcol);
          if (mj.is_zero()) continue;
          acc += (mij * mj) * power[j];
        }
      }
    out.F.push_back(factorial(n).inverse() * (G * J0op));
  }
  return out;
}

namespace {

/// Shared state for both expansion code paths.
struct Builder {
  const DerivativeBlocks& blocks;
  std::vector<Rational> sinv;
  int ncons, nslave, dim;
  std::vector<OpMatrix> alpha;  // alpha[j-1], degree j
  std::vector<OpMatrix> beta;   // beta[m], degree m

  Builder(const Scheme& s, const ParamPoint& p, const DerivativeBlocks& b, int order)
      : blocks(b), sinv(slave_rate_inverses(s, p)), ncons(s.ncons()), nslave(s.nslave()),
        dim(s.d()) {
    // References into alpha/beta stay valid across pushes.
    alpha.reserve(order + 1);
    beta.reserve(order + 1);
    beta.push_back(OpMatrix::from_rational(s.equilibrium_matrix(p), dim));
  }

  const OpMatrix& a(int j) const { return alpha[j - 1]; }

  /// Gamma^j_n: sum over compositions of n into j positive parts of the
  /// ordered products alpha_{l1} ... alpha_{lj}.  Computed by the head-split
  /// recursion Gamma^j_n = sum_m alpha_m Gamma^{j-1}_{n-m}.
  const OpMatrix& gamma(int j, int n) {
    auto key = std::make_pair(j, n);
    auto it = gamma_cache.find(key);
    if (it != gamma_cache.end()) return it->second;
    OpMatrix g(ncons, ncons, dim, n);
    if (j == 0) {
      if (n == 0) g = OpMatrix::identity(ncons, dim);
    } else if (j == 1) {
      g = a(n);
    } else {
      for (int m = 1; m <= n - j + 1; ++m) g += a(m) * gamma(j - 1, n - m);
    }
    return gamma_cache.emplace(key, std::move(g)).first->second;
  }

  /// K^j_n = sum_{m + l = n - j} beta_m Gamma^j_{j + l}.
  OpMatrix kappa(int j, int n) {
    OpMatrix k(nslave, ncons, dim, n);
    for (int m = 0; m + j <= n && m < static_cast<int>(beta.size()); ++m)
      k += beta[m] * gamma(j, n - m);
    return k;
  }

  void push_alpha(OpMatrix v) { alpha.push_back(std::move(v)); }
  void push_beta(OpMatrix numerator) { beta.push_back(numerator.scale_rows(sinv)); }

  Expansion take() { return Expansion{std::move(alpha), std::move(beta)}; }

 private:
  std::map<std::pair<int, int>, OpMatrix> gamma_cache;
};

}  // namespace

Expansion expand(const Scheme& s, const ParamPoint& p, int order) {
  if (order < 1) throw Error("expand: order must be >= 1");
  DerivativeBlocks blocks = derivative_blocks(s, p, order);
  Builder b(s, p, blocks, order);

  for (int n = 1; n <= order; ++n) {
    // alpha_n = A_n + sum_{j=1..n} B_j beta_{n-j} - sum_{j=2..n} (1/j!) Gamma^j_n
    OpMatrix an = blocks.A(n);
    for (int j = 1; j <= n; ++j)
      if (n - j < static_cast<int>(b.beta.size())) an += blocks.B(j) * b.beta[n - j];
    for (int j = 2; j <= n; ++j) an -= factorial(j).inverse() * b.gamma(j, n);
    b.push_alpha(std::move(an));

    if (n >= order) break;
    // S beta_n = C_n + sum_{j=1..n} D_j beta_{n-j} - sum_{j=1..n} (1/j!) K^j_n
    OpMatrix bn = blocks.C(n);
    for (int j = 1; j <= n; ++j) bn += blocks.D(j) * b.beta[n - j];
    for (int j = 1; j <= n; ++j) bn -= factorial(j).inverse() * b.kappa(j, n);
    b.push_beta(std::move(bn));
  }
  return b.take();
}

Expansion expand_ladder(const Scheme& s, const ParamPoint& p, int order) {
  if (order < 1 || order > 4) throw Error("expand_ladder: order must be 1..4");
  DerivativeBlocks bl = derivative_blocks(s, p, order);
  Builder b(s, p, bl, order);
  const Rational half(1, 2), sixth(1, 6), day(1, 24);

  const OpMatrix E = b.beta[0];
  OpMatrix a1 = bl.A(1) + bl.B(1) * E;
  b.push_alpha(a1);
  if (order == 1) return b.take();

  b.push_beta(bl.C(1) + bl.D(1) * E - E * a1);
  const OpMatrix& b1 = b.beta[1];
  OpMatrix a2 = bl.A(2) + bl.B(2) * E + bl.B(1) * b1 - half * (a1 * a1);
  b.push_alpha(a2);
  if (order == 2) return b.take();

  {
    OpMatrix k1 = E * a2 + b1 * a1;
    OpMatrix k2 = E * (a1 * a1);
    b.push_beta(bl.C(2) + bl.D(2) * E + bl.D(1) * b1 - k1 - half * k2);
  }
  const OpMatrix& b2 = b.beta[2];
  OpMatrix g23 = a1 * a2 + a2 * a1;
  OpMatrix g33 = a1 * (a1 * a1);
  OpMatrix a3 =
      bl.A(3) + bl.B(3) * E + bl.B(2) * b1 + bl.B(1) * b2 - half * g23 - sixth * g33;
  b.push_alpha(a3);
  if (order == 3) return b.take();

  {
    OpMatrix k1 = E * a3 + b1 * a2 + b2 * a1;
    OpMatrix k2 = E * g23 + b1 * (a1 * a1);
    OpMatrix k3 = E * g33;
    b.push_beta(bl.C(3) + bl.D(3) * E + bl.D(2) * b1 + bl.D(1) * b2 - k1 - half * k2 -
                sixth * k3);
  }
  const OpMatrix& b3 = b.beta[3];
  OpMatrix g24 = a1 * a3 + a2 * a2 + a3 * a1;
  OpMatrix g34 = (a1 * a1) * a2 + a1 * (a2 * a1) + a2 * (a1 * a1);
  OpMatrix g44 = (a1 * a1) * (a1 * a1);
  OpMatrix a4 = bl.A(4) + bl.B(4) * E + bl.B(3) * b1 + bl.B(2) * b2 + bl.B(1) * b3 -
                half * g24 - sixth * g34 - day * g44;
  b.push_alpha(a4);
  return b.take();
}

}  // namespace lbiso
