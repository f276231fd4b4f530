#pragma once

#include "lbiso/opmatrix.hpp"
#include "lbiso/scheme.hpp"

#include <vector>

namespace lbiso {

/// Taylor blocks of the one-step evolution in moment space.
///
/// F[n] is the q x q operator matrix of degree n with
///   F[n] = (1/n!) M diag((-v_j . del)^n) M^{-1} J0,
/// so F[0] = J0.  A, B, C, D are the conserved/slave sub-blocks.
struct DerivativeBlocks {
  int ncons = 0;
  int nslave = 0;
  std::vector<OpMatrix> F;

  OpMatrix A(int n) const { return F.at(n).block(0, 0, ncons, ncons); }
  OpMatrix B(int n) const { return F.at(n).block(0, ncons, ncons, nslave); }
  OpMatrix C(int n) const { return F.at(n).block(ncons, 0, nslave, ncons); }
  OpMatrix D(int n) const { return F.at(n).block(ncons, ncons, nslave, nslave); }
};

DerivativeBlocks derivative_blocks(const Scheme& s, const ParamPoint& p, int order);

/// Equivalent-equation expansion up to a given order.
///
/// alpha[j-1] is the N x N operator of degree j in the conserved-moment
/// evolution d_t W = sum_j dt^(j-1) alpha_j W; beta[m] is the (q-N) x N
/// operator of degree m in the slaved-moment expansion Y = sum_m dt^m beta_m W
/// with beta[0] = E.
struct Expansion {
  std::vector<OpMatrix> alpha;
  std::vector<OpMatrix> beta;

  const OpMatrix& a(int j) const { return alpha.at(j - 1); }
  const OpMatrix& b(int m) const { return beta.at(m); }
  int order() const { return static_cast<int>(alpha.size()); }
};

/// Generic recurrence over composition sums; works for any order >= 1.
Expansion expand(const Scheme& s, const ParamPoint& p, int order);

/// Hand-rolled ladder for orders 1..4, kept as an independent code path.
Expansion expand_ladder(const Scheme& s, const ParamPoint& p, int order);

}  // namespace lbiso
