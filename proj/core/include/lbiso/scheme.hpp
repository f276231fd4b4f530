#pragma once

#include "lbiso/expr.hpp"
#include "lbiso/hompoly.hpp"
#include "lbiso/params.hpp"
#include "lbiso/rmatrix.hpp"

#include <array>
#include <string>
#include <vector>

namespace lbiso {

/// Integer lattice velocities; actual velocities are lambda times these.
struct VelocitySet {
  int d = 0;
  std::vector<std::array<int, 3>> c;

  int q() const { return static_cast<int>(c.size()); }
  void validate() const;
};

/// One moment row: a polynomial in the velocity components X, Y, (Z) and the
/// scale L, homogeneous of the row's degree tag.  The moment value for
/// velocity v_j is poly evaluated at (lambda*c_j, lambda).
struct MomentRow {
  std::string name;
  HomPoly poly;

  int degree() const { return poly.degree(); }
};

/// A linear relaxation scheme: velocity set, moment basis, linear equilibrium
/// for the non-conserved moments, and diagonal relaxation rates.
///
/// Rows 0..N-1 with N = d+1 are the conserved moments (density, momentum) and
/// must be exactly 1, X, Y, (Z).  Equilibrium entries are expressions over the
/// parameter point; relaxation entries give the rate s_k per slave row.
class Scheme {
 public:
  Scheme(std::string name, VelocitySet vel, std::vector<MomentRow> rows,
         std::vector<std::vector<Expr>> equilibrium, std::vector<Expr> rates);

  const std::string& name() const { return name_; }
  int d() const { return vel_.d; }
  int q() const { return vel_.q(); }
  int ncons() const { return vel_.d + 1; }
  int nslave() const { return q() - ncons(); }

  const VelocitySet& velocities() const { return vel_; }
  const std::vector<MomentRow>& rows() const { return rows_; }
  const MomentRow& row(int k) const { return rows_.at(k); }
  /// Index of the moment row with the given name; throws when absent.
  int row_index(const std::string& name) const;

  const std::vector<std::vector<Expr>>& equilibrium() const { return eq_; }
  const std::vector<Expr>& rate_exprs() const { return rate_; }

  /// Moment matrix M with M[k][j] = p_k(lambda c_j, lambda).
  RMatrix moment_matrix(const Rational& lambda) const;
  /// Equilibrium coupling E, shape (q-N) x N, evaluated at p.
  RMatrix equilibrium_matrix(const ParamPoint& p) const;
  /// Relaxation rates s_k for slave rows, evaluated at p.
  std::vector<Rational> rates(const ParamPoint& p) const;

  /// One-step moment-space update J0 = [[I, 0], [S E, I - S]], shape q x q.
  RMatrix j0(const ParamPoint& p) const;

  /// Structural checks: distinct velocities, conserved rows, invertibility of
  /// the moment matrix at lambda = 1, unique row names.  Throws Error.
  void validate() const;

 private:
  std::string name_;
  VelocitySet vel_;
  std::vector<MomentRow> rows_;
  std::vector<std::vector<Expr>> eq_;
  std::vector<Expr> rate_;
};

}  // namespace lbiso
