#pragma once

#include "lbiso/hompoly.hpp"
#include "lbiso/rmatrix.hpp"

#include <string>
#include <vector>

namespace lbiso {

/// Matrix whose entries are homogeneous constant-coefficient differential
/// operators of one common degree.  Products add degrees; sums require equal
/// degree.  Entries commute (constant coefficients) but matrices do not.
class OpMatrix {
 public:
  OpMatrix(int rows, int cols, int dim, int degree);

  static OpMatrix identity(int n, int dim);
  static OpMatrix from_rational(const RMatrix& m, int dim);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int dim() const { return dim_; }
  int degree() const { return degree_; }

  HomPoly& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const HomPoly& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_zero() const;

  OpMatrix& operator+=(const OpMatrix& o);
  OpMatrix& operator-=(const OpMatrix& o);
  friend OpMatrix operator+(OpMatrix a, const OpMatrix& b) { return a += b; }
  friend OpMatrix operator-(OpMatrix a, const OpMatrix& b) { return a -= b; }
  OpMatrix operator-() const;
  friend OpMatrix operator*(const OpMatrix& a, const OpMatrix& b);
  friend OpMatrix operator*(const Rational& c, OpMatrix m);
  friend bool operator==(const OpMatrix& a, const OpMatrix& b);
  friend bool operator!=(const OpMatrix& a, const OpMatrix& b) { return !(a == b); }

  OpMatrix block(int r0, int c0, int nrows, int ncols) const;
  /// Multiplies row i by d[i]; used for applying diagonal relaxation inverses.
  OpMatrix scale_rows(const std::vector<Rational>& d) const;

  std::string to_string() const;

 private:
  int rows_, cols_, dim_, degree_;
  std::vector<HomPoly> e_;
};

}  // namespace lbiso
