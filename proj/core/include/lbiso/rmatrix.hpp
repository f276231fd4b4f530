#pragma once

#include "lbiso/rational.hpp"

#include <string>
#include <vector>

namespace lbiso {

/// Raised when exact elimination meets a structurally singular matrix;
/// stage reports the zero-pivot elimination column.
struct SingularMatrixError : Error {
  SingularMatrixError(int stage_, const std::string& what_) : Error(what_), stage(stage_) {}
  int stage;
};

/// Dense matrix of exact rationals with elimination-based exact solvers.
class RMatrix {
 public:
  RMatrix() : rows_(0), cols_(0) {}
  RMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static RMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_zero() const;

  RMatrix& operator+=(const RMatrix& o);
  RMatrix& operator-=(const RMatrix& o);
  friend RMatrix operator+(RMatrix a, const RMatrix& b) { return a += b; }
  friend RMatrix operator-(RMatrix a, const RMatrix& b) { return a -= b; }
  friend RMatrix operator*(const RMatrix& a, const RMatrix& b);
  friend RMatrix operator*(const Rational& c, RMatrix m);
  friend bool operator==(const RMatrix& a, const RMatrix& b);
  friend bool operator!=(const RMatrix& a, const RMatrix& b) { return !(a == b); }

  RMatrix transpose() const;

  /// Exact inverse by Gauss-Jordan elimination with first-nonzero pivoting.
  /// Throws SingularMatrixError naming the failing stage.
  RMatrix inverse() const;

  /// In-place reduction to reduced row echelon form; returns pivot columns in
  /// elimination order.  Deterministic: scans columns left to right and picks
  /// the first row with a nonzero entry.
  std::vector<int> rref();

  /// Dimension of the right kernel, computed exactly.
  int kernel_dimension() const;

  std::string to_string() const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

}  // namespace lbiso
