#include "lbiso/rmatrix.hpp"

#include <sstream>

namespace lbiso {

RMatrix RMatrix::identity(int n) {
  RMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

bool RMatrix::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

RMatrix& RMatrix::operator+=(const RMatrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw Error("RMatrix: shape mismatch in addition");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

RMatrix& RMatrix::operator-=(const RMatrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw Error("RMatrix: shape mismatch in subtraction");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("RMatrix: shape mismatch in product");
  RMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

RMatrix operator*(const Rational& c, RMatrix m) {
  for (auto& v : m.a_) v *= c;
  return m;
}

bool operator==(const RMatrix& a, const RMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

RMatrix RMatrix::transpose() const {
  RMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RMatrix RMatrix::inverse() const {
  if (rows_ != cols_) throw Error("RMatrix: inverse of non-square matrix");
  const int n = rows_;
  RMatrix a = *this;
  RMatrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) {
      std::ostringstream os;
      os << "RMatrix: singular at elimination stage " << col;
      throw SingularMatrixError(col, os.str());
    }
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Rational d = a.at(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      a.at(col, j) *= d;
      inv.at(col, j) *= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Rational f = a.at(r, col);
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::vector<int> RMatrix::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int piv = -1;
    for (int r = row; r < rows_; ++r)
      if (!at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < cols_; ++j) std::swap(at(piv, j), at(row, j));
    Rational d = at(row, col).inverse();
    for (int j = 0; j < cols_; ++j) at(row, j) *= d;
    for (int r = 0; r < rows_; ++r) {
      if (r == row) continue;
      Rational f = at(r, col);
      if (f.is_zero()) continue;
      for (int j = 0; j < cols_; ++j) at(r, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int RMatrix::kernel_dimension() const {
  RMatrix copy = *this;
  auto pivots = copy.rref();
  return cols_ - static_cast<int>(pivots.size());
}

std::string RMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j);
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

}  // namespace lbiso
