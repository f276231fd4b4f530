#include "lbiso/opmatrix.hpp"

#include <sstream>

namespace lbiso {

OpMatrix::OpMatrix(int rows, int cols, int dim, int degree)
    : rows_(rows), cols_(cols), dim_(dim), degree_(degree),
      e_(static_cast<std::size_t>(rows) * cols, HomPoly(dim, degree)) {
  if (rows < 0 || cols < 0) throw Error("OpMatrix: negative shape");
}

OpMatrix OpMatrix::identity(int n, int dim) {
  OpMatrix m(n, n, dim, 0);
  for (int i = 0; i < n; ++i) m.at(i, i) = HomPoly::constant(dim, Rational(1));
  return m;
}

OpMatrix OpMatrix::from_rational(const RMatrix& r, int dim) {
  OpMatrix m(r.rows(), r.cols(), dim, 0);
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j)
      if (!r.at(i, j).is_zero()) m.at(i, j) = HomPoly::constant(dim, r.at(i, j));
  return m;
}

bool OpMatrix::is_zero() const {
  for (const auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

OpMatrix& OpMatrix::operator+=(const OpMatrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_ || o.degree_ != degree_ || o.dim_ != dim_)
    throw Error("OpMatrix: shape or degree mismatch in addition");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

OpMatrix& OpMatrix::operator-=(const OpMatrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_ || o.degree_ != degree_ || o.dim_ != dim_)
    throw Error("OpMatrix: shape or degree mismatch in subtraction");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

OpMatrix OpMatrix::operator-() const {
  OpMatrix r(rows_, cols_, dim_, degree_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
  return r;
}

OpMatrix operator*(const OpMatrix& a, const OpMatrix& b) {
  if (a.cols_ != b.rows_ || a.dim_ != b.dim_) throw Error("OpMatrix: shape mismatch in product");
  OpMatrix r(a.rows_, b.cols_, a.dim_, a.degree_ + b.degree_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const HomPoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const HomPoly& bkj = b.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

OpMatrix operator*(const Rational& c, OpMatrix m) {
  for (auto& p : m.e_) p = c * p;
  return m;
}

bool operator==(const OpMatrix& a, const OpMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.dim_ == b.dim_ &&
         a.degree_ == b.degree_ && a.e_ == b.e_;
}

OpMatrix OpMatrix::block(int r0, int c0, int nrows, int ncols) const {
  if (r0 < 0 || c0 < 0 || r0 + nrows > rows_ || c0 + ncols > cols_)
    throw Error("OpMatrix: block out of range");
  OpMatrix b(nrows, ncols, dim_, degree_);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) b.at(i, j) = at(r0 + i, c0 + j);
  return b;
}

OpMatrix OpMatrix::scale_rows(const std::vector<Rational>& d) const {
  if (static_cast<int>(d.size()) != rows_) throw Error("OpMatrix: row scale size");
  OpMatrix r(rows_, cols_, dim_, degree_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = d[i] * at(i, j);
  return r;
}

std::string OpMatrix::to_string() const {
  std::ostringstream os;
  const auto& names = deriv_names(dim_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) os << (j ? " | " : "") << at(i, j).to_string(names);
    os << "\n";
  }
  return os.str();
}

}  // namespace lbiso
