#include "qshor/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qshor {

double unitarity_error(const Mat2& m) {
  const Mat2 p = adjoint(m) * m;
  const Mat2 id = identity2();
  double err = 0.0;
  for (std::size_t i = 0; i < 4; ++i) err = std::max(err, std::abs(p[i] - id[i]));
  return err;
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("matrix dimension mismatch");
  DenseMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const cplx v = (*this)(i, k);
      if (v == cplx{}) continue;
      for (std::size_t j = 0; j < dim_; ++j) out(i, j) += v * rhs(k, j);
    }
  }
  return out;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

DenseMatrix DenseMatrix::scaled(cplx s) const {
  DenseMatrix out = *this;
  for (auto& v : out.data_) v *= s;
  return out;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  double err = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) err = std::max(err, std::abs(a(i, j) - b(i, j)));
  return err;
}

double max_abs_diff_up_to_phase(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  std::size_t bi = 0, bj = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      if (std::abs(b(i, j)) > best) {
        best = std::abs(b(i, j));
        bi = i;
        bj = j;
      }
    }
  }
  if (best <= 0.0 || std::abs(a(bi, bj)) <= 0.0) return max_abs_diff(a, b);
  const cplx ratio = a(bi, bj) / b(bi, bj);
  return max_abs_diff(a, b.scaled(ratio / std::abs(ratio)));
}

double unitarity_error(const DenseMatrix& m) {
  return max_abs_diff(m.adjoint() * m, DenseMatrix::identity(m.dim()));
}

}  // namespace qshor
