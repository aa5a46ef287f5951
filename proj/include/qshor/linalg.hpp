#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace qshor {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Row-major 2x2 complex matrix: {m00, m01, m10, m11}.
using Mat2 = std::array<cplx, 4>;

inline Mat2 identity2() { return {cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}}; }

inline Mat2 operator*(const Mat2& l, const Mat2& r) {
  return {l[0] * r[0] + l[1] * r[2], l[0] * r[1] + l[1] * r[3],
          l[2] * r[0] + l[3] * r[2], l[2] * r[1] + l[3] * r[3]};
}

inline Mat2 adjoint(const Mat2& m) {
  return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

inline Mat2 scaled(const Mat2& m, cplx s) { return {m[0] * s, m[1] * s, m[2] * s, m[3] * s}; }

/// Max-abs entry of U^dagger U - I.
double unitarity_error(const Mat2& m);

/// Square dense complex matrix, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static DenseMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const cplx& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

  DenseMatrix operator*(const DenseMatrix& rhs) const;
  DenseMatrix adjoint() const;
  DenseMatrix scaled(cplx s) const;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// max |a - e^{i phase} b| where the phase aligns the largest-magnitude entry of b.
double max_abs_diff_up_to_phase(const DenseMatrix& a, const DenseMatrix& b);

/// Max-abs entry of U^dagger U - I.
double unitarity_error(const DenseMatrix& m);

}  // namespace qshor
