#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qring {

using cplx = std::complex<double>;

// Dense row-major complex matrix: just enough linear algebra for ring
// operators and their diagnostics.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit CMatrix(std::size_t n) : CMatrix(n, n) {}

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_ && rows_ > 0; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<cplx> apply(std::span<const cplx> v) const;  // M v

  double frobenius_norm() const;

  // max over (i,j) of |m(i,j) - conj(m(j,i))|; square matrices only
  double hermiticity_defect() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

double norm2(std::span<const cplx> v);

// <a, b>, conjugate-linear in the first argument
cplx inner(std::span<const cplx> a, std::span<const cplx> b);

}  // namespace qring
