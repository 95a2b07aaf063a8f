#include "qring/matrix.hpp"

#include <cmath>

#include "qring/errors.hpp"

namespace qring {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = cplx(1.0, 0.0);
  return m;
}

std::vector<cplx> CMatrix::apply(std::span<const cplx> v) const {
  if (v.size() != cols_)
    throw DimensionError("matrix-vector size mismatch: " +
                         std::to_string(cols_) + " columns vs vector of " +
                         std::to_string(v.size()));
  std::vector<cplx> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    cplx s(0.0, 0.0);
    const cplx* row = data_.data() + i * cols_;
    for (std::size_t j = 0; j < cols_; ++j) s += row[j] * v[j];
    out[i] = s;
  }
  return out;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double CMatrix::hermiticity_defect() const {
  if (!square()) throw DimensionError("hermiticity defect needs a square matrix");
  double worst = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const double d = std::abs((*this)(i, j) - std::conj((*this)(j, i)));
      if (d > worst) worst = d;
    }
  return worst;
}

double norm2(std::span<const cplx> v) {
  double s = 0.0;
  for (const cplx& z : v) s += std::norm(z);
  return std::sqrt(s);
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw DimensionError("inner product size mismatch");
  cplx s(0.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace qring
