#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qring/matrix.hpp"

namespace qring {

inline constexpr double kDefaultEighTol = 1e-10;

// Full eigendecomposition of a complex Hermitian matrix with its contract
// diagnostics recorded. Eigenvalues ascending; ties keep reduction order.
struct Spectrum {
  std::vector<double> eigenvalues;
  CMatrix vectors;                   // column i pairs with eigenvalues[i]
  double max_residual = 0.0;         // max_i ||M v_i - lambda_i v_i||_2
  double max_offdiag_overlap = 0.0;  // max_{i != j} |<v_i, v_j>|
  double tol = 0.0;

  std::vector<cplx> eigenvector(std::size_t i) const;
};

// Householder reduction to a real symmetric tridiagonal (unitary
// similarity, subdiagonal phases folded into the transform), implicit-shift
// QL with eigenvector accumulation, back-transformation. No randomness;
// identical input bits give identical output bits. The iteration cap is 50
// sweeps per eigenvalue; exceeding it throws rather than returning a
// best-effort answer. Residual and pairwise-overlap contracts are checked
// against tol (scaled by the Frobenius norm for residuals) before returning.
Spectrum eigh(const CMatrix& m, double tol = kDefaultEighTol);

// ||M v - lambda v||_2
double residual(const CMatrix& m, double lambda, std::span<const cplx> v);

}  // namespace qring
