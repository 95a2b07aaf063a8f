#include "qring/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qring/errors.hpp"

namespace qring {

namespace {

constexpr int kMaxSweeps = 50;

// Householder reduction of a Hermitian matrix to real symmetric tridiagonal
// form. On return d holds the diagonal and e the subdiagonal magnitudes
// (e[0] = 0); q accumulates the unitary similarity, subdiagonal phases
// included, so m = q * tridiag(d, e) * q^dagger.
void tridiagonalize(CMatrix& a, CMatrix& q, std::vector<double>& d,
                    std::vector<double>& e) {
  const std::size_t n = a.rows();
  std::vector<cplx> u(n), w(n), p(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double scale = 0.0;
    for (std::size_t i = k + 1; i < n; ++i)
      scale += std::abs(a(i, k).real()) + std::abs(a(i, k).imag());
    if (scale == 0.0) continue;
    double below = 0.0;
    for (std::size_t i = k + 2; i < n; ++i)
      below += std::abs(a(i, k).real()) + std::abs(a(i, k).imag());
    if (below == 0.0) continue;  // column already tridiagonal

    double sumsq = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx t = a(i, k) / scale;
      sumsq += std::norm(t);
    }
    const double xnorm = scale * std::sqrt(sumsq);
    const cplx x0 = a(k + 1, k);
    const double ax0 = std::abs(x0);
    const cplx dir = ax0 > 0.0 ? x0 / ax0 : cplx(1.0, 0.0);
    const cplx alpha = -dir * xnorm;  // sign choice avoids cancellation in u

    double unorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) u[i] = a(i, k);
    u[k + 1] -= alpha;
    for (std::size_t i = k + 1; i < n; ++i) unorm2 += std::norm(u[i]);
    const double unorm = std::sqrt(unorm2);
    if (unorm == 0.0) continue;
    for (std::size_t i = k + 1; i < n; ++i) u[i] /= unorm;

    // trailing block B <- (I - 2uu†) B (I - 2uu†) as a Hermitian rank-2
    // update: with w = B u, c = u†Bu, p = w - c u it equals
    // B - 2 u p† - 2 p u†.
    for (std::size_t i = k + 1; i < n; ++i) {
      cplx s(0.0, 0.0);
      for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * u[j];
      w[i] = s;
    }
    double c = 0.0;
    for (std::size_t i = k + 1; i < n; ++i)
      c += (std::conj(u[i]) * w[i]).real();
    for (std::size_t i = k + 1; i < n; ++i) p[i] = w[i] - c * u[i];
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) -= 2.0 * (u[i] * std::conj(p[j]) + p[i] * std::conj(u[j]));

    a(k + 1, k) = alpha;
    a(k, k + 1) = std::conj(alpha);
    for (std::size_t i = k + 2; i < n; ++i) {
      a(i, k) = cplx(0.0, 0.0);
      a(k, i) = cplx(0.0, 0.0);
    }

    // q <- q (I - 2uu†)
    for (std::size_t row = 0; row < n; ++row) {
      cplx t(0.0, 0.0);
      for (std::size_t j = k + 1; j < n; ++j) t += q(row, j) * u[j];
      t *= 2.0;
      for (std::size_t j = k + 1; j < n; ++j) q(row, j) -= t * std::conj(u[j]);
    }
  }

  // rotate the residual subdiagonal phases into q's columns
  d.resize(n);
  e.assign(n, 0.0);
  cplx colphase(1.0, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    const cplx s = a(i, i - 1);
    const double mag = std::abs(s);
    e[i] = mag;
    if (mag > 0.0) colphase *= s / mag;
    if (colphase != cplx(1.0, 0.0))
      for (std::size_t row = 0; row < n; ++row) q(row, i) *= colphase;
  }
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
}

// Implicit-shift QL on the real symmetric tridiagonal (d, e), rotations
// accumulated into the columns of z (row-major n x n). e[i] couples
// d[i-1] and d[i] on entry.
void ql_implicit(std::vector<double>& d, std::vector<double>& e,
                 std::vector<double>& z, std::size_t n) {
  if (n < 2) return;
  const double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == kMaxSweeps)
          throw ConvergenceError(
              l, "eigenvalue " + std::to_string(l) + " did not converge in " +
                     std::to_string(kMaxSweeps) + " sweeps");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double pp = 0.0;
        bool underflow = false;
        for (std::size_t i = m; i-- > l;) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= pp;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - pp;
          r = (d[i] - g) * s + 2.0 * c * b;
          pp = s * r;
          d[i + 1] = g + pp;
          g = c * r - b;
          for (std::size_t row = 0; row < n; ++row) {
            f = z[row * n + i + 1];
            z[row * n + i + 1] = s * z[row * n + i] + c * f;
            z[row * n + i] = c * z[row * n + i] - s * f;
          }
        }
        if (underflow) continue;
        d[l] -= pp;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

std::vector<cplx> Spectrum::eigenvector(std::size_t i) const {
  if (i >= eigenvalues.size())
    throw DimensionError("eigenvector index out of range");
  std::vector<cplx> v(vectors.rows());
  for (std::size_t row = 0; row < v.size(); ++row) v[row] = vectors(row, i);
  return v;
}

Spectrum eigh(const CMatrix& m, double tol) {
  if (!m.square()) throw DimensionError("eigh needs a square, nonempty matrix");
  const std::size_t n = m.rows();
  const double fnorm = m.frobenius_norm();
  const double defect = m.hermiticity_defect();
  if (defect > tol * fnorm)
    throw NotHermitianError("hermiticity defect " + std::to_string(defect) +
                            " exceeds " + std::to_string(tol * fnorm));

  CMatrix a = m;
  CMatrix q = CMatrix::identity(n);
  std::vector<double> d, e;
  tridiagonalize(a, q, d, e);

  std::vector<double> z(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;
  ql_implicit(d, e, z, n);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });

  Spectrum out;
  out.tol = tol;
  out.eigenvalues.resize(n);
  out.vectors = CMatrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.eigenvalues[col] = d[src];
    double nrm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cplx s(0.0, 0.0);
      for (std::size_t j = 0; j < n; ++j) s += q(i, j) * z[j * n + src];
      out.vectors(i, col) = s;
      nrm2 += std::norm(s);
    }
    const double nrm = std::sqrt(nrm2);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, col) /= nrm;
  }

  // contract diagnostics against the original matrix
  std::vector<cplx> v(n);
  std::size_t worst_index = 0;
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = 0; i < n; ++i) v[i] = out.vectors(i, col);
    const std::vector<cplx> mv = m.apply(v);
    double rsq = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      rsq += std::norm(mv[i] - out.eigenvalues[col] * v[i]);
    const double res = std::sqrt(rsq);
    if (res > out.max_residual) {
      out.max_residual = res;
      worst_index = col;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      cplx s(0.0, 0.0);
      for (std::size_t row = 0; row < n; ++row)
        s += std::conj(out.vectors(row, i)) * out.vectors(row, j);
      const double ov = std::abs(s);
      if (ov > out.max_offdiag_overlap) out.max_offdiag_overlap = ov;
    }

  if (out.max_residual > tol * fnorm)
    throw ConvergenceError(worst_index,
                           "residual " + std::to_string(out.max_residual) +
                               " exceeds contract " +
                               std::to_string(tol * fnorm));
  if (out.max_offdiag_overlap > tol)
    throw ConvergenceError(worst_index,
                           "eigenvector overlap " +
                               std::to_string(out.max_offdiag_overlap) +
                               " exceeds contract " + std::to_string(tol));
  return out;
}

double residual(const CMatrix& m, double lambda, std::span<const cplx> v) {
  if (!m.square() || v.size() != m.rows())
    throw DimensionError("residual: matrix and vector sizes disagree");
  const std::vector<cplx> mv = m.apply(v);
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += std::norm(mv[i] - lambda * v[i]);
  return std::sqrt(s);
}

}  // namespace qring
