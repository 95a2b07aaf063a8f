#pragma once

#include <cstddef>

#include "qring/boundary.hpp"
#include "qring/eigensolver.hpp"
#include "qring/gauge.hpp"
#include "qring/grid.hpp"

namespace qring {

// Momentum/wavelength bookkeeping for a winding state. The wavelength is
// 2*pi/winding, so zero winding is rejected up front.
struct DeBroglieRecord {
  double momentum;     // n
  int winding;         // m, nonzero
  double wavelength;   // 2*pi / m
  double gauge_jump;   // delta_xi
  double residual;     // |n*L - 2*pi + delta_xi*L/(2*pi)|
};

// Momentum selected by the continuity condition: n = m - delta_xi/(2*pi).
double linear_bc_momentum(int winding, double gauge_jump);

// The residual is zero exactly when (momentum, winding, gauge_jump) satisfy
// the continuity condition above; it is reported, never enforced.
DeBroglieRecord de_broglie_residual(double momentum, int winding,
                                    double gauge_jump);

// Builds the operator, gauges it, diagonalizes both, and returns the max
// absolute difference between the ascending spectra.
double verify_gauge_invariance(const RingGrid& grid,
                               const BoundarySpec& boundary,
                               const GaugeSpec& gauge,
                               double tol = kDefaultEighTol);

struct WindingShift {
  double lambda_before;  // eigenvalue of the chosen periodic-wrap eigenvector
  double lambda_after;   // Rayleigh quotient of the gauged vector in the gauged operator
  int winding_before;
  int winding_after;
};

// Gauges an eigenvector of the periodic-wrap operator pointwise by
// exp(i xi_j): the eigenvalue stays put while the winding absorbs the gauge
// jump, so momentum * wavelength = 2*pi fails for jumps off 2*pi*Z.
WindingShift winding_shift_demo(const RingGrid& grid, const GaugeSpec& gauge,
                                std::size_t eigen_index,
                                double tol = kDefaultEighTol);

}  // namespace qring
