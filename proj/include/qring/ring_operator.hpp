#pragma once

#include <optional>

#include "qring/boundary.hpp"
#include "qring/gauge.hpp"
#include "qring/grid.hpp"
#include "qring/matrix.hpp"

namespace qring {

// Central-difference momentum matrix -i d/dx on the ring: zero except for
// the super-diagonal, the sub-diagonal, and the two corner entries that
// carry the boundary condition. Hermitian by construction, entrywise.
struct RingOperator {
  CMatrix entries;
  RingGrid grid;
  BoundarySpec boundary;
  std::optional<GaugeSpec> gauge;
};

// Periodic wrap: corners (1,r) = +i/(2dx), (r,1) = -i/(2dx).
RingOperator build_linear(const RingGrid& grid);

// Same stencil with the corners rotated in opposite directions by
// delta_alpha; the sign convention picks the rotation direction.
RingOperator build_twisted(const RingGrid& grid, double delta_alpha,
                           BoundarySign sign = BoundarySign::FigureB1);

// Conjugation by the diagonal unitary diag(exp(i xi_j)): every nonzero
// entry (j,k) picks up exp(i (xi_j - xi_k)). Exactly spectrum-preserving
// for any gauge, jump included.
RingOperator apply_gauge(const RingOperator& op, const GaugeSpec& gauge);

double hermiticity_defect(const RingOperator& op);

}  // namespace qring
