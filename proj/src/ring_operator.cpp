#include "qring/ring_operator.hpp"

#include <cmath>
#include <complex>

#include "qring/errors.hpp"

namespace qring {

RingOperator build_linear(const RingGrid& grid) {
  const std::size_t r = grid.points;
  if (r < 3) throw InvalidGridError("operator needs a grid of at least 3 points");
  CMatrix m(r);
  const double c = 1.0 / (2.0 * grid.spacing);
  for (std::size_t j = 0; j + 1 < r; ++j) {
    m(j, j + 1) = cplx(0.0, -c);
    m(j + 1, j) = cplx(0.0, +c);
  }
  m(0, r - 1) = cplx(0.0, +c);
  m(r - 1, 0) = cplx(0.0, -c);
  return {std::move(m), grid, BoundarySpec::linear(), std::nullopt};
}

RingOperator build_twisted(const RingGrid& grid, double delta_alpha,
                           BoundarySign sign) {
  RingOperator op = build_linear(grid);
  const std::size_t r = grid.points;
  const double c = 1.0 / (2.0 * grid.spacing);
  const double phase = wrap_sign(sign) * delta_alpha;
  // Shared cos/sin keep the two corners exact conjugates of each other.
  const double cs = std::cos(phase);
  const double sn = std::sin(phase);
  op.entries(0, r - 1) = cplx(-c * sn, +c * cs);  // +i e^{+i phase} / (2dx)
  op.entries(r - 1, 0) = cplx(-c * sn, -c * cs);  // -i e^{-i phase} / (2dx)
  op.boundary = BoundarySpec::twisted(delta_alpha, sign);
  return op;
}

RingOperator apply_gauge(const RingOperator& op, const GaugeSpec& gauge) {
  if (!gauge.grid().same_layout(op.grid))
    throw DimensionError("gauge sampled on a different grid than the operator");
  RingOperator out = op;
  const auto& xi = gauge.samples();
  const std::size_t r = op.grid.points;
  auto rotate_pair = [&](std::size_t j, std::size_t k) {
    const cplx z = std::polar(1.0, xi[j] - xi[k]);
    out.entries(j, k) = op.entries(j, k) * z;
    out.entries(k, j) = op.entries(k, j) * std::conj(z);
  };
  for (std::size_t j = 0; j + 1 < r; ++j) rotate_pair(j, j + 1);
  rotate_pair(0, r - 1);
  out.gauge = gauge;
  return out;
}

double hermiticity_defect(const RingOperator& op) {
  return op.entries.hermiticity_defect();
}

}  // namespace qring
