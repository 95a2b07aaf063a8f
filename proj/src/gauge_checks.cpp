#include "qring/gauge_checks.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "qring/errors.hpp"
#include "qring/ring_operator.hpp"
#include "qring/state.hpp"

namespace qring {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

RingOperator build_from(const RingGrid& grid, const BoundarySpec& b) {
  return b.kind == BoundaryKind::Linear
             ? build_linear(grid)
             : build_twisted(grid, b.delta_alpha, b.sign);
}
}  // namespace

double linear_bc_momentum(int winding, double gauge_jump) {
  return winding - gauge_jump / kTwoPi;
}

DeBroglieRecord de_broglie_residual(double momentum, int winding,
                                    double gauge_jump) {
  if (winding == 0)
    throw WavelengthUndefinedError(
        "zero winding has no finite wavelength");
  const double wavelength = kTwoPi / winding;
  const double res = std::abs(momentum * wavelength - kTwoPi +
                              gauge_jump * wavelength / kTwoPi);
  return {momentum, winding, wavelength, gauge_jump, res};
}

double verify_gauge_invariance(const RingGrid& grid,
                               const BoundarySpec& boundary,
                               const GaugeSpec& gauge, double tol) {
  const RingOperator op = build_from(grid, boundary);
  const RingOperator gauged = apply_gauge(op, gauge);
  const Spectrum plain = eigh(op.entries, tol);
  const Spectrum transformed = eigh(gauged.entries, tol);
  double worst = 0.0;
  for (std::size_t i = 0; i < plain.eigenvalues.size(); ++i)
    worst = std::max(worst, std::abs(plain.eigenvalues[i] -
                                     transformed.eigenvalues[i]));
  return worst;
}

WindingShift winding_shift_demo(const RingGrid& grid, const GaugeSpec& gauge,
                                std::size_t eigen_index, double tol) {
  if (!gauge.grid().same_layout(grid))
    throw DimensionError("gauge sampled on a different grid");
  const RingOperator op = build_linear(grid);
  const Spectrum spec = eigh(op.entries, tol);
  if (eigen_index >= spec.eigenvalues.size())
    throw DimensionError("eigen index " + std::to_string(eigen_index) +
                         " outside the spectrum");
  StateVector state{spec.eigenvector(eigen_index), grid};
  const int before = winding_number(state);
  for (std::size_t j = 0; j < state.values.size(); ++j)
    state.values[j] *= std::polar(1.0, gauge.samples()[j]);
  const int after = winding_number(state);
  // the gauged vector is an exact eigenvector of the gauged operator;
  // its Rayleigh quotient exposes the unchanged eigenvalue
  const RingOperator gauged = apply_gauge(op, gauge);
  const std::vector<cplx> mv = gauged.entries.apply(state.values);
  const double lambda_after = inner(state.values, mv).real();
  return {spec.eigenvalues[eigen_index], lambda_after, before, after};
}

}  // namespace qring
