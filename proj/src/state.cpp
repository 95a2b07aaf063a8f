#include "qring/state.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qring/errors.hpp"

namespace qring {

namespace {
constexpr double kPi = std::numbers::pi;
}

double StateVector::norm() const { return norm2(values); }

double total_weight(const SuperpositionSpec& spec) {
  if (spec.terms.empty())
    throw InvalidSpecError("superposition needs at least one term");
  for (std::size_t i = 0; i < spec.terms.size(); ++i)
    for (std::size_t j = i + 1; j < spec.terms.size(); ++j)
      if (spec.terms[i].mode == spec.terms[j].mode)
        throw InvalidSpecError("duplicate mode " +
                               std::to_string(spec.terms[i].mode) +
                               " in superposition");
  double weight = 0.0;
  for (const auto& t : spec.terms) weight += std::norm(t.amplitude);
  if (!(weight > 0.0))
    throw InvalidSpecError("superposition coefficients carry no weight");
  return weight;
}

StateVector plane_wave(const RingGrid& grid, double wavenumber,
                       bool normalize) {
  StateVector psi{std::vector<cplx>(grid.points), grid};
  const double gamma =
      normalize ? 1.0 / std::sqrt(static_cast<double>(grid.points)) : 1.0;
  for (std::size_t j = 0; j < grid.points; ++j)
    psi.values[j] = std::polar(gamma, wavenumber * grid.coords[j]);
  return psi;
}

std::vector<double> probability_density(const StateVector& psi) {
  std::vector<double> rho(psi.values.size());
  for (std::size_t j = 0; j < rho.size(); ++j) rho[j] = std::norm(psi.values[j]);
  return rho;
}

std::vector<double> probability_current(const StateVector& psi,
                                        double delta_alpha,
                                        BoundarySign sign) {
  const auto& v = psi.values;
  const std::size_t r = v.size();
  if (r != psi.grid.points || r < 3)
    throw DimensionError("state does not match a valid ring grid");
  const double sigma = wrap_sign(sign);
  const cplx below = std::polar(1.0, +delta_alpha * sigma);
  const cplx above = std::polar(1.0, -delta_alpha * sigma);
  const double inv2dx = 1.0 / (2.0 * psi.grid.spacing);
  std::vector<double> cur(r);
  for (std::size_t j = 0; j < r; ++j) {
    const cplx prev = (j == 0) ? below * v[r - 1] : v[j - 1];
    const cplx next = (j + 1 == r) ? above * v[0] : v[j + 1];
    cur[j] = (std::conj(v[j]) * ((next - prev) * inv2dx)).imag();
  }
  return cur;
}

int winding_number(const StateVector& psi) {
  const auto& v = psi.values;
  const std::size_t r = v.size();
  if (r == 0) throw UndefinedWindingError("winding of an empty state");
  for (std::size_t j = 0; j < r; ++j)
    if (v[j] == cplx(0.0, 0.0))
      throw UndefinedWindingError("zero amplitude at sample " +
                                  std::to_string(j));
  double total = 0.0;
  for (std::size_t j = 0; j < r; ++j) {
    const double inc = std::arg(v[(j + 1) % r] * std::conj(v[j]));
    // a half-turn step has no preferred branch
    if (std::abs(std::abs(inc) - kPi) < 1e-12)
      throw UndefinedWindingError("half-turn phase step at sample " +
                                  std::to_string(j));
    total += inc;
  }
  const double turns = total / (2.0 * kPi);
  const double nearest = std::round(turns);
  if (std::abs(turns - nearest) > 1e-6)
    throw UndefinedWindingError("phase increments do not close to a whole "
                                "number of turns");
  return static_cast<int>(nearest);
}

StateVector build_superposition(const SuperpositionSpec& spec,
                                const GaugeSpec& gauge, const RingGrid& grid) {
  total_weight(spec);
  if (!gauge.grid().same_layout(grid))
    throw DimensionError("gauge sampled on a different grid");
  StateVector psi{std::vector<cplx>(grid.points), grid};
  for (std::size_t j = 0; j < grid.points; ++j) {
    const double x = grid.coords[j];
    cplx s(0.0, 0.0);
    for (const auto& t : spec.terms)
      s += t.amplitude * std::polar(1.0, t.mode * x);
    psi.values[j] =
        std::polar(1.0, gauge.samples()[j] + spec.band_offset * x) * s;
  }
  const double nrm = psi.norm();
  if (!(nrm > 0.0) || !std::isfinite(nrm))
    throw InvalidSpecError("superposition vanishes on this grid");
  for (auto& z : psi.values) z /= nrm;
  return psi;
}

}  // namespace qring
