#pragma once

#include <vector>

#include "qring/boundary.hpp"
#include "qring/gauge.hpp"
#include "qring/grid.hpp"
#include "qring/matrix.hpp"

namespace qring {

// Complex amplitudes sampled on the ring grid.
struct StateVector {
  std::vector<cplx> values;
  RingGrid grid;

  double norm() const;
};

// One Fourier mode of a superposition: amplitude on the carrier
// exp(i * mode * x).
struct SuperpositionTerm {
  double mode;  // n
  cplx amplitude;
};

// psi(x) = exp(i q x) * sum_t a_t exp(i n_t x), up to gauge and
// normalization. Modes must be pairwise distinct and carry nonzero total
// weight.
struct SuperpositionSpec {
  double band_offset = 0.0;  // q
  std::vector<SuperpositionTerm> terms;
};

// Validates the term list and returns sum |a_t|^2.
double total_weight(const SuperpositionSpec& spec);

StateVector plane_wave(const RingGrid& grid, double wavenumber,
                       bool normalize = true);

std::vector<double> probability_density(const StateVector& psi);

// Im(conj(v_j) * (D v)_j) with D the twisted central difference whose seam
// wrap matches the operator convention in use (see boundary.hpp).
std::vector<double> probability_current(
    const StateVector& psi, double delta_alpha = 0.0,
    BoundarySign sign = BoundarySign::FigureB1);

// Sum of principal phase increments around the ring, divided by 2*pi.
// Throws UndefinedWindingError on a zero sample or a half-turn step.
int winding_number(const StateVector& psi);

StateVector build_superposition(const SuperpositionSpec& spec,
                                const GaugeSpec& gauge, const RingGrid& grid);

}  // namespace qring
