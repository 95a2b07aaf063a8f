#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qring/boundary.hpp"
#include "qring/eigensolver.hpp"
#include "qring/grid.hpp"
#include "qring/state.hpp"

namespace qring {

// Relative departure of the discrete dispersion from the continuum line
// above which a mode counts as aliased.
inline constexpr double kBandTol = 0.1;

// Tolerance for "is an integer" tests in admissibility checks.
inline constexpr double kIntegerTol = 1e-9;

struct SpectrumLabel {
  int mode;                  // n
  double lambda_continuum;   // q + n
  double lambda_discrete;    // sin((q+n) dx) / dx
  bool aliased;
  std::optional<double> matched_numeric;
};

struct BandPoint {
  int mode;
  double momentum;  // q + n
  double energy;    // (q + n)^2
};

// Charged particle on a flux-threaded ring. The eigenvalue depends on
// charge, flux and radius only; gamma is carried for bookkeeping and never
// enters a value. Dimensionless use: radius 1 with charge*flux given as a
// phase.
struct FluxConfig {
  double charge = 0.0;
  double flux = 0.0;
  double radius = 1.0;
  double gamma = 0.0;  // in [0, 1]
};

struct DegenerateTransition {
  std::pair<int, int> modes;  // positive-momentum member first
  double momentum_transfer;
};

// Exact eigenvalues of the twisted stencil: one label per mode n in the
// integer window of size r centered on -q, q = delta_alpha/(2*pi).
// Returned in ascending mode order.
std::vector<SpectrumLabel> analytic_spectrum(const RingGrid& grid,
                                             double delta_alpha,
                                             double band_tol = kBandTol);

// Same labels for either corner sign convention; PaperLiteral mirrors the
// spectrum (mode -n, values negated).
std::vector<SpectrumLabel> analytic_spectrum(const RingGrid& grid,
                                             double delta_alpha,
                                             BoundarySign sign,
                                             double band_tol = kBandTol);

// Pairs ascending numeric eigenvalues with ascending analytic labels;
// any gap beyond match_tol is an error listing the offenders, never a
// silent discard.
std::vector<SpectrumLabel> match_labels(std::vector<SpectrumLabel> labels,
                                        const std::vector<double>& ascending,
                                        double match_tol);

std::vector<SpectrumLabel> classify_spectrum(const Spectrum& spec,
                                             const RingGrid& grid,
                                             double delta_alpha,
                                             double match_tol,
                                             double band_tol = kBandTol);

// True iff every pairwise difference is within kIntegerTol of an integer.
bool superposition_admissible(const std::vector<double>& eigenvalues);

// Mirror states at +/-(q+n) superpose only when 2q is an integer.
bool mirror_superposable(double band_offset);

// Seam mismatch of the continuum density, current, and their derivatives,
// normalized by the total coefficient weight.
double periodicity_defect(const SuperpositionSpec& spec);

std::vector<BandPoint> energy_bands(double band_offset, int n_min, int n_max);

// Lowest-energy pair of distinct modes with equal energy, if one exists
// (it does exactly when 2q is an integer).
std::optional<DegenerateTransition> degenerate_transition(double band_offset);

// lambda = n + charge*flux / (2*pi*radius)
double flux_eigenvalue(int mode, const FluxConfig& cfg);

}  // namespace qring
