#include "qring/spectrum_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "qring/errors.hpp"

namespace qring {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

std::vector<SpectrumLabel> analytic_spectrum(const RingGrid& grid,
                                             double delta_alpha,
                                             double band_tol) {
  const std::size_t r = grid.points;
  const double q = delta_alpha / kTwoPi;
  const long n_min =
      static_cast<long>(std::ceil(-q - (static_cast<double>(r) - 1.0) / 2.0));
  std::vector<SpectrumLabel> labels;
  labels.reserve(r);
  for (std::size_t t = 0; t < r; ++t) {
    const int n = static_cast<int>(n_min + static_cast<long>(t));
    const double kc = q + n;
    const double kd = std::sin(kc * grid.spacing) / grid.spacing;
    const bool aliased = std::abs(kd - kc) > band_tol * std::max(1.0, std::abs(kc));
    labels.push_back({n, kc, kd, aliased, std::nullopt});
  }
  return labels;
}

std::vector<SpectrumLabel> analytic_spectrum(const RingGrid& grid,
                                             double delta_alpha,
                                             BoundarySign sign,
                                             double band_tol) {
  std::vector<SpectrumLabel> labels =
      analytic_spectrum(grid, delta_alpha, band_tol);
  if (sign == BoundarySign::PaperLiteral) {
    for (auto& lab : labels) {
      lab.mode = -lab.mode;
      lab.lambda_continuum = -lab.lambda_continuum;
      lab.lambda_discrete = -lab.lambda_discrete;
    }
  }
  return labels;
}

std::vector<SpectrumLabel> match_labels(std::vector<SpectrumLabel> labels,
                                        const std::vector<double>& ascending,
                                        double match_tol) {
  if (labels.size() != ascending.size())
    throw ClassificationError("expected " + std::to_string(labels.size()) +
                              " eigenvalues, got " +
                              std::to_string(ascending.size()));
  std::stable_sort(labels.begin(), labels.end(),
                   [](const SpectrumLabel& a, const SpectrumLabel& b) {
                     if (a.lambda_discrete != b.lambda_discrete)
                       return a.lambda_discrete < b.lambda_discrete;
                     return a.mode < b.mode;
                   });
  std::ostringstream offenders;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const double gap = std::abs(ascending[i] - labels[i].lambda_discrete);
    if (gap > match_tol) {
      ++bad;
      offenders << (bad > 1 ? "; " : "") << "index " << i << ": numeric "
                << ascending[i] << " vs analytic " << labels[i].lambda_discrete
                << " (gap " << gap << ")";
    } else {
      labels[i].matched_numeric = ascending[i];
    }
  }
  if (bad > 0)
    throw ClassificationError(std::to_string(bad) +
                              " eigenvalue(s) beyond match tolerance: " +
                              offenders.str());
  return labels;
}

std::vector<SpectrumLabel> classify_spectrum(const Spectrum& spec,
                                             const RingGrid& grid,
                                             double delta_alpha,
                                             double match_tol,
                                             double band_tol) {
  return match_labels(analytic_spectrum(grid, delta_alpha, band_tol),
                      spec.eigenvalues, match_tol);
}

bool superposition_admissible(const std::vector<double>& eigenvalues) {
  if (eigenvalues.empty())
    throw InvalidSpecError("admissibility of an empty eigenvalue list");
  for (std::size_t i = 0; i < eigenvalues.size(); ++i)
    for (std::size_t j = i + 1; j < eigenvalues.size(); ++j) {
      const double d = eigenvalues[i] - eigenvalues[j];
      if (std::abs(d - std::round(d)) > kIntegerTol) return false;
    }
  return true;
}

bool mirror_superposable(double band_offset) {
  const double twice = 2.0 * band_offset;
  return std::abs(twice - std::round(twice)) <= kIntegerTol;
}

double periodicity_defect(const SuperpositionSpec& spec) {
  const double weight = total_weight(spec);
  // psi, psi_x, psi_xx of the continuum state at x
  const auto eval = [&spec](double x) {
    cplx psi(0.0, 0.0), dpsi(0.0, 0.0), ddpsi(0.0, 0.0);
    for (const auto& t : spec.terms) {
      const double k = spec.band_offset + t.mode;
      const cplx ph = t.amplitude * std::polar(1.0, k * x);
      psi += ph;
      dpsi += cplx(0.0, k) * ph;
      ddpsi += -k * k * ph;
    }
    struct Probe {
      double rho, drho, cur, dcur;
    };
    const cplx cross = std::conj(psi) * dpsi;
    return Probe{std::norm(psi), 2.0 * cross.real(), cross.imag(),
                 (std::conj(psi) * ddpsi).imag()};
  };
  const auto hi = eval(kPi);
  const auto lo = eval(-kPi);
  const double worst =
      std::max({std::abs(hi.rho - lo.rho), std::abs(hi.drho - lo.drho),
                std::abs(hi.cur - lo.cur), std::abs(hi.dcur - lo.dcur)});
  return worst / weight;
}

std::vector<BandPoint> energy_bands(double band_offset, int n_min, int n_max) {
  if (n_min > n_max)
    throw InvalidConfigError("band range is empty: " + std::to_string(n_min) +
                             ".." + std::to_string(n_max));
  std::vector<BandPoint> pts;
  pts.reserve(static_cast<std::size_t>(n_max - n_min) + 1);
  for (int n = n_min; n <= n_max; ++n) {
    const double momentum = band_offset + n;
    pts.push_back({n, momentum, momentum * momentum});
  }
  return pts;
}

std::optional<DegenerateTransition> degenerate_transition(double band_offset) {
  const double twice = 2.0 * band_offset;
  const double nearest = std::round(twice);
  if (std::abs(twice - nearest) > kIntegerTol) return std::nullopt;
  const long k = std::lround(nearest);
  // mirror partner of mode n is -n - 2q; the lowest pair sits at
  // momentum +/-1 (2q even) or +/-1/2 (2q odd)
  int n_pos, n_neg;
  double transfer;
  if (k % 2 == 0) {
    n_pos = static_cast<int>(1 - k / 2);
    n_neg = static_cast<int>(-1 - k / 2);
    transfer = 2.0;
  } else {
    n_pos = static_cast<int>((1 - k) / 2);
    n_neg = static_cast<int>((-1 - k) / 2);
    transfer = 1.0;
  }
  return DegenerateTransition{{n_pos, n_neg}, transfer};
}

double flux_eigenvalue(int mode, const FluxConfig& cfg) {
  if (!(cfg.radius > 0.0))
    throw InvalidConfigError("ring radius must be positive");
  if (cfg.gamma < 0.0 || cfg.gamma > 1.0)
    throw InvalidConfigError("partition parameter gamma must lie in [0, 1]");
  return mode + cfg.charge * cfg.flux / (kTwoPi * cfg.radius);
}

}  // namespace qring
