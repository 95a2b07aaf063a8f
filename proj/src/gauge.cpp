#include "qring/gauge.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "qring/errors.hpp"

namespace qring {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("expected a number, got '" + s + "'");
  }
  if (used != s.size()) throw UsageError("trailing junk in number '" + s + "'");
  return v;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw UsageError("expected an integer, got '" + s + "'");
  }
  if (used != s.size())
    throw UsageError("trailing junk in integer '" + s + "'");
  return static_cast<int>(v);
}
}  // namespace

GaugeSpec::GaugeSpec(RingGrid grid, std::vector<double> samples,
                     double delta_xi, double sample_tol)
    : grid_(std::move(grid)), xi_(std::move(samples)), jump_(delta_xi) {
  const std::size_t r = grid_.points;
  if (xi_.size() != r || r < 3)
    throw DimensionError("gauge samples do not match the grid");
  tol_ = sample_tol >= 0.0 ? sample_tol : 10.0 * grid_.spacing * grid_.spacing;
  const double seam = xi_[0] + jump_ - xi_[r - 1];
  const double inc_first = xi_[1] - xi_[0];
  const double inc_last = xi_[r - 1] - xi_[r - 2];
  if (std::abs(seam - inc_first) > tol_ || std::abs(seam - inc_last) > tol_)
    throw GaugeSampleError(
        "gauge derivative is not periodic at the seam (seam increment " +
        std::to_string(seam) + " vs interior " + std::to_string(inc_first) +
        " / " + std::to_string(inc_last) + ")");
}

GaugeSpec GaugeSpec::zero(const RingGrid& grid) {
  return GaugeSpec(grid, std::vector<double>(grid.points, 0.0), 0.0);
}

GaugeSpec GaugeSpec::linear(const RingGrid& grid, double slope) {
  std::vector<double> xi(grid.points);
  for (std::size_t j = 0; j < grid.points; ++j) xi[j] = slope * grid.coords[j];
  return GaugeSpec(grid, std::move(xi), kTwoPi * slope);
}

GaugeSpec GaugeSpec::sinusoid(const RingGrid& grid, double amplitude,
                              int harmonic) {
  std::vector<double> xi(grid.points);
  for (std::size_t j = 0; j < grid.points; ++j)
    xi[j] = amplitude * std::sin(harmonic * grid.coords[j]);
  return GaugeSpec(grid, std::move(xi), 0.0);
}

GaugeSpec GaugeSpec::plus(const GaugeSpec& other) const {
  if (!grid_.same_layout(other.grid_))
    throw DimensionError("cannot add gauges on different grids");
  std::vector<double> xi(xi_.size());
  for (std::size_t j = 0; j < xi.size(); ++j) xi[j] = xi_[j] + other.xi_[j];
  return GaugeSpec(grid_, std::move(xi), jump_ + other.jump_,
                   tol_ + other.tol_);
}

GaugeSpec parse_gauge(const RingGrid& grid, const std::string& text) {
  if (text == "zero") return GaugeSpec::zero(grid);
  const auto first = text.find(':');
  const std::string head = text.substr(0, first);
  if (head == "linear") {
    if (first == std::string::npos)
      throw UsageError("linear gauge needs a slope: linear:<s>");
    return GaugeSpec::linear(grid, parse_double(text.substr(first + 1)));
  }
  if (head == "sin") {
    if (first == std::string::npos)
      throw UsageError("sin gauge needs two fields: sin:<a>:<h>");
    const std::string rest = text.substr(first + 1);
    const auto second = rest.find(':');
    if (second == std::string::npos)
      throw UsageError("sin gauge needs two fields: sin:<a>:<h>");
    return GaugeSpec::sinusoid(grid, parse_double(rest.substr(0, second)),
                               parse_int(rest.substr(second + 1)));
  }
  throw UsageError("unrecognized gauge '" + text +
                   "' (expected zero | linear:<s> | sin:<a>:<h>)");
}

}  // namespace qring
