#pragma once

#include <string>
#include <vector>

#include "qring/grid.hpp"

namespace qring {

// Sampled gauge function xi(x_j) together with its jump `delta_xi` at the
// seam. A valid gauge has a periodic derivative: the wrapped seam increment
// xi_1 + delta_xi - xi_r must agree with the two adjacent interior
// increments to within `sample_tol`. The default tolerance 10*dx^2 covers
// the sampling error of any smooth gauge at moderate amplitude.
class GaugeSpec {
 public:
  // sample_tol < 0 selects the default 10*dx^2
  GaugeSpec(RingGrid grid, std::vector<double> samples, double delta_xi,
            double sample_tol = -1.0);

  static GaugeSpec zero(const RingGrid& grid);
  // xi = slope * x, jump 2*pi*slope
  static GaugeSpec linear(const RingGrid& grid, double slope);
  // xi = amplitude * sin(harmonic * x), jump 0
  static GaugeSpec sinusoid(const RingGrid& grid, double amplitude,
                            int harmonic);

  const RingGrid& grid() const { return grid_; }
  const std::vector<double>& samples() const { return xi_; }
  double jump() const { return jump_; }
  double sample_tol() const { return tol_; }

  // pointwise sum; jumps and tolerances add
  GaugeSpec plus(const GaugeSpec& other) const;

 private:
  RingGrid grid_;
  std::vector<double> xi_;
  double jump_ = 0.0;
  double tol_ = 0.0;
};

// Mini-language: "zero" | "linear:<slope>" | "sin:<amplitude>:<harmonic>"
GaugeSpec parse_gauge(const RingGrid& grid, const std::string& text);

}  // namespace qring
