#pragma once

#include <cstddef>
#include <vector>

namespace qring {

// Uniform discretization of the ring coordinate: `points` samples on
// [-pi, pi), spacing 2*pi/points, first sample at -pi.
struct RingGrid {
  std::size_t points = 0;
  double spacing = 0.0;
  std::vector<double> coords;

  bool same_layout(const RingGrid& other) const {
    return points == other.points;
  }
};

// points >= 3: the central difference plus the two corner couplings
// degenerates on fewer sites.
RingGrid make_grid(std::size_t points);

}  // namespace qring
