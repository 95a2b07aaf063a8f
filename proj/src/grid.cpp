#include "qring/grid.hpp"

#include <numbers>
#include <string>

#include "qring/errors.hpp"

namespace qring {

RingGrid make_grid(std::size_t points) {
  if (points < 3)
    throw InvalidGridError("ring grid needs at least 3 points, got " +
                           std::to_string(points));
  RingGrid g;
  g.points = points;
  g.spacing = 2.0 * std::numbers::pi / static_cast<double>(points);
  g.coords.resize(points);
  for (std::size_t j = 0; j < points; ++j)
    g.coords[j] = -std::numbers::pi + static_cast<double>(j) * g.spacing;
  return g;
}

}  // namespace qring
