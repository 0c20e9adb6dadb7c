#include "blochinterp/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace blochinterp {

GridSpec audit_grid() { return {49, 256, GridScheme::RadialExponentialAudit}; }

GridSpec quadrature_grid() {
  return {64, 256, GridScheme::GaussLegendreTrapezoid};
}

double audit_radius(double level) {
  double r = 1.0 - std::exp2(-level / 4.0);
  if (r < 0.0) r = 0.0;
  const double r_max = 1.0 - kBoundaryMargin;
  return r < r_max ? r : r_max;
}

Complex audit_point(int radial_index, int angular_index, const GridSpec& grid) {
  if (grid.scheme != GridScheme::RadialExponentialAudit) {
    throw std::invalid_argument("audit_point: grid is not an audit grid");
  }
  if (radial_index < 0 || radial_index >= grid.radial_nodes ||
      angular_index < 0 || angular_index >= grid.angular_nodes) {
    throw std::invalid_argument("audit_point: index out of range");
  }
  const double r = audit_radius(static_cast<double>(radial_index));
  const double theta = 2.0 * std::numbers::pi *
                       static_cast<double>(angular_index) /
                       static_cast<double>(grid.angular_nodes);
  return std::polar(r, theta);
}

}  // namespace blochinterp
