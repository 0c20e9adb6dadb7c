#pragma once

#include "blochinterp/geometry.hpp"

namespace blochinterp {

enum class GridScheme {
  // r_i = 1 - 2^(-i/4) with equispaced angles; for sup-norm sweeps.
  RadialExponentialAudit,
  // Gauss-Legendre radial nodes against the weight 2r, trapezoid in the
  // angle; for integrals over the disk.
  GaussLegendreTrapezoid,
};

struct GridSpec {
  int radial_nodes = 49;
  int angular_nodes = 256;
  GridScheme scheme = GridScheme::RadialExponentialAudit;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// 49 exponential radii x 256 angles. The radii accumulate at the boundary so
// the sweep sees the region where (1 - |z|^2)|f'| peaks for kernel-type f.
GridSpec audit_grid();

// 64 x 256 integration grid.
GridSpec quadrature_grid();

// 1 - 2^(-level/4), capped at the DiskPoint admissibility radius. Fractional
// levels are meaningful; refinement passes use steps of 0.1.
double audit_radius(double level);

// Point (i, j) of an audit grid, radial-major. All sweeps and the CSV sampler
// go through here so their values agree bit for bit.
Complex audit_point(int radial_index, int angular_index, const GridSpec& grid);

}  // namespace blochinterp
