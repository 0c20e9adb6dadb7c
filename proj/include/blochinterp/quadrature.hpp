#pragma once

#include <functional>

#include "blochinterp/functions.hpp"
#include "blochinterp/geometry.hpp"
#include "blochinterp/grid.hpp"

namespace blochinterp {

// Integral of the integrand over the unit disk against normalized area
// measure, truncated at radius 1 - kBoundaryMargin: Gauss-Legendre radially
// with the weight 2r, trapezoid rule in the angle. The grid must be a
// GaussLegendreTrapezoid spec with >= 4 radial and >= 8 even angular nodes.
// Summation is a fixed pairwise tree, so results are bit-stable across runs
// and thread counts. Throws NumericalError if the integrand returns a
// non-finite value.
Complex disk_integral(const std::function<Complex(Complex)>& integrand,
                      const GridSpec& grid = quadrature_grid());

// disk_integral with both node counts doubled until two successive estimates
// differ by < 1e-11 in absolute value, at most 3 doublings. Throws
// QuadratureError when the cap is hit first.
Complex disk_integral_adaptive(const std::function<Complex(Complex)>& integrand,
                               const GridSpec& grid = quadrature_grid());

// Pairing integral of f(z) conj(h(z)) (1 - |z|^2) over the disk, the form
// whose value against the kernel recovers weighted derivatives. Adaptive.
Complex bergman_pairing(const AnalyticFunction& f, const AnalyticFunction& h,
                        const GridSpec& grid = quadrature_grid());

// Gauss-Legendre nodes and weights on [0, 1], ascending. Computed by Newton
// iteration on the Legendre recurrence; n must be >= 1.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int n);

}  // namespace blochinterp
