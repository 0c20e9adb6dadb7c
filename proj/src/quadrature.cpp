#include "blochinterp/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "blochinterp/errors.hpp"
#include "blochinterp/parallel.hpp"

namespace blochinterp {

namespace {

// Pairwise-tree sum; the parenthesization depends only on the length, so
// totals are independent of thread layout and platform reassociation.
Complex pairwise_sum(const Complex* data, std::size_t n) {
  if (n == 0) return 0.0;
  if (n <= 4) {
    Complex s = data[0];
    for (std::size_t i = 1; i < n; ++i) s += data[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

void validate_quadrature_grid(const GridSpec& grid) {
  if (grid.scheme != GridScheme::GaussLegendreTrapezoid) {
    throw std::invalid_argument(
        "disk_integral: grid scheme must be GaussLegendreTrapezoid");
  }
  if (grid.radial_nodes < 4) {
    throw std::invalid_argument("disk_integral: need >= 4 radial nodes");
  }
  if (grid.angular_nodes < 8 || grid.angular_nodes % 2 != 0) {
    throw std::invalid_argument(
        "disk_integral: need an even number >= 8 of angular nodes");
  }
}

}  // namespace

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) {
    throw std::invalid_argument("gauss_legendre: n must be >= 1");
  }
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton on P_n from the classical cosine initial guess; z converges to
    // the i-th root from the upper end of [-1, 1].
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int k = 0; k < n; ++k) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * k + 1.0) * z * p2 - static_cast<double>(k) * p3) /
             (static_cast<double>(k) + 1.0);
      }
      pp = static_cast<double>(n) * (z * p1 - p2) / (z * z - 1.0);
      const double step = p1 / pp;
      z -= step;
      if (std::abs(step) <= 1e-15) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = 0.5 * (1.0 - z);
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = 0.5 * (1.0 + z);
    const double w = 1.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

Complex disk_integral(const std::function<Complex(Complex)>& integrand,
                      const GridSpec& grid) {
  validate_quadrature_grid(grid);
  const std::size_t nr = static_cast<std::size_t>(grid.radial_nodes);
  const std::size_t na = static_cast<std::size_t>(grid.angular_nodes);
  const double r_max = 1.0 - kBoundaryMargin;
  const GaussLegendreRule rule = gauss_legendre(grid.radial_nodes);

  std::vector<Complex> values(nr * na);
  parallel_for(nr, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double r = r_max * rule.nodes[i];
      for (std::size_t j = 0; j < na; ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) /
                             static_cast<double>(na);
        const Complex z = std::polar(r, theta);
        const Complex v = integrand(z);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
          throw NumericalError(
              "disk_integral: integrand returned a non-finite value at z = (" +
              std::to_string(z.real()) + ", " + std::to_string(z.imag()) +
              ")");
        }
        values[i * na + j] = v;
      }
    }
  });

  // dm-normalized: integral = sum_i w_i 2 r_i r_max * (angular mean at r_i)
  std::vector<Complex> rows(nr);
  for (std::size_t i = 0; i < nr; ++i) {
    const double r = r_max * rule.nodes[i];
    const Complex angular_mean =
        pairwise_sum(values.data() + i * na, na) / static_cast<double>(na);
    rows[i] = rule.weights[i] * 2.0 * r * r_max * angular_mean;
  }
  return pairwise_sum(rows.data(), nr);
}

Complex disk_integral_adaptive(const std::function<Complex(Complex)>& integrand,
                               const GridSpec& grid) {
  validate_quadrature_grid(grid);
  constexpr double tol = 1e-11;
  constexpr int max_doublings = 3;
  GridSpec g = grid;
  Complex prev = disk_integral(integrand, g);
  double diff = 0.0;
  for (int d = 1; d <= max_doublings; ++d) {
    g.radial_nodes *= 2;
    g.angular_nodes *= 2;
    const Complex cur = disk_integral(integrand, g);
    diff = std::abs(cur - prev);
    if (diff < tol) return cur;
    prev = cur;
  }
  throw QuadratureError(
      "disk_integral_adaptive: estimates did not settle within 3 doublings "
      "(last difference " +
          std::to_string(diff) + ")",
      diff);
}

Complex bergman_pairing(const AnalyticFunction& f, const AnalyticFunction& h,
                        const GridSpec& grid) {
  return disk_integral_adaptive(
      [&f, &h](Complex z) {
        return f.eval(z) * std::conj(h.eval(z)) * one_minus_abs2(z);
      },
      grid);
}

}  // namespace blochinterp
