#pragma once

#include <complex>

namespace blochinterp {

using Complex = std::complex<double>;

// Points are rejected when |z| > 1 - kBoundaryMargin. The weight 1/(1-|z|^2)
// amplifies roundoff without bound near the circle, so the margin keeps every
// admissible point in a regime where double arithmetic still has ~4 digits of
// headroom.
inline constexpr double kBoundaryMargin = 1e-12;

// 1 - |z|^2, always computed as 1 - norm(z). Using one expression everywhere
// lets weighted derivatives cancel kernel denominators bit for bit.
inline double one_minus_abs2(Complex z) { return 1.0 - std::norm(z); }

class AnalyticFunction;

// A point strictly inside the unit disk.
class DiskPoint {
 public:
  DiskPoint(double re, double im);
  explicit DiskPoint(Complex z);

  double re() const noexcept { return z_.real(); }
  double im() const noexcept { return z_.imag(); }
  Complex value() const noexcept { return z_; }
  double abs() const { return std::abs(z_); }

  friend bool operator==(const DiskPoint&, const DiskPoint&) = default;

 private:
  Complex z_;
};

// Pseudohyperbolic distance |z - w| / |1 - conj(z) w|.
double rho(const DiskPoint& z, const DiskPoint& w);

// Unchecked variant for inner loops; both arguments must lie in the open disk.
double rho(Complex z, Complex w);

// Disk automorphism b_a(z) = (z - a) / (1 - conj(a) z). Swaps a and 0, and
// its derivative (1 - |a|^2) / (1 - conj(a) z)^2 is available in closed form
// through derivative().
AnalyticFunction mobius(const DiskPoint& a);

// Kernel g_w(z) = (1 - |w|^2) / (1 - conj(w) z)^2 with g_w(w) = 1 / (1 - |w|^2).
AnalyticFunction kernel_g(const DiskPoint& w);

}  // namespace blochinterp
