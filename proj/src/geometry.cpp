#include "blochinterp/geometry.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "blochinterp/functions.hpp"

namespace blochinterp {

namespace {

void check_admissible(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::invalid_argument("DiskPoint: coordinates must be finite");
  }
  if (std::abs(z) > 1.0 - kBoundaryMargin) {
    throw std::invalid_argument("DiskPoint: |z| = " +
                                std::to_string(std::abs(z)) +
                                " exceeds 1 - 1e-12");
  }
}

}  // namespace

DiskPoint::DiskPoint(double re, double im) : z_(re, im) {
  check_admissible(z_);
}

DiskPoint::DiskPoint(Complex z) : z_(z) { check_admissible(z_); }

double rho(Complex z, Complex w) {
  return std::abs(z - w) / std::abs(1.0 - std::conj(z) * w);
}

double rho(const DiskPoint& z, const DiskPoint& w) {
  return rho(z.value(), w.value());
}

AnalyticFunction mobius(const DiskPoint& a) {
  return AnalyticFunction(std::make_shared<const detail::FunctionNode>(
      detail::FunctionNode{detail::MoebiusNode{a.value()}}));
}

AnalyticFunction kernel_g(const DiskPoint& w) { return kernel_pow(w, 2); }

}  // namespace blochinterp
