#pragma once

#include <stdexcept>
#include <string>

namespace blochinterp {

// Ill-conditioned input: near-coincident nodes, vanishing Blaschke
// denominators, degenerate extensions. The CLI maps this to exit code 3.
class ConditioningError : public std::runtime_error {
 public:
  explicit ConditioningError(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

// An adaptive quadrature loop hit its refinement cap before reaching the
// requested tolerance. Carries the error estimate that was achieved.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what_arg, double achieved_error)
      : std::runtime_error(what_arg), achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

// A non-finite value showed up where a finite one is required, e.g. an
// integrand evaluating to NaN at a quadrature node.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

}  // namespace blochinterp
