#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "blochinterp/geometry.hpp"
#include "blochinterp/grid.hpp"
#include "blochinterp/sequences.hpp"

namespace blochinterp {

class AnalyticFunction;

namespace detail {

struct MonomialNode {
  int degree = 0;
};

struct MoebiusNode {
  Complex a;
};

// (1 - |w|^2) / (1 - conj(w) z)^power. The kernel itself has power 2; higher
// powers appear as derivatives of lower ones.
struct KernelNode {
  Complex w;
  int power = 2;
  double weight = 1.0;  // 1 - |w|^2, fixed at construction
};

// prod_n (|a_n|/a_n) (a_n - z) / (1 - conj(a_n) z), with the factor for
// a_n = 0 taken as plain z.
struct BlaschkeNode {
  std::vector<Complex> zeros;
};

// f_k(z) = prod_{j != k} b_{z_j}(z) / denom, denom = prod_{j != k} b_{z_j}(z_k).
// Numerator and denominator run through the same code path, so f_k(z_j) is
// exactly delta_kj in floating point.
struct BeurlingNode {
  std::vector<Complex> nodes;
  std::size_t index = 0;
  Complex denom{1.0, 0.0};
};

struct ProductNode;
struct LinearCombinationNode;
struct PrimitiveNode;

struct FunctionNode;
using NodePtr = std::shared_ptr<const FunctionNode>;

}  // namespace detail

// Evaluable analytic function on the disk, held as an immutable construction
// tree. Every kind except primitive evaluates and differentiates in closed
// form; primitive integrates its stored derivative along the radial segment.
class AnalyticFunction {
 public:
  // The zero function (an empty linear combination).
  AnalyticFunction();
  explicit AnalyticFunction(detail::NodePtr node);

  Complex eval(Complex z) const;
  Complex deriv(Complex z) const;
  Complex operator()(Complex z) const { return eval(z); }

  // One of: monomial, moebius, kernel, blaschke, beurling-basis,
  // product, linear-combination, primitive.
  const std::string& kind() const;

  const detail::FunctionNode& node() const { return *node_; }
  detail::NodePtr share_node() const noexcept { return node_; }

 private:
  detail::NodePtr node_;
};

namespace detail {

struct ProductNode {
  AnalyticFunction lhs;
  AnalyticFunction rhs;
};

struct LinearCombinationNode {
  std::vector<Complex> coefficients;
  std::vector<AnalyticFunction> terms;
};

// f(z) = f0 + integral_0^1 integrand(t z) z dt, evaluated by Gauss-Legendre
// panels with uniform bisection until two refinement levels agree.
struct PrimitiveNode {
  Complex f0;
  AnalyticFunction integrand;
};

struct FunctionNode {
  std::variant<MonomialNode, MoebiusNode, KernelNode, BlaschkeNode,
               BeurlingNode, ProductNode, LinearCombinationNode, PrimitiveNode>
      payload;
};

}  // namespace detail

// Sequences closer than this are treated as numerically coincident and
// rejected by the constructors that invert basis denominators.
inline constexpr double kMinSeparation = 1e-6;

AnalyticFunction monomial(int degree);
AnalyticFunction constant(Complex c);

// sum_j coefficients[j] z^j
AnalyticFunction polynomial(const std::vector<Complex>& coefficients);

// Terms with zero coefficient are dropped, so an all-zero combination
// collapses to the zero function.
AnalyticFunction linear_combination(std::vector<Complex> coefficients,
                                    std::vector<AnalyticFunction> terms);

AnalyticFunction product(AnalyticFunction lhs, AnalyticFunction rhs);

// (1 - |w|^2) / (1 - conj(w) z)^power, power >= 1. kernel_g(w) is power 2.
AnalyticFunction kernel_pow(const DiskPoint& w, int power);

// Finite Blaschke product vanishing exactly at the given points, |B| < 1 on
// the disk. Each factor is normalized by |a|/a so that B(0) >= 0 when all
// zeros are real and positive.
AnalyticFunction blaschke_product(const PointSequence& zeros);

struct BeurlingBasis {
  std::vector<AnalyticFunction> functions;  // functions[k](z_j) = delta_kj
  // sup over the audit grid of sum_k |f_k(z)|, the finite-section analogue of
  // the basis multiplier constant
  double m_est = 0.0;
  GridSpec grid;
};

// Requires delta_sep >= 1e-6; below that the basis denominators are too close
// to vanishing to trust.
BeurlingBasis beurling_basis(const PointSequence& seq);

// Element k of the basis alone, without the m_est sweep.
AnalyticFunction beurling_basis_function(const PointSequence& seq,
                                         std::size_t k);

// (1 - |z|^2) |f'(z)|. The seminorm sweep and the CSV sampler both call this,
// so a sampled maximum reproduces the sweep value bit for bit.
double weighted_deriv(const AnalyticFunction& f, Complex z);

struct BlochNormReport {
  double seminorm_est = 0.0;  // sup over the grid of (1 - |z|^2) |f'(z)|
  double f0_abs = 0.0;        // |f(0)|
  double norm_est = 0.0;      // f0_abs + seminorm_est
  Complex argmax = 0.0;       // grid point attaining the supremum estimate
  GridSpec grid;
  bool refined = false;
};

// Grid estimate of the Bloch seminorm. With refine set, a second pass scans a
// 21 x 21 window around the coarse argmax at a tenth of the coarse spacing.
// Either way the estimate is a lower bound for the true supremum.
BlochNormReport bloch_seminorm(const AnalyticFunction& f,
                               const GridSpec& grid = audit_grid(),
                               bool refine = true);

// f with f(0) = f0 and f' = fprime, evaluated by radial-segment quadrature.
AnalyticFunction primitive(const AnalyticFunction& fprime, Complex f0);

struct PrimitiveBoundReport {
  double weighted_sup = 0.0;  // sup over the grid of (1 - |z|^2) |f(z)|
  double f0_abs = 0.0;
  double seminorm_est = 0.0;
  double norm_bound = 0.0;  // f0_abs + seminorm_est
  bool holds = false;       // weighted_sup <= norm_bound + 1e-9
};

// Checks the growth bound (1 - |z|^2)|f(z)| <= |f(0)| + seminorm on a grid.
PrimitiveBoundReport check_primitive_bound(const AnalyticFunction& f,
                                           const GridSpec& grid = audit_grid());

// Construction-tree derivative. Defined for monomial, moebius, kernel,
// product, linear-combination and primitive nodes; throws for kinds whose
// derivative leaves the representable family.
AnalyticFunction derivative(const AnalyticFunction& f);

}  // namespace blochinterp
