#include "blochinterp/functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blochinterp/errors.hpp"
#include "blochinterp/parallel.hpp"
#include "blochinterp/quadrature.hpp"

namespace blochinterp {

namespace {

using detail::FunctionNode;
using detail::NodePtr;

constexpr std::size_t kNoSkip = static_cast<std::size_t>(-1);

NodePtr make_node(auto payload) {
  return std::make_shared<const FunctionNode>(FunctionNode{std::move(payload)});
}

Complex ipow(Complex z, int n) {
  Complex r = 1.0;
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

Complex mobius_value(Complex a, Complex z) {
  return (z - a) / (1.0 - std::conj(a) * z);
}

Complex mobius_deriv(Complex a, Complex z) {
  const Complex d = 1.0 - std::conj(a) * z;
  return one_minus_abs2(a) / (d * d);
}

Complex blaschke_factor(Complex a, Complex z) {
  if (a == Complex(0.0)) return z;
  return (std::abs(a) / a) * ((a - z) / (1.0 - std::conj(a) * z));
}

Complex blaschke_factor_deriv(Complex a, Complex z) {
  if (a == Complex(0.0)) return Complex(1.0);
  const Complex d = 1.0 - std::conj(a) * z;
  return (std::abs(a) / a) * ((std::norm(a) - 1.0) / (d * d));
}

// Derivative of the product of value(a_j, z) over all j != skip, by the
// product rule with prefix/suffix partial products.
Complex product_rule_deriv(const std::vector<Complex>& zeros, std::size_t skip,
                           Complex z, Complex (*value)(Complex, Complex),
                           Complex (*deriv)(Complex, Complex)) {
  std::vector<Complex> factors;
  std::vector<std::size_t> members;
  factors.reserve(zeros.size());
  members.reserve(zeros.size());
  for (std::size_t j = 0; j < zeros.size(); ++j) {
    if (j == skip) continue;
    factors.push_back(value(zeros[j], z));
    members.push_back(j);
  }
  const std::size_t m = factors.size();
  if (m == 0) return 0.0;
  std::vector<Complex> suffix(m + 1, Complex(1.0));
  for (std::size_t i = m; i-- > 0;) suffix[i] = factors[i] * suffix[i + 1];
  Complex prefix = 1.0;
  Complex sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sum += prefix * deriv(zeros[members[i]], z) * suffix[i + 1];
    prefix *= factors[i];
  }
  return sum;
}

Complex beurling_numerator(const std::vector<Complex>& nodes, std::size_t k,
                           Complex z) {
  Complex p = 1.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (j == k) continue;
    p *= mobius_value(nodes[j], z);
  }
  return p;
}

const GaussLegendreRule& radial_rule() {
  static const GaussLegendreRule rule = gauss_legendre(32);
  return rule;
}

// integral_0^1 integrand(t z) z dt over 2^level uniform panels.
Complex panel_sum(const AnalyticFunction& integrand, Complex z, int level) {
  const GaussLegendreRule& rule = radial_rule();
  const int panels = 1 << level;
  const double h = 1.0 / static_cast<double>(panels);
  Complex total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double left = h * static_cast<double>(p);
    Complex acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      acc += rule.weights[i] * integrand.eval((left + h * rule.nodes[i]) * z);
    }
    total += h * acc;
  }
  return total * z;
}

Complex radial_integral(const AnalyticFunction& integrand, Complex z) {
  if (z == Complex(0.0)) return 0.0;
  constexpr double tol = 1e-12;
  constexpr int max_bisections = 12;
  Complex prev = panel_sum(integrand, z, 0);
  double diff = 0.0;
  for (int level = 1; level <= max_bisections; ++level) {
    const Complex cur = panel_sum(integrand, z, level);
    diff = std::abs(cur - prev);
    if (diff <= tol * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  throw QuadratureError(
      "primitive: radial quadrature did not settle within 12 bisections "
      "(last two-level difference " +
          std::to_string(diff) + ")",
      diff);
}

struct EvalVisitor {
  Complex z;

  Complex operator()(const detail::MonomialNode& n) const {
    return ipow(z, n.degree);
  }
  Complex operator()(const detail::MoebiusNode& n) const {
    return mobius_value(n.a, z);
  }
  Complex operator()(const detail::KernelNode& n) const {
    return n.weight / ipow(1.0 - std::conj(n.w) * z, n.power);
  }
  Complex operator()(const detail::BlaschkeNode& n) const {
    Complex p = 1.0;
    for (Complex a : n.zeros) p *= blaschke_factor(a, z);
    return p;
  }
  Complex operator()(const detail::BeurlingNode& n) const {
    return beurling_numerator(n.nodes, n.index, z) / n.denom;
  }
  Complex operator()(const detail::ProductNode& n) const {
    return n.lhs.eval(z) * n.rhs.eval(z);
  }
  Complex operator()(const detail::LinearCombinationNode& n) const {
    Complex s = 0.0;
    for (std::size_t i = 0; i < n.terms.size(); ++i) {
      s += n.coefficients[i] * n.terms[i].eval(z);
    }
    return s;
  }
  Complex operator()(const detail::PrimitiveNode& n) const {
    return n.f0 + radial_integral(n.integrand, z);
  }
};

struct DerivVisitor {
  Complex z;

  Complex operator()(const detail::MonomialNode& n) const {
    if (n.degree == 0) return 0.0;
    return static_cast<double>(n.degree) * ipow(z, n.degree - 1);
  }
  Complex operator()(const detail::MoebiusNode& n) const {
    return mobius_deriv(n.a, z);
  }
  Complex operator()(const detail::KernelNode& n) const {
    return static_cast<double>(n.power) * std::conj(n.w) * n.weight /
           ipow(1.0 - std::conj(n.w) * z, n.power + 1);
  }
  Complex operator()(const detail::BlaschkeNode& n) const {
    return product_rule_deriv(n.zeros, kNoSkip, z, blaschke_factor,
                              blaschke_factor_deriv);
  }
  Complex operator()(const detail::BeurlingNode& n) const {
    return product_rule_deriv(n.nodes, n.index, z, mobius_value,
                              mobius_deriv) /
           n.denom;
  }
  Complex operator()(const detail::ProductNode& n) const {
    return n.lhs.deriv(z) * n.rhs.eval(z) + n.lhs.eval(z) * n.rhs.deriv(z);
  }
  Complex operator()(const detail::LinearCombinationNode& n) const {
    Complex s = 0.0;
    for (std::size_t i = 0; i < n.terms.size(); ++i) {
      s += n.coefficients[i] * n.terms[i].deriv(z);
    }
    return s;
  }
  Complex operator()(const detail::PrimitiveNode& n) const {
    return n.integrand.eval(z);
  }
};

void require_finite(Complex c, const char* who) {
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
    throw std::invalid_argument(std::string(who) + ": coefficient not finite");
  }
}

struct SweepMax {
  double value = -1.0;
  int radial = 0;
  int angular = 0;
};

// Evaluates score over the whole audit grid (rows in parallel, reduction
// serial and ordered) and returns the first maximizer in radial-major order.
SweepMax sweep_max(const GridSpec& grid,
                   const std::function<double(Complex)>& score) {
  if (grid.scheme != GridScheme::RadialExponentialAudit) {
    throw std::invalid_argument("sweep_max: grid is not an audit grid");
  }
  if (grid.radial_nodes < 1 || grid.angular_nodes < 1) {
    throw std::invalid_argument("sweep_max: grid has no nodes");
  }
  const std::size_t rows = static_cast<std::size_t>(grid.radial_nodes);
  const std::size_t cols = static_cast<std::size_t>(grid.angular_nodes);
  std::vector<double> values(rows * cols);
  parallel_for(rows, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        values[i * cols + j] =
            score(audit_point(static_cast<int>(i), static_cast<int>(j), grid));
      }
    }
  });
  SweepMax best;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double v = values[i * cols + j];
      if (v > best.value) {
        best = {v, static_cast<int>(i), static_cast<int>(j)};
      }
    }
  }
  return best;
}

}  // namespace

AnalyticFunction::AnalyticFunction()
    : node_(make_node(detail::LinearCombinationNode{})) {}

AnalyticFunction::AnalyticFunction(detail::NodePtr node)
    : node_(std::move(node)) {
  if (!node_) {
    throw std::invalid_argument("AnalyticFunction: null node");
  }
}

Complex AnalyticFunction::eval(Complex z) const {
  return std::visit(EvalVisitor{z}, node_->payload);
}

Complex AnalyticFunction::deriv(Complex z) const {
  return std::visit(DerivVisitor{z}, node_->payload);
}

const std::string& AnalyticFunction::kind() const {
  static const std::string names[] = {
      "monomial",       "moebius", "kernel",             "blaschke",
      "beurling-basis", "product", "linear-combination", "primitive"};
  return names[node_->payload.index()];
}

AnalyticFunction monomial(int degree) {
  if (degree < 0) {
    throw std::invalid_argument("monomial: degree must be >= 0");
  }
  return AnalyticFunction(make_node(detail::MonomialNode{degree}));
}

AnalyticFunction constant(Complex c) {
  return polynomial({c});
}

AnalyticFunction polynomial(const std::vector<Complex>& coefficients) {
  std::vector<Complex> coeffs;
  std::vector<AnalyticFunction> terms;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    coeffs.push_back(coefficients[j]);
    terms.push_back(monomial(static_cast<int>(j)));
  }
  return linear_combination(std::move(coeffs), std::move(terms));
}

AnalyticFunction linear_combination(std::vector<Complex> coefficients,
                                    std::vector<AnalyticFunction> terms) {
  if (coefficients.size() != terms.size()) {
    throw std::invalid_argument(
        "linear_combination: " + std::to_string(coefficients.size()) +
        " coefficients for " + std::to_string(terms.size()) + " terms");
  }
  detail::LinearCombinationNode node;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    require_finite(coefficients[i], "linear_combination");
    if (coefficients[i] == Complex(0.0)) continue;
    node.coefficients.push_back(coefficients[i]);
    node.terms.push_back(std::move(terms[i]));
  }
  return AnalyticFunction(make_node(std::move(node)));
}

AnalyticFunction product(AnalyticFunction lhs, AnalyticFunction rhs) {
  return AnalyticFunction(
      make_node(detail::ProductNode{std::move(lhs), std::move(rhs)}));
}

AnalyticFunction kernel_pow(const DiskPoint& w, int power) {
  if (power < 1) {
    throw std::invalid_argument("kernel_pow: power must be >= 1");
  }
  return AnalyticFunction(make_node(
      detail::KernelNode{w.value(), power, one_minus_abs2(w.value())}));
}

AnalyticFunction blaschke_product(const PointSequence& zeros) {
  std::vector<Complex> values;
  values.reserve(zeros.size());
  for (const DiskPoint& p : zeros.points()) values.push_back(p.value());
  return AnalyticFunction(make_node(detail::BlaschkeNode{std::move(values)}));
}

AnalyticFunction beurling_basis_function(const PointSequence& seq,
                                         std::size_t k) {
  if (k >= seq.size()) {
    throw std::invalid_argument("beurling_basis_function: index " +
                                std::to_string(k) + " out of range");
  }
  const SeparationReport& sep = seq.separation();
  if (sep.delta_sep < kMinSeparation) {
    throw ConditioningError(
        "beurling_basis: delta_sep = " + std::to_string(sep.delta_sep) +
        " is below 1e-6; nodes are numerically coincident");
  }
  std::vector<Complex> nodes;
  nodes.reserve(seq.size());
  for (const DiskPoint& p : seq.points()) nodes.push_back(p.value());
  // The denominator runs through the same loop the numerator uses at
  // evaluation time, which makes f_k(z_j) = delta_kj exact.
  const Complex denom = beurling_numerator(nodes, k, nodes[k]);
  if (!(std::abs(denom) > 0.0) || !std::isfinite(std::abs(denom))) {
    throw ConditioningError(
        "beurling_basis: basis denominator vanished at node " +
        std::to_string(k));
  }
  return AnalyticFunction(
      make_node(detail::BeurlingNode{std::move(nodes), k, denom}));
}

BeurlingBasis beurling_basis(const PointSequence& seq) {
  BeurlingBasis basis;
  basis.grid = audit_grid();
  basis.functions.reserve(seq.size());
  for (std::size_t k = 0; k < seq.size(); ++k) {
    basis.functions.push_back(beurling_basis_function(seq, k));
  }

  const std::vector<AnalyticFunction>& fns = basis.functions;
  basis.m_est = sweep_max(basis.grid, [&fns](Complex z) {
                  double s = 0.0;
                  for (const AnalyticFunction& f : fns) s += std::abs(f.eval(z));
                  return s;
                }).value;
  return basis;
}

double weighted_deriv(const AnalyticFunction& f, Complex z) {
  return one_minus_abs2(z) * std::abs(f.deriv(z));
}

BlochNormReport bloch_seminorm(const AnalyticFunction& f, const GridSpec& grid,
                               bool refine) {
  const SweepMax coarse =
      sweep_max(grid, [&f](Complex z) { return weighted_deriv(f, z); });

  BlochNormReport report;
  report.grid = grid;
  report.seminorm_est = coarse.value;
  report.argmax = audit_point(coarse.radial, coarse.angular, grid);

  if (refine) {
    // 21 x 21 window around the coarse argmax, one coarse step each way at a
    // tenth of the coarse spacing. Radial steps move in the exponential
    // level, not in r, so the window respects the grid's boundary clustering.
    const double dtheta =
        2.0 * std::numbers::pi / static_cast<double>(grid.angular_nodes);
    const double theta0 = 2.0 * std::numbers::pi *
                          static_cast<double>(coarse.angular) /
                          static_cast<double>(grid.angular_nodes);
    for (int a = 0; a <= 20; ++a) {
      const double level =
          static_cast<double>(coarse.radial) - 1.0 + 0.1 * static_cast<double>(a);
      if (level < 0.0) continue;
      const double r = audit_radius(level);
      for (int b = 0; b <= 20; ++b) {
        const double theta =
            theta0 + static_cast<double>(b - 10) * (dtheta / 10.0);
        const Complex z = std::polar(r, theta);
        const double v = weighted_deriv(f, z);
        if (v > report.seminorm_est) {
          report.seminorm_est = v;
          report.argmax = z;
        }
      }
    }
    report.refined = true;
  }

  report.f0_abs = std::abs(f.eval(Complex(0.0)));
  report.norm_est = report.f0_abs + report.seminorm_est;
  return report;
}

AnalyticFunction primitive(const AnalyticFunction& fprime, Complex f0) {
  require_finite(f0, "primitive");
  return AnalyticFunction(make_node(detail::PrimitiveNode{f0, fprime}));
}

PrimitiveBoundReport check_primitive_bound(const AnalyticFunction& f,
                                           const GridSpec& grid) {
  PrimitiveBoundReport report;
  report.weighted_sup =
      sweep_max(grid,
                [&f](Complex z) { return one_minus_abs2(z) * std::abs(f.eval(z)); })
          .value;
  const BlochNormReport norm = bloch_seminorm(f, grid, true);
  report.f0_abs = norm.f0_abs;
  report.seminorm_est = norm.seminorm_est;
  report.norm_bound = norm.norm_est;
  report.holds = report.weighted_sup <= report.norm_bound + 1e-9;
  return report;
}

namespace {

struct DerivativeTreeVisitor {
  AnalyticFunction operator()(const detail::MonomialNode& n) const {
    if (n.degree == 0) return AnalyticFunction();
    return linear_combination({Complex(static_cast<double>(n.degree))},
                              {monomial(n.degree - 1)});
  }
  AnalyticFunction operator()(const detail::MoebiusNode& n) const {
    // b_a' is exactly the kernel g_a
    return kernel_pow(DiskPoint(n.a), 2);
  }
  AnalyticFunction operator()(const detail::KernelNode& n) const {
    return linear_combination(
        {static_cast<double>(n.power) * std::conj(n.w)},
        {kernel_pow(DiskPoint(n.w), n.power + 1)});
  }
  AnalyticFunction operator()(const detail::BlaschkeNode&) const {
    throw std::invalid_argument(
        "derivative: a blaschke product's derivative leaves the representable "
        "family");
  }
  AnalyticFunction operator()(const detail::BeurlingNode&) const {
    throw std::invalid_argument(
        "derivative: a beurling-basis function's derivative leaves the "
        "representable family");
  }
  AnalyticFunction operator()(const detail::ProductNode& n) const {
    return linear_combination({1.0, 1.0},
                              {product(derivative(n.lhs), n.rhs),
                               product(n.lhs, derivative(n.rhs))});
  }
  AnalyticFunction operator()(const detail::LinearCombinationNode& n) const {
    std::vector<AnalyticFunction> terms;
    terms.reserve(n.terms.size());
    for (const AnalyticFunction& t : n.terms) terms.push_back(derivative(t));
    return linear_combination(n.coefficients, std::move(terms));
  }
  AnalyticFunction operator()(const detail::PrimitiveNode& n) const {
    return n.integrand;
  }
};

}  // namespace

AnalyticFunction derivative(const AnalyticFunction& f) {
  return std::visit(DerivativeTreeVisitor{}, f.node().payload);
}

}  // namespace blochinterp
