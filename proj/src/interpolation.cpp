#include "blochinterp/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "blochinterp/errors.hpp"

namespace blochinterp {

InterpolationProblem::InterpolationProblem(PointSequence seq,
                                           std::vector<Complex> target_values,
                                           Space target_space)
    : sequence(std::move(seq)),
      targets(std::move(target_values)),
      space(target_space) {
  if (targets.size() != sequence.size()) {
    throw std::invalid_argument(
        "InterpolationProblem: " + std::to_string(targets.size()) +
        " targets for " + std::to_string(sequence.size()) + " points");
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (!std::isfinite(targets[i].real()) || !std::isfinite(targets[i].imag())) {
      throw std::invalid_argument("InterpolationProblem: target " +
                                  std::to_string(i) + " is not finite");
    }
  }
}

double InterpolationProblem::sup_target() const {
  double sup = 0.0;
  for (Complex a : targets) sup = std::max(sup, std::abs(a));
  return sup;
}

AnalyticFunction interpolate_hinf(const InterpolationProblem& problem) {
  if (problem.space != Space::HInf) {
    throw std::invalid_argument("interpolate_hinf: problem targets bloch");
  }
  BeurlingBasis basis = beurling_basis(problem.sequence);
  return linear_combination(problem.targets, std::move(basis.functions));
}

AnalyticFunction interpolate_bloch(const InterpolationProblem& problem) {
  if (problem.space != Space::Bloch) {
    throw std::invalid_argument("interpolate_bloch: problem targets hinf");
  }
  // All-zero targets collapse to the zero function; no primitive wrapper.
  if (problem.sup_target() == 0.0) return AnalyticFunction();
  BeurlingBasis basis = beurling_basis(problem.sequence);
  // f' = sum_k a_k g_{z_k} f_k. At node z_n the basis kills every term but
  // the n-th and g_{z_n}(z_n) cancels the weight, so the weighted derivative
  // (1 - |z_n|^2) f'(z_n) lands on a_n to roundoff.
  std::vector<AnalyticFunction> terms;
  terms.reserve(problem.sequence.size());
  for (std::size_t k = 0; k < problem.sequence.size(); ++k) {
    terms.push_back(
        product(kernel_g(problem.sequence[k]), std::move(basis.functions[k])));
  }
  return primitive(linear_combination(problem.targets, std::move(terms)), 0.0);
}

AnalyticFunction append_point(const AnalyticFunction& f,
                              const PointSequence& seq, const DiskPoint& z0,
                              Complex a1) {
  if (!std::isfinite(a1.real()) || !std::isfinite(a1.imag())) {
    throw std::invalid_argument("append_point: target is not finite");
  }
  double dmin = 1.0;
  for (const DiskPoint& p : seq.points()) dmin = std::min(dmin, rho(z0, p));
  if (dmin < kMinSeparation) {
    throw ConditioningError(
        "append_point: z0 at pseudohyperbolic distance " +
        std::to_string(dmin) + " from the sequence; extension is degenerate");
  }
  const AnalyticFunction b = blaschke_product(seq);
  const Complex alpha = b.eval(z0.value());
  if (!(std::abs(alpha) > 0.0)) {
    throw ConditioningError("append_point: blaschke product vanishes at z0");
  }
  // g = ((a1 - f(z0)) / B(z0)) B + f keeps f's values on the sequence, where
  // B vanishes, and corrects the value at z0.
  const Complex c = (a1 - f.eval(z0.value())) / alpha;
  return linear_combination({c, 1.0}, {b, f});
}

AnalyticFunction simple_function_compose(
    const PointSequence& seq, const std::vector<Complex>& levels,
    const std::vector<std::vector<std::size_t>>& parts, Space space) {
  if (levels.size() != parts.size()) {
    throw std::invalid_argument(
        "simple_function_compose: " + std::to_string(levels.size()) +
        " levels for " + std::to_string(parts.size()) + " parts");
  }
  std::vector<bool> covered(seq.size(), false);
  for (const auto& part : parts) {
    if (part.empty()) {
      throw std::invalid_argument("simple_function_compose: empty part");
    }
    for (std::size_t idx : part) {
      if (idx >= seq.size()) {
        throw std::invalid_argument("simple_function_compose: index " +
                                    std::to_string(idx) + " out of range");
      }
      if (covered[idx]) {
        throw std::invalid_argument("simple_function_compose: index " +
                                    std::to_string(idx) +
                                    " appears in two parts");
      }
      covered[idx] = true;
    }
  }
  // One indicator interpolant per part, then the level-weighted combination.
  std::vector<AnalyticFunction> indicators;
  indicators.reserve(parts.size());
  for (const auto& part : parts) {
    std::vector<Complex> targets(seq.size(), 0.0);
    for (std::size_t idx : part) targets[idx] = 1.0;
    InterpolationProblem sub(seq, std::move(targets), space);
    indicators.push_back(space == Space::HInf ? interpolate_hinf(sub)
                                              : interpolate_bloch(sub));
  }
  return linear_combination(levels, std::move(indicators));
}

SimpleDecomposition quantize_to_simple(const std::vector<Complex>& targets,
                                       double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("quantize_to_simple: eps must be positive");
  }
  for (Complex t : targets) {
    if (!std::isfinite(t.real()) || !std::isfinite(t.imag())) {
      throw std::invalid_argument("quantize_to_simple: non-finite target");
    }
    if (std::max(std::abs(t.real()), std::abs(t.imag())) / eps > 9e17) {
      throw std::invalid_argument(
          "quantize_to_simple: eps too small relative to the targets");
    }
  }

  SimpleDecomposition dec;
  std::vector<std::pair<long long, long long>> keys;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const std::pair<long long, long long> key = {
        std::llround(targets[i].real() / eps),
        std::llround(targets[i].imag() / eps)};
    std::size_t part = keys.size();
    for (std::size_t p = 0; p < keys.size(); ++p) {
      if (keys[p] == key) {
        part = p;
        break;
      }
    }
    if (part == keys.size()) {
      keys.push_back(key);
      dec.parts.emplace_back();
    }
    dec.parts[part].push_back(i);
  }

  // Level = midpoint of the part's bounding box. Parts whose members are all
  // equal get exactly that member, so quantizing an already-simple target
  // vector reproduces its levels bit for bit.
  dec.levels.reserve(dec.parts.size());
  for (const auto& part : dec.parts) {
    double re_min = targets[part[0]].real(), re_max = re_min;
    double im_min = targets[part[0]].imag(), im_max = im_min;
    for (std::size_t idx : part) {
      re_min = std::min(re_min, targets[idx].real());
      re_max = std::max(re_max, targets[idx].real());
      im_min = std::min(im_min, targets[idx].imag());
      im_max = std::max(im_max, targets[idx].imag());
    }
    dec.levels.emplace_back(0.5 * (re_min + re_max), 0.5 * (im_min + im_max));
  }
  return dec;
}

ResidualReport verify(const InterpolationProblem& problem,
                      const AnalyticFunction& f, double tol) {
  if (tol < 0.0 || !std::isfinite(tol)) {
    throw std::invalid_argument("verify: tol must be finite and nonnegative");
  }
  ResidualReport report;
  report.tol = tol;
  report.residuals.resize(problem.sequence.size());
  for (std::size_t i = 0; i < problem.sequence.size(); ++i) {
    const Complex z = problem.sequence[i].value();
    const Complex predicted = problem.space == Space::HInf
                                  ? f.eval(z)
                                  : one_minus_abs2(z) * f.deriv(z);
    report.residuals[i] = std::abs(predicted - problem.targets[i]);
    report.max_residual = std::max(report.max_residual, report.residuals[i]);
  }
  report.pass = report.max_residual <= tol;

  if (problem.space == Space::Bloch) {
    try {
      const BeurlingBasis basis = beurling_basis(problem.sequence);
      const BlochNormReport norm = bloch_seminorm(f);
      report.m_est = basis.m_est;
      report.seminorm_est = norm.seminorm_est;
      report.norm_bound_check =
          4.0 * basis.m_est * problem.sup_target() + 1e-9 - norm.seminorm_est;
      report.norm_bound_ok = *report.norm_bound_check >= 0.0;
    } catch (const ConditioningError&) {
      // residuals still stand; the norm audit is simply unavailable
    }
  }
  return report;
}

}  // namespace blochinterp
