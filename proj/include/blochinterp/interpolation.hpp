#pragma once

#include <optional>
#include <vector>

#include "blochinterp/functions.hpp"
#include "blochinterp/geometry.hpp"
#include "blochinterp/sequences.hpp"

namespace blochinterp {

enum class Space { HInf, Bloch };

inline constexpr double kDefaultResidualTol = 1e-9;

struct InterpolationProblem {
  PointSequence sequence;
  std::vector<Complex> targets;
  Space space = Space::Bloch;

  // Requires one finite target per point.
  InterpolationProblem(PointSequence seq, std::vector<Complex> target_values,
                       Space target_space);

  double sup_target() const;  // max |a_n|, 0 for the empty problem
};

// f(z_n) = a_n exactly in floating point, f a linear combination of the
// Beurling basis for the sequence.
AnalyticFunction interpolate_hinf(const InterpolationProblem& problem);

// Primitive of sum_k a_k g_{z_k} f_k: the weighted derivative
// (1 - |z_n|^2) f'(z_n) hits a_n, and the Bloch seminorm is controlled by
// 4 m_est sup|a|.
AnalyticFunction interpolate_bloch(const InterpolationProblem& problem);

// g = ((a1 - f(z0)) / B(z0)) B + f for B the Blaschke product over seq: g
// keeps every value of f on seq and additionally takes a1 at z0. z0 must stay
// at pseudohyperbolic distance >= kMinSeparation from the sequence.
AnalyticFunction append_point(const AnalyticFunction& f,
                              const PointSequence& seq, const DiskPoint& z0,
                              Complex a1);

// Interpolates a simple-function target: every point indexed by parts[i]
// receives the value levels[i]. Parts must be disjoint, in range and
// nonempty; points left uncovered get 0. Built as the level-weighted linear
// combination of per-part indicator interpolants.
AnalyticFunction simple_function_compose(
    const PointSequence& seq, const std::vector<Complex>& levels,
    const std::vector<std::vector<std::size_t>>& parts, Space space);

struct SimpleDecomposition {
  std::vector<Complex> levels;
  std::vector<std::vector<std::size_t>> parts;
};

// Rounds targets onto an eps-grid and groups equal rounded values into parts,
// in first-appearance order. Each level is the midpoint of its part's
// bounding box, so the levels of an already-quantized target vector reproduce
// it exactly and the error never exceeds eps * sqrt(2) / 2 in general.
SimpleDecomposition quantize_to_simple(const std::vector<Complex>& targets,
                                       double eps);

struct ResidualReport {
  std::vector<double> residuals;
  double max_residual = 0.0;
  double tol = kDefaultResidualTol;
  bool pass = false;
  // Bloch problems only: (4 m_est sup|a| + 1e-9) - seminorm_est. Nonnegative
  // when the seminorm stays inside the constructive bound. Empty for HInf
  // problems and when the basis itself is not computable.
  std::optional<double> norm_bound_check;
  std::optional<double> seminorm_est;
  std::optional<double> m_est;
  bool norm_bound_ok = true;
};

// Residuals of f against the problem: |f(z_n) - a_n| for HInf,
// |(1 - |z_n|^2) f'(z_n) - a_n| for Bloch.
ResidualReport verify(const InterpolationProblem& problem,
                      const AnalyticFunction& f,
                      double tol = kDefaultResidualTol);

}  // namespace blochinterp
