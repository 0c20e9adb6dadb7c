#include "blochinterp/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace blochinterp {

PointSequence::PointSequence(std::vector<DiskPoint> points, std::string label)
    : points_(std::move(points)), label_(std::move(label)) {
  if (points_.empty()) {
    throw std::invalid_argument("PointSequence: needs at least one point");
  }
  if (points_.size() > kMaxPoints) {
    throw std::invalid_argument("PointSequence: " +
                                std::to_string(points_.size()) +
                                " points exceeds the cap of 64");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (points_[i] == points_[j]) {
        throw std::invalid_argument("PointSequence: points " +
                                    std::to_string(i) + " and " +
                                    std::to_string(j) + " coincide");
      }
    }
  }
  separation_ = separation_report(*this);
}

SeparationReport separation_report(const PointSequence& seq) {
  const std::size_t n = seq.size();
  SeparationReport report;
  report.per_point_products.assign(n, 1.0);
  for (const DiskPoint& z : seq.points()) {
    report.blaschke_sum += 1.0 - z.abs();
  }
  if (n < 2) return report;

  report.delta_sep = 1.0;
  std::vector<double> log_products(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double r = rho(seq[i], seq[j]);
      report.delta_sep = std::min(report.delta_sep, r);
      const double lr = std::log(r);
      log_products[i] += lr;
      log_products[j] += lr;
    }
  }
  report.delta_unif = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    report.per_point_products[k] = std::exp(log_products[k]);
    report.delta_unif =
        std::min(report.delta_unif, report.per_point_products[k]);
  }
  return report;
}

PointSequence gen_geometric(int n) {
  if (n < 1) {
    throw std::invalid_argument("gen_geometric: n must be >= 1");
  }
  // 1 - 2^-k crosses the DiskPoint admissibility radius between k = 39 and 40.
  if (n > 39) {
    throw std::invalid_argument(
        "gen_geometric: n = " + std::to_string(n) +
        " would place points beyond the 1 - 1e-12 boundary margin (max 39)");
  }
  std::vector<DiskPoint> points;
  points.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    points.emplace_back(1.0 - std::exp2(static_cast<double>(-k)), 0.0);
  }
  return PointSequence(std::move(points),
                       "geometric-" + std::to_string(n));
}

PointSequence augment_close(const PointSequence& seq, double eps) {
  if (!(eps > 0.0) || eps >= 1.0) {
    throw std::invalid_argument("augment_close: eps must lie in (0, 1)");
  }
  if (seq.size() + 1 > PointSequence::kMaxPoints) {
    throw std::invalid_argument("augment_close: sequence is already at the "
                                "64-point cap");
  }
  // Push s = eps/2 through the automorphism exchanging z_1 and 0: the image
  // z0 = b_{z_1}^{-1}(s) sits at pseudohyperbolic distance exactly eps/2 from
  // z_1, on the geodesic through z_1 and the origin.
  const Complex z1 = seq[0].value();
  const double s = eps / 2.0;
  const DiskPoint candidate((z1 - s) / (1.0 - std::conj(z1) * s));
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (candidate == seq[i]) {
      throw std::invalid_argument(
          "augment_close: eps is so small the new point collides with point " +
          std::to_string(i));
    }
  }
  std::vector<DiskPoint> points;
  points.reserve(seq.size() + 1);
  points.push_back(candidate);
  points.insert(points.end(), seq.points().begin(), seq.points().end());
  std::string label = seq.label();
  if (!label.empty()) label += "+close";
  return PointSequence(std::move(points), std::move(label));
}

HaymanReport hayman_bounds(const PointSequence& seq,
                           const std::vector<std::size_t>& subsequence) {
  if (subsequence.size() < 2) {
    throw std::invalid_argument("hayman_bounds: need at least 2 indices");
  }
  for (std::size_t i = 0; i < subsequence.size(); ++i) {
    if (subsequence[i] >= seq.size()) {
      throw std::invalid_argument("hayman_bounds: index " +
                                  std::to_string(subsequence[i]) +
                                  " out of range");
    }
    if (i > 0 && subsequence[i] <= subsequence[i - 1]) {
      throw std::invalid_argument(
          "hayman_bounds: indices must be strictly increasing");
    }
  }

  HaymanReport report;
  report.indices = subsequence;
  report.q_bound = std::exp(-2.0);

  const std::size_t m = subsequence.size();
  std::vector<double> log_q(m, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t p = k + 1; p < m; ++p) {
      HaymanPairCheck check;
      check.k = k;
      check.p = p;
      check.value = rho(seq[subsequence[k]], seq[subsequence[p]]);
      check.bound = std::exp(-std::exp2(-static_cast<double>(p - k)));
      check.ok = check.value > check.bound;
      if (!check.ok) report.hypothesis_holds = false;
      report.pair_checks.push_back(check);
      const double lr = std::log(check.value);
      log_q[k] += lr;
      log_q[p] += lr;
    }
  }
  report.q.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    report.q[k] = std::exp(log_q[k]);
    if (!(report.q[k] > report.q_bound)) report.all_q_pass = false;
  }
  report.passed = report.hypothesis_holds && report.all_q_pass;
  return report;
}

}  // namespace blochinterp
