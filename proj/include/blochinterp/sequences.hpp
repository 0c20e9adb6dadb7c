#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "blochinterp/geometry.hpp"

namespace blochinterp {

struct SeparationReport {
  // min over pairs of rho(z_n, z_k); 1 for sequences with fewer than 2 points
  double delta_sep = 1.0;
  // min over k of prod_{n != k} rho(z_n, z_k), the uniform separation constant
  double delta_unif = 1.0;
  // sum of (1 - |z_n|), finite-sequence form of the Blaschke condition
  double blaschke_sum = 0.0;
  std::vector<double> per_point_products;
};

// Finite sequence of distinct disk points. Separation statistics are computed
// once at construction; every accessor after that is free.
class PointSequence {
 public:
  static constexpr std::size_t kMaxPoints = 64;

  explicit PointSequence(std::vector<DiskPoint> points, std::string label = "");

  std::size_t size() const noexcept { return points_.size(); }
  const DiskPoint& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<DiskPoint>& points() const noexcept { return points_; }
  const std::string& label() const noexcept { return label_; }
  const SeparationReport& separation() const noexcept { return separation_; }

 private:
  std::vector<DiskPoint> points_;
  std::string label_;
  SeparationReport separation_;
};

// z_k = 1 - 2^-k for k = 1..n. Although kMaxPoints is 64, n caps at 39 here:
// 1 - 2^-40 is already past the DiskPoint admissibility radius.
PointSequence gen_geometric(int n);

// Prepend a point at pseudohyperbolic distance exactly eps/2 from the first
// point, on the geodesic through z_1 and the origin. Drives delta_sep (and
// with it delta_unif) below eps without moving any existing point.
PointSequence augment_close(const PointSequence& seq, double eps);

// Recompute the statistics cached on the sequence. Pairwise products are
// accumulated as sums of log rho to keep tiny products out of the denormal
// range.
SeparationReport separation_report(const PointSequence& seq);

struct HaymanPairCheck {
  std::size_t k = 0;   // positions within the subsequence, 0-based, k < p
  std::size_t p = 0;
  double value = 0.0;  // rho(z_{n_k}, z_{n_p})
  double bound = 0.0;  // exp(-1 / 2^(p-k))
  bool ok = false;     // value > bound
};

struct HaymanReport {
  std::vector<std::size_t> indices;
  // every pairwise separation exceeds its exponential bound
  bool hypothesis_holds = true;
  std::vector<HaymanPairCheck> pair_checks;
  // Q_k = prod_{p != k} rho(z_{n_k}, z_{n_p})
  std::vector<double> q;
  double q_bound = 0.0;  // exp(-2)
  bool all_q_pass = true;
  // hypothesis and conclusion both hold; false says nothing when the
  // hypothesis already failed
  bool passed = false;
};

// Checks rho(z_{n_k}, z_{n_p}) > exp(-1/2^(p-k)) for all pairs of positions
// in the subsequence, then Q_k > exp(-2) for every k. Indices must be strictly
// increasing and in range.
HaymanReport hayman_bounds(const PointSequence& seq,
                           const std::vector<std::size_t>& subsequence);

}  // namespace blochinterp
