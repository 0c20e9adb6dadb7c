// Acceptance gate: ten end-to-end criteria, one PASS/FAIL line each, exit 1
// if any fails. Criteria 1 and 4 also carry wall-clock budgets.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "blochinterp/functions.hpp"
#include "blochinterp/geometry.hpp"
#include "blochinterp/grid.hpp"
#include "blochinterp/interpolation.hpp"
#include "blochinterp/parallel.hpp"
#include "blochinterp/quadrature.hpp"
#include "blochinterp/sequences.hpp"
#include "blochinterp/serialization.hpp"

using namespace blochinterp;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_since(const Clock::time_point& t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Complex random_disk_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return std::polar(radius * std::sqrt(unit(rng)),
                    2.0 * std::acos(-1.0) * unit(rng));
}

struct Criterion {
  bool ok = false;
  std::string detail;
};

std::string fmt(const char* format, double a, double b = 0.0) {
  char buffer[160];
  std::snprintf(buffer, sizeof buffer, format, a, b);
  return buffer;
}

// 1. rho symmetry, the 1 - rho^2 identity, Moebius invariance and the
// pseudohyperbolic triangle bound on 10^4 random pairs/triples, all within
// 1e-12, under 5 seconds.
Criterion criterion_metric() {
  const Clock::time_point t0 = Clock::now();
  std::mt19937_64 rng(101u);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Complex z = random_disk_point(rng, 0.999);
    const Complex w = random_disk_point(rng, 0.999);
    const Complex v = random_disk_point(rng, 0.999);
    const Complex a = random_disk_point(rng, 0.99);

    const double d = rho(z, w);
    worst = std::max(worst, std::abs(d - rho(w, z)));

    const double identity =
        one_minus_abs2(z) * one_minus_abs2(w) / std::norm(1.0 - std::conj(z) * w);
    worst = std::max(worst, std::abs((1.0 - d * d) - identity));

    const auto moebius = [a](Complex x) {
      return (x - a) / (1.0 - std::conj(a) * x);
    };
    worst = std::max(worst, std::abs(rho(moebius(z), moebius(w)) - d));

    const double leg1 = rho(z, v);
    const double leg2 = rho(v, w);
    worst = std::max(worst, d - (leg1 + leg2) / (1.0 + leg1 * leg2));
  }
  const double seconds = elapsed_since(t0);
  return {worst <= 1e-12 && seconds < 5.0,
          fmt("worst deviation %.2e, %.2f s", worst, seconds)};
}

// 2. blaschke_sum = 1 - 2^-n within 1e-15 and consecutive rho = 1/(3 - 2^-k)
// within 1e-12 for geometric sequences, n = 1..20.
Criterion criterion_carleson() {
  double worst_sum = 0.0;
  double worst_rho = 0.0;
  for (int n = 1; n <= 20; ++n) {
    const PointSequence seq = gen_geometric(n);
    worst_sum = std::max(worst_sum, std::abs(seq.separation().blaschke_sum -
                                             (1.0 - std::exp2(-n))));
    for (int k = 1; k < n; ++k) {
      const double expected = 1.0 / (3.0 - std::exp2(-k));
      worst_rho = std::max(
          worst_rho, std::abs(rho(seq[k - 1], seq[k]) - expected));
    }
  }
  return {worst_sum <= 1e-15 && worst_rho <= 1e-12,
          fmt("blaschke_sum off by %.2e, consecutive rho off by %.2e",
              worst_sum, worst_rho)};
}

// 3. Basis duality on gen_geometric(8): max |f_k(z_j) - delta_kj| <= 1e-10.
Criterion criterion_duality() {
  const PointSequence seq = gen_geometric(8);
  const BeurlingBasis basis = beurling_basis(seq);
  double worst = 0.0;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    for (std::size_t j = 0; j < seq.size(); ++j) {
      const Complex expected = k == j ? 1.0 : 0.0;
      worst = std::max(
          worst, std::abs(basis.functions[k].eval(seq[j].value()) - expected));
    }
  }
  return {worst <= 1e-10, fmt("max |f_k(z_j) - delta| = %.2e", worst)};
}

// 4. 100 random Bloch problems on gen_geometric(8): residuals <= 1e-9 and
// seminorm <= 4 m_est sup|a| + 1e-9, under 60 seconds.
Criterion criterion_bloch_interpolation() {
  const Clock::time_point t0 = Clock::now();
  std::mt19937_64 rng(404u);
  const PointSequence seq = gen_geometric(8);
  double worst_residual = 0.0;
  double worst_margin = 1e300;
  bool all_ok = true;
  for (int run = 0; run < 100; ++run) {
    std::vector<Complex> targets(seq.size());
    for (auto& t : targets) t = random_disk_point(rng, 1.0);
    const InterpolationProblem problem(seq, targets, Space::Bloch);
    const AnalyticFunction f = interpolate_bloch(problem);
    const ResidualReport report = verify(problem, f);
    worst_residual = std::max(worst_residual, report.max_residual);
    if (report.norm_bound_check) {
      worst_margin = std::min(worst_margin, *report.norm_bound_check);
    }
    all_ok = all_ok && report.pass && report.norm_bound_ok &&
             report.norm_bound_check.has_value();
  }
  const double seconds = elapsed_since(t0);
  return {all_ok && worst_residual <= 1e-9 && seconds < 60.0,
          fmt("worst residual %.2e, tightest norm margin %.3g", worst_residual,
              worst_margin) +
              fmt(", %.1f s", seconds)};
}

// 5. quantize_to_simple(1e-3) followed by simple_function_compose reproduces
// random targets within 1e-3 + 1e-8 and matches direct interpolation within
// 1e-8.
Criterion criterion_idempotent_composition() {
  std::mt19937_64 rng(505u);
  const PointSequence seq = gen_geometric(8);
  const double eps = 1e-3;
  double worst_node = 0.0;
  double worst_match = 0.0;
  for (int run = 0; run < 5; ++run) {
    std::vector<Complex> targets(seq.size());
    for (auto& t : targets) t = random_disk_point(rng, 1.0);
    const SimpleDecomposition dec = quantize_to_simple(targets, eps);
    const AnalyticFunction f =
        simple_function_compose(seq, dec.levels, dec.parts, Space::Bloch);

    for (std::size_t n = 0; n < seq.size(); ++n) {
      const Complex z = seq[n].value();
      worst_node = std::max(
          worst_node,
          std::abs(one_minus_abs2(z) * f.deriv(z) - targets[n]));
    }

    std::vector<Complex> quantized(seq.size(), 0.0);
    for (std::size_t p = 0; p < dec.parts.size(); ++p) {
      for (std::size_t idx : dec.parts[p]) quantized[idx] = dec.levels[p];
    }
    const AnalyticFunction direct = interpolate_bloch(
        InterpolationProblem(seq, quantized, Space::Bloch));
    for (int i = 0; i < 50; ++i) {
      const Complex z = random_disk_point(rng, 0.99);
      worst_match = std::max(worst_match, std::abs(f.eval(z) - direct.eval(z)));
    }
  }
  return {worst_node <= eps + 1e-8 && worst_match <= 1e-8,
          fmt("node error %.2e, oracle mismatch %.2e", worst_node,
              worst_match)};
}

// 6. append_point on an 8-node interpolant for eps in {0.2, 0.05, 0.01}:
// original values preserved and the new one hit within 1e-9, with the grown
// sequence's delta_sep below eps.
Criterion criterion_append_point() {
  std::mt19937_64 rng(606u);
  const PointSequence seq = gen_geometric(8);
  std::vector<Complex> targets(seq.size());
  for (auto& t : targets) t = random_disk_point(rng, 1.0);
  const AnalyticFunction f =
      interpolate_hinf(InterpolationProblem(seq, targets, Space::HInf));
  const Complex a1(0.6, -0.35);

  double worst = 0.0;
  bool separations_drop = true;
  for (double eps : {0.2, 0.05, 0.01}) {
    const PointSequence grown = augment_close(seq, eps);
    separations_drop =
        separations_drop && grown.separation().delta_sep < eps;
    const AnalyticFunction g = append_point(f, seq, grown[0], a1);
    for (std::size_t n = 0; n < seq.size(); ++n) {
      worst = std::max(
          worst, std::abs(g.eval(seq[n].value()) - f.eval(seq[n].value())));
    }
    worst = std::max(worst, std::abs(g.eval(grown[0].value()) - a1));
  }
  return {worst <= 1e-9 && separations_drop,
          fmt("worst value error %.2e", worst) +
              (separations_drop ? ", delta_sep < eps throughout"
                                : ", delta_sep failed to drop")};
}

// 7. Growth bound (1 - |z|^2)|f(z)| <= |f(0)| + seminorm + 1e-9 for a suite
// of constructed functions; spot value for f(z) = z.
Criterion criterion_growth_bound() {
  std::mt19937_64 rng(707u);
  const PointSequence six = gen_geometric(6);
  std::vector<Complex> targets(six.size());
  for (auto& t : targets) t = random_disk_point(rng, 1.0);

  std::vector<AnalyticFunction> suite = {
      monomial(0),
      monomial(1),
      monomial(5),
      polynomial({0.25, Complex(0.0, -1.0), 0.5}),
      mobius(DiskPoint(0.7, -0.1)),
      kernel_g(DiskPoint(0.9, 0.0)),
      kernel_pow(DiskPoint(0.5, 0.2), 3),
      blaschke_product(six),
      beurling_basis_function(six, 2),
      primitive(kernel_g(DiskPoint(0.8, 0.0)), 0.3),
      interpolate_hinf(InterpolationProblem(six, targets, Space::HInf)),
      interpolate_bloch(InterpolationProblem(six, targets, Space::Bloch)),
  };

  bool all_hold = true;
  for (const AnalyticFunction& f : suite) {
    all_hold = all_hold && check_primitive_bound(f).holds;
  }

  const PrimitiveBoundReport spot = check_primitive_bound(monomial(1));
  const double spot_true = 2.0 / (3.0 * std::sqrt(3.0));
  const bool spot_ok = std::abs(spot.weighted_sup - spot_true) <= 1e-3 &&
                       spot.norm_bound == 1.0;
  return {all_hold && spot_ok,
          fmt("suite of %.0f functions, spot LHS %.6f",
              static_cast<double>(suite.size()), spot.weighted_sup) +
              " vs RHS 1"};
}

// 8. Bergman pairings: diagonal monomials within 1e-11 of 1/((m+1)(m+2)),
// cross terms <= 1e-12, conjugate symmetry and sesquilinearity within 1e-12.
Criterion criterion_pairing() {
  double worst_diag = 0.0;
  double worst_cross = 0.0;
  for (int m = 0; m <= 6; ++m) {
    const Complex diag = bergman_pairing(monomial(m), monomial(m));
    worst_diag = std::max(
        worst_diag, std::abs(diag - 1.0 / ((m + 1.0) * (m + 2.0))));
  }
  for (int m = 0; m <= 4; ++m) {
    for (int k = 0; k <= 4; ++k) {
      if (k == m) continue;
      worst_cross = std::max(
          worst_cross, std::abs(bergman_pairing(monomial(m), monomial(k))));
    }
  }

  const AnalyticFunction f1 = polynomial({0.5, Complex(0.0, 1.0)});
  const AnalyticFunction f2 = polynomial({0.0, -0.25, 1.0});
  const AnalyticFunction h = polynomial({Complex(0.3, -0.2), 0.0, 0.5});
  const Complex alpha(0.7, 0.4);
  const Complex beta(-0.3, 1.1);
  double worst_linear = std::abs(
      bergman_pairing(f1, h) - std::conj(bergman_pairing(h, f1)));
  const AnalyticFunction combo =
      linear_combination({alpha, beta}, {f1, f2});
  worst_linear = std::max(
      worst_linear,
      std::abs(bergman_pairing(combo, h) - alpha * bergman_pairing(f1, h) -
               beta * bergman_pairing(f2, h)));
  const AnalyticFunction scaled = linear_combination({alpha}, {h});
  worst_linear = std::max(
      worst_linear, std::abs(bergman_pairing(f1, scaled) -
                             std::conj(alpha) * bergman_pairing(f1, h)));

  return {worst_diag <= 1e-11 && worst_cross <= 1e-12 &&
              worst_linear <= 1e-12,
          fmt("diag %.2e, cross %.2e", worst_diag, worst_cross) +
              fmt(", linearity %.2e", worst_linear)};
}

// 9. 50 randomized subsequences with pairwise gaps >= 3 in the geometric
// index satisfy the pairwise hypothesis and every Q_k > e^-2.
Criterion criterion_hayman() {
  std::mt19937_64 rng(909u);
  int passed = 0;
  for (int run = 0; run < 50; ++run) {
    const int total = 15 + static_cast<int>(rng() % 25u);
    const PointSequence seq = gen_geometric(total);
    std::vector<std::size_t> positions;
    std::size_t next = rng() % 3u;
    while (next < seq.size()) {
      positions.push_back(next);
      next += 3 + rng() % 3u;
    }
    const HaymanReport report = hayman_bounds(seq, positions);
    if (report.hypothesis_holds && report.all_q_pass) ++passed;
  }
  return {passed == 50, fmt("%.0f of 50 configurations passed",
                            static_cast<double>(passed))};
}

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(BLOCHINTERP_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& path) {
  const Json j = load_json_file(path);
  return j.dump();
}

// 10. gen -> analyze -> interp -> verify -> sample completes with exit 0 on
// the 8-node geometric sequence, fixtures are run-to-run identical, and the
// serialized interpolant evaluates bit-identically on the full audit grid.
Criterion criterion_cli_pipeline() {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "blochinterp_acceptance";
  std::filesystem::create_directories(dir);
  const std::string seq = (dir / "seq.json").string();
  const std::string seq2 = (dir / "seq2.json").string();
  const std::string targets = (dir / "targets.json").string();
  const std::string tree = (dir / "tree.json").string();
  const std::string tree2 = (dir / "tree2.json").string();
  const std::string csv = (dir / "grid.csv").string();

  save_json_file(targets, Json::parse(
      "[[1,0],[0,0.5],[-0.75,0],[0,0],[0.5,0.5],[0,-1],[0.25,0],[-0.5,0.25]]"));

  int steps_ok = 0;
  steps_ok += run_cli("gen --kind geometric --n 8 --out " + seq) == 0;
  steps_ok += run_cli("analyze --seq " + seq) == 0;
  steps_ok += run_cli("interp --seq " + seq + " --targets " + targets +
                      " --space bloch --out " + tree) == 0;
  steps_ok += run_cli("verify --interpolant " + tree + " --seq " + seq +
                      " --targets " + targets + " --space bloch") == 0;
  steps_ok += run_cli("sample --interpolant " + tree + " --out " + csv) == 0;

  // fixtures must not drift between identical runs
  steps_ok += run_cli("gen --kind geometric --n 8 --out " + seq2) == 0;
  steps_ok += run_cli("interp --seq " + seq + " --targets " + targets +
                      " --space bloch --out " + tree2) == 0;
  const bool stable = slurp(seq) == slurp(seq2) && slurp(tree) == slurp(tree2);

  // round trip: the tree written by the CLI evaluates bit-identically to the
  // interpolant built in-process, at every audit grid point
  const AnalyticFunction reloaded = function_from_json(load_json_file(tree));
  const AnalyticFunction direct = interpolate_bloch(InterpolationProblem(
      sequence_from_json(load_json_file(seq)),
      targets_from_json(load_json_file(targets)), Space::Bloch));
  const GridSpec grid = audit_grid();
  std::vector<char> equal(grid.radial_nodes, 1);
  parallel_for(equal.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (int j = 0; j < grid.angular_nodes; ++j) {
        const Complex z = audit_point(static_cast<int>(i), j, grid);
        if (reloaded.eval(z) != direct.eval(z) ||
            reloaded.deriv(z) != direct.deriv(z)) {
          equal[i] = 0;
        }
      }
    }
  });
  const bool roundtrip =
      std::all_of(equal.begin(), equal.end(), [](char c) { return c != 0; });

  return {steps_ok == 7 && stable && roundtrip,
          fmt("%.0f of 7 steps exit 0", static_cast<double>(steps_ok)) +
              (stable ? ", fixtures stable" : ", fixtures drifted") +
              (roundtrip ? ", round trip bit-identical"
                         : ", round trip mismatch")};
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Criterion (*run)();
  };
  const Entry entries[] = {
      {"pseudohyperbolic metric identities", criterion_metric},
      {"carleson diagnostics on geometric sequences", criterion_carleson},
      {"beurling basis duality", criterion_duality},
      {"bloch interpolation with norm control", criterion_bloch_interpolation},
      {"idempotent quantize-and-compose", criterion_idempotent_composition},
      {"append-point extension", criterion_append_point},
      {"weighted growth bound", criterion_growth_bound},
      {"bergman pairing", criterion_pairing},
      {"hayman subsequence bounds", criterion_hayman},
      {"cli pipeline and round trip", criterion_cli_pipeline},
  };

  int failures = 0;
  int index = 0;
  for (const Entry& entry : entries) {
    ++index;
    Criterion result;
    try {
      result = entry.run();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] criterion %2d: %s (%s)\n", result.ok ? "PASS" : "FAIL",
                index, entry.name, result.detail.c_str());
    std::fflush(stdout);
    if (!result.ok) ++failures;
  }
  std::printf("acceptance: %d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
