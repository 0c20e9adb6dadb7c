// Command-line surface for the library: generate sequences, analyze
// separation, build and verify interpolants, run pairing checks, dump grid
// samples. Every command prints a RunReport JSON to stdout; diagnostics go to
// stderr. Exit codes: 0 pass, 1 verification fail, 2 input error,
// 3 numerical or conditioning failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "blochinterp/errors.hpp"
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

class Timer {
 public:
  double seconds() const {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double>(elapsed).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

// FNV-1a over the file bytes. Reports carry these digests so a fixture can
// assert that its inputs have not drifted.
std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open " + path);
  }
  std::uint64_t hash = 1469598103934665603ull;
  char buffer[65536];
  for (;;) {
    in.read(buffer, sizeof buffer);
    const std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      hash ^= static_cast<unsigned char>(buffer[i]);
      hash *= 1099511628211ull;
    }
    if (!in) break;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(hash));
  return hex;
}

Json file_ref(const std::string& path) {
  return {{"path", path}, {"digest", file_digest(path)}};
}

void print_report(const std::string& command, Json inputs, Json outputs,
                  const std::string& status, const Timer& timer) {
  const Json report = {{"command", command},
                       {"inputs", std::move(inputs)},
                       {"outputs", std::move(outputs)},
                       {"status", status},
                       {"wall_time", timer.seconds()}};
  std::cout << report.dump(2) << '\n';
}

int fail_report(const std::string& command, const std::string& message,
                const Timer& timer, int code) {
  std::cerr << "error: " << message << '\n';
  print_report(command, Json::array(), Json{{"error", message}}, "error",
               timer);
  return code;
}

double parse_real(const std::string& text) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse number '" + text + "'");
  }
  if (pos != text.size()) {
    throw std::invalid_argument("trailing characters in number '" + text +
                                "'");
  }
  return value;
}

// "" and "+" mean 1, "-" means -1; anything else is a plain real.
double parse_signed_unit(const std::string& text) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  return parse_real(text);
}

// Accepts "1.5", "-2e-3", "0.5i", "1+2i", "-1.25-0.5i", "i", "-i".
Complex parse_complex_token(std::string token) {
  if (token.empty()) {
    throw std::invalid_argument("empty numeric token");
  }
  if (token.back() != 'i') return {parse_real(token), 0.0};
  token.pop_back();
  // Split at the last sign that is neither leading nor part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t p = token.size(); p-- > 1;) {
    if ((token[p] == '+' || token[p] == '-') && token[p - 1] != 'e' &&
        token[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_signed_unit(token)};
  return {parse_real(token.substr(0, split)),
          parse_signed_unit(token.substr(split))};
}

std::vector<std::string> split_on_commas(const std::string& text) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      tokens.push_back(text.substr(start));
      return tokens;
    }
    tokens.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
}

struct ParsedLiteral {
  AnalyticFunction f;
  // Set when the literal is exactly z^m, so the pairing command can print
  // the closed-form reference value.
  std::optional<int> monomial_degree;
};

// Grammar: "z" | "z^K" | "poly:c0,c1,..." | "kernel:RE[,IM]".
ParsedLiteral parse_function_literal(const std::string& literal) {
  if (literal == "z") return {monomial(1), 1};
  if (literal.rfind("z^", 0) == 0) {
    const std::string tail = literal.substr(2);
    std::size_t pos = 0;
    int degree = -1;
    try {
      degree = std::stoi(tail, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse degree '" + tail + "'");
    }
    if (pos != tail.size() || degree < 0) {
      throw std::invalid_argument("cannot parse degree '" + tail + "'");
    }
    return {monomial(degree), degree};
  }
  if (literal.rfind("poly:", 0) == 0) {
    std::vector<Complex> coeffs;
    for (const std::string& token : split_on_commas(literal.substr(5))) {
      coeffs.push_back(parse_complex_token(token));
    }
    std::optional<int> degree;
    int nonzero = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == Complex(0.0)) continue;
      ++nonzero;
      if (coeffs[i] == Complex(1.0)) degree = static_cast<int>(i);
    }
    if (nonzero != 1) degree.reset();
    return {polynomial(coeffs), degree};
  }
  if (literal.rfind("kernel:", 0) == 0) {
    const std::vector<std::string> tokens =
        split_on_commas(literal.substr(7));
    if (tokens.empty() || tokens.size() > 2) {
      throw std::invalid_argument("kernel literal takes re or re,im");
    }
    const double re = parse_real(tokens[0]);
    const double im = tokens.size() == 2 ? parse_real(tokens[1]) : 0.0;
    return {kernel_g(DiskPoint(re, im)), std::nullopt};
  }
  throw std::invalid_argument(
      "cannot parse function literal '" + literal +
      "': expected z, z^K, poly:c0,c1,... or kernel:re[,im]");
}

struct GenArgs {
  std::string kind = "geometric";
  int n = 0;
  double augment_eps = 0.0;
  bool has_augment = false;
  std::string label;
  bool has_label = false;
  std::string out;
};

int run_gen(const GenArgs& args, const Timer& timer) {
  PointSequence seq = gen_geometric(args.n);
  if (args.has_augment) seq = augment_close(seq, args.augment_eps);
  if (args.has_label) seq = PointSequence(seq.points(), args.label);
  save_json_file(args.out, to_json(seq));
  Json outputs = {{"sequence_file", file_ref(args.out)},
                  {"label", seq.label()},
                  {"size", seq.size()},
                  {"separation", to_json(seq.separation())}};
  print_report("gen", Json::array(), std::move(outputs), "pass", timer);
  return 0;
}

struct AnalyzeArgs {
  std::string seq;
  std::string out;
};

int run_analyze(const AnalyzeArgs& args, const Timer& timer) {
  Json inputs = Json::array({file_ref(args.seq)});
  const PointSequence seq = sequence_from_json(load_json_file(args.seq));
  const Json separation = to_json(seq.separation());
  Json outputs = {{"label", seq.label()},
                  {"size", seq.size()},
                  {"separation", separation}};
  if (!args.out.empty()) {
    save_json_file(args.out, separation);
    outputs["report_file"] = file_ref(args.out);
  }
  print_report("analyze", std::move(inputs), std::move(outputs), "pass",
               timer);
  return 0;
}

struct InterpArgs {
  std::string seq;
  std::string targets;
  std::string space = "bloch";
  std::string out;
};

int run_interp(const InterpArgs& args, const Timer& timer) {
  Json inputs = Json::array({file_ref(args.seq), file_ref(args.targets)});
  const PointSequence seq = sequence_from_json(load_json_file(args.seq));
  const std::vector<Complex> targets =
      targets_from_json(load_json_file(args.targets));
  const Space space = space_from_name(args.space);
  const InterpolationProblem problem(seq, targets, space);
  const AnalyticFunction f = space == Space::HInf ? interpolate_hinf(problem)
                                                  : interpolate_bloch(problem);
  save_json_file(args.out, to_json(f));
  const ResidualReport report = verify(problem, f);
  const bool pass = report.pass && report.norm_bound_ok;
  Json outputs = {{"interpolant_file", file_ref(args.out)},
                  {"space", space_name(space)},
                  {"verify", to_json(report)}};
  print_report("interp", std::move(inputs), std::move(outputs),
               pass ? "pass" : "fail", timer);
  return pass ? 0 : 1;
}

struct VerifyArgs {
  std::string interpolant;
  std::string seq;
  std::string targets;
  std::string space = "bloch";
  double tol = kDefaultResidualTol;
};

int run_verify(const VerifyArgs& args, const Timer& timer) {
  Json inputs = Json::array({file_ref(args.interpolant), file_ref(args.seq),
                             file_ref(args.targets)});
  const AnalyticFunction f =
      function_from_json(load_json_file(args.interpolant));
  const PointSequence seq = sequence_from_json(load_json_file(args.seq));
  const std::vector<Complex> targets =
      targets_from_json(load_json_file(args.targets));
  const InterpolationProblem problem(seq, targets,
                                     space_from_name(args.space));
  const ResidualReport report = verify(problem, f, args.tol);
  const bool pass = report.pass && report.norm_bound_ok;
  Json outputs = {{"space", space_name(problem.space)},
                  {"verify", to_json(report)}};
  print_report("verify", std::move(inputs), std::move(outputs),
               pass ? "pass" : "fail", timer);
  return pass ? 0 : 1;
}

struct PairArgs {
  std::string f_literal;
  std::string h_literal;
  int radial_nodes = 64;
  int angular_nodes = 256;
};

int run_pair(const PairArgs& args, const Timer& timer) {
  const ParsedLiteral f = parse_function_literal(args.f_literal);
  const ParsedLiteral h = parse_function_literal(args.h_literal);
  GridSpec grid = quadrature_grid();
  grid.radial_nodes = args.radial_nodes;
  grid.angular_nodes = args.angular_nodes;
  const Complex value = bergman_pairing(f.f, h.f, grid);

  Json outputs = {{"f", args.f_literal},
                  {"h", args.h_literal},
                  {"value", Json::array({value.real(), value.imag()})},
                  {"grid",
                   {{"radial_nodes", grid.radial_nodes},
                    {"angular_nodes", grid.angular_nodes}}}};
  bool pass = true;
  if (f.monomial_degree && h.monomial_degree) {
    const bool diagonal = *f.monomial_degree == *h.monomial_degree;
    const double m = static_cast<double>(*f.monomial_degree);
    const double reference = diagonal ? 1.0 / ((m + 1.0) * (m + 2.0)) : 0.0;
    const double error = std::abs(value - reference);
    const double tol = diagonal ? 1e-11 : 1e-12;
    pass = error <= tol;
    outputs["reference"] = reference;
    outputs["abs_error"] = error;
    outputs["tol"] = tol;
  }
  print_report("pair", Json::array(), std::move(outputs),
               pass ? "pass" : "fail", timer);
  return pass ? 0 : 1;
}

struct SampleArgs {
  std::string interpolant;
  int radial_nodes = 49;
  int angular_nodes = 256;
  std::string out;
};

int run_sample(const SampleArgs& args, const Timer& timer) {
  Json inputs = Json::array({file_ref(args.interpolant)});
  const AnalyticFunction f =
      function_from_json(load_json_file(args.interpolant));
  if (args.radial_nodes < 1 || args.angular_nodes < 1) {
    throw std::invalid_argument("sample: node counts must be >= 1");
  }
  GridSpec grid;
  grid.radial_nodes = args.radial_nodes;
  grid.angular_nodes = args.angular_nodes;

  // Rows are formatted inside the workers and written out in order, so the
  // file is identical no matter how many threads ran.
  std::vector<std::string> rows(grid.radial_nodes);
  std::vector<double> row_max(grid.radial_nodes, 0.0);
  parallel_for(rows.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (int j = 0; j < grid.angular_nodes; ++j) {
        const Complex z = audit_point(static_cast<int>(i), j, grid);
        const double abs_f = std::abs(f.eval(z));
        const double abs_fprime = std::abs(f.deriv(z));
        const double weighted = weighted_deriv(f, z);
        row_max[i] = std::max(row_max[i], weighted);
        char line[160];
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      z.real(), z.imag(), abs_f, abs_fprime, weighted);
        rows[i] += line;
      }
    }
  });

  std::ofstream out(args.out);
  if (!out) {
    throw std::invalid_argument("cannot write " + args.out);
  }
  out << "re,im,abs_f,abs_fprime,weighted_deriv\n";
  for (const std::string& row : rows) out << row;
  out.flush();
  if (!out) {
    throw std::invalid_argument("write to " + args.out + " failed");
  }
  out.close();

  double max_weighted = 0.0;
  for (double m : row_max) max_weighted = std::max(max_weighted, m);
  Json outputs = {{"csv_file", file_ref(args.out)},
                  {"rows", grid.radial_nodes * grid.angular_nodes},
                  {"max_weighted_deriv", max_weighted}};
  print_report("sample", std::move(inputs), std::move(outputs), "pass",
               timer);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Interpolation toolkit for the unit disk: point sequences, separation "
      "diagnostics, interpolants with verification, Bergman pairings, grid "
      "dumps"};
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate a point sequence file");
  gen->add_option("--kind", gen_args.kind, "Sequence family")
      ->check(CLI::IsMember({"geometric"}));
  gen->add_option("--n", gen_args.n, "Number of points")->required();
  CLI::Option* gen_eps = gen->add_option(
      "--augment-eps", gen_args.augment_eps,
      "Prepend a point at pseudohyperbolic distance eps/2 from the first");
  CLI::Option* gen_label =
      gen->add_option("--label", gen_args.label, "Override the label");
  gen->add_option("--out", gen_args.out, "Output sequence JSON")->required();

  AnalyzeArgs analyze_args;
  CLI::App* analyze =
      app.add_subcommand("analyze", "Separation report for a sequence file");
  analyze->add_option("--seq", analyze_args.seq, "Sequence JSON")->required();
  analyze->add_option("--out", analyze_args.out,
                      "Also write the report to this path");

  InterpArgs interp_args;
  CLI::App* interp = app.add_subcommand(
      "interp", "Build an interpolant and verify it against its targets");
  interp->add_option("--seq", interp_args.seq, "Sequence JSON")->required();
  interp->add_option("--targets", interp_args.targets, "Targets JSON")
      ->required();
  interp->add_option("--space", interp_args.space, "bloch or hinf")
      ->check(CLI::IsMember({"bloch", "hinf"}));
  interp->add_option("--out", interp_args.out, "Output interpolant JSON")
      ->required();

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Re-load an interpolant and check its residuals");
  verify->add_option("--interpolant", verify_args.interpolant,
                     "Interpolant JSON")
      ->required();
  verify->add_option("--seq", verify_args.seq, "Sequence JSON")->required();
  verify->add_option("--targets", verify_args.targets, "Targets JSON")
      ->required();
  verify->add_option("--space", verify_args.space, "bloch or hinf")
      ->check(CLI::IsMember({"bloch", "hinf"}));
  verify->add_option("--tol", verify_args.tol, "Residual tolerance");

  PairArgs pair_args;
  CLI::App* pair = app.add_subcommand(
      "pair", "Bergman pairing of two function literals");
  pair->add_option("f_literal", pair_args.f_literal,
                   "Literal: z, z^K, poly:c0,c1,... or kernel:re[,im]")
      ->required();
  pair->add_option("h_literal", pair_args.h_literal, "Second literal")
      ->required();
  pair->add_option("--radial-nodes", pair_args.radial_nodes,
                   "Starting radial node count");
  pair->add_option("--angular-nodes", pair_args.angular_nodes,
                   "Starting angular node count");

  SampleArgs sample_args;
  CLI::App* sample = app.add_subcommand(
      "sample", "Dump |f|, |f'| and the weighted derivative on an audit grid");
  sample->add_option("--interpolant", sample_args.interpolant,
                     "Interpolant JSON")
      ->required();
  sample->add_option("--radial-nodes", sample_args.radial_nodes,
                     "Radial node count");
  sample->add_option("--angular-nodes", sample_args.angular_nodes,
                     "Angular node count");
  sample->add_option("--out", sample_args.out, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  gen_args.has_augment = gen_eps->count() > 0;
  gen_args.has_label = gen_label->count() > 0;

  const Timer timer;
  std::string command = "none";
  try {
    if (gen->parsed()) {
      command = "gen";
      return run_gen(gen_args, timer);
    }
    if (analyze->parsed()) {
      command = "analyze";
      return run_analyze(analyze_args, timer);
    }
    if (interp->parsed()) {
      command = "interp";
      return run_interp(interp_args, timer);
    }
    if (verify->parsed()) {
      command = "verify";
      return run_verify(verify_args, timer);
    }
    if (pair->parsed()) {
      command = "pair";
      return run_pair(pair_args, timer);
    }
    if (sample->parsed()) {
      command = "sample";
      return run_sample(sample_args, timer);
    }
  } catch (const Json::exception& e) {
    return fail_report(command, e.what(), timer, 2);
  } catch (const std::logic_error& e) {
    return fail_report(command, e.what(), timer, 2);
  } catch (const std::exception& e) {
    return fail_report(command, e.what(), timer, 3);
  }
  return 2;
}
