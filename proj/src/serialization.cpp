#include "blochinterp/serialization.hpp"

#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace blochinterp {

namespace {

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j, const char* what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw std::invalid_argument(std::string(what) +
                                ": expected a number or [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::string scheme_name(GridScheme scheme) {
  return scheme == GridScheme::RadialExponentialAudit
             ? "radial-exponential-audit"
             : "gauss-legendre-trapezoid";
}

Json grid_to_json(const GridSpec& grid) {
  return {{"radial_nodes", grid.radial_nodes},
          {"angular_nodes", grid.angular_nodes},
          {"scheme", scheme_name(grid.scheme)}};
}

}  // namespace

Json to_json(const PointSequence& seq) {
  Json points = Json::array();
  for (const DiskPoint& p : seq.points()) {
    points.push_back({{"re", p.re()}, {"im", p.im()}});
  }
  return {{"label", seq.label()}, {"points", std::move(points)}};
}

PointSequence sequence_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) {
    throw std::invalid_argument(
        "sequence: expected an object with a \"points\" array");
  }
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) {
      throw std::invalid_argument("sequence: \"label\" must be a string");
    }
    label = j["label"].get<std::string>();
  }
  std::vector<DiskPoint> points;
  points.reserve(j["points"].size());
  for (const Json& p : j["points"]) {
    if (!p.is_object() || !p.contains("re") || !p.contains("im") ||
        !p["re"].is_number() || !p["im"].is_number()) {
      throw std::invalid_argument(
          "sequence: each point must be {\"re\": number, \"im\": number}");
    }
    points.emplace_back(p["re"].get<double>(), p["im"].get<double>());
  }
  return PointSequence(std::move(points), std::move(label));
}

Json to_json(const std::vector<Complex>& targets) {
  Json j = Json::array();
  for (Complex t : targets) j.push_back(complex_to_json(t));
  return j;
}

std::vector<Complex> targets_from_json(const Json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("targets: expected an array");
  }
  std::vector<Complex> targets;
  targets.reserve(j.size());
  for (const Json& t : j) targets.push_back(complex_from_json(t, "targets"));
  return targets;
}

Json to_json(const SeparationReport& report) {
  return {{"delta_sep", report.delta_sep},
          {"delta_unif", report.delta_unif},
          {"blaschke_sum", report.blaschke_sum},
          {"per_point_products", report.per_point_products}};
}

Json to_json(const HaymanReport& report) {
  Json checks = Json::array();
  for (const HaymanPairCheck& c : report.pair_checks) {
    checks.push_back({{"k", c.k},
                      {"p", c.p},
                      {"value", c.value},
                      {"bound", c.bound},
                      {"ok", c.ok}});
  }
  return {{"indices", report.indices},
          {"hypothesis_holds", report.hypothesis_holds},
          {"pair_checks", std::move(checks)},
          {"q", report.q},
          {"q_bound", report.q_bound},
          {"all_q_pass", report.all_q_pass},
          {"passed", report.passed}};
}

Json to_json(const BlochNormReport& report) {
  return {{"seminorm_est", report.seminorm_est},
          {"f0_abs", report.f0_abs},
          {"norm_est", report.norm_est},
          {"argmax", complex_to_json(report.argmax)},
          {"grid", grid_to_json(report.grid)},
          {"refined", report.refined}};
}

Json to_json(const PrimitiveBoundReport& report) {
  return {{"weighted_sup", report.weighted_sup},
          {"f0_abs", report.f0_abs},
          {"seminorm_est", report.seminorm_est},
          {"norm_bound", report.norm_bound},
          {"holds", report.holds}};
}

Json to_json(const ResidualReport& report) {
  Json j = {{"residuals", report.residuals},
            {"max_residual", report.max_residual},
            {"tol", report.tol},
            {"pass", report.pass}};
  if (report.norm_bound_check) {
    j["norm_bound_check"] = *report.norm_bound_check;
    j["seminorm_est"] = *report.seminorm_est;
    j["m_est"] = *report.m_est;
    j["norm_bound_ok"] = report.norm_bound_ok;
  }
  return j;
}

namespace {

struct TreeVisitor {
  Json operator()(const detail::MonomialNode& n) const {
    return {{"kind", "monomial"}, {"degree", n.degree}};
  }
  Json operator()(const detail::MoebiusNode& n) const {
    return {{"kind", "moebius"}, {"a", complex_to_json(n.a)}};
  }
  Json operator()(const detail::KernelNode& n) const {
    return {{"kind", "kernel"},
            {"w", complex_to_json(n.w)},
            {"power", n.power}};
  }
  Json operator()(const detail::BlaschkeNode& n) const {
    Json zeros = Json::array();
    for (Complex a : n.zeros) zeros.push_back(complex_to_json(a));
    return {{"kind", "blaschke"}, {"zeros", std::move(zeros)}};
  }
  Json operator()(const detail::BeurlingNode& n) const {
    Json nodes = Json::array();
    for (Complex a : n.nodes) nodes.push_back(complex_to_json(a));
    return {{"kind", "beurling-basis"},
            {"nodes", std::move(nodes)},
            {"index", n.index}};
  }
  Json operator()(const detail::ProductNode& n) const {
    return {{"kind", "product"},
            {"lhs", to_json(n.lhs)},
            {"rhs", to_json(n.rhs)}};
  }
  Json operator()(const detail::LinearCombinationNode& n) const {
    Json coeffs = Json::array();
    for (Complex c : n.coefficients) coeffs.push_back(complex_to_json(c));
    Json terms = Json::array();
    for (const AnalyticFunction& t : n.terms) terms.push_back(to_json(t));
    return {{"kind", "linear-combination"},
            {"coefficients", std::move(coeffs)},
            {"terms", std::move(terms)}};
  }
  Json operator()(const detail::PrimitiveNode& n) const {
    return {{"kind", "primitive"},
            {"f0", complex_to_json(n.f0)},
            {"integrand", to_json(n.integrand)}};
  }
};

std::vector<DiskPoint> disk_points_from_json(const Json& j, const char* what) {
  if (!j.is_array()) {
    throw std::invalid_argument(std::string(what) + ": expected an array");
  }
  std::vector<DiskPoint> points;
  points.reserve(j.size());
  for (const Json& p : j) {
    points.emplace_back(complex_from_json(p, what));
  }
  return points;
}

}  // namespace

Json to_json(const AnalyticFunction& f) {
  return std::visit(TreeVisitor{}, f.node().payload);
}

AnalyticFunction function_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw std::invalid_argument(
        "function: expected an object with a \"kind\" string");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "monomial") {
    return monomial(j.at("degree").get<int>());
  }
  if (kind == "moebius") {
    return mobius(DiskPoint(complex_from_json(j.at("a"), "moebius")));
  }
  if (kind == "kernel") {
    return kernel_pow(DiskPoint(complex_from_json(j.at("w"), "kernel")),
                      j.value("power", 2));
  }
  if (kind == "blaschke") {
    return blaschke_product(
        PointSequence(disk_points_from_json(j.at("zeros"), "blaschke")));
  }
  if (kind == "beurling-basis") {
    return beurling_basis_function(
        PointSequence(disk_points_from_json(j.at("nodes"), "beurling-basis")),
        j.at("index").get<std::size_t>());
  }
  if (kind == "product") {
    return product(function_from_json(j.at("lhs")),
                   function_from_json(j.at("rhs")));
  }
  if (kind == "linear-combination") {
    std::vector<Complex> coeffs =
        targets_from_json(j.at("coefficients"));
    std::vector<AnalyticFunction> terms;
    if (!j.at("terms").is_array()) {
      throw std::invalid_argument("linear-combination: terms must be an array");
    }
    terms.reserve(j["terms"].size());
    for (const Json& t : j["terms"]) terms.push_back(function_from_json(t));
    return linear_combination(std::move(coeffs), std::move(terms));
  }
  if (kind == "primitive") {
    return primitive(function_from_json(j.at("integrand")),
                     complex_from_json(j.at("f0"), "primitive"));
  }
  throw std::invalid_argument("function: unknown kind '" + kind + "'");
}

std::string space_name(Space space) {
  return space == Space::HInf ? "hinf" : "bloch";
}

Space space_from_name(const std::string& name) {
  if (name == "hinf") return Space::HInf;
  if (name == "bloch") return Space::Bloch;
  throw std::invalid_argument("space: expected \"bloch\" or \"hinf\", got \"" +
                              name + "\"");
}

Json to_json(const InterpolationProblem& problem) {
  return {{"sequence", to_json(problem.sequence)},
          {"targets", to_json(problem.targets)},
          {"space", space_name(problem.space)}};
}

InterpolationProblem problem_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("sequence") || !j.contains("targets")) {
    throw std::invalid_argument(
        "problem: expected {\"sequence\", \"targets\", \"space\"}");
  }
  Space space = Space::Bloch;
  if (j.contains("space")) {
    if (!j["space"].is_string()) {
      throw std::invalid_argument("problem: \"space\" must be a string");
    }
    space = space_from_name(j["space"].get<std::string>());
  }
  return InterpolationProblem(sequence_from_json(j["sequence"]),
                              targets_from_json(j["targets"]), space);
}

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open " + path.string());
  }
  return Json::parse(in);
}

void save_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot write " + path.string());
  }
  out << j.dump(2) << '\n';
  if (!out) {
    throw std::invalid_argument("write to " + path.string() + " failed");
  }
}

}  // namespace blochinterp
