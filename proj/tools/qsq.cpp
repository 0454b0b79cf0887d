#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsq/embedding.hpp"
#include "qsq/endpoint.hpp"
#include "qsq/error.hpp"
#include "qsq/io.hpp"
#include "qsq/quasi_square.hpp"
#include "qsq/random.hpp"
#include "qsq/real_parts.hpp"
#include "qsq/verification.hpp"

using namespace qsq;

namespace {

constexpr const char* config_env = "QSQ_CONFIG";

struct RunConfig {
  std::size_t grid = 4096;
  double tol = 1e-8;
  std::uint64_t seed = 20240917;
  std::string out;     // empty: stdout
  std::string format;  // empty: the subcommand's default

  Json to_json(const std::string& fallback_format) const {
    return Json{{"grid", grid}, {"tol", tol}, {"seed", seed}, {"out", out},
                {"format", format.empty() ? fallback_format : format}};
  }
};

/// Values from a JSON config file; command-line flags win.
void apply_config_file(RunConfig& rc, const std::string& path, const CLI::App& app) {
  const Json j = read_json_file(path);
  if (!j.is_object()) throw Error(ErrorCode::malformed_input, path + ": config must be a JSON object");
  auto unset = [&app](const char* flag) { return app.get_option(flag)->count() == 0; };
  try {
    if (j.contains("grid") && unset("--grid")) rc.grid = j.at("grid").get<std::size_t>();
    if (j.contains("tol") && unset("--tol")) rc.tol = j.at("tol").get<double>();
    if (j.contains("seed") && unset("--seed")) rc.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("out") && unset("--out")) rc.out = j.at("out").get<std::string>();
    if (j.contains("format") && unset("--format")) rc.format = j.at("format").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::malformed_input, path + ": " + e.what());
  }
}

class Output {
 public:
  explicit Output(const RunConfig& rc) : path_(rc.out) {}

  void write(const std::string& text) {
    if (path_.empty() || path_ == "-") {
      std::cout << text;
      std::cout.flush();
      return;
    }
    std::ofstream f(path_, std::ios::binary);
    if (!f) throw Error(ErrorCode::invalid_argument, "cannot write " + path_);
    f << text;
  }

 private:
  std::string path_;
};

std::string resolve_format(const RunConfig& rc, const std::string& fallback) {
  const std::string f = rc.format.empty() ? fallback : rc.format;
  if (f != "json" && f != "csv") throw Error(ErrorCode::invalid_argument, "format must be json or csv, got " + f);
  return f;
}

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << '\n';
  }
  return os.str();
}

std::string num(double x) { return format_double(x); }

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

/// A function file holds either {"coeffs": ...} or {"numerator", "denominator"}.
struct FunctionInput {
  std::optional<AnalyticPoly> poly;
  RationalFn rational{AnalyticPoly{1.0}};
};

FunctionInput read_function(const std::string& path) {
  const Json j = read_json_file(path);
  FunctionInput in;
  if (j.is_object() && j.contains("numerator")) {
    in.rational = rational_from_json(j);
  } else {
    in.poly = poly_from_json(j);
    in.rational = RationalFn(*in.poly);
  }
  return in;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error(ErrorCode::invalid_argument, "not a number: '" + item + "'");
    v.push_back(x);
  }
  if (v.empty()) throw Error(ErrorCode::invalid_argument, "empty list");
  return v;
}

Json norm_bound_json(const NormBoundReport& r) {
  return Json{{"p", r.p},
              {"w", complex_to_json(r.w)},
              {"input_norm", r.input_norm},
              {"output_norm", r.output_norm},
              {"bound", r.bound},
              {"bound_ok", r.bound_ok()},
              {"pointwise_margin", r.pointwise_margin},
              {"input_residual", r.has_theta ? Json(r.input_residual) : Json(nullptr)},
              {"output_residual", r.has_theta ? Json(r.output_residual) : Json(nullptr)},
              {"membership_ok", r.membership_ok()},
              {"identity_energy", r.has_theta ? Json(r.identity_energy) : Json(nullptr)},
              {"identity_ok", r.identity_ok()},
              {"refinement_change", r.refinement_change},
              {"grid_size", r.grid_size},
              {"aliased", r.aliased},
              {"pass", r.pass()}};
}

// ---------------------------------------------------------------- commands

int cmd_qsq(const RunConfig& rc, const std::string& input, const std::string& theta_path, double p) {
  const std::string format = resolve_format(rc, "json");
  if (p == 2) throw Error(ErrorCode::out_of_domain, "no quasi-square bound at p = 2; use endpoint-sweep");
  const FunctionInput f = read_function(input);
  std::optional<BlaschkeProduct> theta;
  if (!theta_path.empty()) theta = blaschke_from_json(read_json_file(theta_path));
  const CircleGrid grid(rc.grid);
  const HolomorphicFn fn = [&f](cplx z) { return f.rational(z); };

  const bool exact = f.poly && (!theta || theta->vanishes_at_origin());
  Json output;
  std::vector<cplx> coeffs;
  if (exact) {
    const AnalyticPoly s = quasi_square(*f.poly);
    output = to_json(s);
    coeffs.assign(s.coeffs().begin(), s.coeffs().end());
  } else {
    const QuasiSquare s = theta ? quasi_square_shifted(fn, *theta, grid) : quasi_square(fn, grid);
    if (s.aliased)
      throw Error(ErrorCode::grid_too_small,
                  "output not resolved on " + std::to_string(grid.size()) + " nodes; raise --grid");
    const RationalFn r = s.as_rational();
    output = to_json(r);
    coeffs.assign(r.numerator().coeffs().begin(), r.numerator().coeffs().end());
  }
  const NormBoundReport report = verify_norm_bounds(fn, p, theta, grid);

  if (format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      rows.push_back({std::to_string(k), num(coeffs[k].real()), num(coeffs[k].imag())});
    Output(rc).write(csv({"k", "re", "im"}, rows));
  } else {
    Json j{{"config", rc.to_json(format)},
           {"input", f.poly ? to_json(*f.poly) : to_json(f.rational)},
           {"theta", theta ? to_json(*theta) : Json(nullptr)},
           {"path", exact ? "exact" : "grid"},
           {"output", output},
           {"bounds", norm_bound_json(report)}};
    Output(rc).write(dump(j));
  }
  if (!report.pass()) {
    std::cerr << "error: " << to_string(ErrorCode::precondition_failed) << ": norm bound check failed\n";
    return 1;
  }
  return 0;
}

int cmd_suite(const RunConfig& rc, const std::string& sizes, const std::vector<int>& only) {
  resolve_format(rc, "json");
  if (!rc.format.empty() && rc.format != "json") throw Error(ErrorCode::invalid_argument, "suite reports are JSON");
  SuiteConfig config;
  if (sizes == "quick") {
    config = SuiteConfig::quick();
  } else if (sizes != "full") {
    throw Error(ErrorCode::invalid_argument, "sizes must be quick or full");
  }
  config.grid = rc.grid;
  config.tol = rc.tol;
  config.seed = rc.seed;
  config.validate();

  std::vector<int> ids = only;
  if (ids.empty())
    for (int i = 1; i <= criterion_count; ++i) ids.push_back(i);
  std::vector<CriterionResult> results;
  bool all = true;
  for (int id : ids) {
    CriterionResult r = run_criterion(id, config);
    std::cerr << (r.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << r.title << ") " << r.summary << " ["
              << r.seconds << " s]\n";
    all = all && r.pass;
    results.push_back(std::move(r));
  }
  Json report = suite_report(config, results);
  report["run"] = rc.to_json("json");
  report["run"]["sizes"] = sizes;
  Output(rc).write(dump(report));
  return all ? 0 : 1;
}

int cmd_constants(const RunConfig& rc, const std::string& ps) {
  const std::string format = resolve_format(rc, "json");
  std::vector<double> list;
  for (const auto& item : CLI::detail::split(ps, ',')) {
    if (item == "inf" || item == "infinity")
      list.push_back(infinity);
    else
      for (double x : parse_list(item)) list.push_back(x);
  }
  auto a_of = [](double p) { return p > 1 && std::isfinite(p) ? conjugation_constant(p) : NAN; };
  auto b_of = [](double p) { return std::isinf(p) ? 1.0 : p > 2 ? b_constant(p) : NAN; };
  std::vector<std::vector<std::string>> rows;
  Json table = Json::array();
  for (double p : list) {
    if (!(p >= 1)) throw Error(ErrorCode::out_of_domain, "constants need p >= 1");
    const double a = a_of(p), ah = a_of(p / 2), b = b_of(p);
    rows.push_back({num(p), num(a), num(ah), num(b)});
    table.push_back(Json{{"p", number_or_null(p)}, {"A_p", number_or_null(a)}, {"A_p_over_2", number_or_null(ah)},
                         {"B_p", number_or_null(b)}});
  }
  if (format == "csv")
    Output(rc).write(csv({"p", "A_p", "A_p_over_2", "B_p"}, rows));
  else
    Output(rc).write(dump(Json{{"config", rc.to_json(format)}, {"constants", table}}));
  return 0;
}

int cmd_endpoint_sweep(const RunConfig& rc, const std::string& as_text, int kmin, int kmax) {
  const std::string format = resolve_format(rc, "csv");
  std::vector<cplx> as;
  if (!as_text.empty()) {
    for (double a : parse_list(as_text)) as.emplace_back(a, 0.0);
  } else {
    if (kmin < 1 || kmax < kmin) throw Error(ErrorCode::invalid_argument, "need 1 <= kmin <= kmax");
    for (int k = kmin; k <= kmax; ++k) as.emplace_back(1 - std::ldexp(1.0, -k), 0.0);
  }
  const EndpointSweep sweep = endpoint_blowup_sweep(as);
  if (format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& s : sweep.rows)
      rows.push_back({num(std::abs(s.a)), num(s.ratio), num(s.sum_coeff()), num(std::abs(s.mu)),
                      num(s.hardy.value), std::to_string(s.grid_size)});
    Output(rc).write(csv({"a", "r(a)", "|lambda_a+mu_a|", "|mu_a|", "hardy_bound", "N_used"}, rows));
  } else {
    Json rows = Json::array();
    for (const auto& s : sweep.rows)
      rows.push_back(Json{{"a", complex_to_json(s.a)},
                          {"r", s.ratio},
                          {"l1_norm", s.l1_norm},
                          {"fa_l2_squared", s.fa_l2_squared},
                          {"lambda", complex_to_json(s.lambda)},
                          {"mu", complex_to_json(s.mu)},
                          {"sum_coeff", s.sum_coeff()},
                          {"hardy_bound", s.hardy.value},
                          {"hardy_tail", number_or_null(s.hardy.tail)},
                          {"span_residual", s.span_residual},
                          {"membership", s.membership},
                          {"parseval_error", s.parseval_error()},
                          {"N_used", s.grid_size}});
    Output(rc).write(
        dump(Json{{"config", rc.to_json(format)}, {"increasing", sweep.increasing}, {"rows", rows}}));
  }
  return 0;
}

int cmd_embed(const RunConfig& rc, const std::string& theta_path, const std::string& mu_path, double p, double q,
              std::size_t starts) {
  const std::string format = resolve_format(rc, "json");
  const BlaschkeProduct theta = blaschke_from_json(read_json_file(theta_path));
  const DiskMeasure mu = measure_from_json(read_json_file(mu_path));
  EmbeddingOptions opts;
  opts.seed = rc.seed;
  opts.starts = starts;
  const EmbeddingResult r = embedding_norm(theta, p, q, mu, opts);
  if (format == "csv") {
    Output(rc).write(csv({"p", "q", "value", "value_squared", "exact", "stationarity"},
                         {{num(p), num(q), num(r.value), num(r.value * r.value), r.exact ? "1" : "0",
                           num(r.stationarity)}}));
  } else {
    Json coords = Json::array();
    for (auto c : r.maximizer) coords.push_back(complex_to_json(c));
    Output(rc).write(dump(Json{{"config", rc.to_json(format)},
                               {"theta", to_json(theta)},
                               {"mu", to_json(mu)},
                               {"p", p},
                               {"q", q},
                               {"value", r.value},
                               {"value_squared", r.value * r.value},
                               {"exact", r.exact},
                               {"lower_bound", !r.exact},
                               {"stationarity", r.stationarity},
                               {"iterations", r.iterations},
                               {"maximizer", coords}}));
  }
  return 0;
}

int cmd_lp_counterexample(const RunConfig& rc, const std::string& as_text) {
  const std::string format = resolve_format(rc, "csv");
  const std::vector<double> as = parse_list(as_text);
  const LpCounterexampleSweep sweep = lp_counterexample_sweep(as);
  if (format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : sweep.rows)
      rows.push_back({num(r.a), num(r.disk_integral), num(r.circle_norm), num(r.r), num(r.scaled),
                      num(r.ratio_to_prev), std::to_string(r.radial_nodes), std::to_string(r.angular_nodes),
                      r.converged ? "1" : "0"});
    Output(rc).write(csv({"a", "disk_integral", "circle_norm", "R(a)", "R(a)(1-a)", "ratio_to_prev", "radial_nodes",
                          "angular_nodes", "converged"},
                         rows));
  } else {
    Json rows = Json::array();
    for (const auto& r : sweep.rows)
      rows.push_back(Json{{"a", r.a},
                          {"disk_integral", r.disk_integral},
                          {"circle_norm", r.circle_norm},
                          {"R", r.r},
                          {"R_times_1_minus_a", r.scaled},
                          {"ratio_to_prev", r.ratio_to_prev},
                          {"radial_nodes", r.radial_nodes},
                          {"angular_nodes", r.angular_nodes},
                          {"converged", r.converged}});
    Output(rc).write(
        dump(Json{{"config", rc.to_json(format)}, {"band_stable", sweep.band_stable}, {"rows", rows}}));
  }
  return 0;
}

int cmd_check_solid(const RunConfig& rc, const std::string& op_name, const std::string& theta_path,
                    std::size_t trials) {
  const std::string format = resolve_format(rc, "json");
  const BlaschkeProduct theta = blaschke_from_json(read_json_file(theta_path));
  SolidOperatorSpec op;
  if (op_name == "identity")
    op = identity_operator();
  else if (op_name == "maximal")
    op = maximal_operator_spec(RegionFamily::truncated_cone());
  else if (op_name == "differentiation")
    op = differentiation_operator();
  else
    throw Error(ErrorCode::invalid_argument, "operator must be identity, maximal or differentiation");
  const CircleGrid circle(64);
  std::vector<cplx> support = circle.nodes();
  if (op_name != "maximal") {
    Sampler rng(derive_seed(rc.seed, 1));
    for (int k = 0; k < 16; ++k) support.push_back(rng.disk_point(0.9));
  }
  const SolidityReport r = check_solid(op, theta, trials, rc.seed, support);
  const bool ok = r.claims_hold(op);
  if (format == "csv") {
    auto b = [](bool x) { return std::string(x ? "1" : "0"); };
    Output(rc).write(csv({"operator", "subadditive", "homogeneous", "squares", "monotone", "claims_hold"},
                         {{op.name, b(r.subadditive), b(r.homogeneous), b(r.squares), b(r.monotone), b(ok)}}));
  } else {
    auto prop = [](bool holds, const std::string& witness) {
      return Json{{"holds", holds}, {"witness", witness.empty() ? Json(nullptr) : Json(witness)}};
    };
    Output(rc).write(dump(Json{{"config", rc.to_json(format)},
                               {"operator", op.name},
                               {"theta", to_json(theta)},
                               {"trials", r.trials},
                               {"subadditive", prop(r.subadditive, r.subadditive_witness)},
                               {"homogeneous", prop(r.homogeneous, r.homogeneous_witness)},
                               {"squares", prop(r.squares, r.squares_witness)},
                               {"monotone", prop(r.monotone, r.monotone_witness)},
                               {"worst_square_membership", r.worst_square_membership},
                               {"claims_hold", ok}}));
  }
  if (!ok) {
    std::cerr << "error: " << to_string(ErrorCode::precondition_failed) << ": operator " << op.name
              << " violates a claimed contract\n";
    return 1;
  }
  return 0;
}

int cmd_real_part(const RunConfig& rc, const std::string& u_path, const std::string& theta_path) {
  const std::string format = resolve_format(rc, "json");
  const TrigCoeffs u = trig_from_json(read_json_file(u_path));
  const BlaschkeProduct theta = blaschke_from_json(read_json_file(theta_path));
  const RealPartWitness w = check_real_part(u, theta, rc.tol);
  std::optional<AnalyticPoly> completion;
  if (w.holds()) completion = complete_to_model(u, theta, rc.tol);
  if (format == "csv") {
    Output(rc).write(csv({"case", "energy", "integral_re", "integral_im", "holds", "offset"},
                         {{to_string(w.which), num(w.energy), num(w.integral.real()), num(w.integral.imag()),
                           w.holds() ? "1" : "0", num(w.offset())}}));
  } else {
    Output(rc).write(dump(Json{{"config", rc.to_json(format)},
                               {"case", to_string(w.which)},
                               {"energy", w.energy},
                               {"integral", complex_to_json(w.integral)},
                               {"holds", w.holds()},
                               {"offset", w.holds() ? Json(w.offset()) : Json(nullptr)},
                               {"completion", completion ? to_json(*completion) : Json(nullptr)}}));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-squaring operators on model spaces: experiments and checks"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig rc;
  std::string config_path;
  if (const char* env = std::getenv(config_env)) config_path = env;
  app.add_option("--grid", rc.grid, "circle grid size N (power of two)");
  app.add_option("--tol", rc.tol, "tolerance");
  app.add_option("--seed", rc.seed, "master seed");
  app.add_option("--out", rc.out, "output file (default stdout)");
  app.add_option("--format", rc.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--config", config_path, std::string("JSON config file (default $") + config_env + ")");

  std::string input, theta, mu, u, sizes = "full", as_text, op_name, ps = "4";
  double p = 4, embed_p = 2, q = 2;
  int kmin = 2, kmax = 10;
  std::size_t trials = 200, starts = 32;
  std::vector<int> criteria;

  auto* qsq_cmd = app.add_subcommand("qsq", "quasi-square of a function file with norm-bound margins");
  qsq_cmd->add_option("input", input, "AnalyticPoly or RationalFn JSON")->required();
  qsq_cmd->add_option("--theta", theta, "BlaschkeProduct JSON");
  qsq_cmd->add_option("-p,--p", p, "exponent, 2 < p < inf");

  auto* suite_cmd = app.add_subcommand("suite", "run the property suites");
  suite_cmd->add_option("--sizes", sizes, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  suite_cmd->add_option("--criterion", criteria, "run only these criteria (1-10)")->check(CLI::Range(1, 10));

  auto* const_cmd = app.add_subcommand("constants", "conjugation and quasi-square constants");
  const_cmd->add_option("-p,--p", ps, "comma-separated exponents");

  auto* sweep_cmd = app.add_subcommand("endpoint-sweep", "p = 2 blow-up sweep (CSV)");
  sweep_cmd->add_option("--a", as_text, "comma-separated a values in [0.5, 1)");
  sweep_cmd->add_option("--kmin", kmin, "a = 1 - 2^-k from kmin");
  sweep_cmd->add_option("--kmax", kmax, "to kmax");

  auto* embed_cmd = app.add_subcommand("embed", "embedding norm of K_theta into L^q(mu)");
  embed_cmd->add_option("--theta", theta, "BlaschkeProduct JSON")->required();
  embed_cmd->add_option("--mu", mu, "DiskMeasure JSON")->required();
  embed_cmd->add_option("-p,--p", embed_p, "source exponent");
  embed_cmd->add_option("-q,--q", q, "target exponent");
  embed_cmd->add_option("--starts", starts, "ascent starts");

  auto* lp_cmd = app.add_subcommand("lp-counterexample", "Littlewood-Paley counterexample sweep (CSV)");
  lp_cmd->add_option("--a", as_text, "comma-separated a values in (0, 1)");

  auto* solid_cmd = app.add_subcommand("check-solid", "randomized solidity contracts");
  solid_cmd->add_option("--operator", op_name, "identity, maximal or differentiation")->required();
  solid_cmd->add_option("--theta", theta, "BlaschkeProduct JSON")->required();
  solid_cmd->add_option("--trials", trials, "random trials");

  auto* real_cmd = app.add_subcommand("real-part", "is u the real part of an element of K_theta");
  real_cmd->add_option("u", u, "TrigCoeffs JSON")->required();
  real_cmd->add_option("--theta", theta, "BlaschkeProduct JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    for (auto& c : msg)
      if (c == '\n') c = ' ';
    std::cerr << "error: " << to_string(ErrorCode::invalid_argument) << ": " << msg << "\n";
    return 2;
  }

  try {
    if (!config_path.empty()) apply_config_file(rc, config_path, app);
    if (*qsq_cmd) return cmd_qsq(rc, input, theta, p);
    if (*suite_cmd) return cmd_suite(rc, sizes, criteria);
    if (*const_cmd) return cmd_constants(rc, ps);
    if (*sweep_cmd) return cmd_endpoint_sweep(rc, as_text, kmin, kmax);
    if (*embed_cmd) return cmd_embed(rc, theta, mu, embed_p, q, starts);
    if (*lp_cmd) return cmd_lp_counterexample(rc, as_text.empty() ? "0.9,0.95,0.99" : as_text);
    if (*solid_cmd) return cmd_check_solid(rc, op_name, theta, trials);
    if (*real_cmd) return cmd_real_part(rc, u, theta);
  } catch (const Error& e) {
    std::string msg = e.what();
    for (auto& c : msg)
      if (c == '\n') c = ' ';
    std::cerr << "error: " << to_string(e.code()) << ": " << msg << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
