#include "qsq/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qsq/conjugation.hpp"
#include "qsq/embedding.hpp"
#include "qsq/endpoint.hpp"
#include "qsq/error.hpp"
#include "qsq/model_space.hpp"
#include "qsq/quasi_square.hpp"
#include "qsq/random.hpp"
#include "qsq/real_parts.hpp"

namespace qsq {

SuiteConfig SuiteConfig::quick() {
  SuiteConfig c;
  c.poly_cases = 40;
  c.rational_cases = 10;
  c.interior_points = 64;
  c.conjugation_trials = 100;
  c.sharpness_degrees = {32};
  c.real_part_cases = 20;
  c.doubling_cases = 3;
  c.doubling_samples = 10;
  c.solid_trials = 20;
  c.lp_polys = 40;
  c.sup_polys = 20;
  return c;
}

Json SuiteConfig::to_json() const {
  Json degrees = Json::array();
  for (auto d : sharpness_degrees) degrees.push_back(d);
  return Json{{"grid", grid},
              {"tol", tol},
              {"seed", seed},
              {"poly_cases", poly_cases},
              {"max_poly_degree", max_poly_degree},
              {"rational_cases", rational_cases},
              {"max_theta_degree", max_theta_degree},
              {"interior_points", interior_points},
              {"conjugation_trials", conjugation_trials},
              {"sharpness_degrees", degrees},
              {"real_part_cases", real_part_cases},
              {"doubling_cases", doubling_cases},
              {"doubling_samples", doubling_samples},
              {"solid_trials", solid_trials},
              {"lp_polys", lp_polys},
              {"sup_polys", sup_polys}};
}

void SuiteConfig::validate() const {
  if (grid <= 2 * max_poly_degree) {
    std::ostringstream os;
    os << "grid of " << grid << " nodes cannot resolve band-" << max_poly_degree << " inputs (need N > "
       << 2 * max_poly_degree << ")";
    throw Error(ErrorCode::grid_too_small, os.str());
  }
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

/// A random rational element of K_theta together with its theta.
struct ModelCase {
  BlaschkeProduct theta;
  RationalFn f;
};

ModelCase random_model_case(Sampler& rng, std::size_t max_degree, double radius) {
  const std::size_t deg = rng.index(1, max_degree);
  const bool in_i0 = rng.uniform() < 0.5;
  BlaschkeProduct theta = rng.blaschke(deg, radius, in_i0);
  const ModelSpace space(theta);
  RationalFn f = space.element(rng.gaussian_vector(deg));
  return {std::move(theta), std::move(f)};
}

// ---------------------------------------------------------------------- 1

CriterionResult criterion1(const SuiteConfig& c) {
  CriterionResult r;
  r.time_limit = 1;
  double worst = 0;
  Json rows = Json::array();
  auto record = [&](const std::string& name, double err) {
    worst = std::max(worst, err);
    rows.push_back(Json{{"case", name}, {"error", err}});
  };
  auto poly_error = [](const AnalyticPoly& got, const std::vector<cplx>& want) {
    double e = 0;
    const std::size_t n = std::max(got.coeffs().size(), want.size());
    for (std::size_t k = 0; k < n; ++k) e = std::max(e, std::abs(got[k] - (k < want.size() ? want[k] : cplx{})));
    return e;
  };
  record("S(1+z) = 2+2z", poly_error(quasi_square(AnalyticPoly{1.0, 1.0}), {2.0, 2.0}));
  record("S(z) = 1", poly_error(quasi_square(AnalyticPoly{0.0, 1.0}), {1.0}));
  const cplx cst{0.7, -1.3};
  record("S(c) = |c|^2", poly_error(quasi_square(AnalyticPoly{cst}), {std::norm(cst)}));

  const CircleGrid grid(c.grid);
  for (double a : {0.3, 0.6, 0.9}) {
    const QuasiSquare s = quasi_square(f_a(a), grid);
    // (1 + a z)/((1 - a^2)(1 - a z)) = (1 + 2 sum a^k z^k)/(1 - a^2)
    std::vector<cplx> want(grid.size() / 2);
    for (std::size_t k = 0; k < want.size(); ++k) want[k] = (k == 0 ? 1.0 : 2 * std::pow(a, k)) / (1 - a * a);
    while (!want.empty() && std::abs(want.back()) < 1e-300) want.pop_back();
    record("S(1/(1-az)), a = " + fmt(a), poly_error(s.series, want));
  }
  r.pass = worst < 1e-12;
  r.summary = "max coefficient error " + fmt(worst) + " (limit 1e-12)";
  r.details = Json{{"cases", rows}, {"max_error", worst}};
  return r;
}

// ---------------------------------------------------------------------- 2

CriterionResult criterion2(const SuiteConfig& c) {
  CriterionResult r;
  r.time_limit = 60;
  const CircleGrid grid(c.grid);
  const std::uint64_t base = derive_seed(c.seed, 2);
  double circle = infinity, disk = infinity, homog = 0;
  std::size_t failures = 0;
  std::string first;
  auto take = [&](const SuperquadraticReport& rep, const std::string& label) {
    circle = std::min(circle, rep.circle_margin);
    disk = std::min(disk, rep.disk_margin);
    homog = std::max(homog, rep.homogeneity_error);
    if (!rep.pass()) {
      if (failures++ == 0) first = label + ": " + rep.describe();
    }
  };
  const SquareMap plain = plain_square_map(grid);
  for (std::size_t i = 0; i < c.poly_cases; ++i) {
    Sampler rng(derive_seed(base, i));
    const AnalyticPoly f = rng.polynomial(rng.index(0, c.max_poly_degree));
    const cplx lambda = rng.gaussian() * 2.0;
    take(verify_superquadratic(plain, [&f](cplx z) { return f(z); }, lambda, grid, rng.engine()(), c.interior_points),
         "polynomial " + std::to_string(i));
  }
  for (std::size_t i = 0; i < c.rational_cases; ++i) {
    Sampler rng(derive_seed(base, 100000 + i));
    const ModelCase mc = random_model_case(rng, c.max_theta_degree, 0.9);
    const cplx lambda = rng.gaussian() * 2.0;
    take(verify_superquadratic(shifted_square_map(mc.theta, grid), [&mc](cplx z) { return mc.f(z); }, lambda, grid,
                               rng.engine()(), c.interior_points),
         "rational " + std::to_string(i));
  }
  r.pass = failures == 0;
  r.summary = std::to_string(c.poly_cases + c.rational_cases) + " cases, " + std::to_string(failures) +
              " failures; margins circle " + fmt(circle) + ", disk " + fmt(disk) + "; homogeneity " + fmt(homog);
  r.details = Json{{"cases", c.poly_cases + c.rational_cases},
                   {"failures", failures},
                   {"min_circle_margin", circle},
                   {"min_disk_margin", disk},
                   {"max_homogeneity_error", homog}};
  if (failures) r.details["first_failure"] = first;
  return r;
}

// ---------------------------------------------------------------------- 3

CriterionResult criterion3(const SuiteConfig& c) {
  CriterionResult r;
  r.time_limit = 120;
  const CircleGrid grid(c.grid);
  const std::uint64_t base = derive_seed(c.seed, 2);  // same corpus as criterion 2
  const double ps[] = {2.5, 3, 4, 6, 8};
  double worst_ratio = 0, worst_member = 0, worst_identity = 0, worst_refine = 0;
  std::size_t failures = 0, checks = 0;
  std::string first;
  auto take = [&](const NormBoundReport& rep, const std::string& label) {
    ++checks;
    worst_ratio = std::max(worst_ratio, rep.output_norm / rep.bound);
    worst_member = std::max(worst_member, rep.output_residual);
    worst_identity = std::max(worst_identity, rep.identity_energy);
    worst_refine = std::max(worst_refine, rep.refinement_change);
    const bool ok = rep.bound_ok() && rep.input_in_model() && rep.output_residual < c.tol && rep.identity_ok() &&
                    rep.refinement_ok() && !rep.aliased;
    if (!ok && failures++ == 0) {
      std::ostringstream os;
      os << label << " p=" << rep.p << ": norm " << rep.output_norm << " bound " << rep.bound << " residual in "
         << rep.input_residual << " out " << rep.output_residual << " identity " << rep.identity_energy
         << " refine " << rep.refinement_change;
      first = os.str();
    }
  };
  for (std::size_t i = 0; i < c.poly_cases; ++i) {
    Sampler rng(derive_seed(base, i));
    const AnalyticPoly f = rng.polynomial(rng.index(0, c.max_poly_degree));
    // P_n is K_theta for theta = z^{n+1}.
    const BlaschkeProduct theta = BlaschkeProduct::monomial(f.degree() + 1);
    const std::size_t pi = i % 5;
    take(verify_norm_bounds([&f](cplx z) { return f(z); }, ps[pi], theta, grid), "polynomial " + std::to_string(i));
  }
  for (std::size_t i = 0; i < c.rational_cases; ++i) {
    Sampler rng(derive_seed(base, 100000 + i));
    const ModelCase mc = random_model_case(rng, c.max_theta_degree, 0.9);
    for (double p : ps)
      take(verify_norm_bounds([&mc](cplx z) { return mc.f(z); }, p, mc.theta, grid), "rational " + std::to_string(i));
  }
  r.pass = failures == 0;
  r.summary = std::to_string(checks) + " checks, " + std::to_string(failures) + " failures; max norm/bound " +
              fmt(worst_ratio) + ", max output residual " + fmt(worst_member);
  r.details = Json{{"checks", checks},
                   {"failures", failures},
                   {"max_norm_over_bound", worst_ratio},
                   {"max_output_residual", worst_member},
                   {"max_identity_energy", worst_identity},
                   {"max_refinement_change", worst_refine}};
  if (failures) r.details["first_failure"] = first;
  return r;
}

// ---------------------------------------------------------------------- 4

CriterionResult criterion4(const SuiteConfig& c) {
  CriterionResult r;
  r.time_limit = 300;
  const std::uint64_t base = derive_seed(c.seed, 4);
  bool bounds_ok = true;
  Json bounds = Json::array();
  const double ps[] = {4.0 / 3.0, 2, 3, 4};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto rep = conjugation_bound_suite(ps[i], c.conjugation_trials, 32, derive_seed(base, i));
    bounds_ok = bounds_ok && rep.pass();
    bounds.push_back(Json{{"p", ps[i]}, {"trials", rep.trials}, {"max_ratio_over_A_p", rep.worst}});
  }
  Json probes = Json::array();
  double best = 0;
  std::size_t best_degree = 0;
  for (auto d : c.sharpness_degrees) {
    SharpnessOptions opts;
    opts.degree = d;
    const auto res = conjugation_sharpness_probe(opts);
    probes.push_back(Json{{"degree", d},
                          {"structured_fraction", res.structured / conjugation_constant(4)},
                          {"best_gamma", res.best_gamma},
                          {"fraction_of_A_4", res.fraction}});
    if (res.fraction > best) {
      best = res.fraction;
      best_degree = d;
    }
  }
  const bool sharp = best >= 0.9;
  r.pass = bounds_ok && sharp;
  r.summary = std::string("bounds ") + (bounds_ok ? "hold" : "VIOLATED") + "; sharpness probe best " + fmt(best) +
              " A_4 at degree " + std::to_string(best_degree) + " (target 0.9)";
  r.details = Json{{"bounds", bounds}, {"bounds_ok", bounds_ok}, {"sharpness", probes}, {"best_fraction", best},
                   {"sharpness_ok", sharp}};
  return r;
}

// ---------------------------------------------------------------------- 5

CriterionResult criterion5(const SuiteConfig& c) {
  CriterionResult r;
  const std::uint64_t base = derive_seed(c.seed, 5);
  const double radius = 0.8;
  // Truncation band where radius^M is below 1e-17.
  const auto band = static_cast<std::size_t>(std::ceil(std::log(1e-17) / std::log(radius)));
  const CircleGrid grid(std::max<std::size_t>(c.grid, CircleGrid::at_least(4 * band).size()));

  std::size_t disagreements = 0, roundtrip_failures = 0, members = 0;
  double worst_roundtrip = 0, worst_integral = 0;
  std::string first;
  for (int which = 0; which < 2; ++which) {
    for (std::size_t i = 0; i < c.real_part_cases; ++i) {
      Sampler rng(derive_seed(base, static_cast<std::uint64_t>(which) * 100000 + i));
      const std::size_t deg = rng.index(1, 4);
      BlaschkeProduct theta = rng.blaschke(deg, radius, which == 0);
      if (which == 1) {
        // Keep theta(0) visibly away from zero.
        while (std::abs(theta.at_zero()) < 0.05) theta = rng.blaschke(deg, radius, false);
      }
      const ModelSpace space(theta);
      const RationalFn f = space.element(rng.gaussian_vector(deg));
      const auto taylor = f.taylor(band + 1);
      TrigCoeffs u = real_part(taylor);
      const bool member = i % 2 == 0;
      if (!member) {
        if (which == 1 && i % 4 == 1) {
          u.at(0) += 0.5;  // first condition survives, the integral does not
        } else {
          const TrigCoeffs d = rng.real_trig(rng.index(1, 3));
          u = u + 0.3 * d;
        }
      }
      const RealPartWitness w = check_real_part(u, theta);
      const OffsetResidual oracle = best_offset(u, theta, grid);
      const bool oracle_member = oracle.relative < c.tol;
      if (w.holds() != oracle_member) {
        if (disagreements++ == 0) {
          std::ostringstream os;
          os << "case " << to_string(w.which) << " instance " << i << ": " << w.describe() << ", oracle residual "
             << oracle.relative;
          first = os.str();
        }
      }
      if (!member) continue;
      ++members;
      // Round trip: Re f -> f, with the constant forced in case b.
      const AnalyticPoly g = complete_to_model(u, theta);
      const cplx adjust = w.which == RealPartCase::a ? cplx{0.0, taylor[0].imag()} : cplx{};
      double err = 0, scale = 0;
      for (std::size_t k = 0; k <= band; ++k) {
        err = std::max(err, std::abs(g[k] + (k == 0 ? adjust : cplx{}) - taylor[k]));
        scale = std::max(scale, std::abs(taylor[k]));
      }
      err /= scale;
      const double res = membership_residual(sample(g, grid), theta).worst();
      worst_roundtrip = std::max({worst_roundtrip, err, res});
      if (err >= c.tol || res >= c.tol) ++roundtrip_failures;
      if (w.which == RealPartCase::b)
        worst_integral = std::max(worst_integral, std::abs(w.integral - cplx{0.0, taylor[0].imag() / 2}));
    }
  }
  r.pass = disagreements == 0 && roundtrip_failures == 0 && worst_integral < 1e-9;
  r.summary = std::to_string(2 * c.real_part_cases) + " instances, " + std::to_string(disagreements) +
              " disagreements with the offset oracle; round-trip max error " + fmt(worst_roundtrip);
  r.details = Json{{"instances", 2 * c.real_part_cases},
                   {"disagreements", disagreements},
                   {"round_trips", members},
                   {"round_trip_failures", roundtrip_failures},
                   {"max_round_trip_error", worst_roundtrip},
                   {"max_integral_error", worst_integral},
                   {"band", band}};
  if (disagreements) r.details["first_disagreement"] = first;
  return r;
}

// ---------------------------------------------------------------------- 6

CriterionResult criterion6(const SuiteConfig&) {
  CriterionResult r;
  std::vector<cplx> as;
  for (int k = 2; k <= 10; ++k) as.emplace_back(1 - std::ldexp(1.0, -k), 0.0);
  const EndpointSweep sweep = endpoint_blowup_sweep(as);
  double r4 = 0, r10 = 0;
  bool hardy = true, parseval = true, closed = true, span = true, member = true, refined = true, chain = true;
  double worst_parseval = 0, worst_closed = 0, worst_span = 0;
  Json rows = Json::array();
  for (const auto& s : sweep.rows) {
    const double a = s.a.real();
    if (a == 1 - std::ldexp(1.0, -4)) r4 = s.ratio;
    if (a == 1 - std::ldexp(1.0, -10)) r10 = s.ratio;
    const FaNorms fn = fa_norms(s.a);
    const EndpointImplication impl = endpoint_implication(s.a, s.lambda, s.mu);
    hardy = hardy && s.hardy.value + s.hardy.tail <= s.l1_norm * (1 + 1e-8);
    parseval = parseval && s.parseval_error() < 1e-8 && impl.parseval_error() < 1e-8;
    closed = closed && fn.l2_error() < 1e-8 && fn.l4_error() < 1e-8;
    span = span && s.span_residual < 1e-8;
    member = member && s.membership < 1e-8 && s.pointwise_margin >= -1e-10;
    refined = refined && s.refined_ok;
    chain = chain && impl.implication_ok() && s.ratio >= 1;
    worst_parseval = std::max({worst_parseval, s.parseval_error(), impl.parseval_error()});
    worst_closed = std::max({worst_closed, fn.l2_error(), fn.l4_error()});
    worst_span = std::max(worst_span, s.span_residual);
    rows.push_back(Json{{"a", a}, {"r", s.ratio}, {"hardy", s.hardy.value}, {"l1", s.l1_norm}, {"N", s.grid_size}});
  }
  const bool doubled = r10 >= 2 * r4;
  r.pass = sweep.increasing && doubled && hardy && parseval && closed && span && member && refined && chain;
  r.summary = std::string("r increasing: ") + (sweep.increasing ? "yes" : "no") + "; r(1-2^-10)/r(1-2^-4) = " +
              fmt(r10 / r4) + "; Parseval err " + fmt(worst_parseval) + "; closed-form err " + fmt(worst_closed);
  r.details = Json{{"rows", rows},         {"increasing", sweep.increasing}, {"doubling_ratio", r10 / r4},
                   {"hardy_ok", hardy},    {"parseval_ok", parseval},        {"closed_forms_ok", closed},
                   {"span_ok", span},      {"membership_ok", member},        {"refinement_ok", refined},
                   {"implication_ok", chain}, {"max_parseval_error", worst_parseval},
                   {"max_closed_form_error", worst_closed}, {"max_span_residual", worst_span}};
  return r;
}

// ---------------------------------------------------------------------- 7

CriterionResult criterion7(const SuiteConfig& c) {
  CriterionResult r;
  const std::uint64_t base = derive_seed(c.seed, 7);
  std::size_t failures = 0;
  double worst_ratio = 0, worst_margin = infinity;
  std::string first;
  for (std::size_t i = 0; i < c.doubling_cases; ++i) {
    Sampler rng(derive_seed(base, i));
    const BlaschkeProduct theta = rng.blaschke(rng.index(1, 4), 0.9, rng.uniform() < 0.5);
    std::vector<Atom> atoms;
    const std::size_t count = rng.index(1, 8);
    for (std::size_t k = 0; k < count; ++k) atoms.push_back({rng.disk_point(0.95), rng.uniform(0.1, 1.0)});
    const DiskMeasure mu(std::move(atoms));
    EmbeddingOptions opts;
    opts.seed = rng.engine()();
    const DoublingReport rep =
        extrapolation_doubling_check(theta, mu, 2, 2, identity_operator(), c.doubling_samples, opts);
    worst_ratio = std::max(worst_ratio, rep.m_high / rep.bound);
    worst_margin = std::min(worst_margin, rep.pointwise_margin);
    if (!(rep.pass() && rep.low_exact) && failures++ == 0)
      first = "instance " + std::to_string(i) + ": M(4,4) " + fmt(rep.m_high) + " bound " + fmt(rep.bound);
  }
  r.pass = failures == 0;
  r.summary = std::to_string(c.doubling_cases) + " instances, max M(4,4)/bound " + fmt(worst_ratio) +
              ", min pointwise margin " + fmt(worst_margin);
  r.details = Json{{"instances", c.doubling_cases},
                   {"failures", failures},
                   {"max_ratio_to_bound", worst_ratio},
                   {"min_pointwise_margin", worst_margin}};
  if (failures) r.details["first_failure"] = first;
  return r;
}

// ---------------------------------------------------------------------- 8

CriterionResult criterion8(const SuiteConfig& c) {
  CriterionResult r;
  Sampler rng(derive_seed(c.seed, 8));
  const BlaschkeProduct theta = rng.blaschke(3, 0.8, true);
  const CircleGrid circle(64);
  std::vector<cplx> support = circle.nodes();
  std::vector<cplx> mixed = support;
  for (int k = 0; k < 16; ++k) mixed.push_back(rng.disk_point(0.9));

  const SolidityReport id = check_solid(identity_operator(), theta, c.solid_trials, rng.engine()(), mixed);
  const SolidOperatorSpec maxop = maximal_operator_spec(RegionFamily::truncated_cone());
  const SolidityReport mx = check_solid(maxop, theta, c.solid_trials, rng.engine()(), support);
  const SolidityReport df = check_solid(differentiation_operator(), theta, 0, rng.engine()(), mixed);

  const bool deterministic_witness = !df.monotone && df.monotone_witness.rfind("pair (z, 1)", 0) == 0;
  r.pass = id.all() && mx.all() && deterministic_witness;
  auto flags = [](const SolidityReport& s) {
    return Json{{"subadditive", s.subadditive},
                {"homogeneous", s.homogeneous},
                {"squares", s.squares},
                {"monotone", s.monotone},
                {"trials", s.trials},
                {"worst_square_membership", s.worst_square_membership}};
  };
  r.summary = std::string("identity ") + (id.all() ? "pass" : "FAIL") + ", maximal " + (mx.all() ? "pass" : "FAIL") +
              ", differentiation " + (deterministic_witness ? "falsified by (z, 1)" : "NOT falsified");
  r.details = Json{{"identity", flags(id)}, {"maximal", flags(mx)}, {"differentiation_witness", df.monotone_witness}};
  return r;
}

// ---------------------------------------------------------------------- 9

CriterionResult criterion9(const SuiteConfig& c) {
  CriterionResult r;
  Sampler rng(derive_seed(c.seed, 9));
  double worst_formula = 0, worst_ratio = 0;
  for (std::size_t i = 0; i < c.lp_polys; ++i) {
    const AnalyticPoly f = rng.polynomial(rng.index(0, 64));
    const double e = littlewood_paley_energy(f);
    const double q = littlewood_paley_quadrature(f);
    const double l2 = f.l2_norm();
    worst_formula = std::max(worst_formula, std::abs(e - q) / std::max(e, 1e-300));
    worst_ratio = std::max(worst_ratio, e / (l2 * l2) / (std::numbers::pi / 2));
  }
  const double as[] = {0.9, 0.95, 0.99};
  const LpCounterexampleSweep sweep = lp_counterexample_sweep(as);
  Json rows = Json::array();
  for (const auto& row : sweep.rows)
    rows.push_back(Json{{"a", row.a}, {"R", row.r}, {"R_times_1_minus_a", row.scaled}, {"ratio", row.ratio_to_prev}});
  r.pass = worst_formula < 1e-8 && worst_ratio < 1 && sweep.band_stable;
  r.summary = "formula vs quadrature " + fmt(worst_formula) + "; max energy/(pi/2 ||f||^2) " + fmt(worst_ratio) +
              "; sweep " + (sweep.band_stable ? "band-stable" : "NOT band-stable");
  r.details = Json{{"max_formula_error", worst_formula}, {"max_energy_ratio", worst_ratio}, {"sweep", rows},
                   {"band_stable", sweep.band_stable}};
  return r;
}

// ---------------------------------------------------------------------- 10

CriterionResult criterion10(const SuiteConfig& c) {
  CriterionResult r;
  Sampler rng(derive_seed(c.seed, 10));
  const CircleGrid grid(c.grid);
  double worst = 0;
  for (std::size_t i = 0; i < c.sup_polys; ++i) {
    const AnalyticPoly f = rng.polynomial(rng.index(0, 64));
    const auto fs = sample(f, grid);
    const double m = lp_norm(fs, infinity);
    const double s = lp_norm(sup_norm_square(fs), infinity);
    worst = std::max(worst, std::abs(s - m * m) / (m * m));
  }
  const double limit = 4 * std::numeric_limits<double>::epsilon();
  r.pass = worst <= limit;
  r.summary = "max relative deviation of ||Sf||_inf from ||f||_inf^2: " + fmt(worst) + " (limit 4 eps)";
  r.details = Json{{"cases", c.sup_polys}, {"max_relative_deviation", worst}};
  return r;
}

const char* title(int id) {
  switch (id) {
    case 1: return "exact quasi-square values";
    case 2: return "superquadratic certification";
    case 3: return "quasi-square norm bounds";
    case 4: return "conjugation-operator constants";
    case 5: return "real parts of model spaces";
    case 6: return "endpoint blow-up";
    case 7: return "extrapolation doubling";
    case 8: return "solidity contracts";
    case 9: return "Littlewood-Paley";
    case 10: return "p = infinity endpoint";
  }
  return "unknown";
}

}  // namespace

CriterionResult run_criterion(int id, const SuiteConfig& config) {
  using clock = std::chrono::steady_clock;
  config.validate();
  const auto start = clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = criterion1(config); break;
    case 2: r = criterion2(config); break;
    case 3: r = criterion3(config); break;
    case 4: r = criterion4(config); break;
    case 5: r = criterion5(config); break;
    case 6: r = criterion6(config); break;
    case 7: r = criterion7(config); break;
    case 8: r = criterion8(config); break;
    case 9: r = criterion9(config); break;
    case 10: r = criterion10(config); break;
    default: throw Error(ErrorCode::invalid_argument, "criterion must be between 1 and 10");
  }
  r.id = id;
  r.title = title(id);
  r.seconds = std::chrono::duration<double>(clock::now() - start).count();
  return r;
}

Json suite_report(const SuiteConfig& config, const std::vector<CriterionResult>& results) {
  Json list = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    list.push_back(Json{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"summary", r.summary},
                        {"details", r.details}});
  }
  return Json{{"config", config.to_json()}, {"pass", all}, {"criteria", list}};
}

}  // namespace qsq
