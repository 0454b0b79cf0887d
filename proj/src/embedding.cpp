#include "qsq/embedding.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>

#include "qsq/endpoint.hpp"
#include "qsq/error.hpp"
#include "qsq/quasi_square.hpp"
#include "qsq/random.hpp"

namespace qsq {
namespace {

struct RadialNode {
  double r, w;
};

template <unsigned N>
std::vector<RadialNode> gauss_rule() {
  using rule = boost::math::quadrature::gauss<double, N>;
  const auto& x = rule::abscissa();
  const auto& w = rule::weights();
  std::vector<RadialNode> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.push_back({0.5 * (1 + x[i]), 0.5 * w[i]});
    if (x[i] != 0) out.push_back({0.5 * (1 - x[i]), 0.5 * w[i]});
  }
  return out;
}

const std::vector<RadialNode>& radial_rule(std::size_t n) {
  static const auto r128 = gauss_rule<128>();
  static const auto r256 = gauss_rule<256>();
  if (n == 128) return r128;
  if (n == 256) return r256;
  throw Error(ErrorCode::invalid_argument, "radial quadrature supports 128 or 256 nodes");
}

std::string point_text(cplx z) {
  std::ostringstream os;
  os.precision(6);
  os << z;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- DiskMeasure

DiskMeasure::DiskMeasure(std::vector<Atom> atoms, std::string family)
    : atoms_(std::move(atoms)), family_(std::move(family)) {
  for (const auto& a : atoms_) {
    if (!(a.w > 0) || !std::isfinite(a.w))
      throw Error(ErrorCode::invalid_argument, "measure weights must be positive and finite");
    if (!(std::abs(a.z) <= 1.0 + 1e-15))
      throw Error(ErrorCode::out_of_domain, "measure atom " + point_text(a.z) + " lies outside the closed disk");
  }
}

DiskMeasure DiskMeasure::circle(const CircleGrid& grid) {
  std::vector<Atom> atoms;
  for (std::size_t k = 0; k < grid.size(); ++k) atoms.push_back({grid.node(k), grid.weight()});
  return DiskMeasure(std::move(atoms), "circle");
}

DiskMeasure DiskMeasure::littlewood_paley(std::size_t radial_nodes, std::size_t angular_nodes) {
  const CircleGrid grid(angular_nodes);
  const double dt = 2 * std::numbers::pi / static_cast<double>(angular_nodes);
  std::vector<Atom> atoms;
  for (const auto& node : radial_rule(radial_nodes))
    for (std::size_t k = 0; k < angular_nodes; ++k)
      atoms.push_back({node.r * grid.node(k), node.w * node.r * (1 - node.r) * dt});
  return DiskMeasure(std::move(atoms), "littlewood-paley");
}

double DiskMeasure::mass() const {
  double m = 0;
  for (const auto& a : atoms_) m += a.w;
  return m;
}

std::vector<cplx> DiskMeasure::support() const {
  std::vector<cplx> z;
  z.reserve(atoms_.size());
  for (const auto& a : atoms_) z.push_back(a.z);
  return z;
}

DiskMeasure DiskMeasure::scaled(double t) const {
  std::vector<Atom> atoms(atoms_);
  for (auto& a : atoms) a.w *= t;
  return DiskMeasure(std::move(atoms), family_);
}

DiskMeasure DiskMeasure::with_atom(Atom a) const {
  std::vector<Atom> atoms(atoms_);
  atoms.push_back(a);
  return DiskMeasure(std::move(atoms), family_);
}

void DiskMeasure::validate_for(const ModelSpace& space) const {
  for (const auto& a : atoms_) {
    if (std::abs(a.z) < 1) continue;
    for (auto v : space.basis_values(a.z))
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw Error(ErrorCode::out_of_domain, "basis is singular at boundary atom " + point_text(a.z));
  }
}

double polar_integral(const std::function<double(cplx)>& integrand, std::size_t radial_nodes,
                      std::size_t angular_nodes) {
  const CircleGrid grid(angular_nodes);
  const double dt = 2 * std::numbers::pi / static_cast<double>(angular_nodes);
  double total = 0;
  for (const auto& node : radial_rule(radial_nodes)) {
    double ring = 0;
    for (std::size_t k = 0; k < angular_nodes; ++k) ring += integrand(node.r * grid.node(k));
    total += node.w * node.r * ring * dt;
  }
  return total;
}

// --------------------------------------------------------------- RegionFamily

RegionFamily::RegionFamily(std::vector<cplx> cloud, std::string name)
    : cloud_(std::move(cloud)), name_(std::move(name)) {
  for (auto z : cloud_)
    if (!(std::abs(z) <= 1.0 + 1e-15)) throw Error(ErrorCode::out_of_domain, "region point outside the disk");
}

RegionFamily RegionFamily::truncated_cone(double aperture, double r_min, double r_max, std::size_t radial,
                                          std::size_t angular) {
  if (!(0 <= r_min && r_min <= r_max && r_max < 1) || radial < 1 || angular < 1 || !(aperture > 0))
    throw Error(ErrorCode::invalid_argument, "bad truncated cone parameters");
  std::vector<cplx> cloud{1.0};
  for (std::size_t i = 0; i < radial; ++i) {
    const double r = radial == 1 ? r_max : r_min + (r_max - r_min) * static_cast<double>(i) / (radial - 1.0);
    const double half = aperture * (1 - r);
    for (std::size_t j = 0; j < angular; ++j) {
      const double phi = angular == 1 ? 0.0 : -half + 2 * half * static_cast<double>(j) / (angular - 1.0);
      cloud.push_back(std::polar(r, phi));
    }
  }
  return RegionFamily(std::move(cloud), "truncated-cone");
}

RegionFamily RegionFamily::radial_point(double r) { return RegionFamily({cplx{r, 0.0}}, "radial-point"); }

RegionFamily RegionFamily::origin() { return RegionFamily({cplx{}}, "origin"); }

std::vector<cplx> RegionFamily::region(cplx zeta) const {
  const double m = std::abs(zeta);
  const cplx rot = m > 0 ? zeta / m : cplx{1.0};
  std::vector<cplx> out(cloud_);
  for (auto& z : out) z *= rot;
  return out;
}

std::vector<cplx> maximal_operator(const HolomorphicFn& f, const RegionFamily& regions,
                                   std::span<const cplx> points) {
  if (regions.cloud().empty()) std::cerr << "warning: empty region family, maximal function set to 0\n";
  std::vector<cplx> out(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    double m = 0;
    for (auto z : regions.region(points[k])) m = std::max(m, std::abs(f(z)));
    out[k] = m;
  }
  return out;
}

BoundarySamples maximal_operator(const HolomorphicFn& f, const RegionFamily& regions, const CircleGrid& grid) {
  const auto nodes = grid.nodes();
  return BoundarySamples(grid, maximal_operator(f, regions, nodes));
}

SolidOperatorSpec identity_operator() {
  SolidOperatorSpec op;
  op.name = "identity";
  op.apply = [](const RationalFn& f, std::span<const cplx> pts) {
    std::vector<cplx> v(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) v[k] = f(pts[k]);
    return v;
  };
  return op;
}

SolidOperatorSpec maximal_operator_spec(const RegionFamily& regions) {
  SolidOperatorSpec op;
  op.name = "maximal";
  op.apply = [regions](const RationalFn& f, std::span<const cplx> pts) {
    return maximal_operator([&f](cplx z) { return f(z); }, regions, pts);
  };
  return op;
}

SolidOperatorSpec differentiation_operator() {
  SolidOperatorSpec op;
  op.name = "differentiation";
  op.apply = [](const RationalFn& f, std::span<const cplx> pts) {
    const RationalFn d = f.derivative();
    std::vector<cplx> v(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) v[k] = d(pts[k]);
    return v;
  };
  return op;
}

// ---------------------------------------------------------------- check_solid

namespace {

double max_abs(const std::vector<cplx>& v) {
  double m = 0;
  for (auto x : v) m = std::max(m, std::abs(x));
  return m;
}

constexpr double kSolidSlack = 1e-10;

}  // namespace

SolidityReport check_solid(const SolidOperatorSpec& op, const BlaschkeProduct& theta, std::size_t trials,
                           std::uint64_t seed, std::span<const cplx> support) {
  const BlaschkeProduct theta2 = theta.squared();
  const ModelSpace space(theta);
  const ModelSpace space2(theta2);
  const AnalyticPoly den2 = theta2.denominator();
  const CircleGrid grid(1024);
  Sampler rng(seed);

  SolidityReport r;
  r.name = op.name;
  r.trials = trials;

  auto monotone_pair = [&](const RationalFn& F, const RationalFn& G, const std::string& label) {
    const auto tf = op.apply(F, support);
    const auto tg = op.apply(G, support);
    const double scale = std::max({max_abs(tf), max_abs(tg), 1e-300});
    for (std::size_t k = 0; k < support.size(); ++k) {
      if (std::abs(tf[k]) > std::abs(tg[k]) + kSolidSlack * scale) {
        if (r.monotone) {
          std::ostringstream os;
          os << label << " at " << point_text(support[k]) << ": |TF| = " << std::abs(tf[k])
             << " > |TG| = " << std::abs(tg[k]);
          r.monotone_witness = os.str();
        }
        r.monotone = false;
        return;
      }
    }
  };

  if (theta.vanishes_at_origin())
    monotone_pair(RationalFn(AnalyticPoly{0.0, 1.0}), RationalFn(AnalyticPoly{1.0}), "pair (z, 1)");

  const std::size_t n2 = space2.dimension();
  for (std::size_t t = 0; t < trials; ++t) {
    const RationalFn f = space2.element(rng.gaussian_vector(n2));
    const RationalFn g = space2.element(rng.gaussian_vector(n2));
    const cplx lambda = rng.gaussian();

    const auto tf = op.apply(f, support);
    const auto tg = op.apply(g, support);
    const auto tsum = op.apply(f + g, support);
    const auto tlam = op.apply(lambda * f, support);
    const double scale = std::max({max_abs(tf), max_abs(tg), 1e-300});
    for (std::size_t k = 0; k < support.size(); ++k) {
      if (r.subadditive && std::abs(tsum[k]) > std::abs(tf[k]) + std::abs(tg[k]) + kSolidSlack * scale) {
        r.subadditive = false;
        r.subadditive_witness = "trial " + std::to_string(t) + " at " + point_text(support[k]);
      }
      if (r.homogeneous &&
          std::abs(std::abs(tlam[k]) - std::abs(lambda) * std::abs(tf[k])) > kSolidSlack * std::abs(lambda) * scale) {
        r.homogeneous = false;
        r.homogeneous_witness = "trial " + std::to_string(t) + " at " + point_text(support[k]);
      }
    }

    // Squares of K_theta elements land in K_{theta^2}.
    const RationalFn h = space.element(rng.gaussian_vector(space.dimension()));
    const RationalFn h2 = h * h;
    const double member = membership_residual(sample(h2, grid), theta2).worst();
    r.worst_square_membership = std::max(r.worst_square_membership, member);
    const auto th = op.apply(h, support);
    const auto th2 = op.apply(h2, support);
    const double hs = std::max(max_abs(th), 1e-300);
    for (std::size_t k = 0; k < support.size(); ++k) {
      if (r.squares && std::norm(th[k]) > op.gamma * std::abs(th2[k]) + kSolidSlack * hs * hs) {
        r.squares = false;
        std::ostringstream os;
        os << "trial " << t << " at " << point_text(support[k]) << ": |Tf|^2 = " << std::norm(th[k])
           << " > gamma |T(f^2)| = " << op.gamma * std::abs(th2[k]);
        r.squares_witness = os.str();
      }
    }

    // Monotone pairs inside K_{theta^2}: G = (1 - conj(a) z) q / D^2, F = b_a G.
    const cplx a = theta.zeros()[rng.index(0, theta.degree() - 1)];
    const AnalyticPoly q(rng.gaussian_vector(n2 - 1));
    const RationalFn G(AnalyticPoly{1.0, -std::conj(a)} * q, den2);
    const RationalFn F(AnalyticPoly{-a, 1.0} * q, den2);
    if (r.monotone) monotone_pair(F, G, "trial " + std::to_string(t) + " pair (b_a G, G)");
    const cplx s = rng.disk_point(1.0);
    if (r.monotone) monotone_pair(s * G, G, "trial " + std::to_string(t) + " pair (t G, G)");
  }
  return r;
}

// ------------------------------------------------------------- embedding norm

namespace {

struct AscentProblem {
  // J(c) = log ||f||_{q,mu} - log ||f||_p for f = sum c_k e_k.
  Eigen::MatrixXcd circle;  // grid values of the basis (empty when p == 2)
  Eigen::MatrixXcd atoms;   // basis at the support of mu
  Eigen::VectorXd weights;
  double p, q;

  double log_p_norm(const Eigen::VectorXcd& c, Eigen::VectorXcd* grad) const {
    if (p == 2) {
      const double n2 = c.squaredNorm();
      if (grad) *grad = c / (2 * n2);
      return 0.5 * std::log(n2);
    }
    const Eigen::VectorXcd f = circle * c;
    const auto n = static_cast<double>(f.size());
    if (std::isinf(p)) {
      Eigen::Index i = 0;
      f.cwiseAbs().maxCoeff(&i);
      const double m = std::abs(f(i));
      if (grad) *grad = circle.row(i).adjoint() * f(i) / (2 * m * m);
      return std::log(m);
    }
    const Eigen::VectorXd mod = f.cwiseAbs();
    double s = 0;
    for (Eigen::Index i = 0; i < f.size(); ++i) s += std::pow(mod(i), p);
    s /= n;
    if (grad) {
      Eigen::VectorXcd v(f.size());
      for (Eigen::Index i = 0; i < f.size(); ++i) v(i) = mod(i) > 0 ? std::pow(mod(i), p - 2) * f(i) : cplx{};
      *grad = circle.adjoint() * v / (2 * n * s);
    }
    return std::log(s) / p;
  }

  double log_q_norm(const Eigen::VectorXcd& c, Eigen::VectorXcd* grad) const {
    const Eigen::VectorXcd f = atoms * c;
    if (std::isinf(q)) {
      Eigen::Index i = 0;
      f.cwiseAbs().maxCoeff(&i);
      const double m = std::abs(f(i));
      if (grad) *grad = m > 0 ? Eigen::VectorXcd(atoms.row(i).adjoint() * f(i) / (2 * m * m))
                              : Eigen::VectorXcd::Zero(c.size());
      return std::log(m);
    }
    const Eigen::VectorXd mod = f.cwiseAbs();
    double s = 0;
    for (Eigen::Index i = 0; i < f.size(); ++i) s += weights(i) * std::pow(mod(i), q);
    if (grad) {
      Eigen::VectorXcd v(f.size());
      for (Eigen::Index i = 0; i < f.size(); ++i)
        v(i) = mod(i) > 0 ? weights(i) * std::pow(mod(i), q - 2) * f(i) : cplx{};
      *grad = s > 0 ? Eigen::VectorXcd(atoms.adjoint() * v / (2 * s)) : Eigen::VectorXcd::Zero(c.size());
    }
    return std::log(s) / q;
  }

  double value(const Eigen::VectorXcd& c, Eigen::VectorXcd* grad) const {
    Eigen::VectorXcd gp, gq;
    const double j = log_q_norm(c, grad ? &gq : nullptr) - log_p_norm(c, grad ? &gp : nullptr);
    if (grad) *grad = gq - gp;
    return j;
  }
};

std::size_t ascent_grid(const BlaschkeProduct& theta, std::size_t requested) {
  if (requested) return CircleGrid::at_least(requested).size();
  double r = 0;
  for (auto a : theta.zeros()) r = std::max(r, std::abs(a));
  return CircleGrid::at_least(std::min<std::size_t>(
                                  4096, std::max<std::size_t>(256, static_cast<std::size_t>(32.0 / (1.0 - r)))))
      .size();
}

void check_exponents(double p, double q) {
  if (!(p > 1)) throw Error(ErrorCode::out_of_domain, "embedding needs 1 < p <= infinity");
  if (!(q > 0)) throw Error(ErrorCode::out_of_domain, "embedding needs 0 < q <= infinity");
}

/// Adaptive-step ascent from one start; returns the final J.
template <class Value>
double ascend(const Value& value_fn, Eigen::VectorXcd& c, const EmbeddingOptions& opts, std::size_t& iterations,
              double& stationarity) {
  c.normalize();
  Eigen::VectorXcd grad;
  double j = value_fn(c, &grad);
  double step = 1.0;
  std::size_t it = 0;
  for (; it < opts.max_iterations; ++it) {
    if (!std::isfinite(j)) break;
    if (grad.norm() < opts.rel_tol) break;
    Eigen::VectorXcd trial = c + step * grad;
    trial.normalize();
    Eigen::VectorXcd tgrad;
    const double tj = value_fn(trial, &tgrad);
    if (std::isfinite(tj) && tj > j) {
      c = trial;
      grad = tgrad;
      j = tj;
      step = std::min(step * 2, 1e6);
    } else {
      step *= 0.5;
      if (step < 1e-14) break;
    }
  }
  iterations += it;
  stationarity = grad.norm();
  return j;
}

}  // namespace

EmbeddingResult embedding_norm(const BlaschkeProduct& theta, double p, double q, const DiskMeasure& mu,
                               const EmbeddingOptions& opts) {
  check_exponents(p, q);
  if (p != 2 || q != 2) return embedding_norm_ascent(theta, p, q, mu, opts);
  const ModelSpace space(theta);
  mu.validate_for(space);
  const auto support = mu.support();
  const Eigen::MatrixXcd b = space.basis_matrix(support);
  Eigen::VectorXd w(static_cast<Eigen::Index>(support.size()));
  for (std::size_t i = 0; i < support.size(); ++i) w(static_cast<Eigen::Index>(i)) = mu.atoms()[i].w;
  const Eigen::MatrixXcd gram = b.adjoint() * w.asDiagonal() * b;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
  const Eigen::Index top = es.eigenvalues().size() - 1;

  EmbeddingResult r;
  r.exact = true;
  r.value = std::sqrt(std::max(0.0, es.eigenvalues()(top)));
  const Eigen::VectorXcd v = es.eigenvectors().col(top);
  r.maximizer.assign(v.data(), v.data() + v.size());
  return r;
}

EmbeddingResult embedding_norm_ascent(const BlaschkeProduct& theta, double p, double q, const DiskMeasure& mu,
                                      const EmbeddingOptions& opts) {
  check_exponents(p, q);
  const ModelSpace space(theta);
  mu.validate_for(space);
  const auto support = mu.support();

  AscentProblem prob;
  prob.p = p;
  prob.q = q;
  prob.atoms = space.basis_matrix(support);
  prob.weights.resize(static_cast<Eigen::Index>(support.size()));
  for (std::size_t i = 0; i < support.size(); ++i) prob.weights(static_cast<Eigen::Index>(i)) = mu.atoms()[i].w;
  if (p != 2) {
    const CircleGrid grid(ascent_grid(theta, opts.grid));
    const auto nodes = grid.nodes();
    prob.circle = space.basis_matrix(nodes);
  }
  const auto n = static_cast<Eigen::Index>(space.dimension());
  Sampler rng(opts.seed);

  EmbeddingResult best;
  best.value = -infinity;
  double best_j = -infinity;
  Eigen::VectorXcd best_c;
  const std::size_t kernel_starts = std::min(support.size(), opts.starts / 2);
  for (std::size_t s = 0; s < opts.starts; ++s) {
    Eigen::VectorXcd c(n);
    if (s < kernel_starts) {
      // Reproducing kernel at an atom, spread evenly over the support.
      const auto i = static_cast<Eigen::Index>(s * support.size() / kernel_starts);
      c = prob.atoms.row(i).adjoint();
      if (c.norm() == 0) c = Eigen::VectorXcd::Ones(n);
    } else {
      for (Eigen::Index k = 0; k < n; ++k) c(k) = rng.gaussian();
    }
    double stat = 0;
    const double j = ascend([&](const Eigen::VectorXcd& x, Eigen::VectorXcd* g) { return prob.value(x, g); }, c, opts,
                            best.iterations, stat);
    if (j > best_j) {
      best_j = j;
      best_c = c;
      best.stationarity = stat;
    }
  }

  // Certify the winner against a refined p-norm.
  std::vector<cplx> coords(best_c.data(), best_c.data() + best_c.size());
  const RationalFn f = space.element(coords);
  double pn = best_c.norm();
  if (p != 2) {
    if (std::isinf(p)) {
      pn = lp_norm(sample(f, CircleGrid(1u << 16)), infinity);
    } else {
      pn = lp_norm_refined([&f](cplx z) { return f(z); }, p, 4096, 1e-10, std::size_t{1} << 20).value;
    }
  }
  double qn = 0;
  {
    const Eigen::VectorXcd vals = prob.atoms * best_c;
    if (std::isinf(q)) {
      qn = vals.cwiseAbs().maxCoeff();
    } else {
      for (Eigen::Index i = 0; i < vals.size(); ++i) qn += prob.weights(i) * std::pow(std::abs(vals(i)), q);
      qn = std::pow(qn, 1 / q);
    }
  }
  best.value = qn / pn;
  best.maximizer = std::move(coords);
  best.exact = false;
  return best;
}

EmbeddingResult operator_norm(const SolidOperatorSpec& op, const BlaschkeProduct& theta, double p, double q,
                              const DiskMeasure& mu, const EmbeddingOptions& opts) {
  check_exponents(p, q);
  const ModelSpace space(theta);
  mu.validate_for(space);
  const auto support = mu.support();
  const CircleGrid grid(ascent_grid(theta, opts.grid));
  const auto nodes = grid.nodes();
  const Eigen::MatrixXcd circle = space.basis_matrix(nodes);
  const auto n = static_cast<Eigen::Index>(space.dimension());

  auto log_ratio = [&](const Eigen::VectorXcd& c) {
    std::vector<cplx> coords(c.data(), c.data() + c.size());
    const auto t = op.apply(space.element(coords), support);
    double qn = 0;
    if (std::isinf(q)) {
      for (auto v : t) qn = std::max(qn, std::abs(v));
    } else {
      for (std::size_t i = 0; i < t.size(); ++i) qn += mu.atoms()[i].w * std::pow(std::abs(t[i]), q);
      qn = std::pow(qn, 1 / q);
    }
    const Eigen::VectorXcd f = circle * c;
    double pn = 0;
    if (std::isinf(p)) {
      pn = f.cwiseAbs().maxCoeff();
    } else {
      for (Eigen::Index i = 0; i < f.size(); ++i) pn += std::pow(std::abs(f(i)), p);
      pn = std::pow(pn / static_cast<double>(f.size()), 1 / p);
    }
    return std::log(qn) - std::log(pn);
  };
  auto value_fn = [&](const Eigen::VectorXcd& c, Eigen::VectorXcd* grad) {
    const double j = log_ratio(c);
    if (grad) {
      grad->resize(n);
      const double h = 1e-6;
      for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
        e(k) = h;
        const double dr = (log_ratio(c + e) - log_ratio(c - e)) / (2 * h);
        e(k) = cplx{0.0, h};
        const double di = (log_ratio(c + e) - log_ratio(c - e)) / (2 * h);
        (*grad)(k) = 0.5 * cplx{dr, di};
      }
    }
    return j;
  };

  Sampler rng(opts.seed);
  EmbeddingResult best;
  double best_j = -infinity;
  Eigen::VectorXcd best_c;
  const Eigen::MatrixXcd at = space.basis_matrix(support);
  const std::size_t kernel_starts = std::min(support.size(), opts.starts / 2);
  for (std::size_t s = 0; s < opts.starts; ++s) {
    Eigen::VectorXcd c(n);
    if (s < kernel_starts) {
      c = at.row(static_cast<Eigen::Index>(s * support.size() / kernel_starts)).adjoint();
      if (c.norm() == 0) c = Eigen::VectorXcd::Ones(n);
    } else {
      for (Eigen::Index k = 0; k < n; ++k) c(k) = rng.gaussian();
    }
    double stat = 0;
    const double j = ascend(value_fn, c, opts, best.iterations, stat);
    if (j > best_j) {
      best_j = j;
      best_c = c;
      best.stationarity = stat;
    }
  }
  best.value = std::exp(best_j);
  best.maximizer.assign(best_c.data(), best_c.data() + best_c.size());
  return best;
}

// ---------------------------------------------------------- doubling check

DoublingReport extrapolation_doubling_check(const BlaschkeProduct& theta, const DiskMeasure& mu, double sigma,
                                            double tau, const SolidOperatorSpec& op, std::size_t samples,
                                            const EmbeddingOptions& opts) {
  if (!(sigma > 1) || !std::isfinite(sigma)) throw Error(ErrorCode::out_of_domain, "doubling needs 1 < sigma < infinity");
  if (!(tau >= 1) || !std::isfinite(tau)) throw Error(ErrorCode::out_of_domain, "doubling needs 1 <= tau < infinity");
  DoublingReport r{};
  r.sigma = sigma;
  r.tau = tau;
  const double w = std::abs(theta.at_zero());
  const double shift = (1 + w) / (1 - w);
  r.constant = b_constant(2 * sigma) * shift * shift;

  const bool identity = op.name == "identity";
  const EmbeddingResult low = identity ? embedding_norm(theta, sigma, tau, mu, opts)
                                       : operator_norm(op, theta, sigma, tau, mu, opts);
  const EmbeddingResult high = identity ? embedding_norm(theta, 2 * sigma, 2 * tau, mu, opts)
                                        : operator_norm(op, theta, 2 * sigma, 2 * tau, mu, opts);
  r.m_low = low.value;
  r.m_high = high.value;
  r.low_exact = low.exact;
  r.bound = std::sqrt(op.gamma * r.constant * r.m_low);

  const ModelSpace space(theta);
  const auto support = mu.support();
  const CircleGrid grid(4096);
  Sampler rng(derive_seed(opts.seed, 7));
  r.pointwise_margin = infinity;
  r.pointwise_samples = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    const RationalFn f = space.element(rng.gaussian_vector(space.dimension()));
    const QuasiSquare sq = quasi_square_shifted([&f](cplx z) { return f(z); }, theta, grid);
    const auto tf = op.apply(f, support);
    const auto ts = op.apply(sq.as_rational(), support);
    double scale = 1e-300;
    for (auto v : tf) scale = std::max(scale, std::norm(v));
    for (std::size_t k = 0; k < support.size(); ++k)
      r.pointwise_margin = std::min(r.pointwise_margin, (op.gamma * std::abs(ts[k]) - std::norm(tf[k])) / scale);
  }
  if (samples == 0) r.pointwise_margin = 0;
  return r;
}

// ------------------------------------------------------------ Littlewood-Paley

double littlewood_paley_energy(const AnalyticPoly& f) {
  double e = 0;
  for (std::size_t k = 1; k <= f.degree() && !f.is_null(); ++k) {
    const double kk = static_cast<double>(k);
    e += kk * std::norm(f[k]) / (2 * kk + 1);
  }
  return std::numbers::pi * e;
}

double littlewood_paley_quadrature(const AnalyticPoly& f, std::size_t radial_nodes, std::size_t angular_nodes) {
  if (angular_nodes == 0) angular_nodes = CircleGrid::at_least(std::max<std::size_t>(64, 4 * (f.degree() + 1))).size();
  const AnalyticPoly d = f.derivative();
  return polar_integral([&d](cplx z) { return std::norm(d(z)) * (1 - std::abs(z)); }, radial_nodes, angular_nodes);
}

LpCounterexampleSweep lp_counterexample_sweep(std::span<const double> as) {
  LpCounterexampleSweep sweep;
  sweep.band_stable = true;
  for (double a : as) {
    if (!(a > 0 && a < 1)) throw Error(ErrorCode::out_of_domain, "counterexample sweep needs 0 < a < 1");
    const double a3 = a * a * a;
    auto integrand = [a, a3](cplx z) {
      const double m = std::abs(1.0 - a * z);
      return a3 / std::pow(m, 6) * (1 - std::abs(z));
    };
    const std::size_t n_ang = endpoint_grid(cplx{a, 0.0}, 256).size();
    const double coarse = polar_integral(integrand, 128, n_ang);
    const double fine = polar_integral(integrand, 256, 2 * n_ang);

    LpCounterexampleRow row{};
    row.a = a;
    row.disk_integral = fine;
    row.radial_nodes = 256;
    row.angular_nodes = 2 * n_ang;
    row.converged = std::abs(fine - coarse) <= 1e-8 * fine;

    const RationalFn f = f_a(cplx{a, 0.0});
    const auto norm3 = lp_norm_refined([&f](cplx z) { return f(z); }, 3.0, endpoint_grid(cplx{a, 0.0}).size(), 1e-12);
    row.circle_norm = std::pow(norm3.value, 3);
    row.r = row.disk_integral / row.circle_norm;
    row.scaled = row.r * (1 - a);
    row.ratio_to_prev = sweep.rows.empty() ? 1.0 : row.scaled / sweep.rows.back().scaled;
    if (!(row.ratio_to_prev >= 0.5 && row.ratio_to_prev <= 2)) sweep.band_stable = false;
    if (!row.converged) sweep.band_stable = false;
    sweep.rows.push_back(row);
  }
  return sweep;
}

}  // namespace qsq
