#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qsq/blaschke.hpp"
#include "qsq/fourier.hpp"
#include "qsq/model_space.hpp"

namespace qsq {

struct Atom {
  cplx z;
  double w;
};

/// Finite positive measure on the closed disk.
class DiskMeasure {
 public:
  explicit DiskMeasure(std::vector<Atom> atoms, std::string family = {});

  /// Normalized Lebesgue measure on T realized by a circle grid.
  static DiskMeasure circle(const CircleGrid& grid);
  /// (1 - |z|) dA(z), dA unnormalized area, as Gauss-Legendre in r (on [0, 1])
  /// times a uniform angular grid.
  static DiskMeasure littlewood_paley(std::size_t radial_nodes, std::size_t angular_nodes);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  const std::string& family() const noexcept { return family_; }
  double mass() const;
  std::vector<cplx> support() const;

  DiskMeasure scaled(double t) const;
  DiskMeasure with_atom(Atom a) const;

  /// Rejects atoms where some basis function of `space` is not finite.
  void validate_for(const ModelSpace& space) const;

 private:
  std::vector<Atom> atoms_;
  std::string family_;
};

/// Integral over the unit disk against unnormalized area dA, by Gauss-Legendre
/// in r with `radial_nodes` (128 or 256) and an `angular_nodes` circle grid.
double polar_integral(const std::function<double(cplx)>& integrand, std::size_t radial_nodes,
                      std::size_t angular_nodes);

/// Maps a model-space element to values at the given support points.
using OperatorApply = std::function<std::vector<cplx>(const RationalFn&, std::span<const cplx>)>;

struct SolidOperatorSpec {
  std::string name;
  OperatorApply apply;
  double gamma = 1;
  bool subadditive = true;  ///< |T(f+g)| <= |Tf| + |Tg|
  bool homogeneous = true;  ///< |T(lambda f)| = |lambda| |Tf|
  bool squares = true;      ///< |Tf|^2 <= gamma |T(f^2)|
  bool monotone = true;     ///< |F| <= |G| implies |TF| <= |TG|
};

/// Sample cloud Omega anchored at the point 1; Omega_zeta is the rotation
/// of the template by arg zeta.
class RegionFamily {
 public:
  explicit RegionFamily(std::vector<cplx> cloud, std::string name = {});

  /// Truncated cone {z : |arg z| <= aperture (1 - |z|), r_min <= |z| <= r_max}
  /// sampled on a radial x angular lattice, with the vertex 1 included.
  static RegionFamily truncated_cone(double aperture = 1.0, double r_min = 0.5, double r_max = 0.98,
                                     std::size_t radial = 8, std::size_t angular = 5);
  static RegionFamily radial_point(double r);
  static RegionFamily origin();

  const std::vector<cplx>& cloud() const noexcept { return cloud_; }
  const std::string& name() const noexcept { return name_; }
  std::vector<cplx> region(cplx zeta) const;

 private:
  std::vector<cplx> cloud_;
  std::string name_;
};

/// (Tf)(zeta) = sup{|f(z)| : z in Omega_zeta} at each grid node. An empty
/// family yields zeros and a warning on stderr.
BoundarySamples maximal_operator(const HolomorphicFn& f, const RegionFamily& regions, const CircleGrid& grid);
std::vector<cplx> maximal_operator(const HolomorphicFn& f, const RegionFamily& regions,
                                   std::span<const cplx> points);

SolidOperatorSpec identity_operator();
SolidOperatorSpec maximal_operator_spec(const RegionFamily& regions);
SolidOperatorSpec differentiation_operator();

struct SolidityReport {
  std::string name;
  std::size_t trials = 0;
  bool subadditive = true, homogeneous = true, squares = true, monotone = true;
  /// First counterexample per property, empty if none was found.
  std::string subadditive_witness, homogeneous_witness, squares_witness, monotone_witness;
  double worst_square_membership = 0;

  bool all() const { return subadditive && homogeneous && squares && monotone; }
  /// Every flag claimed by `op` survived.
  bool claims_hold(const SolidOperatorSpec& op) const {
    return (!op.subadditive || subadditive) && (!op.homogeneous || homogeneous) && (!op.squares || squares) &&
           (!op.monotone || monotone);
  }
};

/// Randomized falsification of the four contracts on K_{theta^2}. Squares are
/// formed from f in K_theta at coefficient level and their membership in
/// K_{theta^2} is verified first. Monotone pairs are (b_a G, G) with a a zero
/// of theta and scalar multiples (t G, G), |t| <= 1; when theta(0) = 0 the
/// pair (z, 1) is always included.
SolidityReport check_solid(const SolidOperatorSpec& op, const BlaschkeProduct& theta, std::size_t trials,
                           std::uint64_t seed, std::span<const cplx> support);

struct EmbeddingOptions {
  std::size_t starts = 32;
  std::size_t max_iterations = 600;
  double rel_tol = 1e-8;
  std::uint64_t seed = 1;
  /// Circle grid used for ||f||_p during the ascent; 0 picks one from theta.
  std::size_t grid = 0;
};

struct EmbeddingResult {
  double value = 0;
  std::vector<cplx> maximizer;  ///< MT coordinates
  bool exact = false;
  /// Norm of the gradient of log(||f||_{q,mu}/||f||_p) at the maximizer,
  /// relative to the coordinate norm; 0 on the exact path.
  double stationarity = 0;
  std::size_t iterations = 0;
};

/// sup{||f||_{L^q(mu)} : f in K_theta, ||f||_p = 1}. p = q = 2 uses the
/// largest eigenvalue of the mu-Gram matrix; otherwise multi-start ascent,
/// whose value is recomputed on a refined grid and is a lower bound.
EmbeddingResult embedding_norm(const BlaschkeProduct& theta, double p, double q, const DiskMeasure& mu,
                               const EmbeddingOptions& opts = {});

/// The general ascent even when p = q = 2.
EmbeddingResult embedding_norm_ascent(const BlaschkeProduct& theta, double p, double q, const DiskMeasure& mu,
                                      const EmbeddingOptions& opts = {});

/// sup ||Tf||_{L^q(mu)}/||f||_p over K_theta for a general operator, with a
/// finite-difference gradient.
EmbeddingResult operator_norm(const SolidOperatorSpec& op, const BlaschkeProduct& theta, double p, double q,
                              const DiskMeasure& mu, const EmbeddingOptions& opts = {});

struct DoublingReport {
  double sigma, tau;
  double m_low;   ///< M(sigma, tau)
  double m_high;  ///< M(2 sigma, 2 tau), a lower bound
  double constant;  ///< C = B_{2 sigma} ((1+|w|)/(1-|w|))^2
  double bound;     ///< sqrt(gamma C M(sigma, tau))
  bool low_exact;
  /// min over sampled f and support of gamma |T(S_theta f)| - |Tf|^2, scaled.
  double pointwise_margin;
  std::size_t pointwise_samples;

  bool inequality_ok() const { return m_high <= bound * (1 + 1e-6); }
  bool pointwise_ok() const { return pointwise_margin >= -1e-10; }
  bool pass() const { return inequality_ok() && pointwise_ok(); }
};

DoublingReport extrapolation_doubling_check(const BlaschkeProduct& theta, const DiskMeasure& mu, double sigma,
                                            double tau, const SolidOperatorSpec& op, std::size_t samples = 50,
                                            const EmbeddingOptions& opts = {});

/// pi sum_k k |a_k|^2/(2k+1): the integral of |f'|^2 (1-|z|) dA.
double littlewood_paley_energy(const AnalyticPoly& f);

/// The same integral by polar quadrature.
double littlewood_paley_quadrature(const AnalyticPoly& f, std::size_t radial_nodes = 128,
                                   std::size_t angular_nodes = 0);

struct LpCounterexampleRow {
  double a;
  double disk_integral;  ///< int |f_a'|^3 (1-|z|) dA
  double circle_norm;    ///< ||f_a||_3^3
  double r;              ///< disk_integral / circle_norm
  double scaled;         ///< r (1 - a)
  double ratio_to_prev;  ///< scaled / previous scaled (1 for the first row)
  std::size_t radial_nodes, angular_nodes;
  bool converged;
};

struct LpCounterexampleSweep {
  std::vector<LpCounterexampleRow> rows;
  bool band_stable;  ///< every ratio_to_prev in [0.5, 2]
};

/// R(a) = ||f_a||_3^{-3} int |f_a'|^3 (1-|z|) dA for real a in (0, 1).
LpCounterexampleSweep lp_counterexample_sweep(std::span<const double> as);

}  // namespace qsq
