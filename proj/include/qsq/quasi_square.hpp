#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qsq/blaschke.hpp"
#include "qsq/fourier.hpp"

namespace qsq {

/// Exact coefficient path for a polynomial: with u = |f|^2 on the circle,
///   u_k = sum_j f_{j+k} conj(f_j),   Sf = u_0 + 2 sum_{k>=1} u_k z^k.
/// The result has degree <= deg f; the null polynomial maps to itself.
AnalyticPoly quasi_square(const AnalyticPoly& f);

/// Sf (or S_theta f) computed on a grid. The output is
///   factor(z) * series(z)
/// with factor = 1 for the plain map and (1 + |w|) g_theta for the shifted one.
struct QuasiSquare {
  AnalyticPoly series;
  RationalFn factor{AnalyticPoly{1.0}};
  BoundarySamples boundary;
  /// Largest |u_k| over 3N/8 <= k < N/2, relative to u_0.
  double tail = 0;
  bool aliased = false;

  cplx operator()(cplx z) const { return factor(z) * series(z); }
  RationalFn as_rational() const { return RationalFn(series) * factor; }
};

/// Grid path: u = |f|^2 sampled, coefficients by FFT, series truncated at N/2 - 1.
/// Flags aliasing when the tail exceeds 1e-9.
QuasiSquare quasi_square(const HolomorphicFn& f, const CircleGrid& grid);
QuasiSquare quasi_square(const RationalFn& f, const CircleGrid& grid);

/// S_theta f = (1 + |w|) g_theta S(f / g_theta), w = theta(0).
/// For theta(0) == 0 this is the plain map.
QuasiSquare quasi_square_shifted(const HolomorphicFn& f, const BlaschkeProduct& theta, const CircleGrid& grid);

/// A candidate superquadratic map, acting on functions given pointwise.
using SquareMap = std::function<HolomorphicFn(const HolomorphicFn&)>;

SquareMap plain_square_map(const CircleGrid& grid);
SquareMap shifted_square_map(const BlaschkeProduct& theta, const CircleGrid& grid);

struct SuperquadraticReport {
  /// min over grid of (|Sf| - |f|^2) / scale, scale = max |f|^2 on the grid.
  double circle_margin = 0;
  cplx circle_worst{};
  double disk_margin = 0;
  cplx disk_worst{};
  /// max | |S(lambda f)| - |lambda|^2 |Sf| | / (|lambda|^2 max |Sf|)
  double homogeneity_error = 0;
  cplx homogeneity_worst{};
  double slack = 1e-10;

  bool lower_bound_ok() const { return circle_margin >= -slack && disk_margin >= -slack; }
  bool homogeneity_ok() const { return homogeneity_error <= slack; }
  bool pass() const { return lower_bound_ok() && homogeneity_ok(); }
  std::string describe() const;
};

/// Checks |op(lambda f)| = |lambda|^2 |op(f)| and |op(f)| >= |f|^2 on the grid
/// and at `interior_points` random points of |z| <= 0.95.
SuperquadraticReport verify_superquadratic(const SquareMap& op, const HolomorphicFn& f, cplx lambda,
                                           const CircleGrid& grid, std::uint64_t seed,
                                           std::size_t interior_points = 64, double slack = 1e-10);

struct NormBoundReport {
  double p = 0;
  cplx w{};
  double input_norm = 0;   ///< ||f||_p
  double output_norm = 0;  ///< ||S_theta f||_{p/2}
  double bound = 0;        ///< B_p ((1+|w|)/(1-|w|))^2 ||f||_p^2
  double pointwise_margin = 0;
  bool has_theta = false;
  double input_residual = 0;   ///< membership of f in K_theta
  double output_residual = 0;  ///< membership of the output in K_theta
  double membership_tol = 0;
  /// Negative-coefficient energy of conj(z) u phi, u = |f/g|^2, phi the Frostman shift.
  double identity_energy = 0;
  double refinement_change = 0;
  std::size_t grid_size = 0;
  bool aliased = false;

  bool bound_ok() const { return output_norm <= bound * (1 + 1e-8); }
  bool input_in_model() const { return has_theta && input_residual < membership_tol; }
  bool membership_ok() const { return !input_in_model() || output_residual < membership_tol; }
  bool identity_ok() const { return !input_in_model() || identity_energy < 1e-9; }
  bool refinement_ok() const { return refinement_change < 1e-6; }
  bool pass() const { return bound_ok() && membership_ok() && identity_ok() && refinement_ok() && !aliased; }
};

/// Norm bound, membership of the output and the key identity, for 2 < p < infinity.
/// Everything is recomputed on the doubled grid and the output norm must agree.
NormBoundReport verify_norm_bounds(const HolomorphicFn& f, double p, const std::optional<BlaschkeProduct>& theta,
                                 const CircleGrid& grid);

struct InteriorChainReport {
  double modulus_gap = 0;   ///< min |Sf| - Re Sf
  double poisson_error = 0; ///< max |Re Sf - P[|f|^2]|, quadrature Poisson integral
  double poisson_gap = 0;   ///< min P[|f|^2] - |f|^2
  double min_real_part = 0; ///< min Re Sf
  double scale = 1;

  bool pass(double tol = 1e-10) const {
    return modulus_gap >= -tol * scale && poisson_error <= tol * scale && poisson_gap >= -tol * scale &&
           min_real_part > 0;
  }
};

/// |Sf| >= Re Sf = P[|f|^2] >= |f|^2 at random interior points, for f != 0.
InteriorChainReport check_interior_chain(const AnalyticPoly& f, std::size_t points, std::uint64_t seed,
                                         const CircleGrid& grid);

}  // namespace qsq
