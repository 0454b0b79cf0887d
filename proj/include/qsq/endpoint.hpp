#pragma once

#include <vector>

#include "qsq/blaschke.hpp"
#include "qsq/fourier.hpp"

namespace qsq {

/// The p = infinity map f -> ||f||_inf f.
BoundarySamples sup_norm_square(const BoundarySamples& f);

/// theta_a(z) = z (z - a)/(1 - conj(a) z)
BlaschkeProduct theta_a(cplx a);
/// f_a(z) = 1/(1 - conj(a) z)
RationalFn f_a(cplx a);

/// Smallest admissible grid with N (1 - |a|) >= 64, and at least `floor`.
CircleGrid endpoint_grid(cplx a, std::size_t floor = 4096);

struct FaNorms {
  double l2_squared;       ///< 1/(1 - |a|^2)
  double l4_fourth;        ///< (1 + |a|^2)/(1 - |a|^2)^3
  double l2_quadrature;
  double l4_quadrature;
  std::size_t grid_size;

  double l2_error() const { return std::abs(l2_quadrature - l2_squared) / l2_squared; }
  double l4_error() const { return std::abs(l4_quadrature - l4_fourth) / l4_fourth; }
};

/// Closed forms with a grid cross-check refined until two successive
/// estimates agree to 1e-12.
FaNorms fa_norms(cplx a);

struct HardyBound {
  double value;  ///< (1/pi) sum |h_n|/(n+1)
  /// Geometric estimate of the omitted terms; infinity if the coefficients
  /// are not visibly decaying.
  double tail;
};

HardyBound hardy_lower_bound(std::span<const cplx> taylor);

/// L^1 norm of a function on T, doubling from `grid` until two estimates
/// agree to `tol` or `max_size` is reached.
RefinedNorm l1_norm_refined(const HolomorphicFn& h, const CircleGrid& grid, double tol = 1e-11,
                            std::size_t max_size = std::size_t{1} << 22);

struct EndpointSample {
  cplx a;
  double l1_norm;           ///< ||h_a||_1
  double fa_l2_squared;     ///< ||f_a||_2^2
  double ratio;             ///< r(a)
  cplx lambda, mu;          ///< least-squares fit h_a = lambda + mu f_a
  double span_residual;     ///< ||h_a - lambda - mu f_a||_2 / ||h_a||_2
  double membership;        ///< residual of h_a in K_{theta_a}
  double pointwise_margin;  ///< min (|h_a| - |f_a|^2) / max |f_a|^2 on the grid
  HardyBound hardy;
  double l2_quadrature;     ///< ||h_a||_2^2 on the grid
  double l2_parseval;       ///< |lambda + mu|^2 + |mu|^2 |a|^2/(1-|a|^2)
  std::size_t grid_size;
  bool refined_ok;

  double sum_coeff() const { return std::abs(lambda + mu); }
  double log_term() const { return std::abs(mu) * std::log(1 / (1 - std::abs(a))); }
  double quadratic_term() const {
    return std::norm(lambda + mu) + std::norm(mu) / (1 - std::abs(a));
  }
  double parseval_error() const { return std::abs(l2_quadrature - l2_parseval) / l2_parseval; }
};

/// Builds h_a = S f_a on the grid and extracts every quantity of the blow-up
/// argument. Requires 1/2 <= |a| < 1.
EndpointSample endpoint_sample(cplx a);

struct EndpointSweep {
  std::vector<EndpointSample> rows;
  /// r strictly increasing once rows are ordered by |a|.
  bool increasing;
};

EndpointSweep endpoint_blowup_sweep(std::span<const cplx> as);

struct EndpointImplication {
  double parseval_closed;      ///< |lambda + mu|^2 + |mu|^2 |a|^2/(1-|a|^2)
  double parseval_quadrature;  ///< ||lambda + mu f_a||_2^2 on a grid
  double lhs;                  ///< |lambda + mu|^2 + |mu|^2/(1-|a|)
  double rhs;                  ///< c/(1-|a|)^3 with c = (1+|a|^2)/(1+|a|)^3
  bool premise;                ///< ||h||_2^2 >= ||f_a||_4^4
  double parseval_error() const { return std::abs(parseval_quadrature - parseval_closed) / parseval_closed; }
  bool implication_ok() const { return !premise || lhs >= rhs * (1 - 1e-12); }
};

EndpointImplication endpoint_implication(cplx a, cplx lambda, cplx mu);

}  // namespace qsq
