#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "qsq/blaschke.hpp"
#include "qsq/fourier.hpp"

namespace qsq {

/// K_theta for a finite Blaschke product. At finite dimension the set is the
/// same for every 1 <= p <= infinity; p only enters through norms.
///
/// Every element has the form q(z)/prod(1 - conj(a_k) z) with deg q < dim.
class ModelSpace {
 public:
  explicit ModelSpace(BlaschkeProduct theta);

  const BlaschkeProduct& theta() const noexcept { return theta_; }
  std::size_t dimension() const noexcept { return theta_.degree(); }
  const std::vector<RationalFn>& basis() const noexcept { return basis_; }
  bool contains_constants() const { return theta_.vanishes_at_origin(); }

  /// e_1(z), ..., e_n(z) in O(n).
  std::vector<cplx> basis_values(cplx z) const;

  /// Rows are points, columns are basis functions.
  Eigen::MatrixXcd basis_matrix(std::span<const cplx> points) const;

  /// sum_k coords[k] e_k over the common denominator prod(1 - conj(a_k) z).
  RationalFn element(std::span<const cplx> coords) const;

  /// MT coordinates <f, e_k> computed by grid quadrature.
  std::vector<cplx> coordinates(const BoundarySamples& f) const;

  /// L^2 Gram matrix of the basis on a grid (identity up to quadrature error).
  Eigen::MatrixXcd gram(const CircleGrid& grid) const;

 private:
  BlaschkeProduct theta_;
  std::vector<RationalFn> basis_;
  AnalyticPoly common_den_;
  std::vector<AnalyticPoly> common_nums_;
};

/// P_theta h = P_+ h - theta P_+(conj(theta) h), evaluated on `grid`.
/// Requires N > 2(M + deg theta); the result carries band N/2 - 1.
TrigCoeffs p_theta_project(const TrigCoeffs& h, const BlaschkeProduct& theta, const CircleGrid& grid);

struct MembershipResidual {
  /// ||f - P_theta f||_2 / max(||f||_2, eps)
  double projection;
  /// L^2 energy of the negative Fourier coefficients of conj(z f) theta,
  /// square-rooted and scaled like `projection`.
  double conjugate_tail;
  /// ||f||_2 on the grid, to recover absolute defects.
  double norm;

  double worst() const { return projection > conjugate_tail ? projection : conjugate_tail; }
};

MembershipResidual membership_residual(const BoundarySamples& f, const BlaschkeProduct& theta);
MembershipResidual membership_residual(const HolomorphicFn& f, const BlaschkeProduct& theta,
                                       const CircleGrid& grid);

/// Default acceptance threshold for membership: 1e-8 scaled by sqrt(dim).
double membership_tolerance(std::size_t dimension);

/// (1 - conj(theta(w)) theta(z)) / (1 - conj(w) z)
cplx reproducing_kernel(const BlaschkeProduct& theta, cplx w, cplx z);

}  // namespace qsq
