#pragma once

#include <vector>

#include "qsq/fourier.hpp"

namespace qsq {

/// theta(z) = c * prod_k (z - a_k) / (1 - conj(a_k) z), |c| = 1, |a_k| < 1.
/// Zeros at the origin are ordinary entries of the zero list.
class BlaschkeProduct {
 public:
  BlaschkeProduct(cplx constant, std::vector<cplx> zeros);

  /// z^n
  static BlaschkeProduct monomial(std::size_t n);
  /// (z - a)/(1 - conj(a) z)
  static BlaschkeProduct single_factor(cplx a);

  cplx operator()(cplx z) const;

  cplx constant() const noexcept { return constant_; }
  const std::vector<cplx>& zeros() const noexcept { return zeros_; }
  std::size_t degree() const noexcept { return zeros_.size(); }

  cplx at_zero() const;
  /// theta(0) == 0, i.e. theta belongs to I_0.
  bool vanishes_at_origin() const;

  /// c * prod (z - a_k)
  AnalyticPoly numerator() const;
  /// prod (1 - conj(a_k) z)
  AnalyticPoly denominator() const;

  BlaschkeProduct squared() const;

  /// Taylor coefficients 0..count-1.
  std::vector<cplx> taylor(std::size_t count) const;

 private:
  cplx constant_;
  std::vector<cplx> zeros_;
};

/// numerator / denominator with the denominator zero-free on the closed disk.
class RationalFn {
 public:
  RationalFn(AnalyticPoly numerator, AnalyticPoly denominator);
  /// A polynomial, viewed as a rational function with denominator 1.
  explicit RationalFn(AnalyticPoly poly);

  cplx operator()(cplx z) const;
  const AnalyticPoly& numerator() const noexcept { return num_; }
  const AnalyticPoly& denominator() const noexcept { return den_; }

  RationalFn derivative() const;
  std::vector<cplx> taylor(std::size_t count) const;

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(cplx s, const RationalFn& a);

 private:
  struct Unchecked {};
  RationalFn(AnalyticPoly numerator, AnalyticPoly denominator, Unchecked);

  AnalyticPoly num_;
  AnalyticPoly den_;
};

/// phi = (theta - w)/(1 - conj(w) theta) as a Blaschke product of the same
/// degree. Zeros come from the roots of c*prod(z - a_k) - w*prod(1 - conj(a_k) z).
/// Throws out_of_domain for |w| >= 1 or when a shifted zero falls within
/// 1e-8 of the circle.
BlaschkeProduct frostman_shift(const BlaschkeProduct& theta, cplx w);

/// g_theta = 1 - conj(theta(0)) * theta.
RationalFn g_theta(const BlaschkeProduct& theta);

/// Malmquist-Takenaka basis of K^2_theta in the order the zeros are stored:
///   e_k(z) = sqrt(1-|a_k|^2)/(1 - conj(a_k) z) * prod_{j<k} (z - a_j)/(1 - conj(a_j) z).
std::vector<RationalFn> mt_basis(const BlaschkeProduct& theta);

}  // namespace qsq
