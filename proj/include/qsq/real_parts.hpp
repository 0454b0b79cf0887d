#pragma once

#include <span>
#include <string>
#include <vector>

#include "qsq/blaschke.hpp"
#include "qsq/fourier.hpp"

namespace qsq {

/// a: theta(0) = 0.  b: theta(0) != 0.
enum class RealPartCase { a, b };

inline const char* to_string(RealPartCase c) { return c == RealPartCase::a ? "a" : "b"; }

/// Both conditions characterizing Re K_theta, evaluated by exact coefficient
/// pairing of u against the Taylor coefficients of theta.
struct RealPartWitness {
  RealPartCase which = RealPartCase::a;
  /// sqrt of the negative-coefficient energy of conj(z) u theta (case a) or
  /// u theta (case b), relative to ||u||_2.
  double energy = 0;
  /// int u (theta/theta(0) - 1/2) dm; case b only.
  cplx integral{};
  double tol = 1e-9;

  bool energy_ok() const { return energy < tol; }
  bool integral_ok() const {
    return which == RealPartCase::a || std::abs(integral.real()) < tol * (1 + std::abs(integral));
  }
  bool holds() const { return energy_ok() && integral_ok(); }
  /// v(0) of the completion: 0 in case a, 2 Im(integral) in case b.
  double offset() const { return which == RealPartCase::a ? 0.0 : 2 * integral.imag(); }
  std::string describe() const;
};

RealPartWitness check_real_part(const TrigCoeffs& u, const BlaschkeProduct& theta, double tol = 1e-9);

/// f = u + i(Hu + v0), returned as Taylor coefficients 0..M. Throws
/// precondition_failed when check_real_part fails.
AnalyticPoly complete_to_model(const TrigCoeffs& u, const BlaschkeProduct& theta, double tol = 1e-9);

/// u + i(Hu + v0) for a given offset.
AnalyticPoly harmonic_completion(const TrigCoeffs& u, double v0);

/// Re f as a real band from Taylor coefficients f_0..f_M.
TrigCoeffs real_part(std::span<const cplx> taylor);

struct OffsetResidual {
  double offset;
  double relative;  ///< ||F - P_theta F||_2 / ||F||_2
  double absolute;  ///< ||F - P_theta F||_2
};

/// Membership residual of u + i(Hu + v0) in K_theta on a grid.
OffsetResidual offset_residual(const TrigCoeffs& u, const BlaschkeProduct& theta, double v0, const CircleGrid& grid);

/// The offset minimizing the membership defect, found by scanning and then
/// minimizing the one-parameter quadratic. Independent of check_real_part.
OffsetResidual best_offset(const TrigCoeffs& u, const BlaschkeProduct& theta, const CircleGrid& grid);

struct UniquenessReport {
  RealPartCase which = RealPartCase::a;
  std::vector<OffsetResidual> rows;
  double tol = 1e-8;

  bool member(std::size_t k) const { return rows[k].relative < tol; }
};

UniquenessReport uniqueness_probe(const TrigCoeffs& u, const BlaschkeProduct& theta, std::span<const double> offsets,
                                  const CircleGrid& grid, double tol = 1e-8);

}  // namespace qsq
