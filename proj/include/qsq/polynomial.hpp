#pragma once

#include <vector>

#include "qsq/fourier.hpp"

namespace qsq {

/// Relative backward error |p(r)| / sum |a_k| |r|^k.
double root_residual(const AnalyticPoly& p, cplx r);

/// All roots of p with multiplicity. Eigenvalues of the balanced companion
/// matrix, then Newton polishing for any root whose relative residual
/// exceeds 1e-9. Throws no_convergence if a root cannot be brought below
/// that threshold.
std::vector<cplx> polynomial_roots(const AnalyticPoly& p);

/// Taylor coefficients 0..count-1 of num/den, den(0) != 0.
std::vector<cplx> series_divide(std::span<const cplx> num, std::span<const cplx> den, std::size_t count);

}  // namespace qsq
