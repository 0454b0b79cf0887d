#include "qsq/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "qsq/error.hpp"

namespace qsq {
namespace {

// Parlett-Reinsch diagonal balancing in powers of two.
void balance(Eigen::MatrixXcd& a) {
  const Eigen::Index n = a.rows();
  constexpr double radix = 2.0;
  bool converged = false;
  while (!converged) {
    converged = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0, r = 0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0 || r == 0) continue;
      double g = r / radix, f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        converged = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

cplx newton_polish(const AnalyticPoly& p, const AnalyticPoly& dp, cplx r) {
  double best = root_residual(p, r);
  for (int it = 0; it < 50 && best > 1e-15; ++it) {
    const cplx d = dp(r);
    if (d == cplx{}) break;
    const cplx next = r - p(r) / d;
    const double res = root_residual(p, next);
    if (!(res < best)) break;
    r = next;
    best = res;
  }
  return r;
}

}  // namespace

double root_residual(const AnalyticPoly& p, cplx r) {
  double scale = 0, rk = 1;
  const double ar = std::abs(r);
  for (auto c : p.coeffs()) {
    scale += std::abs(c) * rk;
    rk *= ar;
  }
  return scale == 0 ? 0 : std::abs(p(r)) / scale;
}

std::vector<cplx> polynomial_roots(const AnalyticPoly& p) {
  if (p.is_null()) throw Error(ErrorCode::invalid_argument, "roots of the null polynomial");
  auto c = p.coeffs();
  std::size_t low = 0;
  while (c[low] == cplx{}) ++low;
  std::vector<cplx> roots(low, cplx{});
  const std::size_t d = c.size() - 1 - low;
  if (d == 0) return roots;

  const cplx lead = c.back();
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 1; i < d; ++i) comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < d; ++i)
    comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d - 1)) = -c[low + i] / lead;
  balance(comp);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::no_convergence, "companion eigensolve failed");

  const AnalyticPoly dp = p.derivative();
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    cplx r = solver.eigenvalues()(i);
    if (root_residual(p, r) >= 1e-9) r = newton_polish(p, dp, r);
    const double res = root_residual(p, r);
    if (res >= 1e-9) {
      std::ostringstream os;
      os << "root finder did not converge: residual " << res << " at " << r;
      throw Error(ErrorCode::no_convergence, os.str());
    }
    roots.push_back(r);
  }
  return roots;
}

std::vector<cplx> series_divide(std::span<const cplx> num, std::span<const cplx> den, std::size_t count) {
  if (den.empty() || den[0] == cplx{}) throw Error(ErrorCode::invalid_argument, "series division by den(0) = 0");
  std::vector<cplx> q(count);
  for (std::size_t n = 0; n < count; ++n) {
    cplx acc = n < num.size() ? num[n] : cplx{};
    const std::size_t top = std::min(n, den.size() - 1);
    for (std::size_t j = 1; j <= top; ++j) acc -= den[j] * q[n - j];
    q[n] = acc / den[0];
  }
  return q;
}

}  // namespace qsq
