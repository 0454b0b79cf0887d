#include "qsq/real_parts.hpp"

#include <cmath>
#include <sstream>

#include "qsq/error.hpp"
#include "qsq/fft.hpp"
#include "qsq/model_space.hpp"

namespace qsq {

std::string RealPartWitness::describe() const {
  std::ostringstream os;
  os.precision(6);
  os << "case " << to_string(which) << ": energy " << energy;
  if (which == RealPartCase::b) os << ", integral " << integral;
  return os.str();
}

RealPartWitness check_real_part(const TrigCoeffs& u, const BlaschkeProduct& theta, double tol) {
  if (theta.degree() == 0) throw Error(ErrorCode::invalid_argument, "theta must be nonconstant");
  if (!u.is_real(1e-12)) throw Error(ErrorCode::invalid_argument, "u must be real-valued");
  const std::size_t m = u.band();
  const auto t = theta.taylor(m + 2);
  const auto conv = fft::convolve(u.coeffs(), t);

  RealPartWitness r;
  r.tol = tol;
  r.which = theta.vanishes_at_origin() ? RealPartCase::a : RealPartCase::b;
  // conv[i] is the coefficient of index i - M in u*theta.
  const std::size_t last = r.which == RealPartCase::a ? m + 1 : m;
  double e = 0;
  for (std::size_t i = 0; i < last; ++i) e += std::norm(conv[i]);
  const double norm = u.l2_norm();
  r.energy = norm > 0 ? std::sqrt(e) / norm : 0.0;
  if (r.which == RealPartCase::b) r.integral = conv[m] / theta.at_zero() - 0.5 * u[0];
  return r;
}

AnalyticPoly harmonic_completion(const TrigCoeffs& u, double v0) {
  std::vector<cplx> f(u.band() + 1);
  f[0] = cplx{u[0].real(), v0};
  for (std::size_t k = 1; k <= u.band(); ++k) f[k] = 2.0 * u[static_cast<long>(k)];
  return AnalyticPoly(std::move(f));
}

AnalyticPoly complete_to_model(const TrigCoeffs& u, const BlaschkeProduct& theta, double tol) {
  const RealPartWitness w = check_real_part(u, theta, tol);
  if (!w.holds()) throw Error(ErrorCode::precondition_failed, "u is not a real part of K_theta: " + w.describe());
  return harmonic_completion(u, w.offset());
}

TrigCoeffs real_part(std::span<const cplx> taylor) {
  const std::size_t m = taylor.empty() ? 0 : taylor.size() - 1;
  TrigCoeffs u(m);
  if (taylor.empty()) return u;
  u.at(0) = taylor[0].real();
  for (std::size_t k = 1; k <= m; ++k) {
    const long kk = static_cast<long>(k);
    u.at(kk) = 0.5 * taylor[k];
    u.at(-kk) = 0.5 * std::conj(taylor[k]);
  }
  return u;
}

namespace {

/// (I - P_theta) applied to grid samples, through the MT basis.
std::vector<cplx> defect(const ModelSpace& space, const BoundarySamples& f) {
  const auto c = space.coordinates(f);
  std::vector<cplx> d(f.values);
  for (std::size_t j = 0; j < d.size(); ++j) {
    const auto e = space.basis_values(f.grid.node(j));
    for (std::size_t k = 0; k < e.size(); ++k) d[j] -= c[k] * e[k];
  }
  return d;
}

double mean_norm(const std::vector<cplx>& v) {
  double s = 0;
  for (auto x : v) s += std::norm(x);
  return std::sqrt(s / static_cast<double>(v.size()));
}

void require_grid(const TrigCoeffs& u, const BlaschkeProduct& theta, const CircleGrid& grid) {
  if (grid.size() <= 2 * (u.band() + theta.degree()))
    throw Error(ErrorCode::grid_too_small, "grid too small for the real part band");
}

}  // namespace

OffsetResidual offset_residual(const TrigCoeffs& u, const BlaschkeProduct& theta, double v0, const CircleGrid& grid) {
  require_grid(u, theta, grid);
  const ModelSpace space(theta);
  const AnalyticPoly f = harmonic_completion(u, v0);
  const auto fs = sample(f, grid);
  const double abs = mean_norm(defect(space, fs));
  const double norm = lp_norm(fs, 2.0);
  return {v0, norm > 0 ? abs / norm : abs, abs};
}

OffsetResidual best_offset(const TrigCoeffs& u, const BlaschkeProduct& theta, const CircleGrid& grid) {
  require_grid(u, theta, grid);
  const ModelSpace space(theta);
  // The defect is affine in v0: A + v0 B with B = (I - P) i.
  const auto a = defect(space, sample(harmonic_completion(u, 0.0), grid));
  const auto b = defect(space, sample([](cplx) { return cplx{0.0, 1.0}; }, grid));
  double ab = 0, bb = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    ab += (a[j] * std::conj(b[j])).real();
    bb += std::norm(b[j]);
  }
  // When the constants lie in K_theta every offset is equally good; keep 0.
  const double v0 = bb > 1e-20 * static_cast<double>(a.size()) ? -ab / bb : 0.0;
  return offset_residual(u, theta, v0, grid);
}

UniquenessReport uniqueness_probe(const TrigCoeffs& u, const BlaschkeProduct& theta, std::span<const double> offsets,
                                  const CircleGrid& grid, double tol) {
  UniquenessReport r;
  r.which = theta.vanishes_at_origin() ? RealPartCase::a : RealPartCase::b;
  r.tol = tol;
  for (double v0 : offsets) r.rows.push_back(offset_residual(u, theta, v0, grid));
  return r;
}

}  // namespace qsq
