#include "qsq/model_space.hpp"

#include <cmath>
#include <sstream>

#include "qsq/error.hpp"
#include "qsq/fft.hpp"

namespace qsq {
namespace {

AnalyticPoly linear(cplx c0, cplx c1) { return AnalyticPoly(std::vector<cplx>{c0, c1}); }

}  // namespace

ModelSpace::ModelSpace(BlaschkeProduct theta) : theta_(std::move(theta)), basis_(mt_basis(theta_)) {
  const auto& zeros = theta_.zeros();
  const std::size_t n = zeros.size();
  common_den_ = theta_.denominator();
  // Numerator of e_k over the full denominator:
  //   sqrt(1-|a_k|^2) prod_{j<k}(z - a_j) prod_{j>k}(1 - conj(a_j) z)
  std::vector<AnalyticPoly> suffix(n + 1, AnalyticPoly{1.0});
  for (std::size_t k = n; k-- > 0;) suffix[k] = suffix[k + 1] * linear(1.0, -std::conj(zeros[k]));
  AnalyticPoly prefix{1.0};
  for (std::size_t k = 0; k < n; ++k) {
    common_nums_.push_back(std::sqrt(1.0 - std::norm(zeros[k])) * (prefix * suffix[k + 1]));
    prefix = prefix * linear(-zeros[k], 1.0);
  }
}

std::vector<cplx> ModelSpace::basis_values(cplx z) const {
  std::vector<cplx> v(dimension());
  cplx partial = 1.0;
  const auto& zeros = theta_.zeros();
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    const cplx a = zeros[k];
    const cplx den = 1.0 - std::conj(a) * z;
    v[k] = std::sqrt(1.0 - std::norm(a)) / den * partial;
    partial *= (z - a) / den;
  }
  return v;
}

Eigen::MatrixXcd ModelSpace::basis_matrix(std::span<const cplx> points) const {
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(points.size()), static_cast<Eigen::Index>(dimension()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto row = basis_values(points[i]);
    for (std::size_t k = 0; k < row.size(); ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = row[k];
  }
  return m;
}

RationalFn ModelSpace::element(std::span<const cplx> coords) const {
  if (coords.size() != dimension())
    throw Error(ErrorCode::invalid_argument, "coordinate count does not match model space dimension");
  AnalyticPoly num;
  for (std::size_t k = 0; k < coords.size(); ++k) num = num + coords[k] * common_nums_[k];
  return RationalFn(std::move(num), common_den_);
}

std::vector<cplx> ModelSpace::coordinates(const BoundarySamples& f) const {
  std::vector<cplx> c(dimension());
  const double w = f.grid.weight();
  for (std::size_t j = 0; j < f.values.size(); ++j) {
    const auto e = basis_values(f.grid.node(j));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += f.values[j] * std::conj(e[k]) * w;
  }
  return c;
}

Eigen::MatrixXcd ModelSpace::gram(const CircleGrid& grid) const {
  const auto nodes = grid.nodes();
  const Eigen::MatrixXcd b = basis_matrix(nodes);
  return b.adjoint() * b * grid.weight();
}

TrigCoeffs p_theta_project(const TrigCoeffs& h, const BlaschkeProduct& theta, const CircleGrid& grid) {
  const std::size_t n = grid.size();
  if (n <= 2 * (h.band() + theta.degree())) {
    std::ostringstream os;
    os << "grid of " << n << " nodes too small for band " << h.band() << " and degree " << theta.degree();
    throw Error(ErrorCode::grid_too_small, os.str());
  }
  const auto hs = sample(h, grid);
  const auto ts = sample(theta, grid);

  std::vector<cplx> buf(n);
  for (std::size_t j = 0; j < n; ++j) buf[j] = std::conj(ts.values[j]) * hs.values[j];
  fft::forward(buf);
  // P_+ : keep indices 0..N/2-1.
  for (std::size_t k = n / 2; k < n; ++k) buf[k] = 0;
  fft::inverse(buf);
  const double w = grid.weight();
  for (std::size_t j = 0; j < n; ++j) buf[j] *= ts.values[j] * w;
  fft::forward(buf);

  const std::size_t band = n / 2 - 1;
  TrigCoeffs out(band);
  for (std::size_t k = 0; k <= band; ++k) {
    const long kk = static_cast<long>(k);
    out.at(kk) = h[kk] - buf[k] * w;
  }
  return out;
}

MembershipResidual membership_residual(const BoundarySamples& f, const BlaschkeProduct& theta) {
  const ModelSpace space(theta);
  const std::size_t n = f.grid.size();
  const double fnorm = lp_norm(f, 2.0);
  const double scale = std::max(fnorm, 1e-300);

  // Orthogonal projection through the MT basis.
  const auto coords = space.coordinates(f);
  double defect = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const auto e = space.basis_values(f.grid.node(j));
    cplx p{};
    for (std::size_t k = 0; k < e.size(); ++k) p += coords[k] * e[k];
    defect += std::norm(f.values[j] - p);
  }
  const double projection = std::sqrt(defect * f.grid.weight()) / scale;

  // conj(z f) theta should be analytic.
  std::vector<cplx> buf(n);
  for (std::size_t j = 0; j < n; ++j) {
    const cplx z = f.grid.node(j);
    buf[j] = std::conj(z * f.values[j]) * theta(z);
  }
  fft::forward(buf);
  double tail = 0;
  const double w = f.grid.weight();
  for (std::size_t k = n / 2 + 1; k < n; ++k) tail += std::norm(buf[k] * w);
  return {projection, std::sqrt(tail) / scale, fnorm};
}

MembershipResidual membership_residual(const HolomorphicFn& f, const BlaschkeProduct& theta,
                                       const CircleGrid& grid) {
  return membership_residual(sample(f, grid), theta);
}

double membership_tolerance(std::size_t dimension) {
  return 1e-8 * std::sqrt(static_cast<double>(std::max<std::size_t>(dimension, 1)));
}

cplx reproducing_kernel(const BlaschkeProduct& theta, cplx w, cplx z) {
  if (!(std::abs(w) < 1.0) || !(std::abs(z) < 1.0))
    throw Error(ErrorCode::out_of_domain, "reproducing kernel needs points inside the disk");
  return (1.0 - std::conj(theta(w)) * theta(z)) / (1.0 - std::conj(w) * z);
}

}  // namespace qsq
