#include "qsq/quasi_square.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "qsq/error.hpp"
#include "qsq/fft.hpp"
#include "qsq/model_space.hpp"
#include "qsq/random.hpp"

namespace qsq {

AnalyticPoly quasi_square(const AnalyticPoly& f) {
  const auto c = f.coeffs();
  const std::size_t n = c.size();
  std::vector<cplx> s(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx u{};
    for (std::size_t j = 0; j + k < n; ++j) u += c[j + k] * std::conj(c[j]);
    s[k] = k == 0 ? cplx{u.real(), 0.0} : 2.0 * u;
  }
  return AnalyticPoly(std::move(s));
}

QuasiSquare quasi_square(const HolomorphicFn& f, const CircleGrid& grid) {
  const std::size_t n = grid.size();
  std::vector<cplx> buf(n);
  for (std::size_t j = 0; j < n; ++j) buf[j] = std::norm(f(grid.node(j)));
  fft::forward(buf);
  const double w = grid.weight();
  for (auto& v : buf) v *= w;

  const double u0 = buf[0].real();
  double tail = 0;
  for (std::size_t k = 3 * n / 8; k < n / 2; ++k) tail = std::max(tail, std::abs(buf[k]));
  tail = u0 > 0 ? tail / u0 : 0.0;

  std::vector<cplx> s(n, cplx{});
  s[0] = u0;
  for (std::size_t k = 1; k < n / 2; ++k) s[k] = 2.0 * buf[k];
  // Coefficients far below rounding level only slow down evaluation.
  std::size_t keep = n / 2;
  while (keep > 1 && std::abs(s[keep - 1]) <= 1e-18 * u0) --keep;
  AnalyticPoly series(std::vector<cplx>(s.begin(), s.begin() + static_cast<long>(keep)));
  fft::inverse(s);

  QuasiSquare out{std::move(series), RationalFn(AnalyticPoly{1.0}), BoundarySamples(grid, std::move(s)), tail,
                  tail > 1e-9};
  return out;
}

QuasiSquare quasi_square(const RationalFn& f, const CircleGrid& grid) {
  return quasi_square(HolomorphicFn([&f](cplx z) { return f(z); }), grid);
}

QuasiSquare quasi_square_shifted(const HolomorphicFn& f, const BlaschkeProduct& theta, const CircleGrid& grid) {
  const cplx w = theta.at_zero();
  if (w == cplx{}) return quasi_square(f, grid);
  const RationalFn g = g_theta(theta);
  QuasiSquare out = quasi_square(HolomorphicFn([&](cplx z) { return f(z) / g(z); }), grid);
  out.factor = (1.0 + std::abs(w)) * g;
  for (std::size_t j = 0; j < grid.size(); ++j) out.boundary.values[j] *= out.factor(grid.node(j));
  return out;
}

SquareMap plain_square_map(const CircleGrid& grid) {
  return [grid](const HolomorphicFn& f) -> HolomorphicFn {
    auto s = std::make_shared<QuasiSquare>(quasi_square(f, grid));
    return [s](cplx z) { return (*s)(z); };
  };
}

SquareMap shifted_square_map(const BlaschkeProduct& theta, const CircleGrid& grid) {
  return [theta, grid](const HolomorphicFn& f) -> HolomorphicFn {
    auto s = std::make_shared<QuasiSquare>(quasi_square_shifted(f, theta, grid));
    return [s](cplx z) { return (*s)(z); };
  };
}

std::string SuperquadraticReport::describe() const {
  std::ostringstream os;
  os.precision(6);
  os << "circle margin " << circle_margin << " at " << circle_worst << ", disk margin " << disk_margin << " at "
     << disk_worst << ", homogeneity error " << homogeneity_error << " at " << homogeneity_worst;
  return os.str();
}

SuperquadraticReport verify_superquadratic(const SquareMap& op, const HolomorphicFn& f, cplx lambda,
                                           const CircleGrid& grid, std::uint64_t seed, std::size_t interior_points,
                                           double slack) {
  const HolomorphicFn sf = op(f);
  const HolomorphicFn slf = op([&f, lambda](cplx z) { return lambda * f(z); });

  std::vector<cplx> points = grid.nodes();
  const std::size_t on_circle = points.size();
  Sampler rng(seed);
  for (std::size_t k = 0; k < interior_points; ++k) points.push_back(rng.disk_point(0.95));

  std::vector<double> fsq(points.size()), s(points.size()), sl(points.size());
  double fscale = 0, sscale = 0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    fsq[k] = std::norm(f(points[k]));
    s[k] = std::abs(sf(points[k]));
    sl[k] = std::abs(slf(points[k]));
    if (k < on_circle) {
      fscale = std::max(fscale, fsq[k]);
      sscale = std::max(sscale, s[k]);
    }
  }
  if (fscale == 0) fscale = 1;
  if (sscale == 0) sscale = 1;

  SuperquadraticReport r;
  r.slack = slack;
  r.circle_margin = r.disk_margin = infinity;
  const double l2 = std::norm(lambda);
  for (std::size_t k = 0; k < points.size(); ++k) {
    const double margin = (s[k] - fsq[k]) / fscale;
    if (k < on_circle && margin < r.circle_margin) {
      r.circle_margin = margin;
      r.circle_worst = points[k];
    }
    if (k >= on_circle && margin < r.disk_margin) {
      r.disk_margin = margin;
      r.disk_worst = points[k];
    }
    const double h = l2 > 0 ? std::abs(sl[k] - l2 * s[k]) / (l2 * sscale) : sl[k] / sscale;
    if (h > r.homogeneity_error) {
      r.homogeneity_error = h;
      r.homogeneity_worst = points[k];
    }
  }
  if (interior_points == 0) r.disk_margin = 0;
  return r;
}

namespace {

double negative_energy(std::vector<cplx> buf, double weight) {
  fft::forward(buf);
  const std::size_t n = buf.size();
  double e = 0;
  for (std::size_t k = n / 2 + 1; k < n; ++k) e += std::norm(buf[k] * weight);
  return e;
}

struct NormBoundPass {
  double input_norm, output_norm, margin, input_residual, output_residual, identity_energy;
  bool aliased;
};

NormBoundPass norm_bound_pass(const HolomorphicFn& f, double p, const std::optional<BlaschkeProduct>& theta,
                             const CircleGrid& grid) {
  const auto fs = sample(f, grid);
  const QuasiSquare s = theta ? quasi_square_shifted(f, *theta, grid) : quasi_square(f, grid);

  NormBoundPass r{};
  r.input_norm = lp_norm(fs, p);
  r.output_norm = lp_norm(s.boundary, p / 2);
  r.aliased = s.aliased;

  double scale = 0;
  for (auto v : fs.values) scale = std::max(scale, std::norm(v));
  if (scale == 0) scale = 1;
  r.margin = infinity;
  for (std::size_t j = 0; j < grid.size(); ++j)
    r.margin = std::min(r.margin, (std::abs(s.boundary.values[j]) - std::norm(fs.values[j])) / scale);

  if (theta) {
    r.input_residual = membership_residual(fs, *theta).worst();
    r.output_residual = membership_residual(s.boundary, *theta).worst();

    const cplx w = theta->at_zero();
    const BlaschkeProduct phi = frostman_shift(*theta, w);
    const RationalFn g = g_theta(*theta);
    std::vector<cplx> buf(grid.size());
    double u2 = 0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const cplx z = grid.node(j);
      const double u = std::norm(fs.values[j] / g(z));
      u2 += u * u;
      buf[j] = std::conj(z) * u * phi(z);
    }
    u2 = std::sqrt(u2 * grid.weight());
    r.identity_energy = u2 > 0 ? std::sqrt(negative_energy(std::move(buf), grid.weight())) / u2 : 0.0;
  }
  return r;
}

}  // namespace

NormBoundReport verify_norm_bounds(const HolomorphicFn& f, double p, const std::optional<BlaschkeProduct>& theta,
                                 const CircleGrid& grid) {
  if (!(p > 2) || !std::isfinite(p))
    throw Error(ErrorCode::out_of_domain, "quasi-square bounds need 2 < p < infinity; use endpoint-sweep for p = 2");
  const NormBoundPass a = norm_bound_pass(f, p, theta, grid);
  const NormBoundPass b = norm_bound_pass(f, p, theta, grid.refined());

  NormBoundReport r;
  r.p = p;
  r.has_theta = theta.has_value();
  r.w = theta ? theta->at_zero() : cplx{};
  const double aw = std::abs(r.w);
  const double shift = (1 + aw) / (1 - aw);
  r.input_norm = a.input_norm;
  r.output_norm = a.output_norm;
  r.bound = b_constant(p) * shift * shift * a.input_norm * a.input_norm;
  r.pointwise_margin = a.margin;
  r.input_residual = a.input_residual;
  r.output_residual = a.output_residual;
  r.membership_tol = 1e-8;
  r.identity_energy = a.identity_energy;
  r.refinement_change = a.output_norm > 0 ? std::abs(b.output_norm - a.output_norm) / a.output_norm
                                          : std::abs(b.output_norm);
  r.grid_size = grid.size();
  r.aliased = a.aliased;
  return r;
}

InteriorChainReport check_interior_chain(const AnalyticPoly& f, std::size_t points, std::uint64_t seed,
                                         const CircleGrid& grid) {
  if (f.is_null()) throw Error(ErrorCode::invalid_argument, "interior chain needs a nonzero function");
  const AnalyticPoly s = quasi_square(f);
  const auto fs = sample(f, grid);
  std::vector<double> u(grid.size());
  InteriorChainReport r;
  r.scale = 0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    u[j] = std::norm(fs.values[j]);
    r.scale = std::max(r.scale, u[j]);
  }
  r.modulus_gap = r.poisson_gap = r.min_real_part = infinity;
  r.poisson_error = 0;
  Sampler rng(seed);
  for (std::size_t k = 0; k < points; ++k) {
    const cplx z = rng.disk_point(0.95);
    const cplx sz = s(z);
    double poisson = 0;
    const double num = 1 - std::norm(z);
    for (std::size_t j = 0; j < u.size(); ++j) poisson += u[j] * num / std::norm(grid.node(j) - z);
    poisson *= grid.weight();
    r.modulus_gap = std::min(r.modulus_gap, std::abs(sz) - sz.real());
    r.poisson_error = std::max(r.poisson_error, std::abs(sz.real() - poisson));
    r.poisson_gap = std::min(r.poisson_gap, poisson - std::norm(f(z)));
    r.min_real_part = std::min(r.min_real_part, sz.real());
  }
  return r;
}

}  // namespace qsq
