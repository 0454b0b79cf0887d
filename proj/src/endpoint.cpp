#include "qsq/endpoint.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qsq/error.hpp"
#include "qsq/model_space.hpp"
#include "qsq/quasi_square.hpp"

namespace qsq {

BoundarySamples sup_norm_square(const BoundarySamples& f) {
  const double m = lp_norm(f, infinity);
  std::vector<cplx> v(f.values);
  for (auto& x : v) x *= m;
  return BoundarySamples(f.grid, std::move(v));
}

BlaschkeProduct theta_a(cplx a) { return BlaschkeProduct(1.0, {cplx{}, a}); }

RationalFn f_a(cplx a) { return RationalFn(AnalyticPoly{1.0}, AnalyticPoly{1.0, -std::conj(a)}); }

CircleGrid endpoint_grid(cplx a, std::size_t floor) {
  const double r = std::abs(a);
  if (!(r < 1)) throw Error(ErrorCode::out_of_domain, "endpoint quantities need |a| < 1");
  const double need = std::ceil(64.0 / (1.0 - r));
  return CircleGrid::at_least(std::max<std::size_t>(floor, static_cast<std::size_t>(need)));
}

FaNorms fa_norms(cplx a) {
  const double r2 = std::norm(a);
  if (!(r2 < 1)) throw Error(ErrorCode::out_of_domain, "fa_norms needs |a| < 1");
  FaNorms out{};
  out.l2_squared = 1 / (1 - r2);
  out.l4_fourth = (1 + r2) / std::pow(1 - r2, 3);

  const RationalFn f = f_a(a);
  auto moments = [&](const CircleGrid& g) {
    double s2 = 0, s4 = 0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double m = std::norm(f(g.node(j)));
      s2 += m;
      s4 += m * m;
    }
    return std::pair{s2 * g.weight(), s4 * g.weight()};
  };
  CircleGrid grid = endpoint_grid(a, 256);
  auto prev = moments(grid);
  while (true) {
    const CircleGrid next = grid.refined();
    const auto cur = moments(next);
    const bool done = std::abs(cur.first - prev.first) <= 1e-12 * cur.first &&
                      std::abs(cur.second - prev.second) <= 1e-12 * cur.second;
    grid = next;
    prev = cur;
    if (done || grid.size() >= (std::size_t{1} << 22)) break;
  }
  out.l2_quadrature = prev.first;
  out.l4_quadrature = prev.second;
  out.grid_size = grid.size();
  return out;
}

HardyBound hardy_lower_bound(std::span<const cplx> taylor) {
  HardyBound b{0, 0};
  for (std::size_t n = 0; n < taylor.size(); ++n) b.value += std::abs(taylor[n]) / static_cast<double>(n + 1);
  b.value /= std::numbers::pi;
  // Rate from a window of significant coefficients; the rounding floor past
  // them says nothing about decay.
  double peak = 0;
  for (auto v : taylor) peak = std::max(peak, std::abs(v));
  std::size_t m = taylor.size();
  while (m > 0 && std::abs(taylor[m - 1]) <= 1e-12 * peak) --m;
  if (m == 0) return b;
  if (m < taylor.size()) {
    const std::size_t window = std::min<std::size_t>(10, m - 1);
    const double last = std::abs(taylor[m - 1]);
    const double rho = window ? std::pow(last / std::abs(taylor[m - 1 - window]), 1.0 / window) : 0.0;
    b.tail = rho < 1 ? last * rho / ((1 - rho) * static_cast<double>(m + 1)) / std::numbers::pi : infinity;
  } else {
    b.tail = infinity;
  }
  return b;
}

RefinedNorm l1_norm_refined(const HolomorphicFn& h, const CircleGrid& grid, double tol, std::size_t max_size) {
  CircleGrid g = grid;
  double prev = lp_norm(sample(h, g), 1.0);
  while (g.size() < max_size) {
    g = g.refined();
    const double cur = lp_norm(sample(h, g), 1.0);
    const bool done = std::abs(cur - prev) <= tol * cur;
    prev = cur;
    if (done) break;
  }
  return {prev, g.size()};
}

namespace {

struct HaPass {
  QuasiSquare qs;
  double l1;
};

HaPass compute_ha(const RationalFn& f, const CircleGrid& grid) {
  QuasiSquare qs = quasi_square(f, grid);
  const double l1 = lp_norm(qs.boundary, 1.0);
  return {std::move(qs), l1};
}

}  // namespace

EndpointSample endpoint_sample(cplx a) {
  const double r = std::abs(a);
  if (!(r >= 0.5 && r < 1)) throw Error(ErrorCode::out_of_domain, "endpoint sweep needs 1/2 <= |a| < 1");
  const double r2 = r * r;
  const RationalFn f = f_a(a);

  CircleGrid grid = endpoint_grid(a);
  HaPass cur = compute_ha(f, grid);
  bool ok = false;
  while (grid.size() < (std::size_t{1} << 22)) {
    HaPass next = compute_ha(f, grid.refined());
    grid = grid.refined();
    const bool stable = std::abs(next.l1 - cur.l1) <= 1e-10 * next.l1 && !next.qs.aliased;
    cur = std::move(next);
    if (stable) {
      ok = true;
      break;
    }
  }

  const auto& h = cur.qs.boundary;
  EndpointSample s{};
  s.a = a;
  s.l1_norm = cur.l1;
  s.fa_l2_squared = 1 / (1 - r2);
  s.ratio = s.l1_norm / s.fa_l2_squared;
  s.grid_size = grid.size();
  s.refined_ok = ok;

  const auto fs = sample(f, grid);
  cplx b0{}, b1{};
  double hh = 0, fmax = 0;
  s.pointwise_margin = infinity;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    b0 += h.values[j];
    b1 += h.values[j] * std::conj(fs.values[j]);
    hh += std::norm(h.values[j]);
    fmax = std::max(fmax, std::norm(fs.values[j]));
  }
  b0 *= grid.weight();
  b1 *= grid.weight();
  hh *= grid.weight();
  // Normal equations against {1, f_a}: Gram [[1, 1], [1, 1/(1-|a|^2)]].
  s.mu = (b1 - b0) * (1 - r2) / r2;
  s.lambda = b0 - s.mu;

  double res = 0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    res += std::norm(h.values[j] - s.lambda - s.mu * fs.values[j]);
    s.pointwise_margin = std::min(s.pointwise_margin, (std::abs(h.values[j]) - std::norm(fs.values[j])) / fmax);
  }
  s.span_residual = std::sqrt(res * grid.weight() / hh);
  s.membership = membership_residual(h, theta_a(a)).worst();
  s.hardy = hardy_lower_bound(cur.qs.series.coeffs());
  s.l2_quadrature = hh;
  s.l2_parseval = std::norm(s.lambda + s.mu) + std::norm(s.mu) * r2 / (1 - r2);
  return s;
}

EndpointSweep endpoint_blowup_sweep(std::span<const cplx> as) {
  EndpointSweep sweep;
  for (auto a : as) sweep.rows.push_back(endpoint_sample(a));
  std::vector<const EndpointSample*> order;
  for (const auto& row : sweep.rows) order.push_back(&row);
  std::stable_sort(order.begin(), order.end(),
                   [](const EndpointSample* x, const EndpointSample* y) { return std::abs(x->a) < std::abs(y->a); });
  sweep.increasing = true;
  for (std::size_t k = 1; k < order.size(); ++k)
    if (!(order[k]->ratio > order[k - 1]->ratio)) sweep.increasing = false;
  return sweep;
}

EndpointImplication endpoint_implication(cplx a, cplx lambda, cplx mu) {
  const double r = std::abs(a);
  if (!(r < 1)) throw Error(ErrorCode::out_of_domain, "endpoint_implication needs |a| < 1");
  const double r2 = r * r;
  EndpointImplication c{};
  c.parseval_closed = std::norm(lambda + mu) + std::norm(mu) * r2 / (1 - r2);
  const RationalFn f = f_a(a);
  const CircleGrid grid = endpoint_grid(a);
  double s = 0;
  for (std::size_t j = 0; j < grid.size(); ++j) s += std::norm(lambda + mu * f(grid.node(j)));
  c.parseval_quadrature = s * grid.weight();
  c.lhs = std::norm(lambda + mu) + std::norm(mu) / (1 - r);
  c.rhs = (1 + r2) / std::pow(1 + r, 3) / std::pow(1 - r, 3);
  c.premise = c.parseval_closed >= (1 + r2) / std::pow(1 - r2, 3);
  return c;
}

}  // namespace qsq
