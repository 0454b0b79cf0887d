#include "qsq/conjugation.hpp"

#include <algorithm>
#include <cmath>

#include "qsq/error.hpp"
#include "qsq/fft.hpp"
#include "qsq/random.hpp"

namespace qsq {
namespace {

double power(double x, double p) {
  const double a = std::abs(x);
  if (p == 4) return (a * a) * (a * a);
  if (p == 2) return a * a;
  return std::pow(a, p);
}

double mean_power(const std::vector<double>& v, double p) {
  double s = 0;
  for (double x : v) s += power(x, p);
  return s / static_cast<double>(v.size());
}

std::vector<double> real_samples(const TrigCoeffs& u, const CircleGrid& grid) {
  const auto s = sample(u, grid);
  std::vector<double> v(s.values.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = s.values[j].real();
  return v;
}

/// argmin_s mean |u + s|^p by golden section; the objective is convex in s.
double best_shift(const std::vector<double>& u, double p) {
  const double lo = -*std::max_element(u.begin(), u.end());
  const double hi = -*std::min_element(u.begin(), u.end());
  std::vector<double> tmp(u.size());
  auto f = [&](double s) {
    for (std::size_t j = 0; j < u.size(); ++j) tmp[j] = u[j] + s;
    return mean_power(tmp, p);
  };
  const double g = (std::sqrt(5.0) - 1) / 2;
  double a = lo, b = hi;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 80 && b - a > 1e-14 * (1 + std::abs(a)); ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

/// Taylor coefficients 0..D of ((1+z)/(1-z))^gamma.
std::vector<cplx> cayley_power(double gamma, std::size_t degree) {
  std::vector<cplx> a(degree + 1), b(degree + 1);
  a[0] = b[0] = 1;
  for (std::size_t n = 1; n <= degree; ++n) {
    const double nn = static_cast<double>(n);
    a[n] = a[n - 1] * (gamma - nn + 1) / nn;
    b[n] = b[n - 1] * (gamma + nn - 1) / nn;
  }
  auto c = fft::convolve(a, b);
  c.resize(degree + 1);
  return c;
}

/// -Im F on the circle for F = sum f_n z^n, plus a constant shift.
TrigCoeffs minus_imaginary_part(const std::vector<cplx>& f, double shift) {
  const std::size_t d = f.size() - 1;
  TrigCoeffs u(d);
  u.at(0) = shift - f[0].imag();
  for (std::size_t k = 1; k <= d; ++k) {
    const long kk = static_cast<long>(k);
    const cplx c = cplx{0.0, 0.5} * f[k];
    u.at(kk) = c;
    u.at(-kk) = std::conj(c);
  }
  return u;
}

struct Evaluation {
  double phi;  // (1/p) log mean|Hu|^p - (1/p) log mean|u|^p
  std::vector<cplx> grad;  // ascent direction, indices -D..D
};

Evaluation evaluate(const TrigCoeffs& u, double p, const CircleGrid& grid, bool want_grad) {
  const auto a = real_samples(u, grid);
  const auto b = real_samples(conjugate_function(u), grid);
  const double ma = mean_power(a, p);
  const double mb = mean_power(b, p);
  Evaluation e{(std::log(mb) - std::log(ma)) / p, {}};
  if (!want_grad) return e;

  const std::size_t n = grid.size();
  std::vector<cplx> alpha(n), beta(n);
  for (std::size_t j = 0; j < n; ++j) {
    alpha[j] = power(a[j], p - 1) * (a[j] < 0 ? -1.0 : 1.0) / ma;
    beta[j] = power(b[j], p - 1) * (b[j] < 0 ? -1.0 : 1.0) / mb;
  }
  // mean(x zeta^k) for every k, through the unnormalized inverse transform.
  fft::inverse(alpha);
  fft::inverse(beta);
  const long d = static_cast<long>(u.band());
  e.grad.resize(static_cast<std::size_t>(2 * d + 1));
  const double w = grid.weight();
  for (long k = -d; k <= d; ++k) {
    const std::size_t idx = static_cast<std::size_t>((k % static_cast<long>(n) + static_cast<long>(n))) % n;
    const cplx m = k > 0 ? cplx{0.0, -1.0} : (k < 0 ? cplx{0.0, 1.0} : cplx{});
    e.grad[static_cast<std::size_t>(k + d)] = std::conj(m * beta[idx] * w - alpha[idx] * w);
  }
  return e;
}

}  // namespace

CircleGrid conjugation_grid(std::size_t band) { return CircleGrid::at_least(std::max<std::size_t>(1024, 16 * band + 1)); }

double conjugation_ratio(const TrigCoeffs& u, double p, const CircleGrid& grid) {
  const auto a = real_samples(u, grid);
  const auto b = real_samples(conjugate_function(u), grid);
  return std::pow(mean_power(b, p) / mean_power(a, p), 1 / p);
}

ConjugationBoundReport conjugation_bound_suite(double p, std::size_t trials, std::size_t max_band,
                                               std::uint64_t seed) {
  const double ap = conjugation_constant(p);
  Sampler rng(seed);
  ConjugationBoundReport r;
  r.p = p;
  r.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t band = rng.index(1, max_band);
    const TrigCoeffs u = rng.real_trig(band);
    r.worst = std::max(r.worst, conjugation_ratio(u, p, conjugation_grid(band)) / ap);
  }
  return r;
}

SharpnessResult conjugation_sharpness_probe(const SharpnessOptions& opts) {
  if (opts.degree < 1) throw Error(ErrorCode::invalid_argument, "sharpness probe needs degree >= 1");
  const double p = opts.p;
  const double ap = conjugation_constant(p);
  const CircleGrid grid = conjugation_grid(opts.degree);

  SharpnessResult r;
  r.p = p;
  r.degree = opts.degree;
  r.grid_size = grid.size();
  r.structured = -infinity;
  for (std::size_t i = 0; i < opts.gamma_steps; ++i) {
    const double gamma =
        opts.gamma_steps == 1 ? opts.gamma_lo
                              : opts.gamma_lo + (opts.gamma_hi - opts.gamma_lo) * static_cast<double>(i) /
                                                    static_cast<double>(opts.gamma_steps - 1);
    const auto f = cayley_power(gamma, opts.degree);
    TrigCoeffs u = minus_imaginary_part(f, 0.0);
    const double s = best_shift(real_samples(u, grid), p);
    u.at(0) += s;
    const double ratio = conjugation_ratio(u, p, grid);
    if (ratio > r.structured) {
      r.structured = ratio;
      r.best_gamma = gamma;
      r.u = u;
    }
  }
  r.start = r.structured;

  // Gradient ascent on the coefficients with step doubling and halving.
  TrigCoeffs u = r.u;
  Evaluation cur = evaluate(u, p, grid, true);
  double step = 1e-2 * u.l2_norm();
  for (std::size_t it = 0; it < opts.ascent_iterations; ++it) {
    double gnorm = 0;
    for (auto g : cur.grad) gnorm += std::norm(g);
    gnorm = std::sqrt(gnorm);
    if (gnorm == 0) break;
    std::vector<cplx> c(u.coeffs().begin(), u.coeffs().end());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += step / gnorm * cur.grad[k];
    TrigCoeffs trial(std::move(c));
    Evaluation next = evaluate(trial, p, grid, true);
    if (std::isfinite(next.phi) && next.phi > cur.phi) {
      u = std::move(trial);
      cur = std::move(next);
      step *= 1.5;
    } else {
      step *= 0.5;
      if (step < 1e-14 * u.l2_norm()) break;
    }
  }
  r.u = u;
  r.ratio = conjugation_ratio(u, p, grid);
  r.fraction = r.ratio / ap;
  return r;
}

}  // namespace qsq
