#include "qsq/random.hpp"

#include <cmath>
#include <numbers>

namespace qsq {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Sampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

std::size_t Sampler::index(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
}

cplx Sampler::gaussian() {
  std::normal_distribution<double> n(0.0, std::sqrt(0.5));
  const double re = n(engine_);
  return {re, n(engine_)};
}

cplx Sampler::disk_point(double radius) {
  const double r = radius * std::sqrt(uniform());
  const double t = uniform(0.0, 2 * std::numbers::pi);
  return std::polar(r, t);
}

AnalyticPoly Sampler::polynomial(std::size_t degree) {
  std::vector<cplx> c(degree + 1);
  for (auto& v : c) v = gaussian();
  while (std::abs(c.back()) < 0.1) c.back() = gaussian();
  return AnalyticPoly(std::move(c));
}

BlaschkeProduct Sampler::blaschke(std::size_t degree, double max_radius, bool in_i0) {
  std::vector<cplx> zeros(degree);
  for (std::size_t k = 0; k < degree; ++k) zeros[k] = (in_i0 && k == 0) ? cplx{} : disk_point(max_radius);
  const cplx c = std::polar(1.0, uniform(0.0, 2 * std::numbers::pi));
  return BlaschkeProduct(c, std::move(zeros));
}

TrigCoeffs Sampler::real_trig(std::size_t band) {
  TrigCoeffs u(band);
  u.at(0) = gaussian().real();
  for (std::size_t k = 1; k <= band; ++k) {
    const long kk = static_cast<long>(k);
    const cplx c = gaussian();
    u.at(kk) = c;
    u.at(-kk) = std::conj(c);
  }
  return u;
}

std::vector<cplx> Sampler::gaussian_vector(std::size_t n) {
  std::vector<cplx> v(n);
  for (auto& x : v) x = gaussian();
  return v;
}

}  // namespace qsq
