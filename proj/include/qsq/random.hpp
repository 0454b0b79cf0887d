#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qsq/blaschke.hpp"
#include "qsq/fourier.hpp"

namespace qsq {

/// Independent stream seed for case `index` under `master` (splitmix64).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Random test objects. Everything is drawn from one mt19937_64 stream, so a
/// seed fixes the whole sequence.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::mt19937_64& engine() noexcept { return engine_; }

  double uniform(double lo = 0.0, double hi = 1.0);
  std::size_t index(std::size_t lo, std::size_t hi);  // inclusive
  /// Standard complex Gaussian, E|z|^2 = 1.
  cplx gaussian();
  /// Uniform in the disk |z| <= radius.
  cplx disk_point(double radius);

  /// Gaussian coefficients; the leading one is kept away from zero.
  AnalyticPoly polynomial(std::size_t degree);
  /// Zeros uniform in |z| <= max_radius, random unimodular constant. With
  /// `in_i0` the first zero is placed at the origin.
  BlaschkeProduct blaschke(std::size_t degree, double max_radius = 0.9, bool in_i0 = false);
  /// Real trigonometric polynomial of exact band M with Gaussian coefficients.
  TrigCoeffs real_trig(std::size_t band);
  std::vector<cplx> gaussian_vector(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace qsq
