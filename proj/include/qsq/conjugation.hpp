#pragma once

#include <cstdint>
#include <vector>

#include "qsq/fourier.hpp"

namespace qsq {

/// ||Hu||_p / ||u||_p on a grid of N nodes.
double conjugation_ratio(const TrigCoeffs& u, double p, const CircleGrid& grid);

/// Grid on which |u|^p is resolved for a band-M polynomial: exact for even
/// integer p up to 8, heuristic otherwise.
CircleGrid conjugation_grid(std::size_t band);

struct ConjugationBoundReport {
  double p = 0;
  std::size_t trials = 0;
  double worst = 0;  ///< max ||Hu||_p / (A_p ||u||_p)
  bool pass() const { return worst <= 1 + 1e-8; }
};

/// Random real trigonometric polynomials with bands in [1, max_band].
ConjugationBoundReport conjugation_bound_suite(double p, std::size_t trials, std::size_t max_band,
                                               std::uint64_t seed);

struct SharpnessOptions {
  double p = 4;
  std::size_t degree = 32;
  std::size_t ascent_iterations = 300;
  double gamma_lo = 0.05, gamma_hi = 0.45;
  std::size_t gamma_steps = 41;
};

struct SharpnessResult {
  double p = 0;
  std::size_t degree = 0;
  double structured = 0;  ///< best ratio over the structured family
  double best_gamma = 0;
  double start = 0;       ///< ratio the ascent started from
  double ratio = 0;       ///< final ratio
  double fraction = 0;    ///< ratio / A_p
  std::size_t grid_size = 0;
  TrigCoeffs u;
};

/// Lower bound for the norm of H on real L^p over real trigonometric
/// polynomials of degree <= D. Starts from truncations of -Im((1+z)/(1-z))^gamma
/// with the best constant shift, then runs gradient ascent on the coefficients.
/// Deterministic: the amount of work depends only on the options.
SharpnessResult conjugation_sharpness_probe(const SharpnessOptions& opts);

}  // namespace qsq
