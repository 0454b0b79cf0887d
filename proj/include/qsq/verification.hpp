#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsq/io.hpp"

namespace qsq {

/// Sizes and knobs of the property suites. `full()` matches the acceptance
/// targets; `quick()` is a smoke run.
struct SuiteConfig {
  std::size_t grid = 4096;
  double tol = 1e-8;
  std::uint64_t seed = 20240917;

  std::size_t poly_cases = 500;
  std::size_t max_poly_degree = 64;
  std::size_t rational_cases = 100;
  std::size_t max_theta_degree = 8;
  std::size_t interior_points = 128;
  std::size_t conjugation_trials = 1000;
  std::vector<std::size_t> sharpness_degrees{32, 128, 512, 2048, 8192};
  std::size_t real_part_cases = 200;
  std::size_t doubling_cases = 20;
  std::size_t doubling_samples = 50;
  std::size_t solid_trials = 200;
  std::size_t lp_polys = 500;
  std::size_t sup_polys = 100;

  static SuiteConfig full() { return {}; }
  static SuiteConfig quick();
  Json to_json() const;
  /// Throws grid_too_small when the grid cannot resolve the polynomial corpus.
  void validate() const;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string summary;
  Json details;
  double seconds = 0;      ///< wall time; kept out of reports
  double time_limit = 0;   ///< seconds, 0 if none
};

inline constexpr int criterion_count = 10;

/// Runs one criterion (1..10). Throws grid_too_small when the configured grid
/// cannot resolve the corpus.
CriterionResult run_criterion(int id, const SuiteConfig& config);

/// Report without timings, so equal configs give byte-identical output.
Json suite_report(const SuiteConfig& config, const std::vector<CriterionResult>& results);

}  // namespace qsq
