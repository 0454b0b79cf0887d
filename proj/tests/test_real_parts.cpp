#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qsq/error.hpp"
#include "qsq/model_space.hpp"
#include "qsq/random.hpp"
#include "qsq/real_parts.hpp"

using namespace qsq;

namespace {

const TrigCoeffs cos_t({0.5, 0, 0.5});
const TrigCoeffs one(std::vector<cplx>{1.0});

// Oracle: scan v0 on a fine lattice and keep the smallest membership defect.
double scan_min(const TrigCoeffs& u, const BlaschkeProduct& t, const CircleGrid& g, double lo, double hi) {
  double best = infinity;
  for (int i = 0; i <= 400; ++i) best = std::min(best, offset_residual(u, t, lo + (hi - lo) * i / 400, g).relative);
  return best;
}

}  // namespace

TEST_CASE("real parts for a monomial theta") {
  const BlaschkeProduct t = BlaschkeProduct::monomial(2);
  auto w = check_real_part(cos_t, t);
  CHECK(w.which == RealPartCase::a);
  CHECK(w.holds());
  CHECK(check_real_part(one, t).holds());

  const AnalyticPoly f = complete_to_model(cos_t, t);
  CHECK(std::abs(f[1] - 1.0) < 1e-14);
  CHECK(std::abs(f[0]) < 1e-14);
  CHECK(f.degree() == 1);
  const AnalyticPoly c = complete_to_model(one, t);
  CHECK(std::abs(c[0] - 1.0) < 1e-14);
  CHECK(c.degree() == 0);

  // cos 2t is not the real part of anything in P_1.
  const TrigCoeffs cos2({0.5, 0, 0, 0, 0.5});
  CHECK_FALSE(check_real_part(cos2, t).holds());
  CHECK_THROWS_AS(complete_to_model(cos2, t), Error);
}

TEST_CASE("constants against a theta with theta(0) != 0") {
  const BlaschkeProduct t = BlaschkeProduct::single_factor(0.5);
  const CircleGrid g(512);
  const auto w = check_real_part(one, t);
  CHECK(w.which == RealPartCase::b);
  const bool oracle = scan_min(one, t, g, -4, 4) < 1e-8;
  CHECK(w.holds() == oracle);
}

TEST_CASE("real part of the Szego kernel in a one-dimensional space") {
  const BlaschkeProduct t = BlaschkeProduct::single_factor(0.5);
  const RationalFn k(AnalyticPoly{1.0}, AnalyticPoly{1.0, -0.5});
  const auto taylor = k.taylor(80);
  const TrigCoeffs u = real_part(taylor);
  const auto w = check_real_part(u, t);
  CHECK(w.holds());
  const AnalyticPoly f = complete_to_model(u, t);
  for (int n = 0; n < 60; ++n) CHECK(std::abs(f[n] - taylor[n]) < 1e-9);

  const CircleGrid g(1024);
  const double c = w.offset();
  const double offs[] = {c, c + 0.5};
  const auto probe = uniqueness_probe(u, t, offs, g);
  CHECK(probe.member(0));
  CHECK_FALSE(probe.member(1));
  CHECK(probe.rows[1].absolute > 0.1 * u.l2_norm());
}

TEST_CASE("uniqueness for theta in I_0") {
  const double offs[] = {-1, 0, 1};
  const auto probe = uniqueness_probe(cos_t, BlaschkeProduct::monomial(2), offs, CircleGrid(256));
  for (int k = 0; k < 3; ++k) CHECK(probe.member(k));
}

TEST_CASE("verdicts agree with the brute-force offset scan") {
  Sampler rng(17);
  const CircleGrid g(1024);
  for (int i = 0; i < 12; ++i) {
    const bool in_i0 = i % 2 == 0;
    const BlaschkeProduct t = rng.blaschke(2, 0.7, in_i0);
    const RationalFn f = ModelSpace(t).element(rng.gaussian_vector(2));
    TrigCoeffs u = real_part(f.taylor(120));
    if (i % 3 == 0) u = u + 0.2 * rng.real_trig(2);
    const auto w = check_real_part(u, t);
    const auto best = best_offset(u, t, g);
    const double scale = 2 * (u.l2_norm() + 1);
    CHECK(w.holds() == (scan_min(u, t, g, best.offset - scale, best.offset + scale) < 1e-6 ||
                        best.relative < 1e-8));
    if (w.holds()) CHECK(std::abs(w.offset() - best.offset) < 1e-6 * (1 + std::abs(best.offset)));
  }
}

TEST_CASE("harmonic completion and argument checks") {
  const AnalyticPoly f = harmonic_completion(cos_t, 3.0);
  CHECK(std::abs(f[0] - cplx(0, 3)) < 1e-15);
  CHECK(std::abs(f[1] - 1.0) < 1e-15);
  CHECK_THROWS_AS(check_real_part(cos_t, BlaschkeProduct(1.0, {})), Error);
  CHECK_THROWS_AS(check_real_part(TrigCoeffs(std::vector<cplx>{cplx(0, 1)}), BlaschkeProduct::monomial(1)), Error);
}
