#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "qsq/embedding.hpp"
#include "qsq/error.hpp"
#include "qsq/model_space.hpp"
#include "qsq/random.hpp"

using namespace qsq;
using std::numbers::pi;

TEST_CASE("disk measures") {
  CHECK_THROWS_AS(DiskMeasure({{cplx(0.5), -1.0}}), Error);
  CHECK_THROWS_AS(DiskMeasure({{cplx(1.5), 1.0}}), Error);
  const DiskMeasure m = DiskMeasure::circle(CircleGrid(64));
  CHECK(std::abs(m.mass() - 1) < 1e-14);
  // (1-|z|) dA has mass pi/3.
  CHECK(std::abs(DiskMeasure::littlewood_paley(128, 64).mass() - pi / 3) < 1e-12);
  CHECK(std::abs(polar_integral([](cplx z) { return std::norm(z); }, 128, 64) - pi / 2) < 1e-12);
}

TEST_CASE("embedding norms on the exact path") {
  const BlaschkeProduct t3 = BlaschkeProduct::monomial(3);
  const auto circle = embedding_norm(t3, 2, 2, DiskMeasure::circle(CircleGrid(64)));
  CHECK(circle.exact);
  CHECK(std::abs(circle.value - 1) < 1e-12);

  const auto atom = embedding_norm(t3, 2, 2, DiskMeasure({{cplx(0.5), 1.0}}));
  CHECK(std::abs(atom.value * atom.value - 21.0 / 16) < 1e-12);

  const auto k = embedding_norm(BlaschkeProduct::monomial(1), 2, 2, DiskMeasure({{cplx(0), 1.0}}));
  CHECK(std::abs(k.value - 1) < 1e-12);

  // Rank-one oracle: the norm squared is w K(z, z).
  Sampler rng(6);
  const BlaschkeProduct b = rng.blaschke(3);
  const cplx z(0.3, 0.6);
  const auto r = embedding_norm(b, 2, 2, DiskMeasure({{z, 0.7}}));
  CHECK(std::abs(r.value * r.value - 0.7 * reproducing_kernel(b, z, z).real()) < 1e-10);
}

TEST_CASE("ascent agrees with the eigensolver and stays below it") {
  Sampler rng(10);
  const BlaschkeProduct b = rng.blaschke(3, 0.8);
  const DiskMeasure mu({{cplx(0.5, 0.1), 1.0}, {cplx(-0.3, 0.6), 0.5}, {cplx(0.1, -0.8), 0.3}});
  const auto exact = embedding_norm(b, 2, 2, mu);
  const auto ascent = embedding_norm_ascent(b, 2, 2, mu);
  CHECK_FALSE(ascent.exact);
  CHECK(ascent.value <= exact.value * (1 + 1e-9));
  CHECK(ascent.value >= exact.value * (1 - 1e-6));
}

TEST_CASE("doubling inequality") {
  const DiskMeasure mu({{cplx(0.9), 1.0}});
  const auto r = extrapolation_doubling_check(BlaschkeProduct::monomial(2), mu, 2, 2, identity_operator(), 10);
  CHECK(r.low_exact);
  CHECK(r.pass());
  CHECK(std::abs(r.constant - 2) < 1e-14);

  const BlaschkeProduct t = BlaschkeProduct::single_factor(0.5);
  const auto s = extrapolation_doubling_check(t, mu, 2, 2, identity_operator(), 10);
  CHECK(std::abs(s.constant - 2 * 9) < 1e-12);
  CHECK(s.pass());
}

TEST_CASE("regions and the maximal operator") {
  const CircleGrid g(64);
  const auto zero = maximal_operator([](cplx z) { return z; }, RegionFamily::origin(), g);
  for (auto v : zero.values) CHECK(std::abs(v) < 1e-15);
  const auto half = maximal_operator([](cplx z) { return z; }, RegionFamily::radial_point(0.5), g);
  for (auto v : half.values) CHECK(std::abs(v - 0.5) < 1e-15);
  const auto c = maximal_operator([](cplx) { return cplx(3, 4); }, RegionFamily::truncated_cone(), g);
  for (auto v : c.values) CHECK(std::abs(v - 5.0) < 1e-14);
  const auto cone = RegionFamily::truncated_cone();
  for (auto z : cone.region(cplx(0, 1))) CHECK(std::abs(z) <= 1);
}

TEST_CASE("solidity contracts") {
  Sampler rng(13);
  const BlaschkeProduct t = rng.blaschke(2, 0.8, true);
  const std::vector<cplx> support = CircleGrid(32).nodes();
  const auto id = check_solid(identity_operator(), t, 30, 1, support);
  CHECK(id.all());
  const auto mx = check_solid(maximal_operator_spec(RegionFamily::truncated_cone()), t, 30, 2, support);
  CHECK(mx.all());
  const auto d = check_solid(differentiation_operator(), t, 0, 3, support);
  CHECK_FALSE(d.monotone);
  CHECK(d.monotone_witness.find("(z, 1)") != std::string::npos);
  CHECK_FALSE(d.claims_hold(differentiation_operator()));
}

TEST_CASE("Littlewood-Paley energy") {
  CHECK(std::abs(littlewood_paley_energy(AnalyticPoly{0, 1}) - pi / 3) < 1e-15);
  CHECK(littlewood_paley_energy(AnalyticPoly{1.0}) == 0.0);
  Sampler rng(14);
  for (int i = 0; i < 5; ++i) {
    const AnalyticPoly f = rng.polynomial(20);
    const double e = littlewood_paley_energy(f);
    // Oracle: integrate |f'|^2 (1 - r) r dr dt with a plain midpoint rule in r.
    const AnalyticPoly d = f.derivative();
    double q = 0;
    const int nr = 4000, nt = 128;
    for (int a = 0; a < nr; ++a) {
      const double r = (a + 0.5) / nr;
      double ring = 0;
      for (int b = 0; b < nt; ++b) ring += std::norm(d(std::polar(r, 2 * pi * b / nt)));
      q += ring / nt * 2 * pi * (1 - r) * r / nr;
    }
    CHECK(std::abs(q - e) < 1e-5 * e);
    CHECK(std::abs(littlewood_paley_quadrature(f) - e) < 1e-9 * e);
    CHECK(e <= pi / 2 * f.l2_norm() * f.l2_norm());
  }
}

TEST_CASE("counterexample sweep") {
  const double as[] = {0.9, 0.95};
  const auto s = lp_counterexample_sweep(as);
  CHECK(s.band_stable);
  REQUIRE(s.rows.size() == 2);
  CHECK(s.rows[1].r > s.rows[0].r);
  for (const auto& r : s.rows) CHECK(r.converged);
}
