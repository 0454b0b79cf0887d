#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qsq/blaschke.hpp"
#include "qsq/endpoint.hpp"
#include "qsq/error.hpp"
#include "qsq/polynomial.hpp"
#include "qsq/random.hpp"

using namespace qsq;

TEST_CASE("Blaschke values") {
  CHECK(std::abs(BlaschkeProduct::monomial(2)(cplx(0, 1)) + 1.0) < 1e-15);
  CHECK(std::abs(theta_a(0.5)(0)) < 1e-15);
  CHECK(theta_a(0.5).vanishes_at_origin());
  CHECK(std::abs(BlaschkeProduct::single_factor(0.5)(0) + 0.5) < 1e-15);
  CHECK_THROWS_AS(BlaschkeProduct(1.0, {cplx(1.0)}), Error);
  CHECK_THROWS_AS(BlaschkeProduct(2.0, {}), Error);
}

TEST_CASE("random Blaschke products are unimodular on the circle") {
  Sampler rng(7);
  for (int t = 0; t < 10; ++t) {
    const BlaschkeProduct b = rng.blaschke(1 + t % 5);
    for (int j = 0; j < 64; ++j) CHECK(std::abs(std::abs(b(std::polar(1.0, 0.1 * j))) - 1) < 1e-13);
    // Oracle: direct product formula.
    const cplx z(0.3, -0.2);
    cplx want = b.constant();
    for (auto a : b.zeros()) want *= (z - a) / (1.0 - std::conj(a) * z);
    CHECK(std::abs(b(z) - want) < 1e-14);
    CHECK(std::abs(b.at_zero() - b(0)) < 1e-15);
  }
}

TEST_CASE("Frostman shift") {
  const BlaschkeProduct t = BlaschkeProduct::single_factor(0.5);
  const BlaschkeProduct same = frostman_shift(t, 0);
  CHECK(std::abs(same(0.3) - t(0.3)) < 1e-14);
  CHECK(std::abs(frostman_shift(t, -0.5)(0)) < 1e-14);

  const BlaschkeProduct phi = frostman_shift(BlaschkeProduct::monomial(2), 0.5);
  REQUIRE(phi.degree() == 2);
  for (auto a : phi.zeros()) CHECK(std::abs(std::abs(a) - 1 / std::sqrt(2.0)) < 1e-12);
  for (int j = 0; j < 32; ++j) {
    const cplx z = std::polar(1.0, 0.2 * j);
    CHECK(std::abs(std::abs(phi(z)) - 1) < 1e-12);
    CHECK(std::abs(phi(z) - (z * z - 0.5) / (1.0 - 0.5 * z * z)) < 1e-12);
  }
}

TEST_CASE("g_theta") {
  const RationalFn g0 = g_theta(BlaschkeProduct::monomial(3));
  CHECK(std::abs(g0(cplx(0.4, 0.4)) - 1.0) < 1e-15);

  const BlaschkeProduct t = BlaschkeProduct::single_factor(0.5);
  const RationalFn g = g_theta(t);
  CHECK(std::abs(g(0) - 0.75) < 1e-15);
  for (int j = 0; j < 4096; ++j) {
    const double m = std::abs(g(std::polar(1.0, 2 * M_PI * j / 4096)));
    CHECK(m >= 0.5 - 1e-14);
    CHECK(m <= 1.5 + 1e-14);
  }
}

TEST_CASE("rational functions") {
  CHECK_THROWS_AS(RationalFn(AnalyticPoly{1.0}, AnalyticPoly{1.0, -1.0}), Error);
  const RationalFn k(AnalyticPoly{1.0}, AnalyticPoly{1.0, -0.5});
  const auto t = k.taylor(6);
  for (int n = 0; n < 6; ++n) CHECK(std::abs(t[n] - std::pow(0.5, n)) < 1e-15);
  const RationalFn d = k.derivative();
  CHECK(std::abs(d(0.2) - 0.5 / std::pow(1 - 0.1, 2)) < 1e-14);
  const RationalFn s = k + k;
  CHECK(std::abs(s(0.3) - 2.0 / 0.85) < 1e-14);
}

TEST_CASE("polynomial roots") {
  // (z - 0.5)(z + 0.25i)(z - 2)
  const AnalyticPoly p = AnalyticPoly{-0.5, 1.0} * AnalyticPoly{cplx(0, 0.25), 1.0} * AnalyticPoly{-2.0, 1.0};
  auto r = polynomial_roots(p);
  REQUIRE(r.size() == 3);
  for (auto want : {cplx(0.5), cplx(0, -0.25), cplx(2.0)}) {
    double best = 1;
    for (auto x : r) best = std::min(best, std::abs(x - want));
    CHECK(best < 1e-10);
  }
  for (auto x : r) CHECK(root_residual(p, x) < 1e-9);
}

TEST_CASE("MT basis is orthonormal") {
  Sampler rng(11);
  const BlaschkeProduct t = rng.blaschke(3);
  const auto basis = mt_basis(t);
  const int n = 4096;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      cplx ip{};
      for (int k = 0; k < n; ++k) {
        const cplx z = std::polar(1.0, 2 * M_PI * k / n);
        ip += basis[i](z) * std::conj(basis[j](z));
      }
      ip /= double(n);
      CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) < 1e-10);
    }
  const auto mono = mt_basis(BlaschkeProduct::monomial(3));
  for (int k = 0; k < 3; ++k) CHECK(std::abs(mono[k](0.5) - std::pow(0.5, k)) < 1e-15);
  const auto single = mt_basis(BlaschkeProduct::single_factor(0.6));
  CHECK(std::abs(single[0](0.3) - std::sqrt(1 - 0.36) / (1 - 0.18)) < 1e-14);
}
