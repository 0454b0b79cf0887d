#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qsq/endpoint.hpp"
#include "qsq/error.hpp"
#include "qsq/model_space.hpp"
#include "qsq/random.hpp"

using namespace qsq;

TEST_CASE("projection onto K_theta for a monomial theta") {
  const BlaschkeProduct t = BlaschkeProduct::monomial(2);
  const CircleGrid g(64);
  // 1 + z + z^2 + conj z
  const TrigCoeffs h2({0, 1, 1, 1, 1});
  const TrigCoeffs p = p_theta_project(h2, t, g);
  CHECK(std::abs(p[0] - 1.0) < 1e-14);
  CHECK(std::abs(p[1] - 1.0) < 1e-14);
  CHECK(std::abs(p[2]) < 1e-14);
  CHECK(std::abs(p[-1]) < 1e-14);

  // theta * z lies in theta H^2.
  const TrigCoeffs tz({0, 0, 0, 0, 0, 0, 1});
  CHECK(p_theta_project(tz, t, g).l2_norm() < 1e-14);
  CHECK_THROWS_AS(p_theta_project(TrigCoeffs(40), t, g), Error);
}

TEST_CASE("random MT combinations are fixed by the projection") {
  Sampler rng(3);
  const BlaschkeProduct t = rng.blaschke(4, 0.8);
  const ModelSpace space(t);
  const RationalFn f = space.element(rng.gaussian_vector(4));
  const CircleGrid g(1024);
  const TrigCoeffs c = to_coeffs(sample(f, g), 400);
  const TrigCoeffs p = p_theta_project(c, t, g);
  double err = 0;
  for (long k = -400; k <= 400; ++k) err = std::max(err, std::abs(p[k] - c[k]));
  CHECK(err < 1e-9);
}

TEST_CASE("membership residual") {
  const BlaschkeProduct t = BlaschkeProduct::monomial(2);
  const CircleGrid g(256);
  CHECK(membership_residual([](cplx) { return cplx(1); }, t, g).worst() < 1e-14);
  const double out = membership_residual([](cplx z) { return z * z; }, t, g).worst();
  CHECK(out > 0.9);
  CHECK(membership_residual([](cplx z) { return f_a(0.7)(z); }, theta_a(0.7), CircleGrid(2048)).worst() < 1e-9);
}

TEST_CASE("reproducing kernel") {
  const BlaschkeProduct t = BlaschkeProduct::monomial(4);
  CHECK(std::abs(reproducing_kernel(t, 0, 0) - 1.0) < 1e-15);
  const double r = 0.6;
  CHECK(std::abs(reproducing_kernel(t, r, r) - (1 + r * r + std::pow(r, 4) + std::pow(r, 6))) < 1e-14);
  Sampler rng(5);
  const BlaschkeProduct b = rng.blaschke(3);
  const ModelSpace space(b);
  const cplx z(0.2, 0.5);
  double sum = 0;
  for (const auto& e : space.basis()) sum += std::norm(e(z));
  CHECK(std::abs(reproducing_kernel(b, z, z) - sum) < 1e-9);
  CHECK_THROWS_AS(reproducing_kernel(b, 1.0, z), Error);
}

TEST_CASE("Gram matrix of the MT basis is the identity") {
  Sampler rng(9);
  const ModelSpace space(rng.blaschke(3));
  const auto G = space.gram(CircleGrid(4096));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(std::abs(G(i, j) - (i == j ? 1.0 : 0.0)) < 1e-9);
}

TEST_CASE("coordinates recover an element") {
  Sampler rng(12);
  const ModelSpace space(rng.blaschke(5, 0.7, true));
  const auto c = rng.gaussian_vector(5);
  const RationalFn f = space.element(c);
  const auto back = space.coordinates(sample(f, CircleGrid(2048)));
  for (int k = 0; k < 5; ++k) CHECK(std::abs(back[k] - c[k]) < 1e-10);
  CHECK(space.contains_constants());
}
