#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qsq/endpoint.hpp"
#include "qsq/error.hpp"
#include "qsq/model_space.hpp"
#include "qsq/quasi_square.hpp"
#include "qsq/random.hpp"

using namespace qsq;

namespace {

// Autocorrelation by brute force on a fine grid: Sf = u0 + 2 sum_{k>0} u_k z^k
// with u_k the Fourier coefficients of |f|^2, computed by a direct sum.
cplx oracle_sf(const HolomorphicFn& f, cplx z, int n = 2048, int kmax = 400) {
  std::vector<double> u(n);
  for (int j = 0; j < n; ++j) u[j] = std::norm(f(std::polar(1.0, 2 * M_PI * j / n)));
  cplx s{};
  for (int k = 0; k <= kmax; ++k) {
    cplx uk{};
    for (int j = 0; j < n; ++j) uk += u[j] * std::polar(1.0, -2 * M_PI * double(j) * k / n);
    uk /= double(n);
    s += (k == 0 ? 1.0 : 2.0) * uk * std::pow(z, k);
  }
  return s;
}

}  // namespace

TEST_CASE("exact quasi-squares of small polynomials") {
  const cplx c(0.3, -2);
  const AnalyticPoly sc = quasi_square(AnalyticPoly{c});
  CHECK(sc.degree() == 0);
  CHECK(std::abs(sc[0] - std::norm(c)) < 1e-14);
  const AnalyticPoly sz = quasi_square(AnalyticPoly{0, 1});
  CHECK(sz.degree() == 0);
  CHECK(std::abs(sz[0] - 1.0) < 1e-15);
  const AnalyticPoly s = quasi_square(AnalyticPoly{1, 1});
  CHECK(std::abs(s[0] - 2.0) < 1e-15);
  CHECK(std::abs(s[1] - 2.0) < 1e-15);
}

TEST_CASE("grid quasi-square of the Szego kernel") {
  for (double a : {0.3, 0.6, 0.9}) {
    const QuasiSquare s = quasi_square(f_a(a), CircleGrid(4096));
    CHECK_FALSE(s.aliased);
    for (cplx z : {cplx(0), cplx(0.5, 0.2), cplx(-0.7)}) {
      const cplx want = (1.0 + a * z) / ((1 - a * a) * (1.0 - a * z));
      CHECK(std::abs(s(z) - want) < 1e-11 * std::abs(want));
    }
  }
}

TEST_CASE("grid path agrees with a brute-force autocorrelation") {
  Sampler rng(4);
  const AnalyticPoly f = rng.polynomial(7);
  const QuasiSquare s = quasi_square([&f](cplx z) { return f(z); }, CircleGrid(256));
  const cplx z(0.3, 0.4);
  CHECK(std::abs(s(z) - oracle_sf([&f](cplx w) { return f(w); }, z, 256, 20)) < 1e-10);
  CHECK(std::abs(s(z) - quasi_square(f)(z)) < 1e-11);
}

TEST_CASE("aliasing is reported on coarse grids") {
  const QuasiSquare s = quasi_square(f_a(0.99), CircleGrid(64));
  CHECK(s.aliased);
}

TEST_CASE("shifted quasi-square") {
  Sampler rng(8);
  const CircleGrid g(1024);
  // theta in I_0: identical to the plain map.
  const BlaschkeProduct t0 = rng.blaschke(3, 0.8, true);
  const RationalFn f0 = ModelSpace(t0).element(rng.gaussian_vector(3));
  const QuasiSquare a = quasi_square(f0, g);
  const QuasiSquare b = quasi_square_shifted([&f0](cplx z) { return f0(z); }, t0, g);
  for (std::size_t k = 0; k < a.series.coeffs().size(); ++k) CHECK(std::abs(a.series[k] - b.series[k]) < 1e-12);

  // One-dimensional K_theta: the output stays on the kernel line.
  const BlaschkeProduct t = BlaschkeProduct::single_factor(0.5);
  const RationalFn k(AnalyticPoly{1.0}, AnalyticPoly{1.0, -0.5});
  const QuasiSquare s = quasi_square_shifted([&k](cplx z) { return k(z); }, t, g);
  CHECK(membership_residual(s.boundary, t).worst() < 1e-8);

  // S_theta 1 dominates |1|^2.
  const QuasiSquare one = quasi_square_shifted([](cplx) { return cplx(1); }, t, g);
  for (auto v : one.boundary.values) CHECK(std::abs(v) >= 1 - 1e-12);
  const RationalFn gt = g_theta(t);
  const cplx z(0.2, -0.3);
  const cplx direct = 1.5 * gt(z) * oracle_sf([&gt](cplx w) { return 1.0 / gt(w); }, z, 1024, 100);
  CHECK(std::abs(one(z) - direct) < 1e-10);
}

TEST_CASE("superquadratic checks") {
  const CircleGrid g(512);
  const SquareMap S = plain_square_map(g);
  auto r = verify_superquadratic(S, [](cplx z) { return 1.0 + z; }, cplx(0, 2), g, 1);
  CHECK(r.pass());
  CHECK(r.homogeneity_error < 1e-14);
  auto eq = verify_superquadratic(S, [](cplx z) { return z; }, 1.0, g, 1, 0);
  CHECK(std::abs(eq.circle_margin) < 1e-14);

  Sampler rng(21);
  const BlaschkeProduct t = rng.blaschke(3);
  const AnalyticPoly f = rng.polynomial(8);
  CHECK(verify_superquadratic(shifted_square_map(t, g), [&f](cplx z) { return f(z); }, rng.gaussian(), g, 2).pass());

  // A map that is not superquadratic is caught.
  const SquareMap half = [&S](const HolomorphicFn& f) -> HolomorphicFn {
    auto s = S(f);
    return [s](cplx z) { return 0.5 * s(z); };
  };
  CHECK_FALSE(verify_superquadratic(half, [](cplx z) { return 1.0 + z; }, 1.0, g, 1).pass());
}

TEST_CASE("norm bounds for the quasi-square") {
  const CircleGrid g(1024);
  const BlaschkeProduct t = BlaschkeProduct::monomial(2);
  const auto r = verify_norm_bounds([](cplx z) { return 1.0 + z; }, 4, t, g);
  CHECK(std::abs(r.output_norm - 2 * std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(r.bound - 2 * std::sqrt(6.0)) < 1e-12);
  CHECK(r.pass());
  const auto z = verify_norm_bounds([](cplx w) { return w; }, 4, t, g);
  CHECK(std::abs(z.output_norm - 1) < 1e-12);
  CHECK(std::abs(z.bound - 2) < 1e-12);
  CHECK_THROWS_AS(verify_norm_bounds([](cplx w) { return w; }, 2, t, g), Error);
  CHECK_THROWS_AS(verify_norm_bounds([](cplx w) { return w; }, infinity, t, g), Error);

  Sampler rng(31);
  for (int i = 0; i < 5; ++i) {
    const BlaschkeProduct b = rng.blaschke(1 + i, 0.9, i % 2 == 0);
    const RationalFn f = ModelSpace(b).element(rng.gaussian_vector(1 + i));
    for (double p : {2.5, 3.0, 4.0, 6.0, 8.0}) {
      const auto rep = verify_norm_bounds([&f](cplx w) { return f(w); }, p, b, g);
      CHECK(rep.pass());
      CHECK(rep.input_in_model());
    }
  }
}

TEST_CASE("interior chain") {
  Sampler rng(2);
  const auto r = check_interior_chain(rng.polynomial(10), 32, 3, CircleGrid(512));
  CHECK(r.pass(1e-10));
  CHECK(r.min_real_part > 0);
}
