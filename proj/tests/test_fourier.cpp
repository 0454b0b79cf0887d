#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "qsq/error.hpp"
#include "qsq/fft.hpp"
#include "qsq/fourier.hpp"

using namespace qsq;
using std::numbers::pi;

namespace {

// Naive DFT as an oracle for the FFT wrapper.
std::vector<cplx> naive_dft(const std::vector<cplx>& x) {
  const std::size_t n = x.size();
  std::vector<cplx> y(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) y[k] += x[j] * std::polar(1.0, -2 * pi * double(j * k) / double(n));
  return y;
}

}  // namespace

TEST_CASE("fft forward matches a naive DFT and inverse undoes it up to N") {
  std::vector<cplx> x;
  for (int j = 0; j < 16; ++j) x.emplace_back(std::sin(0.3 * j + 1), std::cos(1.7 * j));
  std::vector<cplx> y = x;
  fft::forward(y);
  const auto want = naive_dft(x);
  for (std::size_t k = 0; k < x.size(); ++k) CHECK(std::abs(y[k] - want[k]) < 1e-12);
  fft::inverse(y);
  for (std::size_t k = 0; k < x.size(); ++k) CHECK(std::abs(y[k] / 16.0 - x[k]) < 1e-13);
}

TEST_CASE("convolve multiplies polynomials") {
  const std::vector<cplx> a{1, 2, 3}, b{cplx(0, 1), -1};
  const auto c = fft::convolve(a, b);
  REQUIRE(c.size() == 4);
  const cplx want[] = {cplx(0, 1), cplx(-1, 2), cplx(-2, 3), -3.0};
  for (int k = 0; k < 4; ++k) CHECK(std::abs(c[k] - want[k]) < 1e-12);
}

TEST_CASE("grid rejects sizes that are not powers of two") {
  CHECK_THROWS_AS(CircleGrid(12), Error);
  CHECK_THROWS_AS(CircleGrid(2), Error);
  CHECK(CircleGrid::at_least(100).size() == 128);
  CHECK(std::abs(CircleGrid(8).node(2) - cplx(0, 1)) < 1e-15);
}

TEST_CASE("coefficients of simple boundary functions on an 8-point grid") {
  const CircleGrid g(8);
  auto one = to_coeffs(sample([](cplx) { return cplx(1); }, g), 1);
  CHECK(std::abs(one[0] - 1.0) < 1e-15);
  CHECK(std::abs(one[1]) < 1e-15);
  CHECK(std::abs(one[-1]) < 1e-15);

  auto id = to_coeffs(sample([](cplx z) { return z; }, g), 1);
  CHECK(std::abs(id[1] - 1.0) < 1e-15);
  CHECK(std::abs(id[0]) < 1e-15);
  CHECK(std::abs(id[-1]) < 1e-15);

  auto sq = to_coeffs(sample([](cplx z) { return std::norm(1.0 + z); }, g), 1);
  CHECK(std::abs(sq[0] - 2.0) < 1e-14);
  CHECK(std::abs(sq[1] - 1.0) < 1e-14);
  CHECK(std::abs(sq[-1] - 1.0) < 1e-14);
}

TEST_CASE("conjugate function of classical pairs") {
  const TrigCoeffs cos_t({0.5, 0, 0.5});
  const TrigCoeffs v = conjugate_function(cos_t);
  // sin t = (z - conj z)/(2i)
  CHECK(std::abs(v[1] - cplx(0, -0.5)) < 1e-15);
  CHECK(std::abs(v[-1] - cplx(0, 0.5)) < 1e-15);
  CHECK(std::abs(v[0]) < 1e-15);

  const TrigCoeffs c1(std::vector<cplx>{1.0});
  CHECK(conjugate_function(c1).l2_norm() < 1e-15);

  const TrigCoeffs sin_t({cplx(0, 0.5), 0, cplx(0, -0.5)});
  const TrigCoeffs w = conjugate_function(sin_t);
  CHECK(std::abs(w[1] + 0.5) < 1e-15);
  CHECK(std::abs(w[-1] + 0.5) < 1e-15);
}

TEST_CASE("Riesz projection keeps the analytic part") {
  const auto p = riesz_projection(TrigCoeffs({1, 0, 1}));
  CHECK(p.degree() == 1);
  CHECK(std::abs(p[1] - 1.0) < 1e-15);
  CHECK(std::abs(p[0]) < 1e-15);
  CHECK(std::abs(riesz_projection(TrigCoeffs(std::vector<cplx>{1.0}))[0] - 1.0) < 1e-15);
  const auto q = riesz_projection(TrigCoeffs({1, 2, 1}));
  CHECK(std::abs(q[0] - 2.0) < 1e-15);
  CHECK(std::abs(q[1] - 1.0) < 1e-15);
}

TEST_CASE("Lp norms against closed forms") {
  const CircleGrid g(256);
  const auto one = sample([](cplx) { return cplx(1); }, g);
  for (double p : {1.0, 2.0, 3.5, infinity}) CHECK(std::abs(lp_norm(one, p) - 1.0) < 1e-14);
  const auto f = sample([](cplx z) { return 1.0 + z; }, g);
  CHECK(std::abs(lp_norm(f, 2) - std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(lp_norm(f, 4) - std::pow(6.0, 0.25)) < 1e-14);
  CHECK(std::abs(lp_norm(f, infinity) - 2.0) < 1e-14);
  // |1 + e^{it}| = 2|cos(t/2)| has mean 4/pi; the kink needs refinement.
  const RefinedNorm l1 = lp_norm_refined([](cplx z) { return 1.0 + z; }, 1.0, 1024, 1e-10);
  CHECK(std::abs(l1.value - 4 / pi) < 1e-8);
}

TEST_CASE("weak L1 quasinorm") {
  const CircleGrid g(512);
  CHECK(std::abs(weak_l1_quasinorm(sample([](cplx) { return cplx(0.7, 0.7); }, g)) - std::sqrt(0.98)) < 1e-12);
  CHECK(weak_l1_quasinorm(sample([](cplx) { return cplx(0); }, g)) == 0.0);
  auto h = [](cplx z) { return cplx(1.0 / std::norm(1.0 - 0.9 * z)); };
  const double coarse = weak_l1_quasinorm(sample(h, g));
  const double fine = weak_l1_quasinorm(sample(h, g.refined()));
  CHECK(std::isfinite(coarse));
  CHECK(std::abs(fine - coarse) / fine < 0.05);
}

TEST_CASE("conjugation and quasi-square constants") {
  CHECK(conjugation_constant(2) == 1.0);
  CHECK(b_constant(4) == 2.0);
  CHECK(std::abs(conjugation_constant(4) - (1 + std::sqrt(2.0))) < 1e-14);
  // Duality A_p = A_{p'}.
  CHECK(std::abs(conjugation_constant(3) - conjugation_constant(1.5)) < 1e-14);
  CHECK_THROWS_AS(conjugation_constant(1.0), Error);
  CHECK_THROWS_AS(b_constant(2.0), Error);
}

TEST_CASE("Poisson and Herglotz extensions") {
  const TrigCoeffs one(std::vector<cplx>{1.0});
  CHECK(std::abs(poisson_extend(one, cplx(0.3, -0.4)) - 1.0) < 1e-15);
  const TrigCoeffs u({1, 2, 1});  // 2 + 2 cos t
  CHECK(std::abs(poisson_extend(u, 0) - 2.0) < 1e-15);
  CHECK(std::abs(poisson_extend(u, 0.5) - 3.0) < 1e-15);
  // Herglotz of 2 + 2cos t is 2 + 2z.
  CHECK(std::abs(herglotz_extend(u, cplx(0.2, 0.1)) - (2.0 + 2.0 * cplx(0.2, 0.1))) < 1e-15);
  CHECK_THROWS_AS(herglotz_extend(u, 1.0), Error);
}

TEST_CASE("band-limited samples round-trip and satisfy Parseval") {
  const CircleGrid g(64);
  std::vector<cplx> coeffs(21);
  for (int k = 0; k < 21; ++k) coeffs[k] = cplx(std::cos(k * 0.7), std::sin(k * k * 0.01));
  const TrigCoeffs c(coeffs);
  const BoundarySamples s = sample(c, g);
  // Oracle: direct evaluation of sum c_k z^k.
  for (std::size_t j = 0; j < g.size(); j += 7) {
    cplx want{};
    for (int k = -10; k <= 10; ++k) want += coeffs[k + 10] * std::pow(g.node(j), k);
    CHECK(std::abs(s.values[j] - want) < 1e-12);
  }
  const TrigCoeffs back = to_coeffs(s, 10);
  for (long k = -10; k <= 10; ++k) CHECK(std::abs(back[k] - c[k]) < 1e-13);
  double e = 0;
  for (auto x : s.values) e += std::norm(x);
  CHECK(std::abs(e / 64 - c.l2_norm() * c.l2_norm()) < 1e-12);
}
