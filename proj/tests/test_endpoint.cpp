#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "qsq/endpoint.hpp"
#include "qsq/error.hpp"
#include "qsq/quasi_square.hpp"
#include "qsq/random.hpp"

using namespace qsq;
using std::numbers::pi;

TEST_CASE("sup-norm map") {
  const CircleGrid g(256);
  const auto two = sup_norm_square(sample([](cplx) { return cplx(2); }, g));
  for (auto v : two.values) CHECK(std::abs(v - 4.0) < 1e-15);
  const auto z = sup_norm_square(sample([](cplx w) { return w; }, g));
  for (std::size_t j = 0; j < g.size(); ++j) CHECK(std::abs(z.values[j] - g.node(j)) < 1e-15);
  const auto s = sup_norm_square(sample([](cplx w) { return 1.0 + w; }, g));
  CHECK(std::abs(lp_norm(s, infinity) - 4.0) < 1e-14);
  for (std::size_t j = 0; j < g.size(); ++j) CHECK(std::abs(s.values[j] - 2.0 * (1.0 + g.node(j))) < 1e-14);
}

TEST_CASE("norms of f_a") {
  auto n0 = fa_norms(0.0);
  CHECK(std::abs(n0.l2_squared - 1) < 1e-15);
  CHECK(std::abs(n0.l4_fourth - 1) < 1e-15);
  auto n = fa_norms(0.5);
  CHECK(std::abs(n.l2_squared - 4.0 / 3) < 1e-15);
  CHECK(std::abs(n.l4_fourth - 80.0 / 27) < 1e-14);
  // Oracle: partial sums of sum (n+1)^2 x^n with x = 1/4.
  double s = 0;
  for (int k = 0; k < 200; ++k) s += (k + 1.0) * (k + 1.0) * std::pow(0.25, k);
  CHECK(std::abs(n.l4_fourth - s) < 1e-13);
  auto n9 = fa_norms(0.9);
  CHECK(n9.l2_error() < 1e-8);
  CHECK(n9.l4_error() < 1e-8);
}

TEST_CASE("Hardy lower bound") {
  const cplx c1[] = {1.0};
  CHECK(std::abs(hardy_lower_bound(c1).value - 1 / pi) < 1e-15);
  const cplx c2[] = {1.0, 1.0};
  CHECK(std::abs(hardy_lower_bound(c2).value - 1.5 / pi) < 1e-15);
  CHECK(hardy_lower_bound(c2).value <= 4 / pi);

  const QuasiSquare h = quasi_square(f_a(0.9), CircleGrid(8192));
  const HardyBound b = hardy_lower_bound(h.series.coeffs());
  const double l1 = l1_norm_refined([&h](cplx z) { return h(z); }, CircleGrid(8192)).value;
  CHECK(b.value + b.tail <= l1);
}

TEST_CASE("endpoint samples") {
  CHECK_THROWS_AS(endpoint_sample(0.0), Error);
  CHECK_THROWS_AS(endpoint_sample(0.3), Error);
  const EndpointSample s = endpoint_sample(0.5);
  CHECK(std::abs(s.fa_l2_squared - 4.0 / 3) < 1e-14);
  CHECK(s.ratio >= 1);
  // h_a = lambda + mu f_a with lambda = -1/(1-a^2), mu = 2/(1-a^2).
  CHECK(std::abs(s.lambda + 4.0 / 3) < 1e-9);
  CHECK(std::abs(s.mu - 8.0 / 3) < 1e-9);
  CHECK(s.parseval_error() < 1e-8);
  CHECK(s.span_residual < 1e-8);
  CHECK(s.membership < 1e-8);
  const auto c = endpoint_implication(0.9, s.lambda, s.mu);
  CHECK(c.parseval_error() < 1e-8);
}

TEST_CASE("Parseval for lambda + mu f_a") {
  const auto h1 = endpoint_implication(0.7, 0.0, 1.0);
  CHECK(std::abs(h1.parseval_closed - 1 / (1 - 0.49)) < 1e-14);
  CHECK(h1.parseval_error() < 1e-10);
  const auto one = endpoint_implication(0.7, 1.0, 0.0);
  CHECK(std::abs(one.parseval_closed - 1) < 1e-15);
}

TEST_CASE("the blow-up sweep is increasing") {
  std::vector<cplx> as;
  for (int k = 2; k <= 7; ++k) as.emplace_back(1 - std::ldexp(1.0, -k), 0);
  const auto sw = endpoint_blowup_sweep(as);
  CHECK(sw.increasing);
  for (const auto& r : sw.rows) {
    CHECK(r.hardy.value <= r.l1_norm);
    CHECK(r.grid_size * (1 - std::abs(r.a)) >= 64);
  }
}
