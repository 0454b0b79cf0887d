#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <clocale>
#include <cmath>

#include "qsq/error.hpp"
#include "qsq/io.hpp"
#include "qsq/random.hpp"
#include "qsq/verification.hpp"

using namespace qsq;

TEST_CASE("JSON round trips") {
  const AnalyticPoly p{cplx(1, 2), 3.0};
  const AnalyticPoly p2 = poly_from_json(Json::parse(to_json(p).dump()));
  CHECK(p2.degree() == 1);
  CHECK(p2[0] == cplx(1, 2));

  const TrigCoeffs u({cplx(0.5, 0), 1, cplx(0.5, 0)});
  const Json ju = to_json(u);
  CHECK(ju["band"] == 1);
  CHECK(trig_from_json(ju)[-1] == cplx(0.5));

  const BlaschkeProduct b(cplx(0, 1), {cplx(0.5), cplx(0, -0.2)});
  const BlaschkeProduct b2 = blaschke_from_json(Json::parse(to_json(b).dump()));
  CHECK(b2.constant() == cplx(0, 1));
  CHECK(b2.zeros()[1] == cplx(0, -0.2));

  const RationalFn r(AnalyticPoly{1.0}, AnalyticPoly{1.0, -0.5});
  CHECK(std::abs(rational_from_json(to_json(r))(0.5) - 1 / 0.75) < 1e-15);

  const DiskMeasure m({{cplx(0.1, 0.2), 0.5}});
  const DiskMeasure m2 = measure_from_json(to_json(m));
  CHECK(m2.atoms()[0].w == 0.5);
}

TEST_CASE("malformed inputs are rejected with a code") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::invalid_argument;
  };
  CHECK(code_of([] { poly_from_json(Json::parse(R"({"coefs": []})")); }) == ErrorCode::malformed_input);
  CHECK(code_of([] { poly_from_json(Json::parse(R"({"coeffs": [[1]]})")); }) == ErrorCode::malformed_input);
  CHECK(code_of([] { trig_from_json(Json::parse(R"({"band": 1, "coeffs": [1, 2]})")); }) ==
        ErrorCode::malformed_input);
  CHECK(code_of([] { measure_from_json(Json::parse(R"({"atoms": [{"z": [0, 0]}]})")); }) ==
        ErrorCode::malformed_input);
  CHECK(code_of([] { read_json_file("/nonexistent/file.json"); }) == ErrorCode::malformed_input);
}

TEST_CASE("doubles are written with 17 significant digits and a dot") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  CHECK(std::stod(format_double(M_PI)) == M_PI);
  if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8")) {
    CHECK(format_double(0.5) == "0.5");
    std::setlocale(LC_NUMERIC, "C");
  }
}

TEST_CASE("seed derivation is deterministic and spreads") {
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  CHECK(derive_seed(1, 2) != derive_seed(2, 2));
  Sampler a(5), b(5);
  CHECK(a.gaussian() == b.gaussian());
}

TEST_CASE("suite configuration") {
  SuiteConfig c;
  c.grid = 8;
  CHECK_THROWS_AS(run_criterion(2, c), Error);
  CHECK_THROWS_AS(run_criterion(11, SuiteConfig{}), Error);
  const auto r1 = run_criterion(1, SuiteConfig::quick());
  const auto r2 = run_criterion(1, SuiteConfig::quick());
  CHECK(r1.pass);
  CHECK(suite_report(SuiteConfig::quick(), {r1}).dump() == suite_report(SuiteConfig::quick(), {r2}).dump());
}
