#include "qsq/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "qsq/error.hpp"

namespace qsq {
namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::malformed_input, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) malformed(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::vector<cplx> complex_array(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<cplx> v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(complex_from_json(e));
  return v;
}

Json complex_array_json(std::span<const cplx> v) {
  Json a = Json::array();
  for (auto z : v) a.push_back(complex_to_json(z));
  return a;
}

}  // namespace

Json complex_to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

cplx complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  malformed("expected a complex number [re, im], got " + j.dump());
}

Json to_json(const AnalyticPoly& f) { return Json{{"coeffs", complex_array_json(f.coeffs())}}; }

Json to_json(const TrigCoeffs& u) { return Json{{"band", u.band()}, {"coeffs", complex_array_json(u.coeffs())}}; }

Json to_json(const BlaschkeProduct& theta) {
  return Json{{"constant", complex_to_json(theta.constant())}, {"zeros", complex_array_json(theta.zeros())}};
}

Json to_json(const RationalFn& f) {
  return Json{{"numerator", complex_array_json(f.numerator().coeffs())},
              {"denominator", complex_array_json(f.denominator().coeffs())}};
}

Json to_json(const DiskMeasure& mu) {
  Json atoms = Json::array();
  for (const auto& a : mu.atoms()) atoms.push_back(Json{{"z", complex_to_json(a.z)}, {"w", a.w}});
  return Json{{"atoms", atoms}};
}

AnalyticPoly poly_from_json(const Json& j) {
  if (j.is_array()) return AnalyticPoly(complex_array(j, "coeffs"));
  return AnalyticPoly(complex_array(field(j, "coeffs"), "coeffs"));
}

TrigCoeffs trig_from_json(const Json& j) {
  auto c = complex_array(field(j, "coeffs"), "coeffs");
  const Json& band = field(j, "band");
  if (!band.is_number_unsigned() && !(band.is_number_integer() && band.get<long>() >= 0))
    malformed("band must be a nonnegative integer");
  if (c.size() != 2 * band.get<std::size_t>() + 1) malformed("coeffs must have 2*band+1 entries");
  return TrigCoeffs(std::move(c));
}

BlaschkeProduct blaschke_from_json(const Json& j) {
  const cplx c = j.is_object() && j.contains("constant") ? complex_from_json(j.at("constant")) : cplx{1.0};
  return BlaschkeProduct(c, complex_array(field(j, "zeros"), "zeros"));
}

RationalFn rational_from_json(const Json& j) {
  return RationalFn(AnalyticPoly(complex_array(field(j, "numerator"), "numerator")),
                    AnalyticPoly(complex_array(field(j, "denominator"), "denominator")));
}

DiskMeasure measure_from_json(const Json& j) {
  const Json& atoms = field(j, "atoms");
  if (!atoms.is_array()) malformed("atoms must be an array");
  std::vector<Atom> out;
  for (const auto& a : atoms) {
    const Json& w = field(a, "w");
    if (!w.is_number()) malformed("atom weight must be a number");
    out.push_back({complex_from_json(field(a, "z")), w.get<double>()});
  }
  return DiskMeasure(std::move(out));
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    malformed(path.string() + ": " + e.what());
  }
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace qsq
