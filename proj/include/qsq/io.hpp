#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "qsq/blaschke.hpp"
#include "qsq/embedding.hpp"
#include "qsq/fourier.hpp"

namespace qsq {

using Json = nlohmann::ordered_json;

/// [re, im]. Parsing also accepts a bare real number.
Json complex_to_json(cplx z);
cplx complex_from_json(const Json& j);

Json to_json(const AnalyticPoly& f);        // {"coeffs": [[re,im],...]}
Json to_json(const TrigCoeffs& u);          // {"band": M, "coeffs": [...]} for k = -M..M
Json to_json(const BlaschkeProduct& theta); // {"constant": [re,im], "zeros": [...]}
Json to_json(const RationalFn& f);          // {"numerator": [...], "denominator": [...]}
Json to_json(const DiskMeasure& mu);        // {"atoms": [{"z": [re,im], "w": weight}, ...]}

AnalyticPoly poly_from_json(const Json& j);
TrigCoeffs trig_from_json(const Json& j);
BlaschkeProduct blaschke_from_json(const Json& j);
RationalFn rational_from_json(const Json& j);
DiskMeasure measure_from_json(const Json& j);

/// Parses a file; any I/O or syntax problem becomes a malformed_input error.
Json read_json_file(const std::filesystem::path& path);

/// Shortest round-trip text is not used: always 17 significant digits, '.'
/// as decimal separator, independent of the global locale.
std::string format_double(double x);

}  // namespace qsq
