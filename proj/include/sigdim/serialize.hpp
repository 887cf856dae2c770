#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sigdim/classical.hpp"
#include "sigdim/core.hpp"
#include "sigdim/lp.hpp"
#include "sigdim/measurements.hpp"
#include "sigdim/signaling.hpp"

// JSON documents carry "format": 1 and write every rational as a "num/den"
// string (integers without the denominator).
namespace sigdim {

using Json = nlohmann::ordered_json;

/// Malformed document; what() names the offending field.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json system_to_json(const GptSystem& system);
/// Throws SchemaError on a malformed document and InvalidSystem when the
/// data violates a model invariant.
GptSystem system_from_json(const Json& doc);

Json distribution_to_json(const ConditionalDistribution& p);
ConditionalDistribution distribution_from_json(const Json& doc);

Json strategies_to_json(const StrategyList& strategies);
StrategyList strategies_from_json(const Json& doc, std::size_t rows);

Json certificate_to_json(const DecompositionCertificate& cert);
Json certificate_to_json(const WitnessCertificate& cert);

Json orbits_to_json(const std::vector<MeasurementOrbit>& orbits, std::size_t measurement_count);

Json report_to_json(const DimensionReport& report);
Json signaling_to_json(const SignalingResult& result);
/// Table with columns M, #, d, witness value, v, V; one line per report.
std::string signaling_csv(const SignalingResult& result);

/// Reads a JSON file; parse errors become SchemaError naming the path.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sigdim
