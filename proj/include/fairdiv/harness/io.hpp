#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fairdiv/eating.hpp"
#include "fairdiv/model.hpp"
#include "fairdiv/properties.hpp"

namespace fairdiv::harness {

using Json = nlohmann::ordered_json;

/// An instance together with the agent ids it was read with.
struct InstanceDocument {
  Instance instance;
  std::vector<std::string> ids;
};

/// {"resource":"cake"|"chore","agents":[{"id":..,"intervals":[["p/q","p/q"],..]},..]}
/// Rationals must be strings. ParseError on anything malformed (including
/// an empty agent list), OutOfRange/MalformedInterval from canonicalization,
/// DuplicateAgentId when two agents share an id.
InstanceDocument parse_instance(std::string_view document);
InstanceDocument read_instance(const std::filesystem::path& path);

/// Ids a1..an.
InstanceDocument with_default_ids(Instance inst);

Json to_json(const Rational& r);
Json to_json(const IntervalSet& s);
Json to_json(const InstanceDocument& doc);

/// {"pieces":[{"id","intervals","value"}]}, each value under the agent's own
/// valuation.
Json allocation_to_json(const InstanceDocument& doc, const Allocation& alloc);

/// {"property","verdict","witness"}; witness is null when the property holds.
Json report_to_json(const properties::PropertyReport& report, const std::vector<std::string>& ids);

Json trace_to_json(const eating::Trace& trace);

}  // namespace fairdiv::harness
