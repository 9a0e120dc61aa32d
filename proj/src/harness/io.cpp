#include "fairdiv/harness/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "fairdiv/error.hpp"

namespace fairdiv::harness {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object()) malformed(std::string("expected an object holding \"") + key + "\"");
  const auto it = obj.find(key);
  if (it == obj.end()) malformed(std::string("missing \"") + key + "\"");
  return *it;
}

Rational rational_field(const Json& j) {
  if (!j.is_string()) malformed("rationals must be strings, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

const std::string& id_of(const std::vector<std::string>& ids, std::size_t agent) {
  static const std::string unknown = "?";
  return agent < ids.size() ? ids[agent] : unknown;
}

Json values_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

struct WitnessWriter {
  const std::vector<std::string>& ids;

  Json operator()(const properties::EnvyWitness& w) const {
    return {{"agent", id_of(ids, w.agent)}, {"other", id_of(ids, w.other)},
            {"own_value", to_json(w.own_value)}, {"other_value", to_json(w.other_value)}};
  }
  Json operator()(const properties::ShareWitness& w) const {
    return {{"agent", id_of(ids, w.agent)}, {"value", to_json(w.value)}, {"threshold", to_json(w.threshold)}};
  }
  Json operator()(const properties::AtomWitness& w) const {
    return {{"atom", {to_json(w.atom.left), to_json(w.atom.right)}},
            {"holder", id_of(ids, w.holder)},
            {"better_holder", id_of(ids, w.better_holder)}};
  }
  Json operator()(const properties::CoverageWitness& w) const {
    return {{"uncovered", to_json(w.uncovered)}, {"overlap", to_json(w.overlap)}};
  }
  Json operator()(const properties::PieceWitness& w) const {
    return {{"agent", id_of(ids, w.agent)}, {"piece", to_json(w.piece)}};
  }
  Json operator()(const properties::PermutationWitness& w) const {
    Json perm = Json::array();
    for (const auto k : w.permutation) perm.push_back(id_of(ids, k));
    return {{"permutation", std::move(perm)},
            {"original_values", values_to_json(w.original_values)},
            {"permuted_values", values_to_json(w.permuted_values)},
            {"agent", id_of(ids, w.agent)}};
  }
  Json operator()(const properties::PairWitness& w) const {
    return {{"first_values", values_to_json(w.first_values)},
            {"second_values", values_to_json(w.second_values)},
            {"agent", id_of(ids, w.agent)}};
  }
  Json operator()(const properties::DeviationWitness& w) const {
    return {{"agent", id_of(ids, w.agent)},
            {"report", to_json(w.report.desired)},
            {"truthful_value", to_json(w.truthful_value)},
            {"deviating_value", to_json(w.deviating_value)}};
  }
};

}  // namespace

InstanceDocument parse_instance(std::string_view document) {
  Json root;
  try {
    root = Json::parse(document.begin(), document.end());
  } catch (const nlohmann::json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }

  const Json& resource = field(root, "resource");
  if (!resource.is_string()) malformed("\"resource\" must be a string");
  const auto kind = parse_resource_kind(resource.get<std::string>());
  if (!kind) malformed("unknown resource \"" + resource.get<std::string>() + "\"");

  const Json& agents = field(root, "agents");
  if (!agents.is_array()) malformed("\"agents\" must be an array");
  if (agents.empty()) malformed("an instance needs at least one agent");

  InstanceDocument doc;
  doc.instance.kind = *kind;
  std::set<std::string> seen;
  for (const auto& agent : agents) {
    const Json& id = field(agent, "id");
    if (!id.is_string()) malformed("agent ids must be strings");
    if (!seen.insert(id.get<std::string>()).second) {
      throw Error(ErrorCode::DuplicateAgentId, "agent id \"" + id.get<std::string>() + "\" appears twice");
    }
    const Json& intervals = field(agent, "intervals");
    if (!intervals.is_array()) malformed("\"intervals\" must be an array");
    std::vector<Interval> raw;
    for (const auto& pair : intervals) {
      if (!pair.is_array() || pair.size() != 2) malformed("each interval is a pair [left, right]");
      raw.push_back({rational_field(pair[0]), rational_field(pair[1])});
    }
    doc.ids.push_back(id.get<std::string>());
    doc.instance.valuations.push_back({IntervalSet::canonicalize(raw)});
  }
  return doc;
}

InstanceDocument read_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

InstanceDocument with_default_ids(Instance inst) {
  InstanceDocument doc{std::move(inst), {}};
  for (std::size_t i = 0; i < doc.instance.agents(); ++i) doc.ids.push_back("a" + std::to_string(i + 1));
  return doc;
}

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const IntervalSet& s) {
  Json out = Json::array();
  for (const auto& iv : s.intervals()) out.push_back({to_json(iv.left), to_json(iv.right)});
  return out;
}

Json to_json(const InstanceDocument& doc) {
  Json agents = Json::array();
  for (std::size_t i = 0; i < doc.instance.agents(); ++i) {
    agents.push_back({{"id", doc.ids[i]}, {"intervals", to_json(doc.instance.valuations[i].desired)}});
  }
  return {{"resource", std::string(to_string(doc.instance.kind))}, {"agents", std::move(agents)}};
}

Json allocation_to_json(const InstanceDocument& doc, const Allocation& alloc) {
  Json pieces = Json::array();
  for (std::size_t i = 0; i < alloc.agents(); ++i) {
    Json piece{{"id", id_of(doc.ids, i)}, {"intervals", to_json(alloc.pieces[i])}};
    if (i < doc.instance.agents()) piece["value"] = to_json(value(doc.instance.valuations[i], alloc.pieces[i]));
    pieces.push_back(std::move(piece));
  }
  Json out{{"pieces", std::move(pieces)}};
  if (alloc.free_disposal) out["unallocated"] = to_json(complement(covered(alloc)));
  return out;
}

Json report_to_json(const properties::PropertyReport& report, const std::vector<std::string>& ids) {
  Json out{{"property", report.property}, {"verdict", std::string(properties::to_string(report.verdict))}};
  out["witness"] = report.witness ? std::visit(WitnessWriter{ids}, *report.witness) : Json(nullptr);
  return out;
}

Json trace_to_json(const eating::Trace& trace) {
  Json events = Json::array();
  for (const auto& e : trace.events) {
    events.push_back({{"time", to_json(e.time)},
                      {"agent", e.agent},
                      {"kind", std::string(eating::to_string(e.kind))},
                      {"position", to_json(e.position)}});
  }
  Json out{{"events", std::move(events)}, {"meeting_point", to_json(trace.meeting_point)}};
  out["first_stopped"] = trace.first_stopped ? Json(*trace.first_stopped) : Json(nullptr);
  out["phase3"] = {to_json(trace.phase3_first), to_json(trace.phase3_second)};
  return out;
}

}  // namespace fairdiv::harness
