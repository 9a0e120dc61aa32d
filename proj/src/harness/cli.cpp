#include "fairdiv/harness/cli.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include <CLI11.hpp>

#include "fairdiv/eating.hpp"
#include "fairdiv/error.hpp"
#include "fairdiv/harness/corpus.hpp"
#include "fairdiv/harness/io.hpp"
#include "fairdiv/mechanisms.hpp"
#include "fairdiv/parallel.hpp"
#include "fairdiv/properties.hpp"

namespace fairdiv::harness {

namespace p = properties;
using mechanisms::Mechanism;

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

const Mechanism& require_mechanism(const std::string& name) {
  if (name.empty()) throw UsageError("--mechanism is required");
  const Mechanism* m = mechanisms::find_mechanism(name);
  if (m == nullptr) {
    std::string known;
    for (const auto& candidate : mechanisms::all_mechanisms()) known += " " + std::string(candidate.name);
    throw UsageError("unknown mechanism \"" + name + "\"; known:" + known);
  }
  return *m;
}

InstanceDocument require_instance(const std::string& path) {
  if (path.empty()) throw UsageError("--instance is required");
  return read_instance(path);
}

bool is_prefix_form(const Instance& inst) {
  try {
    mechanisms::prefix_endpoints(inst);
    return true;
  } catch (const Error&) {
    return false;
  }
}

p::ReportFamily pick_family(const RunConfig& config, const Instance& inst) {
  if (!config.family) return is_prefix_form(inst) ? p::ReportFamily::Prefix : p::ReportFamily::Subsets;
  const auto family = p::parse_report_family(*config.family);
  if (!family) throw UsageError("unknown family \"" + *config.family + "\" (prefix or subsets)");
  return *family;
}

void emit(std::ostream& out, const Json& record) { out << record.dump() << '\n'; }

void print_report(std::ostream& out, const RunConfig& config, const p::PropertyReport& report,
                  const std::vector<std::string>& ids, Json extra = Json::object()) {
  Json j = report_to_json(report, ids);
  if (config.format == OutputFormat::Machine) {
    for (auto& [k, v] : extra.items()) j[k] = v;
    emit(out, j);
    return;
  }
  out << report.property;
  for (auto& [k, v] : extra.items()) out << " [" << k << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "]";
  out << ": " << p::to_string(report.verdict);
  if (report.witness) out << "  " << j["witness"].dump();
  out << '\n';
}

// Lexicographic permutations of 0..n-1 except the identity.
std::vector<std::vector<std::size_t>> non_identity_permutations(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  while (std::next_permutation(perm.begin(), perm.end())) out.push_back(perm);
  return out;
}

p::PropertyReport anonymity_over_all(const Mechanism& mech, const Instance& inst) {
  if (inst.agents() > 6) throw UsageError("anonymity check limited to 6 agents");
  for (const auto& perm : non_identity_permutations(inst.agents())) {
    auto report = p::check_anonymity(mech, inst, perm);
    if (!report.holds()) return report;
  }
  return {"anonymity", p::Verdict::Holds, std::nullopt};
}

// Allocation-level reports in a fixed order; Pareto only applies to full
// allocations.
std::vector<p::PropertyReport> allocation_reports(const Instance& inst, const Allocation& alloc) {
  std::vector<p::PropertyReport> reports{p::check_envy_free(inst, alloc), p::check_proportional(inst, alloc)};
  auto fc = p::check_full_and_connected(alloc);
  if (fc.full.holds()) reports.push_back(p::check_pareto(inst, alloc));
  reports.push_back(std::move(fc.full));
  reports.push_back(std::move(fc.connected));
  return reports;
}

std::string agent_list(const Instance& inst, const std::vector<std::string>& ids) {
  std::string out;
  for (std::size_t i = 0; i < inst.agents(); ++i) {
    out += (i ? ", " : "") + ids[i] + " " + inst.valuations[i].desired.to_string();
  }
  return out;
}

int cmd_allocate(const RunConfig& config, std::ostream& out) {
  const Mechanism& mech = require_mechanism(config.mechanism);
  const InstanceDocument doc = require_instance(config.instance_path);
  const Allocation alloc = mech.run(doc.instance);

  std::optional<eating::Result> eaten;
  if (config.trace) {
    if (mech.id != mechanisms::MechanismId::Mech1Cake) throw UsageError("--trace is only available for mech1");
    eaten = eating::simulate(doc.instance.valuations[0], doc.instance.valuations[1]);
  }

  if (config.format == OutputFormat::Machine) {
    Json record{{"record", "allocation"}, {"mechanism", std::string(mech.name)}};
    const Json body = allocation_to_json(doc, alloc);
    for (const auto& [k, v] : body.items()) record[k] = v;
    emit(out, record);
    if (eaten) {
      Json t{{"record", "eating"}};
      const Json body = allocation_to_json(doc, eaten->allocation);
      for (const auto& [k, v] : body.items()) t[k] = v;
      t["trace"] = trace_to_json(eaten->trace);
      emit(out, t);
    }
    return exit_code::ok;
  }

  out << mech.name << " on a " << to_string(doc.instance.kind) << " with " << doc.instance.agents() << " agents\n";
  for (std::size_t i = 0; i < alloc.agents(); ++i) {
    out << "  " << doc.ids[i] << "  " << alloc.pieces[i] << "  value "
        << value(doc.instance.valuations[i], alloc.pieces[i]) << '\n';
  }
  if (alloc.free_disposal) out << "  unallocated  " << complement(covered(alloc)) << '\n';
  if (eaten) {
    out << "eating simulation, meeting point " << eaten->trace.meeting_point << '\n';
    for (const auto& e : eaten->trace.events) {
      out << "  t=" << e.time << "  a" << e.agent << "  " << eating::to_string(e.kind) << "  at " << e.position
          << '\n';
    }
    for (std::size_t i = 0; i < 2; ++i) out << "  " << doc.ids[i] << "  " << eaten->allocation.pieces[i] << '\n';
  }
  return exit_code::ok;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const Mechanism& mech = require_mechanism(config.mechanism);
  const InstanceDocument doc = require_instance(config.instance_path);
  const Instance& inst = doc.instance;
  const Allocation alloc = mech.run(inst);

  std::vector<p::PropertyReport> reports = allocation_reports(inst, alloc);
  reports.push_back(anonymity_over_all(mech, inst));
  if (config.paired_path) {
    const InstanceDocument paired = read_instance(*config.paired_path);
    reports.push_back(p::check_position_oblivious(mech, inst, paired.instance));
  }
  if (config.grid) {
    const auto family = pick_family(config, inst);
    const p::SearchOptions options{config.subset_cap, config.workers};
    std::optional<p::PropertyReport> truthful;
    for (std::size_t i = 0; i < inst.agents() && !truthful; ++i) {
      auto r = p::search_deviations(mech, inst, i, *config.grid, family, options);
      if (!r.holds()) truthful = std::move(r);
    }
    reports.push_back(truthful ? std::move(*truthful) : p::PropertyReport{"truthful", p::Verdict::Holds, std::nullopt});
  }

  if (config.format == OutputFormat::Text) {
    out << mech.name << " on " << agent_list(inst, doc.ids) << '\n';
  }
  bool all_hold = true;
  for (const auto& r : reports) {
    print_report(out, config, r, doc.ids);
    all_hold = all_hold && r.holds();
  }
  return all_hold ? exit_code::ok : exit_code::violation;
}

int cmd_deviate(const RunConfig& config, std::ostream& out) {
  const Mechanism& mech = require_mechanism(config.mechanism);
  const InstanceDocument doc = require_instance(config.instance_path);
  if (!config.grid) throw UsageError("--grid is required");
  const auto family = pick_family(config, doc.instance);
  const p::SearchOptions options{config.subset_cap, config.workers};

  std::vector<std::size_t> agents;
  if (config.agent) {
    const auto it = std::find(doc.ids.begin(), doc.ids.end(), *config.agent);
    if (it == doc.ids.end()) throw UsageError("no agent with id \"" + *config.agent + "\"");
    agents.push_back(static_cast<std::size_t>(it - doc.ids.begin()));
  } else {
    agents.resize(doc.instance.agents());
    std::iota(agents.begin(), agents.end(), std::size_t{0});
  }

  bool all_hold = true;
  for (const auto i : agents) {
    const auto report = p::search_deviations(mech, doc.instance, i, *config.grid, family, options);
    print_report(out, config, report, doc.ids,
                 {{"agent", doc.ids[i]}, {"family", std::string(p::to_string(family))}, {"grid", *config.grid}});
    all_hold = all_hold && report.holds();
  }
  return all_hold ? exit_code::ok : exit_code::violation;
}

int cmd_reproduce(const RunConfig& config, std::ostream& out) {
  bool all_pass = true;
  for (const auto& c : run_corpus()) {
    all_pass = all_pass && c.passed();
    if (config.format == OutputFormat::Machine) {
      Json checks = Json::array();
      for (const auto& ch : c.checks) {
        checks.push_back({{"what", ch.what}, {"expected", ch.expected}, {"actual", ch.actual}, {"ok", ch.ok()}});
      }
      emit(out, {{"case", c.name}, {"status", c.passed() ? "pass" : "diff"}, {"checks", std::move(checks)}});
      continue;
    }
    out << (c.passed() ? "pass  " : "DIFF  ") << c.name << '\n';
    for (const auto& ch : c.checks) {
      if (ch.ok()) continue;
      out << "      " << ch.what << ": expected " << ch.expected << ", got " << ch.actual << '\n';
    }
  }
  return all_pass ? exit_code::ok : exit_code::violation;
}

struct Tally {
  std::string property;
  bool claimed = false;
  std::size_t holds = 0;
  std::size_t violated = 0;
  std::size_t skipped = 0;
  std::optional<std::size_t> first;
  std::optional<p::PropertyReport> first_report;
};

int cmd_enumerate(const RunConfig& config, std::ostream& out) {
  const Mechanism& mech = require_mechanism(config.mechanism);
  if (!config.grid || *config.grid == 0) throw UsageError("--grid must be at least 1");
  const std::size_t n = config.agents ? *config.agents : mech.required_agents.value_or(0);
  if (n == 0) throw UsageError("--agents is required for " + std::string(mech.name));
  if (mech.required_agents && n != *mech.required_agents) {
    throw UsageError(std::string(mech.name) + " needs exactly " + std::to_string(*mech.required_agents) + " agents");
  }
  const std::size_t d = *config.grid;
  const auto family = config.family ? pick_family(config, Instance{}) : p::ReportFamily::Prefix;

  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (count > 10'000'000 / (d + 1)) throw UsageError("too many instances to enumerate");
    count *= d + 1;
  }

  const auto instance_at = [&](std::size_t index) {
    std::vector<Rational> xs;
    for (std::size_t i = 0; i < n; ++i) {
      xs.emplace_back(static_cast<std::int64_t>(index % (d + 1)), static_cast<std::int64_t>(d));
      index /= d + 1;
    }
    std::reverse(xs.begin(), xs.end());  // first agent varies slowest
    return Instance::prefix(mech.kind, xs);
  };

  const std::vector<std::pair<std::string, bool>> properties{
      {"envy_free", mech.claims.envy_free},     {"proportional", mech.claims.proportional},
      {"pareto", mech.claims.pareto},           {"full_allocation", mech.claims.full_allocation},
      {"connected", mech.claims.connected},     {"truthful", mech.claims.truthful}};

  // Per-instance slots keep the outcome independent of the worker count.
  std::vector<std::vector<std::optional<p::PropertyReport>>> results(count);
  const p::SearchOptions inner{config.subset_cap, 1};
  parallel_for(count, config.workers, [&](std::size_t index) {
    const Instance inst = instance_at(index);
    const Allocation alloc = mech.run(inst);
    auto& slot = results[index];
    slot.resize(properties.size());
    for (auto& r : allocation_reports(inst, alloc)) {
      for (std::size_t k = 0; k < properties.size(); ++k) {
        if (properties[k].first == r.property) slot[k] = std::move(r);
      }
    }
    std::optional<p::PropertyReport> truthful;
    for (std::size_t i = 0; i < n && !truthful; ++i) {
      auto r = p::search_deviations(mech, inst, i, d, family, inner);
      if (!r.holds()) truthful = std::move(r);
    }
    slot.back() = truthful ? std::move(*truthful) : p::PropertyReport{"truthful", p::Verdict::Holds, std::nullopt};
  });

  std::vector<Tally> tallies;
  for (const auto& [name, claimed] : properties) {
    Tally t;
    t.property = name;
    t.claimed = claimed;
    tallies.push_back(std::move(t));
  }
  for (std::size_t index = 0; index < count; ++index) {
    for (std::size_t k = 0; k < properties.size(); ++k) {
      auto& t = tallies[k];
      const auto& r = results[index][k];
      if (!r) {
        ++t.skipped;
      } else if (r->holds()) {
        ++t.holds;
      } else {
        ++t.violated;
        if (!t.first) {
          t.first = index;
          t.first_report = *r;
        }
      }
    }
  }

  bool claims_hold = true;
  for (const auto& t : tallies) claims_hold = claims_hold && !(t.claimed && t.violated > 0);

  const auto ids = with_default_ids(instance_at(0)).ids;
  if (config.format == OutputFormat::Machine) {
    for (const auto& t : tallies) {
      Json record{{"record", "property"}, {"property", t.property}, {"claimed", t.claimed},
                  {"holds", t.holds},     {"violated", t.violated}, {"skipped", t.skipped}};
      if (t.first) {
        record["first_violation"] = {{"instance", to_json(with_default_ids(instance_at(*t.first)))},
                                     {"report", report_to_json(*t.first_report, ids)}};
      }
      emit(out, record);
    }
    emit(out, {{"record", "enumerate"},
               {"mechanism", std::string(mech.name)},
               {"agents", n},
               {"grid", d},
               {"family", std::string(p::to_string(family))},
               {"instances", count},
               {"status", claims_hold ? "claims hold" : "claim violated"}});
  } else {
    out << mech.name << ": " << count << " prefix instances, " << n << " agents, endpoints on multiples of 1/" << d
        << ", " << p::to_string(family) << " misreports\n";
    for (const auto& t : tallies) {
      out << "  " << t.property << (t.claimed ? " (claimed)" : "") << ": " << t.holds << " hold, " << t.violated
          << " violated";
      if (t.skipped) out << ", " << t.skipped << " not applicable";
      out << '\n';
      if (t.first) {
        const Instance inst = instance_at(*t.first);
        out << "    first: " << agent_list(inst, ids) << "  " << report_to_json(*t.first_report, ids)["witness"].dump()
            << '\n';
      }
    }
    out << (claims_hold ? "all claimed properties hold\n" : "a claimed property is violated\n");
  }
  return claims_hold ? exit_code::ok : exit_code::violation;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Allocate: return cmd_allocate(config, out);
      case Command::Verify: return cmd_verify(config, out);
      case Command::Deviate: return cmd_deviate(config, out);
      case Command::Reproduce: return cmd_reproduce(config, out);
      case Command::Enumerate: return cmd_enumerate(config, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return exit_code::usage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact truthful cake cutting and chore division mechanisms with property checks", "fairdiv"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "text";
  std::size_t grid = 0;
  std::size_t agents = 0;
  std::string family;
  std::string agent;
  std::string paired;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or machine (line-delimited JSON)")
        ->check(CLI::IsMember({"text", "machine"}));
  };
  const auto add_mechanism = [&](CLI::App* sub) {
    sub->add_option("--mechanism", config.mechanism, "mech1, mech2, mech3, mech4, cut-and-choose, "
                                                     "connected-free-disposal")
        ->required();
  };
  const auto add_search = [&](CLI::App* sub) {
    sub->add_option("--family", family, "misreport family: prefix or subsets");
    sub->add_option("--workers", config.workers, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--subset-cap", config.subset_cap, "largest number of cells for the subsets family");
  };

  auto* allocate = app.add_subcommand("allocate", "run a mechanism and print the allocation");
  add_mechanism(allocate);
  allocate->add_option("--instance", config.instance_path, "instance JSON file")->required();
  allocate->add_flag("--trace", config.trace, "also run the eating simulation (mech1 only)");
  add_common(allocate);

  auto* verify = app.add_subcommand("verify", "run every checker on a mechanism's output");
  add_mechanism(verify);
  verify->add_option("--instance", config.instance_path, "instance JSON file")->required();
  verify->add_option("--paired", paired, "second instance for the position obliviousness check");
  verify->add_option("--grid", grid, "also search misreports on multiples of 1/D")->check(CLI::PositiveNumber);
  add_search(verify);
  add_common(verify);

  auto* deviate = app.add_subcommand("deviate", "search for profitable misreports");
  add_mechanism(deviate);
  deviate->add_option("--instance", config.instance_path, "instance JSON file")->required();
  deviate->add_option("--grid", grid, "grid denominator D")->required()->check(CLI::PositiveNumber);
  deviate->add_option("--agent", agent, "only this agent id");
  add_search(deviate);
  add_common(deviate);

  auto* reproduce = app.add_subcommand("reproduce", "check the reference examples against stored values");
  add_common(reproduce);

  auto* enumerate = app.add_subcommand("enumerate", "sweep every prefix instance on a grid");
  add_mechanism(enumerate);
  enumerate->add_option("--agents", agents, "number of agents")->check(CLI::PositiveNumber);
  enumerate->add_option("--grid", grid, "grid denominator D")->required()->check(CLI::PositiveNumber);
  add_search(enumerate);
  add_common(enumerate);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }

  if (allocate->parsed()) config.command = Command::Allocate;
  if (verify->parsed()) config.command = Command::Verify;
  if (deviate->parsed()) config.command = Command::Deviate;
  if (reproduce->parsed()) config.command = Command::Reproduce;
  if (enumerate->parsed()) config.command = Command::Enumerate;

  config.format = format == "machine" ? OutputFormat::Machine : OutputFormat::Text;
  if (grid > 0) config.grid = grid;
  if (agents > 0) config.agents = agents;
  if (!family.empty()) config.family = family;
  if (!agent.empty()) config.agent = agent;
  if (!paired.empty()) config.paired_path = paired;
  return run(config, out, err);
}

}  // namespace fairdiv::harness
