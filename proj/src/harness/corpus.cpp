#include "fairdiv/harness/corpus.hpp"

#include <algorithm>
#include <functional>

#include "fairdiv/eating.hpp"
#include "fairdiv/mechanisms.hpp"
#include "fairdiv/properties.hpp"

namespace fairdiv::harness {

namespace m = mechanisms;
namespace p = properties;

bool CaseResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok(); });
}

namespace {

IntervalSet seg(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return IntervalSet::segment(Rational(a, b), Rational(c, d));
}

Instance two(ResourceKind kind, IntervalSet w1, IntervalSet w2) { return {kind, {{std::move(w1)}, {std::move(w2)}}}; }

std::string values_text(const std::vector<Rational>& vs) {
  std::string out = "(";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + vs[i].to_string();
  return out + ")";
}

std::string pieces_text(const Allocation& alloc) {
  std::string out;
  for (std::size_t i = 0; i < alloc.agents(); ++i) out += (i ? " | " : "") + alloc.pieces[i].to_string();
  return out;
}

std::string verdict_text(const p::PropertyReport& r) { return std::string(p::to_string(r.verdict)); }

const m::Mechanism& mech(m::MechanismId id) { return m::mechanism(id); }

// The three two-agent cake instances used throughout: equal-L pair and the
// manipulated-median example.
const Instance kHalfAndWhole = two(ResourceKind::Cake, seg(0, 1, 1, 2), IntervalSet::unit());
const Instance kWholeAndHalf = two(ResourceKind::Cake, IntervalSet::unit(), seg(0, 1, 1, 2));
const Instance kRightHalfAndWhole = two(ResourceKind::Cake, seg(1, 2, 1, 1), IntervalSet::unit());
const Instance kQuarterChooser = two(ResourceKind::Cake, IntervalSet::unit(), seg(0, 1, 1, 4));

CaseResult mech1_case(std::string name, const Instance& inst, std::string pieces, std::string values) {
  const Allocation alloc = mech(m::MechanismId::Mech1Cake).run(inst);
  const auto eaten = eating::simulate(inst.valuations[0], inst.valuations[1]);
  return {std::move(name),
          {{"allocation", pieces, pieces_text(alloc)},
           {"values", values, values_text(p::own_values(inst, alloc))},
           {"envy_free", "holds", verdict_text(p::check_envy_free(inst, alloc))},
           {"pareto", "holds", verdict_text(p::check_pareto(inst, alloc))},
           {"eating allocation", pieces, pieces_text(eaten.allocation)}}};
}

}  // namespace

std::vector<CaseResult> run_corpus() {
  std::vector<std::function<CaseResult()>> cases{
      [] {
        return CaseResult{"value of a two-part piece",
                          {{"value", "3/4",
                            value({IntervalSet::unit()},
                                  IntervalSet::canonicalize({{Rational(0), Rational(1, 4)}, {Rational(1, 2), Rational(1)}}))
                                .to_string()}}};
      },
      [] {
        return mech1_case("mech1: agent 1 wants the left half", kHalfAndWhole, "{[0,1/2]} | {[1/2,1]}",
                          "(1/2, 1/2)");
      },
      [] {
        return mech1_case("mech1: agent 2 wants the left half", kWholeAndHalf, "{[0,1/4],[1/2,1]} | {[1/4,1/2]}",
                          "(3/4, 1/4)");
      },
      [] {
        return mech1_case("mech1: agent 1 wants the right half", kRightHalfAndWhole,
                          "{[1/2,3/4]} | {[0,1/2],[3/4,1]}", "(1/4, 3/4)");
      },
      [] {
        const auto& m1 = mech(m::MechanismId::Mech1Cake);
        const auto report = p::check_anonymity(m1, kHalfAndWhole, {1, 0});
        std::string witness = "none";
        if (report.witness) {
          const auto& w = std::get<p::PermutationWitness>(*report.witness);
          witness = values_text(w.original_values) + " vs " + values_text(w.permuted_values);
        }
        return CaseResult{"mech1 is not anonymous",
                          {{"anonymity", "violated", verdict_text(report)},
                           {"values", "(1/2, 1/2) vs (1/4, 3/4)", witness},
                           {"witness re-check", "true",
                            report.witness ? (p::confirms(m1, kHalfAndWhole,
                                                          std::get<p::PermutationWitness>(*report.witness))
                                                  ? "true"
                                                  : "false")
                                           : "false"}}};
      },
      [] {
        const auto& m1 = mech(m::MechanismId::Mech1Cake);
        const auto report = p::check_position_oblivious(m1, kHalfAndWhole, kRightHalfAndWhole);
        std::string witness = "none";
        bool rechecked = false;
        if (report.witness) {
          const auto& w = std::get<p::PairWitness>(*report.witness);
          witness = values_text(w.first_values) + " vs " + values_text(w.second_values);
          rechecked = p::confirms(m1, kHalfAndWhole, kRightHalfAndWhole, w);
        }
        return CaseResult{
            "mech1 is not position oblivious",
            {{"indicator vectors equal", "true",
              p::indicator_vector(kHalfAndWhole) == p::indicator_vector(kRightHalfAndWhole) ? "true" : "false"},
             {"position_oblivious", "violated", verdict_text(report)},
             {"values", "(1/2, 1/2) vs (1/4, 3/4)", witness},
             {"witness re-check", "true", rechecked ? "true" : "false"}}};
      },
      [] {
        const Allocation alloc = mech(m::MechanismId::Mech1Cake).run(kWholeAndHalf);
        const auto report = p::check_full_and_connected(alloc);
        const bool rechecked = report.connected.witness &&
                               p::confirms(alloc, std::get<p::PieceWitness>(*report.connected.witness));
        return CaseResult{"mech1 breaks the connected piece assumption",
                          {{"full_allocation", "holds", verdict_text(report.full)},
                           {"connected", "violated", verdict_text(report.connected)},
                           {"witness re-check", "true", rechecked ? "true" : "false"}}};
      },
      [] {
        const auto& cc = mech(m::MechanismId::CutAndChoose);
        const Allocation alloc = cc.run(kQuarterChooser);
        return CaseResult{"cut and choose, truthful",
                          {{"allocation", "{[1/2,1]} | {[0,1/2]}", pieces_text(alloc)},
                           {"values", "(1/2, 1/4)", values_text(p::own_values(kQuarterChooser, alloc))}}};
      },
      [] {
        const auto& cc = mech(m::MechanismId::CutAndChoose);
        Instance lie = kQuarterChooser;
        lie.valuations[0] = {seg(0, 1, 1, 2)};
        const Allocation alloc = cc.run(lie);
        const auto search = p::search_deviations(cc, kQuarterChooser, 0, 4, p::ReportFamily::Subsets);
        return CaseResult{"cut and choose, agent 1 reports [0,1/2]",
                          {{"allocation", "{[1/4,1]} | {[0,1/4]}", pieces_text(alloc)},
                           {"true value", "3/4", value(kQuarterChooser.valuations[0], alloc.pieces[0]).to_string()},
                           {"deviation search at grid 1/4", "violated", verdict_text(search)}}};
      },
      [] {
        const auto search = p::search_deviations(mech(m::MechanismId::Mech1Cake), kQuarterChooser, 0, 4,
                                                 p::ReportFamily::Subsets);
        return CaseResult{"mech1 resists the same manipulation",
                          {{"deviation search at grid 1/4", "holds", verdict_text(search)}}};
      },
      [] {
        const Instance inst{ResourceKind::Cake, {Valuation::prefix(Rational(1, 2)), Valuation::prefix(Rational(1, 2))}};
        const Allocation alloc = mech(m::MechanismId::ConnectedFreeDisposal).run(inst);
        const auto fc = p::check_full_and_connected(alloc);
        return CaseResult{"connected mechanism with free disposal",
                          {{"allocation", "{[1/4,1/2]} | {[0,1/4]}", pieces_text(alloc)},
                           {"envy_free", "holds", verdict_text(p::check_envy_free(inst, alloc))},
                           {"connected", "holds", verdict_text(fc.connected)},
                           {"full_allocation", "violated", verdict_text(fc.full)}}};
      },
  };

  std::vector<CaseResult> results;
  results.reserve(cases.size());
  for (const auto& c : cases) results.push_back(c());
  return results;
}

}  // namespace fairdiv::harness
