// Acceptance suite: one PASS/FAIL line per criterion. All value comparisons
// are exact (tolerance 0); time limits are wall-clock.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fairdiv/eating.hpp"
#include "fairdiv/harness/corpus.hpp"
#include "fairdiv/mechanisms.hpp"
#include "fairdiv/properties.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace fairdiv;
namespace m = fairdiv::mechanisms;
namespace p = fairdiv::properties;
using m::MechanismId;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

const m::Mechanism& M(MechanismId id) { return m::mechanism(id); }

Instance two(ResourceKind kind, IntervalSet a, IntervalSet b) { return {kind, {{std::move(a)}, {std::move(b)}}}; }

IntervalSet seg(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return IntervalSet::segment(Rational(a, b), Rational(c, d));
}

std::string vals(const std::vector<Rational>& vs) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? ", " : "") << vs[i];
  return os.str() + ")";
}

// All prefix instances with n agents and endpoints k/d.
std::vector<Instance> prefix_grid(ResourceKind kind, std::size_t n, std::int64_t d) {
  std::vector<Instance> out;
  std::vector<std::int64_t> ks(n, 0);
  for (;;) {
    std::vector<Rational> xs;
    for (auto k : ks) xs.emplace_back(k, d);
    out.push_back(Instance::prefix(kind, xs));
    std::size_t i = 0;
    while (i < n && ++ks[i] > d) ks[i++] = 0;
    if (i == n) return out;
  }
}

const Instance kHalfWhole = two(ResourceKind::Cake, seg(0, 1, 1, 2), IntervalSet::unit());
const Instance kWholeHalf = two(ResourceKind::Cake, IntervalSet::unit(), seg(0, 1, 1, 2));
const Instance kRightHalfWhole = two(ResourceKind::Cake, seg(1, 2, 1, 1), IntervalSet::unit());
const Instance kQuarterChooser = two(ResourceKind::Cake, IntervalSet::unit(), seg(0, 1, 1, 4));

Outcome criterion1() {
  Outcome o;
  const std::vector<std::pair<const Instance*, std::vector<Rational>>> expected{
      {&kHalfWhole, {Rational(1, 2), Rational(1, 2)}},
      {&kWholeHalf, {Rational(3, 4), Rational(1, 4)}},
      {&kRightHalfWhole, {Rational(1, 4), Rational(3, 4)}}};
  for (const auto& [inst, want] : expected) {
    const auto got = p::own_values(*inst, M(MechanismId::Mech1Cake).run(*inst));
    o.detail += vals(got) + " ";
    if (got != want) {
      o.pass = false;
      o.detail += "(expected " + vals(want) + ") ";
    }
  }
  for (const auto& c : harness::run_corpus()) {
    if (!c.passed()) {
      o.pass = false;
      o.detail += "corpus diff in \"" + c.name + "\" ";
    }
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto& cc = M(MechanismId::CutAndChoose);
  const Rational truthful = value(kQuarterChooser.valuations[0], cc.run(kQuarterChooser).pieces[0]);
  const auto report = p::search_deviations(cc, kQuarterChooser, 0, 8, p::ReportFamily::Subsets);
  std::ostringstream os;
  os << "truthful " << truthful;
  if (truthful != Rational(1, 2)) o.pass = false;
  if (!report.witness) {
    o.pass = false;
    os << ", no profitable deviation found";
  } else {
    const auto& w = std::get<p::DeviationWitness>(*report.witness);
    os << ", best deviation " << w.deviating_value << " via " << w.report.desired << " (expected 3/4)";
    if (w.deviating_value != Rational(3, 4)) o.pass = false;
  }
  Instance lie = kQuarterChooser;
  lie.valuations[0] = {seg(0, 1, 1, 2)};
  os << "; report {[0,1/2]} gives " << value(kQuarterChooser.valuations[0], cc.run(lie).pieces[0]);
  o.detail = os.str();
  return o;
}

struct SweepCount {
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::string first;
};

void record(SweepCount& s, const Instance& inst, const p::PropertyReport& r) {
  if (r.holds()) return;
  if (s.violations++ == 0) {
    std::ostringstream os;
    for (const auto& v : inst.valuations) os << v.desired << ' ';
    const auto& w = std::get<p::DeviationWitness>(*r.witness);
    os << "agent " << w.agent + 1 << " reports " << w.report.desired << ": " << w.truthful_value << " -> "
       << w.deviating_value;
    s.first = os.str();
  }
}

Outcome criterion3() {
  Outcome o;
  std::ostringstream os;
  gen::Source src(2024);
  for (const auto id : {MechanismId::Mech1Cake, MechanismId::Mech2Chore}) {
    SweepCount s;
    const auto& mech = M(id);
    for (int k = 0; k < 200; ++k) {
      const Instance inst = two(mech.kind, src.grid_set(10), src.grid_set(10));
      ++s.instances;
      for (std::size_t agent = 0; agent < 2; ++agent) {
        record(s, inst, p::search_deviations(mech, inst, agent, 10, p::ReportFamily::Subsets));
      }
    }
    os << mech.name << " " << s.violations << "/" << s.instances << " instances manipulable; ";
    if (s.violations) {
      o.pass = false;
      os << "first: " << s.first << "; ";
    }
  }
  for (const auto id : {MechanismId::Mech3Cake, MechanismId::Mech4Chore}) {
    SweepCount s;
    const auto& mech = M(id);
    for (std::size_t n = 2; n <= 4; ++n) {
      for (const auto& inst : prefix_grid(mech.kind, n, 8)) {
        ++s.instances;
        const std::size_t before = s.violations;
        for (std::size_t agent = 0; agent < n && s.violations == before; ++agent) {
          record(s, inst, p::search_deviations(mech, inst, agent, 8, p::ReportFamily::Prefix));
        }
      }
    }
    os << mech.name << " " << s.violations << "/" << s.instances << " instances manipulable";
    if (s.violations) {
      o.pass = false;
      os << "; first: " << s.first;
    }
    os << "; ";
  }
  o.detail = os.str();
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::ostringstream os;
  std::size_t count = 0;
  std::size_t mech3_bad = 0;
  std::size_t mech4_bad = 0;
  std::size_t mech4_envy = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& cake : prefix_grid(ResourceKind::Cake, n, 8)) {
      ++count;
      const Allocation a = M(MechanismId::Mech3Cake).run(cake);
      const bool full = is_full_allocation(a);
      if (!full || !p::check_envy_free(cake, a).holds() || !p::check_pareto(cake, a).holds()) ++mech3_bad;

      const Instance chore{ResourceKind::Chore, cake.valuations};
      const Allocation c = M(MechanismId::Mech4Chore).run(chore);
      const bool full4 = is_full_allocation(c);
      if (!full4 || !p::check_proportional(chore, c).holds() || !p::check_pareto(chore, c).holds()) ++mech4_bad;
      if (!p::check_envy_free(chore, c).holds()) ++mech4_envy;
    }
  }
  const Instance example{ResourceKind::Chore,
                         {Valuation::prefix(Rational(3, 5)), Valuation::prefix(Rational(3, 10)),
                          Valuation::prefix(Rational(9, 10))}};
  const bool example_envious = !p::check_envy_free(example, M(MechanismId::Mech4Chore).run(example)).holds();
  os << count << " instances; mech3 failures " << mech3_bad << "; mech4 failures " << mech4_bad
     << "; mech4 not envy-free on " << mech4_envy << " (example (3/5,3/10,9/10) "
     << (example_envious ? "not envy-free" : "envy-free") << ")";
  o.pass = mech3_bad == 0 && mech4_bad == 0 && mech4_envy > 0 && example_envious;
  o.detail = os.str();
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::vector<std::pair<Valuation, Valuation>> cases{
      {kHalfWhole.valuations[0], kHalfWhole.valuations[1]},
      {kWholeHalf.valuations[0], kWholeHalf.valuations[1]},
      {kRightHalfWhole.valuations[0], kRightHalfWhole.valuations[1]},
      {kQuarterChooser.valuations[0], kQuarterChooser.valuations[1]},
      {{seg(0, 1, 1, 5)}, {seg(9, 10, 1, 1)}}};
  gen::Source src(5);
  for (int k = 0; k < 1000; ++k) cases.push_back({{src.set()}, {src.set()}});

  std::size_t value_diffs = 0;
  std::size_t alloc_diffs = 0;
  std::string first;
  for (const auto& [a, b] : cases) {
    const auto eaten = eating::simulate(a, b).allocation;
    const auto normative = m::mech1_cake(a, b);
    if (value(a, eaten.pieces[0]) != value(a, normative.pieces[0]) ||
        value(b, eaten.pieces[1]) != value(b, normative.pieces[1])) {
      ++value_diffs;
    }
    if (eaten.pieces != normative.pieces) {
      if (alloc_diffs++ == 0) {
        std::ostringstream os;
        os << "W1=" << a.desired << " W2=" << b.desired << ": eating " << eaten.pieces[0] << " | "
           << eaten.pieces[1] << " vs crossing " << normative.pieces[0] << " | " << normative.pieces[1];
        first = os.str();
      }
    }
  }
  std::ostringstream os;
  os << cases.size() << " instances; value mismatches " << value_diffs << "; allocation mismatches " << alloc_diffs;
  if (alloc_diffs) os << "; first: " << first;
  o.pass = value_diffs == 0 && alloc_diffs == 0;
  o.detail = os.str();
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::ostringstream os;
  const auto& m1 = M(MechanismId::Mech1Cake);

  const auto anon = p::check_anonymity(m1, kHalfWhole, {1, 0});
  const bool anon_ok = !anon.holds() && p::confirms(m1, kHalfWhole, std::get<p::PermutationWitness>(*anon.witness));
  os << "anonymity " << p::to_string(anon.verdict) << (anon_ok ? " (re-verified)" : "") << "; ";

  const auto pos = p::check_position_oblivious(m1, kHalfWhole, kRightHalfWhole);
  const bool pos_ok =
      !pos.holds() && p::confirms(m1, kHalfWhole, kRightHalfWhole, std::get<p::PairWitness>(*pos.witness));
  os << "position obliviousness " << p::to_string(pos.verdict) << (pos_ok ? " (re-verified)" : "") << "; ";

  const Allocation split = m1.run(kWholeHalf);
  const auto conn = p::check_full_and_connected(split).connected;
  const bool conn_ok = !conn.holds() && p::confirms(split, std::get<p::PieceWitness>(*conn.witness));
  os << "connectedness " << p::to_string(conn.verdict) << (conn_ok ? " (re-verified)" : "") << "; ";

  const Instance halves{ResourceKind::Cake, {Valuation::prefix(Rational(1, 2)), Valuation::prefix(Rational(1, 2))}};
  const Allocation fd = M(MechanismId::ConnectedFreeDisposal).run(halves);
  const auto fc = p::check_full_and_connected(fd);
  const bool ef = p::check_envy_free(halves, fd).holds();
  const bool fd_ok = ef && fc.connected.holds() && !fc.full.holds() &&
                     p::confirms(fd, std::get<p::CoverageWitness>(*fc.full.witness));
  os << "free-disposal baseline: envy_free " << (ef ? "holds" : "violated") << ", connected "
     << p::to_string(fc.connected.verdict) << ", full " << p::to_string(fc.full.verdict);
  o.pass = anon_ok && pos_ok && conn_ok && fd_ok;
  o.detail = os.str();
  return o;
}

Outcome criterion7() {
  constexpr int instance_cells = 4;
  constexpr int cells = 8;  // allocations on a finer grid than the instances
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  for (const bool cake : {true, false}) {
    for (std::uint32_t w0 = 0; w0 < 16; ++w0) {
      for (std::uint32_t w1 = 0; w1 < 16; ++w1) {
        // Widen quarter-cell masks to eighth cells.
        const auto widen = [](std::uint32_t q) {
          std::uint32_t e = 0;
          for (int c = 0; c < instance_cells; ++c) {
            if (q & (1u << c)) e |= 3u << (2 * c);
          }
          return e;
        };
        const std::vector<std::uint32_t> desired{widen(w0), widen(w1)};
        const Instance inst{cake ? ResourceKind::Cake : ResourceKind::Chore,
                            {{oracle::from_mask(w0, instance_cells)}, {oracle::from_mask(w1, instance_cells)}}};
        for (std::uint32_t mine = 0; mine < (1u << cells); ++mine) {
          std::vector<int> owner(cells);
          for (int c = 0; c < cells; ++c) owner[c] = (mine & (1u << c)) ? 0 : 1;
          const Allocation alloc{{oracle::from_mask(mine, cells), oracle::from_mask(~mine & 0xFFu, cells)}};
          const bool characterization = p::check_pareto(inst, alloc).holds();
          const bool brute = !oracle::has_pareto_improvement(desired, owner, cells, cake);
          ++checked;
          if (characterization != brute) ++mismatches;
        }
      }
    }
  }
  return {mismatches == 0, std::to_string(checked) + " instance/allocation pairs (cake and chore), " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome criterion8() {
  constexpr int kPerProperty = 10'000;
  gen::Source src(8);
  std::size_t failures = 0;
  std::size_t cases = 0;
  for (int k = 0; k < kPerProperty; ++k, ++cases) {
    const auto raw = src.raw_intervals(6);
    const IntervalSet once = IntervalSet::canonicalize(raw);
    const std::vector<Interval> again(once.intervals().begin(), once.intervals().end());
    if (IntervalSet::canonicalize(again) != once || again != oracle::sweep_union(raw)) ++failures;
  }
  for (int k = 0; k < kPerProperty; ++k, ++cases) {
    const IntervalSet a = src.set(5);
    const IntervalSet b = src.set(5);
    if (unite(a, b).total_length() + intersect(a, b).total_length() != a.total_length() + b.total_length()) {
      ++failures;
    }
  }
  for (int k = 0; k < kPerProperty; ++k, ++cases) {
    const auto n = static_cast<std::size_t>(src.between(1, 4));
    const Allocation alloc = src.allocation(n);
    const Valuation v{src.set(4)};
    Rational sum;
    for (const auto& piece : alloc.pieces) sum += value(v, piece);
    if (!is_full_allocation(alloc) || sum != total_value(v)) ++failures;
  }
  for (int k = 0; k < kPerProperty; ++k, ++cases) {
    const auto n = static_cast<std::size_t>(src.between(1, 4));
    const Instance inst = src.instance(src.coin() ? ResourceKind::Cake : ResourceKind::Chore, n, 3);
    const Allocation alloc = src.allocation(n);
    if (p::check_envy_free(inst, alloc).holds() && !p::check_proportional(inst, alloc).holds()) ++failures;
  }
  return {failures == 0, std::to_string(cases) + " generated cases, " + std::to_string(failures) + " failures"};
}

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "reference-example regression", 1.0, criterion1},
      {2, "cut-and-choose manipulation at D=8", 1.0, criterion2},
      {3, "truthfulness sweeps", 600.0, criterion3},
      {4, "fairness sweeps", 0.0, criterion4},
      {5, "eating oracle equivalence", 0.0, criterion5},
      {6, "negative-property witnesses", 0.0, criterion6},
      {7, "Pareto characterization vs brute force", 60.0, criterion7},
      {8, "property-based core suite", 0.0, criterion8},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.pass = false;
      o.detail += " [over the " + std::to_string(c.limit_seconds) + " s limit]";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << timing
              << ") " << o.detail << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
