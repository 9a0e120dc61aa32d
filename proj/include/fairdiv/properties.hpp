#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fairdiv/mechanisms.hpp"
#include "fairdiv/model.hpp"

namespace fairdiv::properties {

enum class Verdict { Holds, Violated };

std::string_view to_string(Verdict v) noexcept;

/// Agent i prefers agent j's piece (cake) or would rather have it (chore).
struct EnvyWitness {
  std::size_t agent = 0;
  std::size_t other = 0;
  Rational own_value;
  Rational other_value;
};

/// Agent's own value falls on the wrong side of its 1/n share.
struct ShareWitness {
  std::size_t agent = 0;
  Rational value;
  Rational threshold;
};

/// A positive-length atom held by an agent although another agent would
/// take it at no loss to anyone.
struct AtomWitness {
  Interval atom;
  std::size_t holder = 0;
  std::size_t better_holder = 0;
};

/// Part of [0,1] that is uncovered or covered twice.
struct CoverageWitness {
  IntervalSet uncovered;
  Rational overlap;
};

struct PieceWitness {
  std::size_t agent = 0;
  IntervalSet piece;
};

struct PermutationWitness {
  std::vector<std::size_t> permutation;  // permuted slot k holds original agent permutation[k]
  std::vector<Rational> original_values;
  std::vector<Rational> permuted_values;  // agent i's value in the permuted run
  std::size_t agent = 0;                  // first agent whose values differ
};

struct PairWitness {
  std::vector<Rational> first_values;
  std::vector<Rational> second_values;
  std::size_t agent = 0;
};

struct DeviationWitness {
  std::size_t agent = 0;
  Valuation report;
  Rational truthful_value;
  Rational deviating_value;
};

using Witness = std::variant<EnvyWitness, ShareWitness, AtomWitness, CoverageWitness, PieceWitness,
                             PermutationWitness, PairWitness, DeviationWitness>;

struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::Holds;
  std::optional<Witness> witness;  // set exactly when violated

  bool holds() const { return verdict == Verdict::Holds; }
};

// Allocation-level checks. The resource kind of `inst` picks the direction of
// every inequality. ShapeMismatch when agent counts differ.

PropertyReport check_envy_free(const Instance& inst, const Allocation& alloc);
PropertyReport check_proportional(const Instance& inst, const Allocation& alloc);

/// Refines [0,1] into atoms on which every valuation and piece is constant.
/// Cake: every atom somebody desires must sit with someone desiring it.
/// Chore: every atom somebody does not desire must sit with such an agent.
/// Requires a full allocation (PreconditionUnmet otherwise).
PropertyReport check_pareto(const Instance& inst, const Allocation& alloc);

struct FullConnectedReport {
  PropertyReport full;
  PropertyReport connected;  // empty pieces count as connected
};

FullConnectedReport check_full_and_connected(const Allocation& alloc);

/// Lengths of the parts of [0,1] desired by exactly each subset of agents;
/// bit i of the index stands for agent i.
struct IndicatorVector {
  std::size_t agents = 0;
  std::vector<Rational> lengths;

  const Rational& operator[](std::size_t subset) const { return lengths.at(subset); }
  friend bool operator==(const IndicatorVector&, const IndicatorVector&) = default;
};

IndicatorVector indicator_vector(const Instance& inst);

// Mechanism-level checks.

using mechanisms::Mechanism;

/// `permutation[k]` is the original agent placed in slot k of the permuted
/// instance.
PropertyReport check_anonymity(const Mechanism& mech, const Instance& inst,
                               const std::vector<std::size_t>& permutation);

/// PreconditionUnmet when the two instances have different indicator vectors.
PropertyReport check_position_oblivious(const Mechanism& mech, const Instance& first, const Instance& second);

enum class ReportFamily { Prefix, Subsets };

std::string_view to_string(ReportFamily f) noexcept;
std::optional<ReportFamily> parse_report_family(std::string_view text) noexcept;

struct SearchOptions {
  std::size_t subset_cell_cap = 14;
  unsigned workers = 1;
};

/// Candidate misreports for `agent`, in the order the search visits them.
/// Prefix: [0,x'] for every x' on the grid k/D or equal to an endpoint of the
/// instance. Subsets: every union of the cells cut by the same points.
std::vector<Valuation> deviation_family(const Instance& inst, std::size_t agent, std::size_t grid,
                                        ReportFamily family, const SearchOptions& options = {});

/// Runs the mechanism with every candidate misreport and evaluates the
/// resulting piece under the agent's true valuation. Violated when some
/// report is strictly better; the witness is the best one, earliest in
/// family order on ties.
PropertyReport search_deviations(const Mechanism& mech, const Instance& inst, std::size_t agent, std::size_t grid,
                                 ReportFamily family, const SearchOptions& options = {});

// Standalone re-verification of witnesses.

bool confirms(const Instance& inst, const Allocation& alloc, const EnvyWitness& w);
bool confirms(const Instance& inst, const Allocation& alloc, const ShareWitness& w);
bool confirms(const Instance& inst, const Allocation& alloc, const AtomWitness& w);
bool confirms(const Allocation& alloc, const CoverageWitness& w);
bool confirms(const Allocation& alloc, const PieceWitness& w);
bool confirms(const Mechanism& mech, const Instance& inst, const PermutationWitness& w);
bool confirms(const Mechanism& mech, const Instance& first, const Instance& second, const PairWitness& w);
bool confirms(const Mechanism& mech, const Instance& inst, const DeviationWitness& w);

/// Own-piece values, one per agent.
std::vector<Rational> own_values(const Instance& inst, const Allocation& alloc);

/// True when `candidate` is strictly better than `baseline` for an agent on
/// this kind of resource.
inline bool better(ResourceKind kind, const Rational& candidate, const Rational& baseline) {
  return kind == ResourceKind::Cake ? candidate > baseline : candidate < baseline;
}

}  // namespace fairdiv::properties
