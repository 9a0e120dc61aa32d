#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fairdiv/model.hpp"

namespace fairdiv::mechanisms {

/// Right endpoint x of a prefix valuation [0, x].
struct PrefixEndpoint {
  Rational x;

  friend bool operator==(const PrefixEndpoint&, const PrefixEndpoint&) = default;
};

/// Throws NotPrefixForm unless `v` is empty or a single interval starting at 0.
PrefixEndpoint prefix_endpoint(const Valuation& v);
std::vector<PrefixEndpoint> prefix_endpoints(const Instance& inst);

// Two-agent mechanisms for arbitrary piecewise uniform valuations.

/// Smallest x in [0,1] with v1([0,x]) == v2([x,1]).
Rational crossing_point(const Valuation& v1, const Valuation& v2);

/// Agent 1 keeps what it values left of the crossing point and everything
/// right of it that agent 2 does not value; agent 2 gets the rest.
Allocation mech1_cake(const Valuation& v1, const Valuation& v2);

/// The cake mechanism run on chore valuations, then the two pieces swapped.
Allocation mech2_chore(const Valuation& v1, const Valuation& v2);

// Many-agent mechanisms for prefix valuations.

struct CakeRound {
  Rational offset;                    // left end of the remaining cake
  Rational width;                     // length each participant receives
  std::vector<std::size_t> participants;  // original agent indices, in order
  std::size_t exiting = 0;            // original index of the agent leaving
};

struct CakeRun {
  Allocation allocation;
  std::vector<CakeRound> rounds;
};

/// Rounds of equal-width consecutive intervals; the lowest-numbered agent
/// whose interval reaches its endpoint leaves each round.
CakeRun mech3_cake_rounds(std::span<const PrefixEndpoint> xs);
inline Allocation mech3_cake(std::span<const PrefixEndpoint> xs) { return mech3_cake_rounds(xs).allocation; }

struct ChoreRound {
  std::size_t agent = 0;
  IntervalSet remaining_before;
  bool took_all = false;
  IntervalSet kept;                          // what the agent ends up with this round
  std::vector<std::pair<std::size_t, IntervalSet>> given_away;
};

struct ChoreRun {
  Allocation allocation;
  std::vector<ChoreRound> rounds;
};

/// Agents 1..n-1 in turn take the leftmost remaining part worth x_i/n to
/// them plus whatever they do not value; parts of a taken piece that another
/// agent does not value go to the lowest-indexed such agent. The last agent
/// takes what is left.
ChoreRun mech4_chore_rounds(std::span<const PrefixEndpoint> xs);
inline Allocation mech4_chore(std::span<const PrefixEndpoint> xs) { return mech4_chore_rounds(xs).allocation; }

// Baselines.

/// Leftmost median cut by agent 1; agent 2 picks, preferring [0,m] on ties.
Allocation cut_and_choose(const Valuation& v1, const Valuation& v2);

/// Connected two-agent mechanism that may discard [max(x1,x2), 1].
Allocation connected_free_disposal(const PrefixEndpoint& x1, const PrefixEndpoint& x2);

// Instance-level registry.

enum class MechanismId { Mech1Cake, Mech2Chore, Mech3Cake, Mech4Chore, CutAndChoose, ConnectedFreeDisposal };

/// Properties each mechanism is expected to satisfy on its domain.
struct Claims {
  bool truthful = false;
  bool envy_free = false;
  bool proportional = false;
  bool pareto = false;
  bool full_allocation = false;
  bool connected = false;
};

struct Mechanism {
  MechanismId id;
  std::string_view name;
  ResourceKind kind;
  std::optional<std::size_t> required_agents;  // nullopt: any n >= 1
  bool prefix_only;
  Claims claims;

  /// Checks agent count, resource kind and valuation shape, then runs.
  Allocation run(const Instance& inst) const;
};

std::span<const Mechanism> all_mechanisms();
const Mechanism& mechanism(MechanismId id);
/// nullptr when no mechanism has that name.
const Mechanism* find_mechanism(std::string_view name);

}  // namespace fairdiv::mechanisms
