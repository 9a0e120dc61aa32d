#include "fairdiv/error.hpp"
#include "fairdiv/mechanisms.hpp"

namespace fairdiv::mechanisms {

PrefixEndpoint prefix_endpoint(const Valuation& v) {
  const auto ivs = v.desired.intervals();
  if (ivs.empty()) return {Rational(0)};
  if (ivs.size() == 1 && ivs.front().left.is_zero()) return {ivs.front().right};
  throw Error(ErrorCode::NotPrefixForm, "valuation " + v.desired.to_string() + " is not of the form [0,x]");
}

std::vector<PrefixEndpoint> prefix_endpoints(const Instance& inst) {
  std::vector<PrefixEndpoint> xs;
  xs.reserve(inst.agents());
  for (const auto& v : inst.valuations) xs.push_back(prefix_endpoint(v));
  return xs;
}

CakeRun mech3_cake_rounds(std::span<const PrefixEndpoint> xs) {
  const std::size_t n = xs.size();
  if (n == 0) throw Error(ErrorCode::PreconditionUnmet, "no agents");

  CakeRun run;
  run.allocation.pieces.resize(n);
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  Rational offset(0);
  while (active.size() > 1) {
    const std::size_t k = active.size();
    std::vector<Rational> reach(k);  // valued length right of the offset
    for (std::size_t pos = 0; pos < k; ++pos) reach[pos] = max(Rational(0), xs[active[pos]].x - offset);

    Rational width = reach[0];
    for (std::size_t pos = 1; pos < k; ++pos) {
      Rational share = reach[pos] / Rational(static_cast<std::int64_t>(pos + 1));
      if (share < width) width = std::move(share);
    }

    std::optional<std::size_t> leaving;
    for (std::size_t pos = 0; pos < k; ++pos) {
      const Rational lo = offset + width * Rational(static_cast<std::int64_t>(pos));
      const Rational hi = lo + width;
      auto& piece = run.allocation.pieces[active[pos]];
      piece = unite(piece, IntervalSet::segment(lo, hi));
      if (!leaving && width * Rational(static_cast<std::int64_t>(pos + 1)) == reach[pos]) leaving = pos;
    }
    if (!leaving) throw Error(ErrorCode::InvariantViolated, "no agent reached its endpoint in a round");

    run.rounds.push_back({offset, width, active, active[*leaving]});
    offset += width * Rational(static_cast<std::int64_t>(k));
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(*leaving));
  }
  auto& last = run.allocation.pieces[active.front()];
  last = unite(last, IntervalSet::segment(offset, 1));
  return run;
}

ChoreRun mech4_chore_rounds(std::span<const PrefixEndpoint> xs) {
  const std::size_t n = xs.size();
  if (n == 0) throw Error(ErrorCode::PreconditionUnmet, "no agents");

  ChoreRun run;
  auto& pieces = run.allocation.pieces;
  pieces.resize(n);
  const Rational agents(static_cast<std::int64_t>(n));
  IntervalSet remaining = IntervalSet::unit();

  for (std::size_t i = 0; i + 1 < n; ++i) {
    ChoreRound round;
    round.agent = i;
    round.remaining_before = remaining;

    const Rational quota = xs[i].x / agents;
    const IntervalSet valued = intersect(remaining, IntervalSet::segment(0, xs[i].x));
    const IntervalSet unvalued = intersect(remaining, IntervalSet::segment(xs[i].x, 1));
    IntervalSet taken;
    if (valued.total_length() < quota) {
      round.took_all = true;
      taken = valued;
      remaining = IntervalSet{};
    } else {
      taken = intersect(remaining, IntervalSet::segment(0, remaining.point_at_length(quota)));
      remaining = subtract(subtract(remaining, taken), unvalued);
    }

    // Parts of the taken piece that another agent does not value go to the
    // lowest-indexed such agent.
    for (std::size_t j = 0; j < n && !taken.empty(); ++j) {
      if (j == i) continue;
      IntervalSet gift = intersect(taken, IntervalSet::segment(xs[j].x, 1));
      if (gift.empty()) continue;
      taken = subtract(taken, gift);
      pieces[j] = unite(pieces[j], gift);
      round.given_away.emplace_back(j, std::move(gift));
    }

    round.kept = unite(taken, unvalued);
    pieces[i] = unite(pieces[i], round.kept);
    if (!remaining.is_connected()) {
      throw Error(ErrorCode::InvariantViolated, "remaining chore " + remaining.to_string() + " is not one interval");
    }
    run.rounds.push_back(std::move(round));
  }
  pieces[n - 1] = unite(pieces[n - 1], remaining);
  return run;
}

}  // namespace fairdiv::mechanisms
