#include <algorithm>
#include <string>

#include "fairdiv/error.hpp"
#include "fairdiv/parallel.hpp"
#include "fairdiv/properties.hpp"

namespace fairdiv::properties {

namespace {

void require_permutation(const std::vector<std::size_t>& perm, std::size_t n) {
  std::vector<bool> seen(n, false);
  if (perm.size() != n) throw Error(ErrorCode::PreconditionUnmet, "permutation has the wrong length");
  for (const auto k : perm) {
    if (k >= n || seen[k]) throw Error(ErrorCode::PreconditionUnmet, "not a permutation of the agents");
    seen[k] = true;
  }
}

Instance permuted(const Instance& inst, const std::vector<std::size_t>& perm) {
  Instance out{inst.kind, {}};
  out.valuations.reserve(perm.size());
  for (const auto k : perm) out.valuations.push_back(inst.valuations[k]);
  return out;
}

// Agent i's value in the permuted run, which seats agent i at slot perm^-1(i).
std::vector<Rational> values_after_permutation(const Instance& inst, const Allocation& alloc,
                                               const std::vector<std::size_t>& perm) {
  std::vector<Rational> values(inst.agents());
  for (std::size_t slot = 0; slot < perm.size(); ++slot) {
    values[perm[slot]] = value(inst.valuations[perm[slot]], alloc.pieces[slot]);
  }
  return values;
}

std::optional<std::size_t> first_difference(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return i;
  }
  return std::nullopt;
}

Instance with_report(const Instance& inst, std::size_t agent, const Valuation& report) {
  Instance out = inst;
  out.valuations[agent] = report;
  return out;
}

}  // namespace

PropertyReport check_anonymity(const Mechanism& mech, const Instance& inst,
                               const std::vector<std::size_t>& permutation) {
  require_permutation(permutation, inst.agents());
  const Instance swapped = permuted(inst, permutation);
  auto original = own_values(inst, mech.run(inst));
  auto after = values_after_permutation(inst, mech.run(swapped), permutation);
  if (const auto agent = first_difference(original, after)) {
    return {"anonymity", Verdict::Violated,
            PermutationWitness{permutation, std::move(original), std::move(after), *agent}};
  }
  return {"anonymity", Verdict::Holds, std::nullopt};
}

PropertyReport check_position_oblivious(const Mechanism& mech, const Instance& first, const Instance& second) {
  if (first.kind != second.kind || first.agents() != second.agents() ||
      indicator_vector(first) != indicator_vector(second)) {
    throw Error(ErrorCode::PreconditionUnmet, "instances have different indicator vectors");
  }
  auto a = own_values(first, mech.run(first));
  auto b = own_values(second, mech.run(second));
  if (const auto agent = first_difference(a, b)) {
    return {"position_oblivious", Verdict::Violated, PairWitness{std::move(a), std::move(b), *agent}};
  }
  return {"position_oblivious", Verdict::Holds, std::nullopt};
}

std::string_view to_string(ReportFamily f) noexcept { return f == ReportFamily::Prefix ? "prefix" : "subsets"; }

std::optional<ReportFamily> parse_report_family(std::string_view text) noexcept {
  if (text == "prefix") return ReportFamily::Prefix;
  if (text == "subsets") return ReportFamily::Subsets;
  return std::nullopt;
}

std::vector<Valuation> deviation_family(const Instance& inst, std::size_t agent, std::size_t grid,
                                        ReportFamily family, const SearchOptions& options) {
  if (agent >= inst.agents()) throw Error(ErrorCode::PreconditionUnmet, "no agent " + std::to_string(agent));
  if (grid == 0) throw Error(ErrorCode::PreconditionUnmet, "grid denominator must be at least 1");

  std::vector<Rational> points;
  for (std::size_t k = 0; k <= grid; ++k) {
    points.emplace_back(static_cast<std::int64_t>(k), static_cast<std::int64_t>(grid));
  }
  for (const auto& v : inst.valuations) {
    for (auto& p : v.desired.endpoints()) points.push_back(std::move(p));
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<Valuation> family_out;
  if (family == ReportFamily::Prefix) {
    mechanisms::prefix_endpoints(inst);  // throws NotPrefixForm
    family_out.reserve(points.size());
    for (const auto& x : points) family_out.push_back(Valuation::prefix(x));
    return family_out;
  }

  const std::size_t cells = points.size() - 1;
  if (cells > options.subset_cell_cap) {
    throw Error(ErrorCode::SearchSpaceTooLarge, std::to_string(cells) + " cells exceed the cap of " +
                                                    std::to_string(options.subset_cell_cap));
  }
  const std::size_t count = std::size_t{1} << cells;
  family_out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<Interval> parts;
    for (std::size_t c = 0; c < cells; ++c) {
      if (mask & (std::size_t{1} << c)) parts.push_back({points[c], points[c + 1]});
    }
    family_out.push_back({IntervalSet::canonicalize(parts)});
  }
  return family_out;
}

PropertyReport search_deviations(const Mechanism& mech, const Instance& inst, std::size_t agent, std::size_t grid,
                                 ReportFamily family, const SearchOptions& options) {
  const auto candidates = deviation_family(inst, agent, grid, family, options);
  const Valuation& truth = inst.valuations[agent];
  const Rational truthful = value(truth, mech.run(inst).pieces[agent]);

  std::vector<Rational> outcomes(candidates.size());
  parallel_for(candidates.size(), options.workers, [&](std::size_t k) {
    outcomes[k] = value(truth, mech.run(with_report(inst, agent, candidates[k])).pieces[agent]);
  });

  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    if (better(inst.kind, outcomes[k], best ? outcomes[*best] : truthful)) best = k;
  }
  if (!best) return {"truthful", Verdict::Holds, std::nullopt};
  return {"truthful", Verdict::Violated, DeviationWitness{agent, candidates[*best], truthful, outcomes[*best]}};
}

bool confirms(const Mechanism& mech, const Instance& inst, const PermutationWitness& w) {
  try {
    require_permutation(w.permutation, inst.agents());
  } catch (const Error&) {
    return false;
  }
  const auto original = own_values(inst, mech.run(inst));
  const auto after = values_after_permutation(inst, mech.run(permuted(inst, w.permutation)), w.permutation);
  return original == w.original_values && after == w.permuted_values && w.agent < original.size() &&
         original[w.agent] != after[w.agent];
}

bool confirms(const Mechanism& mech, const Instance& first, const Instance& second, const PairWitness& w) {
  if (indicator_vector(first) != indicator_vector(second)) return false;
  const auto a = own_values(first, mech.run(first));
  const auto b = own_values(second, mech.run(second));
  return a == w.first_values && b == w.second_values && w.agent < a.size() && a[w.agent] != b[w.agent];
}

bool confirms(const Mechanism& mech, const Instance& inst, const DeviationWitness& w) {
  if (w.agent >= inst.agents()) return false;
  const Valuation& truth = inst.valuations[w.agent];
  const Rational truthful = value(truth, mech.run(inst).pieces[w.agent]);
  const Rational deviating = value(truth, mech.run(with_report(inst, w.agent, w.report)).pieces[w.agent]);
  return truthful == w.truthful_value && deviating == w.deviating_value && better(inst.kind, deviating, truthful);
}

}  // namespace fairdiv::properties
