#include <algorithm>
#include <string>

#include "fairdiv/error.hpp"
#include "fairdiv/properties.hpp"

namespace fairdiv::properties {

std::string_view to_string(Verdict v) noexcept { return v == Verdict::Holds ? "holds" : "violated"; }

namespace {

void require_same_shape(const Instance& inst, const Allocation& alloc) {
  if (inst.agents() != alloc.agents()) {
    throw Error(ErrorCode::ShapeMismatch, std::to_string(inst.agents()) + " agents but " +
                                              std::to_string(alloc.agents()) + " pieces");
  }
}

PropertyReport holds(std::string name) { return {std::move(name), Verdict::Holds, std::nullopt}; }

PropertyReport violated(std::string name, Witness w) { return {std::move(name), Verdict::Violated, std::move(w)}; }

// Breakpoints of [0,1] cut by every valuation and piece, turned into atoms.
std::vector<Interval> atoms_of(const Instance& inst, const Allocation* alloc) {
  std::vector<Rational> pts{Rational(0), Rational(1)};
  for (const auto& v : inst.valuations) {
    for (auto& p : v.desired.endpoints()) pts.push_back(std::move(p));
  }
  if (alloc != nullptr) {
    for (const auto& piece : alloc->pieces) {
      for (auto& p : piece.endpoints()) pts.push_back(std::move(p));
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Interval> atoms;
  atoms.reserve(pts.size());
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) atoms.push_back({pts[k], pts[k + 1]});
  return atoms;
}

bool contains(const IntervalSet& set, const Interval& atom) {
  const auto ivs = set.intervals();
  auto it = std::upper_bound(ivs.begin(), ivs.end(), atom.left,
                             [](const Rational& x, const Interval& iv) { return x < iv.left; });
  if (it == ivs.begin()) return false;
  --it;
  return it->left <= atom.left && atom.right <= it->right;
}

}  // namespace

std::vector<Rational> own_values(const Instance& inst, const Allocation& alloc) {
  require_same_shape(inst, alloc);
  std::vector<Rational> out;
  out.reserve(inst.agents());
  for (std::size_t i = 0; i < inst.agents(); ++i) out.push_back(value(inst.valuations[i], alloc.pieces[i]));
  return out;
}

PropertyReport check_envy_free(const Instance& inst, const Allocation& alloc) {
  require_same_shape(inst, alloc);
  for (std::size_t i = 0; i < inst.agents(); ++i) {
    const Rational own = value(inst.valuations[i], alloc.pieces[i]);
    for (std::size_t j = 0; j < inst.agents(); ++j) {
      if (j == i) continue;
      Rational other = value(inst.valuations[i], alloc.pieces[j]);
      if (better(inst.kind, other, own)) return violated("envy_free", EnvyWitness{i, j, own, std::move(other)});
    }
  }
  return holds("envy_free");
}

PropertyReport check_proportional(const Instance& inst, const Allocation& alloc) {
  require_same_shape(inst, alloc);
  const Rational n(static_cast<std::int64_t>(inst.agents()));
  for (std::size_t i = 0; i < inst.agents(); ++i) {
    Rational own = value(inst.valuations[i], alloc.pieces[i]);
    Rational share = total_value(inst.valuations[i]) / n;
    if (better(inst.kind, share, own)) {
      return violated("proportional", ShareWitness{i, std::move(own), std::move(share)});
    }
  }
  return holds("proportional");
}

PropertyReport check_pareto(const Instance& inst, const Allocation& alloc) {
  require_same_shape(inst, alloc);
  if (!is_full_allocation(alloc)) {
    throw Error(ErrorCode::PreconditionUnmet, "Pareto characterization needs a full allocation");
  }
  const bool cake = inst.kind == ResourceKind::Cake;
  for (const auto& atom : atoms_of(inst, &alloc)) {
    std::size_t holder = 0;
    while (holder < alloc.agents() && !contains(alloc.pieces[holder], atom)) ++holder;
    if (holder == alloc.agents()) throw Error(ErrorCode::InvariantViolated, "atom outside every piece");

    // Cake wants the atom with someone who desires it; chore with someone who does not.
    const bool holder_ok = contains(inst.valuations[holder].desired, atom) == cake;
    if (holder_ok) continue;
    for (std::size_t j = 0; j < inst.agents(); ++j) {
      if (contains(inst.valuations[j].desired, atom) == cake) {
        return violated("pareto", AtomWitness{atom, holder, j});
      }
    }
  }
  return holds("pareto");
}

FullConnectedReport check_full_and_connected(const Allocation& alloc) {
  FullConnectedReport report{holds("full_allocation"), holds("connected")};

  const IntervalSet all = covered(alloc);
  Rational sum;
  for (const auto& piece : alloc.pieces) sum += piece.total_length();
  IntervalSet uncovered = complement(all);
  Rational overlap = sum - all.total_length();
  if (!uncovered.empty() || !overlap.is_zero()) {
    report.full = violated("full_allocation", CoverageWitness{std::move(uncovered), std::move(overlap)});
  }

  for (std::size_t i = 0; i < alloc.agents(); ++i) {
    if (!alloc.pieces[i].is_connected()) {
      report.connected = violated("connected", PieceWitness{i, alloc.pieces[i]});
      break;
    }
  }
  return report;
}

IndicatorVector indicator_vector(const Instance& inst) {
  const std::size_t n = inst.agents();
  if (n > 20) throw Error(ErrorCode::PreconditionUnmet, "indicator vector limited to 20 agents");
  IndicatorVector out{n, std::vector<Rational>(std::size_t{1} << n)};
  for (const auto& atom : atoms_of(inst, nullptr)) {
    std::size_t subset = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (contains(inst.valuations[i].desired, atom)) subset |= std::size_t{1} << i;
    }
    out.lengths[subset] += atom.length();
  }
  return out;
}

// Re-verification recomputes everything from the inputs.

bool confirms(const Instance& inst, const Allocation& alloc, const EnvyWitness& w) {
  if (w.agent >= inst.agents() || w.other >= alloc.agents() || inst.agents() != alloc.agents()) return false;
  const Rational own = value(inst.valuations[w.agent], alloc.pieces[w.agent]);
  const Rational other = value(inst.valuations[w.agent], alloc.pieces[w.other]);
  return own == w.own_value && other == w.other_value && better(inst.kind, other, own);
}

bool confirms(const Instance& inst, const Allocation& alloc, const ShareWitness& w) {
  if (w.agent >= inst.agents() || inst.agents() != alloc.agents()) return false;
  const Rational own = value(inst.valuations[w.agent], alloc.pieces[w.agent]);
  const Rational share = total_value(inst.valuations[w.agent]) / Rational(static_cast<std::int64_t>(inst.agents()));
  return own == w.value && share == w.threshold && better(inst.kind, share, own);
}

bool confirms(const Instance& inst, const Allocation& alloc, const AtomWitness& w) {
  if (w.holder >= alloc.agents() || w.better_holder >= alloc.agents() || inst.agents() != alloc.agents()) {
    return false;
  }
  if (!(w.atom.left < w.atom.right) || !contains(alloc.pieces[w.holder], w.atom)) return false;
  // Hand the atom over and check the result is a Pareto improvement.
  Allocation moved = alloc;
  const IntervalSet atom = IntervalSet::segment(w.atom.left, w.atom.right);
  moved.pieces[w.holder] = subtract(moved.pieces[w.holder], atom);
  moved.pieces[w.better_holder] = unite(moved.pieces[w.better_holder], atom);
  bool someone_better = false;
  for (std::size_t i = 0; i < inst.agents(); ++i) {
    const Rational before = value(inst.valuations[i], alloc.pieces[i]);
    const Rational after = value(inst.valuations[i], moved.pieces[i]);
    if (better(inst.kind, before, after)) return false;
    if (better(inst.kind, after, before)) someone_better = true;
  }
  return someone_better;
}

bool confirms(const Allocation& alloc, const CoverageWitness& w) {
  const IntervalSet all = covered(alloc);
  Rational sum;
  for (const auto& piece : alloc.pieces) sum += piece.total_length();
  return complement(all) == w.uncovered && sum - all.total_length() == w.overlap &&
         (!w.uncovered.empty() || !w.overlap.is_zero());
}

bool confirms(const Allocation& alloc, const PieceWitness& w) {
  return w.agent < alloc.agents() && alloc.pieces[w.agent] == w.piece && !w.piece.is_connected();
}

}  // namespace fairdiv::properties
