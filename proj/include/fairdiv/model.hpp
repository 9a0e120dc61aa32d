#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "fairdiv/interval_set.hpp"
#include "fairdiv/rational.hpp"

namespace fairdiv {

enum class ResourceKind { Cake, Chore };

std::string_view to_string(ResourceKind kind) noexcept;
std::optional<ResourceKind> parse_resource_kind(std::string_view text) noexcept;

/// Piecewise uniform valuation: density 1 on `desired`, 0 elsewhere.
/// Not normalized, so the value of the whole resource is |desired|.
struct Valuation {
  IntervalSet desired;

  static Valuation prefix(const Rational& x) { return {IntervalSet::segment(0, x)}; }

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

/// Agent order is significant.
struct Instance {
  ResourceKind kind = ResourceKind::Cake;
  std::vector<Valuation> valuations;

  std::size_t agents() const { return valuations.size(); }

  static Instance prefix(ResourceKind kind, std::span<const Rational> endpoints);

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// One piece per agent. Mechanisms without free disposal always return a
/// full allocation; `free_disposal` marks outputs that may leave cake over.
struct Allocation {
  std::vector<IntervalSet> pieces;
  bool free_disposal = false;

  std::size_t agents() const { return pieces.size(); }

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

Rational value(const Valuation& v, const IntervalSet& piece);
inline Rational total_value(const Valuation& v) { return v.desired.total_length(); }

/// Union of the pieces, and whether their interiors are pairwise disjoint
/// (sum of lengths equals the length of the union).
IntervalSet covered(const Allocation& alloc);
bool interiors_disjoint(const Allocation& alloc);
bool is_full_allocation(const Allocation& alloc);

}  // namespace fairdiv
