#include "fairdiv/model.hpp"

#include "fairdiv/error.hpp"

namespace fairdiv {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::MalformedInterval: return "MalformedInterval";
    case ErrorCode::NotPrefixForm: return "NotPrefixForm";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateAgentId: return "DuplicateAgentId";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

std::string_view to_string(ResourceKind kind) noexcept { return kind == ResourceKind::Cake ? "cake" : "chore"; }

std::optional<ResourceKind> parse_resource_kind(std::string_view text) noexcept {
  if (text == "cake") return ResourceKind::Cake;
  if (text == "chore") return ResourceKind::Chore;
  return std::nullopt;
}

Instance Instance::prefix(ResourceKind kind, std::span<const Rational> endpoints) {
  Instance inst{kind, {}};
  inst.valuations.reserve(endpoints.size());
  for (const auto& x : endpoints) inst.valuations.push_back(Valuation::prefix(x));
  return inst;
}

Rational value(const Valuation& v, const IntervalSet& piece) { return intersect(v.desired, piece).total_length(); }

IntervalSet covered(const Allocation& alloc) {
  IntervalSet all;
  for (const auto& piece : alloc.pieces) all = unite(all, piece);
  return all;
}

bool interiors_disjoint(const Allocation& alloc) {
  Rational sum;
  for (const auto& piece : alloc.pieces) sum += piece.total_length();
  return sum == covered(alloc).total_length();
}

bool is_full_allocation(const Allocation& alloc) {
  return interiors_disjoint(alloc) && covered(alloc) == IntervalSet::unit();
}

}  // namespace fairdiv
