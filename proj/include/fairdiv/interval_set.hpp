#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fairdiv/rational.hpp"

namespace fairdiv {

/// Closed interval [left, right]. Raw input to canonicalization may be
/// degenerate; intervals stored in an IntervalSet never are.
struct Interval {
  Rational left;
  Rational right;

  Rational length() const { return right - left; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

enum class SetOp { Union, Intersect, Subtract };

/// Finite union of closed subintervals of [0,1] in canonical form: sorted,
/// pairwise disjoint, non-adjacent, no zero-length members. Two sets that
/// agree up to a finite set of points have the same canonical form, so
/// operator== is equality up to measure zero.
class IntervalSet {
public:
  IntervalSet() = default;

  /// Validates every pair (0 <= left <= right <= 1), drops degenerate pairs,
  /// and merges overlapping or touching ones.
  static IntervalSet canonicalize(std::span<const Interval> raw);
  static IntervalSet canonicalize(std::initializer_list<Interval> raw) {
    return canonicalize(std::span<const Interval>(raw.begin(), raw.size()));
  }

  /// [left, right] as a set; empty when left == right.
  static IntervalSet segment(const Rational& left, const Rational& right);
  static IntervalSet unit() { return segment(0, 1); }

  std::span<const Interval> intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }
  bool is_connected() const { return intervals_.size() <= 1; }

  Rational total_length() const;

  /// Length of the part of this set inside [0, x].
  Rational length_before(const Rational& x) const;

  /// Smallest p with length_before(p) == target. Requires
  /// 0 <= target <= total_length().
  Rational point_at_length(const Rational& target) const;

  /// Every left and right endpoint, in order.
  std::vector<Rational> endpoints() const;

  std::string to_string() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;
  friend std::ostream& operator<<(std::ostream& os, const IntervalSet& s);

private:
  friend IntervalSet set_algebra(const IntervalSet&, const IntervalSet&, SetOp);
  friend IntervalSet merge_sorted(std::vector<Interval> sorted);

  explicit IntervalSet(std::vector<Interval> canonical) : intervals_(std::move(canonical)) {}

  std::vector<Interval> intervals_;
};

IntervalSet set_algebra(const IntervalSet& a, const IntervalSet& b, SetOp op);

inline IntervalSet unite(const IntervalSet& a, const IntervalSet& b) { return set_algebra(a, b, SetOp::Union); }
inline IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  return set_algebra(a, b, SetOp::Intersect);
}
inline IntervalSet subtract(const IntervalSet& a, const IntervalSet& b) {
  return set_algebra(a, b, SetOp::Subtract);
}
inline IntervalSet complement(const IntervalSet& a) { return subtract(IntervalSet::unit(), a); }

}  // namespace fairdiv
