#include <algorithm>

#include "fairdiv/error.hpp"
#include "fairdiv/mechanisms.hpp"

namespace fairdiv::mechanisms {

namespace {

// v1([0,x]) - v2([x,1]); non-decreasing and piecewise linear in x.
Rational crossing_gap(const Valuation& v1, const Valuation& v2, const Rational& total2, const Rational& x) {
  return v1.desired.length_before(x) - (total2 - v2.desired.length_before(x));
}

}  // namespace

Rational crossing_point(const Valuation& v1, const Valuation& v2) {
  std::vector<Rational> breaks{Rational(0), Rational(1)};
  for (const auto& p : v1.desired.endpoints()) breaks.push_back(p);
  for (const auto& p : v2.desired.endpoints()) breaks.push_back(p);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  const Rational total2 = total_value(v2);
  Rational prev_x = breaks.front();
  Rational prev_g = crossing_gap(v1, v2, total2, prev_x);
  if (prev_g.sign() >= 0) return prev_x;
  for (std::size_t k = 1; k < breaks.size(); ++k) {
    const Rational& x = breaks[k];
    Rational g = crossing_gap(v1, v2, total2, x);
    if (g.sign() >= 0) {
      // Linear on [prev_x, x] with prev_g < 0 <= g, so the slope is positive.
      const Rational slope = (g - prev_g) / (x - prev_x);
      return prev_x - prev_g / slope;
    }
    prev_x = x;
    prev_g = std::move(g);
  }
  throw Error(ErrorCode::InvariantViolated, "crossing gap negative at 1");
}

Allocation mech1_cake(const Valuation& v1, const Valuation& v2) {
  const Rational x = crossing_point(v1, v2);
  IntervalSet first = unite(intersect(v1.desired, IntervalSet::segment(0, x)),
                            subtract(IntervalSet::segment(x, 1), v2.desired));
  IntervalSet second = complement(first);
  return Allocation{{std::move(first), std::move(second)}};
}

Allocation mech2_chore(const Valuation& v1, const Valuation& v2) {
  Allocation cake = mech1_cake(v1, v2);
  std::swap(cake.pieces[0], cake.pieces[1]);
  return cake;
}

Allocation cut_and_choose(const Valuation& v1, const Valuation& v2) {
  const Rational cut = v1.desired.point_at_length(total_value(v1) / Rational(2));
  IntervalSet left = IntervalSet::segment(0, cut);
  IntervalSet right = IntervalSet::segment(cut, 1);
  if (value(v2, left) >= value(v2, right)) {
    return Allocation{{std::move(right), std::move(left)}};
  }
  return Allocation{{std::move(left), std::move(right)}};
}

Allocation connected_free_disposal(const PrefixEndpoint& x1, const PrefixEndpoint& x2) {
  Allocation alloc;
  alloc.free_disposal = true;
  if (x1.x >= x2.x) {
    const Rational half = x1.x / Rational(2);
    alloc.pieces = {IntervalSet::segment(half, x1.x), IntervalSet::segment(0, half)};
  } else {
    const Rational half = x2.x / Rational(2);
    alloc.pieces = {IntervalSet::segment(0, half), IntervalSet::segment(half, x2.x)};
  }
  return alloc;
}

}  // namespace fairdiv::mechanisms
