#include "fairdiv/interval_set.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "fairdiv/error.hpp"

namespace fairdiv {

// Merges an ordered-by-left list; drops degenerate members.
IntervalSet merge_sorted(std::vector<Interval> sorted) {
  std::vector<Interval> out;
  out.reserve(sorted.size());
  for (auto& iv : sorted) {
    if (iv.left == iv.right) continue;
    if (!out.empty() && iv.left <= out.back().right) {
      if (out.back().right < iv.right) out.back().right = std::move(iv.right);
    } else {
      out.push_back(std::move(iv));
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::canonicalize(std::span<const Interval> raw) {
  const Rational zero(0);
  const Rational one(1);
  std::vector<Interval> copy;
  copy.reserve(raw.size());
  for (const auto& iv : raw) {
    if (iv.left < zero || iv.right > one || iv.left > one || iv.right < zero) {
      throw Error(ErrorCode::OutOfRange,
                  "interval [" + iv.left.to_string() + ", " + iv.right.to_string() + "] leaves [0,1]");
    }
    if (iv.left > iv.right) {
      throw Error(ErrorCode::MalformedInterval,
                  "left endpoint " + iv.left.to_string() + " exceeds right endpoint " + iv.right.to_string());
    }
    copy.push_back(iv);
  }
  std::sort(copy.begin(), copy.end(), [](const Interval& a, const Interval& b) { return a.left < b.left; });
  return merge_sorted(std::move(copy));
}

IntervalSet IntervalSet::segment(const Rational& left, const Rational& right) {
  return canonicalize({Interval{left, right}});
}

Rational IntervalSet::total_length() const {
  Rational sum;
  for (const auto& iv : intervals_) sum += iv.length();
  return sum;
}

Rational IntervalSet::length_before(const Rational& x) const {
  Rational sum;
  for (const auto& iv : intervals_) {
    if (iv.left >= x) break;
    sum += min(iv.right, x) - iv.left;
  }
  return sum;
}

Rational IntervalSet::point_at_length(const Rational& target) const {
  if (target.sign() < 0) {
    throw Error(ErrorCode::PreconditionUnmet, "negative target length " + target.to_string());
  }
  if (target.is_zero()) return Rational(0);
  Rational remaining = target;
  for (const auto& iv : intervals_) {
    const Rational len = iv.length();
    if (remaining <= len) return iv.left + remaining;
    remaining -= len;
  }
  throw Error(ErrorCode::PreconditionUnmet,
              "target length " + target.to_string() + " exceeds set length " + total_length().to_string());
}

std::vector<Rational> IntervalSet::endpoints() const {
  std::vector<Rational> pts;
  pts.reserve(2 * intervals_.size());
  for (const auto& iv : intervals_) {
    pts.push_back(iv.left);
    pts.push_back(iv.right);
  }
  return pts;
}

std::string IntervalSet::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntervalSet& s) {
  os << '{';
  bool first = true;
  for (const auto& iv : s.intervals()) {
    if (!first) os << ',';
    first = false;
    os << '[' << iv.left << ',' << iv.right << ']';
  }
  return os << '}';
}

IntervalSet set_algebra(const IntervalSet& a, const IntervalSet& b, SetOp op) {
  const auto& xs = a.intervals_;
  const auto& ys = b.intervals_;
  switch (op) {
    case SetOp::Union: {
      std::vector<Interval> all;
      all.reserve(xs.size() + ys.size());
      std::merge(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(all),
                 [](const Interval& l, const Interval& r) { return l.left < r.left; });
      return merge_sorted(std::move(all));
    }
    case SetOp::Intersect: {
      std::vector<Interval> out;
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < xs.size() && j < ys.size()) {
        const Rational& lo = max(xs[i].left, ys[j].left);
        const Rational& hi = min(xs[i].right, ys[j].right);
        if (lo < hi) out.push_back({lo, hi});
        if (xs[i].right < ys[j].right) {
          ++i;
        } else {
          ++j;
        }
      }
      return merge_sorted(std::move(out));
    }
    case SetOp::Subtract: {
      std::vector<Interval> out;
      std::size_t j = 0;
      for (const auto& iv : xs) {
        Rational cursor = iv.left;
        while (j < ys.size() && ys[j].right <= cursor) ++j;
        std::size_t k = j;
        while (k < ys.size() && ys[k].left < iv.right) {
          if (cursor < ys[k].left) out.push_back({cursor, ys[k].left});
          if (cursor < ys[k].right) cursor = ys[k].right;
          ++k;
        }
        if (cursor < iv.right) out.push_back({cursor, iv.right});
      }
      return merge_sorted(std::move(out));
    }
  }
  return {};
}

}  // namespace fairdiv
