#include <gtest/gtest.h>

#include <sstream>

#include "fairdiv/error.hpp"
#include "fairdiv/model.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace fairdiv;
using testing_helpers::R;
using testing_helpers::S;
using testing_helpers::V;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvariantViolated;
}

}  // namespace

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(R("2/4"), Rational(1, 2));
  EXPECT_EQ(R("3"), Rational(3));
  EXPECT_EQ(R("0.25"), Rational(1, 4));
  EXPECT_EQ(R("0.6"), Rational(3, 5));
  EXPECT_EQ(R("-1/3"), Rational(-1, 3));
  EXPECT_EQ(R("1.0"), Rational(1));
}

TEST(Rational, SerializesReducedWithPositiveDenominator) {
  EXPECT_EQ(R("6/8").to_string(), "3/4");
  EXPECT_EQ(Rational(2, -4).to_string(), "-1/2");
  EXPECT_EQ(Rational(0).to_string(), "0/1");
  EXPECT_EQ(R("1").to_string(), "1/1");
  std::ostringstream os;
  os << Rational(1) << ' ' << Rational(1, 3);
  EXPECT_EQ(os.str(), "1 1/3");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "a", "1/", "/2", ".5", "1.", "1e3", "0x1", "1/2/3", "--1", " 1"}) {
    EXPECT_EQ(code_of([&] { Rational::parse(bad); }), ErrorCode::ParseError) << bad;
  }
}

TEST(Rational, ExactArithmeticBeyondMachineWords) {
  Rational x(1, 3);
  for (int k = 0; k < 200; ++k) x *= Rational(7, 3);
  for (int k = 0; k < 200; ++k) x /= Rational(7, 3);
  EXPECT_EQ(x, Rational(1, 3));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(code_of([] { Rational(1) / Rational(0); }), ErrorCode::InvariantViolated);
}

TEST(Canonicalize, MergesAdjacentIntervals) { EXPECT_EQ(S({{"0", "1/2"}, {"1/2", "1"}}), IntervalSet::unit()); }

TEST(Canonicalize, DropsDegeneratePoints) { EXPECT_TRUE(S({{"1/4", "1/4"}}).empty()); }

TEST(Canonicalize, MergesOverlapsLikeSweepOracle) {
  const auto set = S({{"0", "1/3"}, {"1/4", "1/2"}});
  const auto expected = oracle::sweep_union({{R("0"), R("1/3")}, {R("1/4"), R("1/2")}});
  ASSERT_EQ(set.size(), expected.size());
  EXPECT_EQ(set.intervals()[0], expected[0]);
  EXPECT_EQ(set, S({{"0", "1/2"}}));
}

TEST(Canonicalize, SortsUnorderedInput) {
  EXPECT_EQ(S({{"3/4", "1"}, {"0", "1/4"}, {"1/8", "1/2"}}).to_string(), "{[0,1/2],[3/4,1]}");
}

TEST(Canonicalize, ReportsOutOfRangeAndMalformed) {
  EXPECT_EQ(code_of([] { S({{"-1/2", "1/2"}}); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { S({{"0", "3/2"}}); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { S({{"3/4", "1/4"}}); }), ErrorCode::MalformedInterval);
}

TEST(SetAlgebra, Examples) {
  EXPECT_EQ(intersect(S({{"0", "1/2"}}), S({{"1/4", "1"}})), S({{"1/4", "1/2"}}));
  EXPECT_EQ(subtract(IntervalSet::unit(), S({{"1/4", "1/2"}})), S({{"0", "1/4"}, {"1/2", "1"}}));
  EXPECT_EQ(unite(S({{"0", "1/5"}}), S({{"9/10", "1"}})), S({{"0", "1/5"}, {"9/10", "1"}}));
}

TEST(SetAlgebra, EmptyOperands) {
  const IntervalSet e;
  const auto a = S({{"1/3", "2/3"}});
  EXPECT_EQ(unite(e, a), a);
  EXPECT_TRUE(intersect(e, a).empty());
  EXPECT_EQ(subtract(a, e), a);
  EXPECT_TRUE(subtract(e, a).empty());
  EXPECT_EQ(complement(e), IntervalSet::unit());
  EXPECT_TRUE(complement(IntervalSet::unit()).empty());
}

TEST(SetAlgebra, TouchingIntersectionIsEmpty) {
  EXPECT_TRUE(intersect(S({{"0", "1/2"}}), S({{"1/2", "1"}})).empty());
}

TEST(SetAlgebra, SubtractSplitsAcrossSeveralIntervals) {
  const auto a = S({{"0", "1/4"}, {"1/2", "3/4"}, {"7/8", "1"}});
  EXPECT_EQ(subtract(a, S({{"1/8", "5/8"}, {"15/16", "1"}})), S({{"0", "1/8"}, {"5/8", "3/4"}, {"7/8", "15/16"}}));
}

TEST(IntervalSet, MeasureHelpers) {
  const auto a = S({{"0", "1/4"}, {"1/2", "3/4"}});
  EXPECT_EQ(a.total_length(), R("1/2"));
  EXPECT_EQ(a.length_before(R("5/8")), R("3/8"));
  EXPECT_EQ(a.point_at_length(R("3/8")), R("5/8"));
  EXPECT_EQ(a.point_at_length(R("1/4")), R("1/4"));
  EXPECT_EQ(a.point_at_length(R("0")), R("0"));
  EXPECT_EQ(code_of([&] { a.point_at_length(R("3/4")); }), ErrorCode::PreconditionUnmet);
  EXPECT_FALSE(a.is_connected());
  EXPECT_TRUE(IntervalSet{}.is_connected());
}

TEST(Value, Examples) {
  EXPECT_EQ(value(V({{"0", "1"}}), S({{"0", "1/4"}, {"1/2", "1"}})), R("3/4"));
  EXPECT_EQ(value(V({{"0", "1/3"}}), IntervalSet{}), R("0"));
  const auto piece = S({{"1/2", "3/4"}, {"33/40", "9/10"}});
  EXPECT_EQ(value(V({{"0", "9/10"}}), piece), R("13/40"));
  EXPECT_EQ(oracle::measure(oracle::parts(piece), 0, R("9/10")), R("13/40"));
}

TEST(Allocation, FullAllocationDetection) {
  Allocation good{{S({{"0", "1/3"}}), S({{"1/3", "1"}})}};
  Allocation gap{{S({{"0", "1/3"}}), S({{"1/2", "1"}})}};
  Allocation overlap{{S({{"0", "1/2"}}), S({{"1/3", "1"}})}};
  EXPECT_TRUE(is_full_allocation(good));
  EXPECT_FALSE(is_full_allocation(gap));
  EXPECT_FALSE(is_full_allocation(overlap));
  EXPECT_TRUE(interiors_disjoint(gap));
  EXPECT_FALSE(interiors_disjoint(overlap));
}

TEST(Model, ResourceKindText) {
  EXPECT_EQ(to_string(ResourceKind::Chore), "chore");
  EXPECT_EQ(parse_resource_kind("cake"), ResourceKind::Cake);
  EXPECT_FALSE(parse_resource_kind("pie").has_value());
}
