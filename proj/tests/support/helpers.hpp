#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "fairdiv/model.hpp"

namespace testing_helpers {

inline fairdiv::Rational R(const char* text) { return fairdiv::Rational::parse(text); }

/// Canonical set from textual pairs, e.g. S({{"0","1/2"},{"3/4","1"}}).
inline fairdiv::IntervalSet S(std::initializer_list<std::pair<const char*, const char*>> pairs) {
  std::vector<fairdiv::Interval> raw;
  for (const auto& [l, r] : pairs) raw.push_back({R(l), R(r)});
  return fairdiv::IntervalSet::canonicalize(raw);
}

inline fairdiv::Valuation V(std::initializer_list<std::pair<const char*, const char*>> pairs) { return {S(pairs)}; }

inline fairdiv::Instance two(fairdiv::ResourceKind kind, fairdiv::Valuation a, fairdiv::Valuation b) {
  return {kind, {std::move(a), std::move(b)}};
}

inline fairdiv::Instance prefix(fairdiv::ResourceKind kind, std::initializer_list<const char*> xs) {
  std::vector<fairdiv::Rational> ends;
  for (const char* x : xs) ends.push_back(R(x));
  return fairdiv::Instance::prefix(kind, ends);
}

inline std::vector<fairdiv::Rational> Rs(std::initializer_list<const char*> xs) {
  std::vector<fairdiv::Rational> out;
  for (const char* x : xs) out.push_back(R(x));
  return out;
}

}  // namespace testing_helpers
