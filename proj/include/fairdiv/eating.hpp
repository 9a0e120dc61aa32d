#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "fairdiv/model.hpp"

namespace fairdiv::eating {

enum class EventKind { EatStart, EatEnd, Jump, Stop, Meet };

std::string_view to_string(EventKind kind) noexcept;

struct Event {
  Rational time;
  int agent = 1;  // 1 eats rightwards from 0, 2 eats leftwards from 1
  EventKind kind = EventKind::EatStart;
  Rational position;

  friend bool operator==(const Event&, const Event&) = default;
};

struct Trace {
  std::vector<Event> events;
  Rational meeting_point;
  /// Agent that ran out of valued cake first, if the run reached that phase.
  std::optional<int> first_stopped;
  /// Cake nobody ate, split at the meeting point: right part to agent 1,
  /// left part to agent 2.
  IntervalSet phase3_first;
  IntervalSet phase3_second;
};

struct Result {
  Allocation allocation;
  Trace trace;
};

/// Event-driven exact simulation of the two-agent eating procedure. Both
/// agents eat their valued intervals at unit speed from opposite ends,
/// jumping over the rest. When one runs out she stops and the other keeps
/// going; once both have stopped the second one eats the unallocated gap
/// between them. Leftover cake left of the meeting point goes to agent 2,
/// right of it to agent 1. Simultaneous jumps are resolved agent 2 first.
Result simulate(const Valuation& v1, const Valuation& v2);

}  // namespace fairdiv::eating
