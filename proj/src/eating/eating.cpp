#include "fairdiv/eating.hpp"

#include <algorithm>
#include <array>

namespace fairdiv::eating {

std::string_view to_string(EventKind kind) noexcept {
  switch (kind) {
    case EventKind::EatStart: return "eat-start";
    case EventKind::EatEnd: return "eat-end";
    case EventKind::Jump: return "jump";
    case EventKind::Stop: return "stop";
    case EventKind::Meet: return "meet";
  }
  return "unknown";
}

namespace {

struct Eater {
  int id = 1;
  std::vector<Interval> queue;  // valued intervals in travel order
  std::size_t next = 0;
  Rational pos;
  std::optional<Rational> target;  // far end of the interval being eaten
  bool stopped = false;
  std::vector<Interval> eaten;

  // Whether reaching `point` means passing or touching `other`.
  bool reaches(const Rational& point, const Rational& other) const { return id == 1 ? point >= other : point <= other; }
};

class Simulation {
public:
  Simulation(const Valuation& v1, const Valuation& v2) {
    first_.id = 1;
    first_.pos = Rational(0);
    first_.queue.assign(v1.desired.intervals().begin(), v1.desired.intervals().end());
    second_.id = 2;
    second_.pos = Rational(1);
    for (const auto& iv : v2.desired.intervals()) second_.queue.push_back({iv.right, iv.left});
    std::reverse(second_.queue.begin(), second_.queue.end());
  }

  Result run() {
    if (first_.queue.empty() && second_.queue.empty()) {
      stop(second_);
      stop(first_);
      return finish(Rational(0));
    }
    for (;;) {
      // Agent 2 resolves its jump before agent 1 at every instant.
      for (Eater* e : {&second_, &first_}) {
        if (e->stopped || e->target) continue;
        Eater& other = (e == &first_) ? second_ : first_;
        if (e->next == e->queue.size()) {
          stop(*e);
          continue;
        }
        const Interval& iv = e->queue[e->next++];  // {start, end} in travel direction
        if (e->reaches(iv.left, other.pos)) {
          log(*e, EventKind::Jump, other.pos);
          return finish(other.pos);
        }
        if (iv.left != e->pos) {
          e->pos = iv.left;
          log(*e, EventKind::Jump, e->pos);
        }
        e->target = iv.right;
        log(*e, EventKind::EatStart, e->pos);
      }

      if (first_.stopped && second_.stopped) {
        Eater& waiting = (stop_order_.front() == 1) ? first_ : second_;
        Eater& mover = (stop_order_.front() == 1) ? second_ : first_;
        if (first_.pos < second_.pos) {
          log(mover, EventKind::EatStart, mover.pos);
          mover.eaten.push_back({first_.pos, second_.pos});
          time_ += second_.pos - first_.pos;
          mover.pos = waiting.pos;
          log(mover, EventKind::EatEnd, mover.pos);
        }
        return finish(waiting.pos);
      }

      std::array<Eater*, 2> movers{};
      std::size_t moving = 0;
      for (Eater* e : {&first_, &second_}) {
        if (e->target) movers[moving++] = e;
      }
      Rational step = (second_.pos - first_.pos) / Rational(static_cast<std::int64_t>(moving));
      for (std::size_t k = 0; k < moving; ++k) {
        const Eater& e = *movers[k];
        Rational left = (e.id == 1) ? *e.target - e.pos : e.pos - *e.target;
        if (left < step) step = std::move(left);
      }

      time_ += step;
      for (std::size_t k = 0; k < moving; ++k) {
        Eater& e = *movers[k];
        const Rational from = e.pos;
        e.pos = (e.id == 1) ? from + step : from - step;
        if (!step.is_zero()) e.eaten.push_back(e.id == 1 ? Interval{from, e.pos} : Interval{e.pos, from});
      }
      const bool met = first_.pos == second_.pos;
      for (std::size_t k = 0; k < moving; ++k) {
        Eater& e = *movers[k];
        if (met || e.pos == *e.target) {
          log(e, EventKind::EatEnd, e.pos);
          e.target.reset();
        }
      }
      if (met) return finish(first_.pos);
    }
  }

private:
  void log(const Eater& e, EventKind kind, const Rational& where) {
    trace_.events.push_back({time_, e.id, kind, where});
  }

  void stop(Eater& e) {
    e.stopped = true;
    stop_order_.push_back(e.id);
    if (!trace_.first_stopped) trace_.first_stopped = e.id;
    log(e, EventKind::Stop, e.pos);
  }

  Result finish(const Rational& meeting) {
    trace_.meeting_point = meeting;
    for (Eater* e : {&first_, &second_}) {
      if (!e->target) continue;
      log(*e, EventKind::EatEnd, e->pos);
      e->target.reset();
    }
    log(first_, EventKind::Meet, meeting);
    log(second_, EventKind::Meet, meeting);

    IntervalSet ate1 = IntervalSet::canonicalize(first_.eaten);
    IntervalSet ate2 = IntervalSet::canonicalize(second_.eaten);
    const IntervalSet leftover = complement(unite(ate1, ate2));
    trace_.phase3_first = intersect(leftover, IntervalSet::segment(meeting, 1));
    trace_.phase3_second = intersect(leftover, IntervalSet::segment(0, meeting));

    Result result;
    result.allocation.pieces = {unite(ate1, trace_.phase3_first), unite(ate2, trace_.phase3_second)};
    result.trace = std::move(trace_);
    return result;
  }

  Eater first_;
  Eater second_;
  Rational time_;
  std::vector<int> stop_order_;
  Trace trace_;
};

}  // namespace

Result simulate(const Valuation& v1, const Valuation& v2) { return Simulation(v1, v2).run(); }

}  // namespace fairdiv::eating
