#pragma once

#include <optional>
#include <vector>

#include "model.hpp"
#include "sweep_events.hpp"
#include "sweep_stats.hpp"

namespace rcusp {

/// Window-end and compulsory-end events for every activity, plus one
/// pruning-candidate event at latest end plus slack for every unfixed one.
EventQueue generateEventsMax(const Instance& instance, const BoundsStore& bounds);

/// Right-to-left sweep that lowers latest ends. Not a mirror image of the
/// left-to-right sweep: a window start can move left while the sweep runs,
/// so window-start events are regenerated when found stale, and a candidate
/// must not count its own reservation in its pruning condition.
class MaxSweep {
 public:
  MaxSweep(const Instance& instance, BoundsStore& bounds);

  bool finished() const { return queue_.empty(); }
  PropagateStatus advance();

  Time currentDate() const { return delta_; }
  std::optional<Time> nextDate() const { return queue_.nextDate(); }
  Time profileHeight() const { return profile_height_; }
  Time reservationMax() { return heap_.maxHeight(delta_); }
  const std::vector<ActivityId>& candidates() const { return candidates_; }
  const SweepStats& stats() const { return stats_; }

 private:
  PropagateStatus filter();
  Time windowStart(ActivityId a) const;

  const Instance& instance_;
  BoundsStore& bounds_;
  EventQueue queue_;
  LazyActivityHeap heap_;
  std::vector<ActivityId> candidates_;
  std::vector<Event> batch_;
  std::vector<char> in_heap_;
  Time delta_ = 0;
  std::optional<Time> delta_next_;
  Time profile_height_ = 0;
  SweepStats stats_;
};

SweepOutcome sweepMax(const Instance& instance, BoundsStore& bounds);

}  // namespace rcusp
