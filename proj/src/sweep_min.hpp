#pragma once

#include <optional>
#include <vector>

#include "model.hpp"
#include "sweep_events.hpp"
#include "sweep_stats.hpp"

namespace rcusp {

/// One start-of-compulsory-part event per activity at its latest start, plus
/// one pruning-candidate event at the earliest start of every unfixed
/// activity. Compulsory-part ends and window ends are created on the fly.
EventQueue generateEventsMin(const Instance& instance, const BoundsStore& bounds);

/// Left-to-right sweep that raises earliest starts until every activity can
/// be fixed at its earliest start without overloading the profile, slack
/// reservations included. Reaches its fixpoint in a single pass.
///
/// Exposed as a steppable state machine so tests can inspect the profile
/// height, heap and candidate set between event dates.
class MinSweep {
 public:
  MinSweep(const Instance& instance, BoundsStore& bounds);

  bool finished() const { return queue_.empty(); }

  /// Processes all events at the next date, runs the overload check for the
  /// interval up to the following date, then filters every candidate.
  PropagateStatus advance();

  Time currentDate() const { return delta_; }
  std::optional<Time> nextDate() const { return queue_.nextDate(); }
  Time profileHeight() const { return profile_height_; }
  Time reservationMax() { return heap_.maxHeight(delta_); }
  const std::vector<ActivityId>& candidates() const { return candidates_; }
  const SweepStats& stats() const { return stats_; }

 private:
  PropagateStatus filter();
  void insertReservation(ActivityId a);

  const Instance& instance_;
  BoundsStore& bounds_;
  EventQueue queue_;
  LazyActivityHeap heap_;
  std::vector<ActivityId> candidates_;
  std::vector<Event> batch_;
  std::vector<char> in_heap_;  // each activity enters the heap at most once
  Time delta_ = 0;
  std::optional<Time> delta_next_;
  Time profile_height_ = 0;
  SweepStats stats_;
};

SweepOutcome sweepMin(const Instance& instance, BoundsStore& bounds);

}  // namespace rcusp
