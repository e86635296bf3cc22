#include "sweep_min.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcusp {

EventQueue generateEventsMin(const Instance& instance, const BoundsStore& bounds) {
  EventQueue queue(/*ascending=*/true);
  for (ActivityId a = 0; a < instance.size(); ++a) {
    queue.push(Event{EventKind::Scp, a, bounds.startMax(a)});
    if (!bounds.fixed(a)) {
      queue.push(Event{EventKind::Pr, a, bounds.startMin(a)});
    }
  }
  return queue;
}

MinSweep::MinSweep(const Instance& instance, BoundsStore& bounds)
    : instance_(instance),
      bounds_(bounds),
      queue_(generateEventsMin(instance, bounds)),
      heap_([this](ActivityId a, Time pos) {
        return pos >= bounds_.endMin(a) + instance_.activities[a].slack;
      }),
      in_heap_(static_cast<std::size_t>(instance.size()), 0) {}

PropagateStatus MinSweep::advance() {
  delta_ = queue_.extractFront(batch_);
  stats_.events_processed += static_cast<std::int64_t>(batch_.size());

  // Once an activity's latest start is reached its compulsory material is
  // final: any later adjustment of its earliest start would cross the bounds.
  for (const Event& event : batch_) {
    if (event.kind != EventKind::Scp) continue;
    const ActivityId a = event.activity;
    const ActivitySpec& spec = instance_.activities[a];
    if (delta_ < bounds_.endMin(a)) {
      profile_height_ += spec.height;
      queue_.push(Event{EventKind::Ecp, a, bounds_.endMin(a)});
    } else if (delta_ < bounds_.endMin(a) + spec.slack) {
      insertReservation(a);
      queue_.push(Event{EventKind::Ekcp, a, bounds_.endMin(a) + spec.slack});
    }
  }
  for (const Event& event : batch_) {
    if (event.kind != EventKind::Ecp) continue;
    const ActivityId a = event.activity;
    const ActivitySpec& spec = instance_.activities[a];
    profile_height_ -= spec.height;
    if (spec.slack > 0) {
      insertReservation(a);
      queue_.push(Event{EventKind::Ekcp, a, bounds_.endMin(a) + spec.slack});
    }
  }
  // Window-end events need no action; reservations expire lazily in the heap.
  for (const Event& event : batch_) {
    if (event.kind == EventKind::Pr) candidates_.push_back(event.activity);
  }

  delta_next_ = queue_.nextDate();

  // Compulsory material alone overloading the interval is a failure no
  // filtering can repair.
  if (profile_height_ + heap_.maxHeight(delta_) > instance_.capacity) {
    return PropagateStatus::Failure;
  }
  return filter();
}

void MinSweep::insertReservation(ActivityId a) {
  if (in_heap_[a]) {
    throw std::logic_error("MinSweep: activity re-entered the reservation heap");
  }
  in_heap_[a] = 1;
  heap_.insert(a, instance_.activities[a].height);
}

PropagateStatus MinSweep::filter() {
  for (std::size_t i = 0; i < candidates_.size();) {
    const ActivityId a = candidates_[i];
    const ActivitySpec& spec = instance_.activities[a];
    const Time end_min = bounds_.endMin(a);
    const Time window_end = end_min + spec.slack;

    // Candidate fully swept: its earliest placement survived every interval.
    if (window_end <= delta_) {
      candidates_.erase(candidates_.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }

    // Past the last event the profile is empty, so no candidate can still be
    // active; every remaining one has a pending event keeping the queue alive.
    if (!delta_next_) {
      throw std::logic_error("MinSweep: active candidate past the final event");
    }
    const Time delta_next = *delta_next_;

    // Body overload: some instant of [delta, min(delta', endMin)) cannot
    // accommodate the candidate on top of profile and tallest reservation.
    // Only tested left of the candidate's latest start; from there on its
    // own compulsory part is in the profile and the overload check above
    // covers the same instants.
    bool fire = delta_ < bounds_.startMax(a) && delta_ < end_min &&
                profile_height_ + spec.height + heap_.maxHeight(delta_) >
                    instance_.capacity;

    // Slack-window overload: the candidate's delayed copy would not fit on
    // [max(delta, endMin), min(delta', windowEnd)).
    if (!fire) {
      const Time lo = std::max(delta_, end_min);
      const Time hi = std::min(delta_next, window_end);
      fire = lo < hi && profile_height_ + spec.height > instance_.capacity;
    }

    if (fire) {
      stats_.prunes.push_back({a, bounds_.startMin(a), delta_next});
      if (bounds_.tightenStartMin(a, delta_next) == TightenResult::Failed) {
        return PropagateStatus::Failure;
      }
    }
    ++i;
  }
  return PropagateStatus::Fixpoint;
}

SweepOutcome sweepMin(const Instance& instance, BoundsStore& bounds) {
  SweepOutcome outcome;
  if (bounds.failed()) {
    outcome.status = PropagateStatus::Failure;
    return outcome;
  }
  const std::uint64_t changes_before = bounds.changeCount();
  MinSweep sweep(instance, bounds);
  while (!sweep.finished()) {
    if (sweep.advance() == PropagateStatus::Failure) {
      outcome.status = PropagateStatus::Failure;
      break;
    }
  }
  outcome.changed = bounds.changeCount() != changes_before;
  outcome.stats = sweep.stats();
  return outcome;
}

}  // namespace rcusp
