#include "sweep_max.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcusp {

EventQueue generateEventsMax(const Instance& instance, const BoundsStore& bounds) {
  EventQueue queue(/*ascending=*/false);
  for (ActivityId a = 0; a < instance.size(); ++a) {
    const ActivitySpec& spec = instance.activities[a];
    queue.push(Event{EventKind::Ekcp, a, bounds.endMin(a) + spec.slack});
    queue.push(Event{EventKind::Ecp, a, bounds.endMin(a)});
    if (!bounds.fixed(a)) {
      queue.push(Event{EventKind::Pr, a, bounds.endMax(a) + spec.slack});
    }
  }
  return queue;
}

MaxSweep::MaxSweep(const Instance& instance, BoundsStore& bounds)
    : instance_(instance),
      bounds_(bounds),
      queue_(generateEventsMax(instance, bounds)),
      heap_([this](ActivityId a, Time pos) { return pos <= windowStart(a); }),
      in_heap_(static_cast<std::size_t>(instance.size()), 0) {
  stats_.skcp_regens.assign(static_cast<std::size_t>(instance.size()), 0);
}

Time MaxSweep::windowStart(ActivityId a) const {
  return std::max(bounds_.startMax(a), bounds_.endMin(a));
}

PropagateStatus MaxSweep::advance() {
  delta_ = queue_.extractFront(batch_);
  stats_.events_processed += static_cast<std::int64_t>(batch_.size());

  for (const Event& event : batch_) {
    if (event.kind != EventKind::Ecp) continue;
    const ActivityId a = event.activity;
    if (bounds_.startMax(a) < delta_) {
      profile_height_ += instance_.activities[a].height;
      queue_.push(Event{EventKind::Scp, a, bounds_.startMax(a)});
    }
  }
  for (const Event& event : batch_) {
    if (event.kind == EventKind::Scp) {
      profile_height_ -= instance_.activities[event.activity].height;
    }
  }
  for (const Event& event : batch_) {
    if (event.kind != EventKind::Ekcp) continue;
    const ActivityId a = event.activity;
    if (windowStart(a) < delta_) {
      if (in_heap_[a]) {
        throw std::logic_error("MaxSweep: activity re-entered the reservation heap");
      }
      in_heap_[a] = 1;
      heap_.insert(a, instance_.activities[a].height);
      queue_.push(Event{EventKind::Skcp, a, windowStart(a)});
    }
  }
  for (const Event& event : batch_) {
    if (event.kind != EventKind::Skcp) continue;
    const ActivityId a = event.activity;
    // The event's date is the window start at creation time. Filtering since
    // then moved the window left; chase it so the profile still changes only
    // on event dates.
    if (windowStart(a) < delta_) {
      queue_.push(Event{EventKind::Skcp, a, windowStart(a)});
      ++stats_.skcp_regens[a];
    }
  }
  for (const Event& event : batch_) {
    if (event.kind == EventKind::Pr) candidates_.push_back(event.activity);
  }

  delta_next_ = queue_.nextDate();

  if (profile_height_ + heap_.maxHeight(delta_) > instance_.capacity) {
    return PropagateStatus::Failure;
  }
  return filter();
}

PropagateStatus MaxSweep::filter() {
  for (std::size_t i = 0; i < candidates_.size();) {
    const ActivityId a = candidates_[i];
    const ActivitySpec& spec = instance_.activities[a];
    const Time end_max = bounds_.endMax(a);

    // The sweep has passed the candidate's latest start: its latest
    // placement survived every interval.
    if (delta_ <= bounds_.startMax(a)) {
      candidates_.erase(candidates_.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }

    if (!delta_next_) {
      throw std::logic_error("MaxSweep: active candidate past the final event");
    }
    const Time delta_next = *delta_next_;

    const bool delayed_copy_overloads =
        profile_height_ + spec.height > instance_.capacity;

    // Slack-window overload on [max(delta', endMax), min(delta, endMax + k)):
    // the delayed copy does not fit anywhere over this interval.
    const Time window_lo = std::max(delta_next, end_max);
    const Time window_hi = std::min(delta_, end_max + spec.slack);
    const bool window_fire = window_lo < window_hi && delayed_copy_overloads;

    // Body overload on [max(delta', startMax), min(delta, endMax)). The
    // candidate's own reservation must not count against itself, and once
    // the interval lies inside its compulsory part (delta <= endMin) the
    // overload check already covers these instants.
    const bool body_fire =
        delta_next < end_max && delta_ > bounds_.endMin(a) &&
        profile_height_ + spec.height + heap_.maxHeightExcluding(delta_, a) >
            instance_.capacity;

    // A body prune alone would land the end on delta', which drags the
    // delay window onto this very interval; when the delayed copy overloads
    // it too, the end must clear the whole interval from the left.
    Time new_end_max = end_max;
    if (window_fire || (body_fire && delayed_copy_overloads)) {
      new_end_max = delta_next - spec.slack;
    } else if (body_fire) {
      new_end_max = delta_next;
    }

    if (new_end_max < end_max) {
      stats_.prunes.push_back({a, end_max, new_end_max});
      if (bounds_.tightenEndMax(a, new_end_max) == TightenResult::Failed) {
        return PropagateStatus::Failure;
      }
    }
    ++i;
  }
  return PropagateStatus::Fixpoint;
}

SweepOutcome sweepMax(const Instance& instance, BoundsStore& bounds) {
  SweepOutcome outcome;
  outcome.stats.skcp_regens.assign(static_cast<std::size_t>(instance.size()), 0);
  if (bounds.failed()) {
    outcome.status = PropagateStatus::Failure;
    return outcome;
  }
  const std::uint64_t changes_before = bounds.changeCount();
  MaxSweep sweep(instance, bounds);
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
