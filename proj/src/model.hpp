#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace rcusp {

using Time = std::int64_t;
using ActivityId = std::int32_t;

/// Per-activity data that never changes during propagation or search.
struct ActivitySpec {
  Time duration = 1;  ///< processing time, >= 1
  Time height = 1;    ///< resource usage while running, >= 1
  Time slack = 0;     ///< delay allowance the schedule must absorb, >= 0

  friend bool operator==(const ActivitySpec&, const ActivitySpec&) = default;
};

/// An interval on the time axis. Whether `end` is inclusive or exclusive is
/// fixed per use site; profile arithmetic in this library treats intervals
/// as half-open [start, end).
struct TimeInterval {
  Time start = 0;
  Time end = 0;

  bool emptyHalfOpen() const { return start >= end; }
  friend bool operator==(const TimeInterval&, const TimeInterval&) = default;
};

enum class TightenResult { Unchanged, Tightened, Failed };

/// Mutable per-activity start bounds. End bounds are derived through the
/// channeling e = s + p, so tightening one side moves the other.
///
/// Bounds only shrink: startMin never decreases, endMax never increases.
/// A store enters the failed state when some activity ends up with
/// startMin > startMax; tighten operations report that instead of throwing.
class BoundsStore {
 public:
  BoundsStore() = default;
  BoundsStore(std::vector<Time> start_min, std::vector<Time> start_max,
              std::vector<Time> durations);

  ActivityId size() const { return static_cast<ActivityId>(start_min_.size()); }

  Time startMin(ActivityId a) const { return start_min_[a]; }
  Time startMax(ActivityId a) const { return start_max_[a]; }
  Time endMin(ActivityId a) const { return start_min_[a] + duration_[a]; }
  Time endMax(ActivityId a) const { return start_max_[a] + duration_[a]; }
  Time duration(ActivityId a) const { return duration_[a]; }

  bool fixed(ActivityId a) const { return start_min_[a] == start_max_[a]; }
  bool failed() const { return failed_; }

  /// Counts effective tightenings; lets callers detect change cheaply.
  std::uint64_t changeCount() const { return changes_; }

  TightenResult tightenStartMin(ActivityId a, Time value);
  TightenResult tightenEndMax(ActivityId a, Time value);

  friend bool operator==(const BoundsStore& x, const BoundsStore& y) {
    return x.start_min_ == y.start_min_ && x.start_max_ == y.start_max_ &&
           x.duration_ == y.duration_;
  }

 private:
  std::vector<Time> start_min_;
  std::vector<Time> start_max_;
  std::vector<Time> duration_;
  bool failed_ = false;
  std::uint64_t changes_ = 0;
};

/// Immutable problem data: capacity, activities, initial bounds and a
/// bounded time axis [0, horizon) that covers every latest end plus slack.
struct Instance {
  Time capacity = 1;
  std::vector<ActivitySpec> activities;
  std::vector<Time> start_min;
  std::vector<Time> start_max;
  Time horizon = 0;

  ActivityId size() const { return static_cast<ActivityId>(activities.size()); }

  BoundsStore initialBounds() const;

  /// Throws std::invalid_argument when an invariant is broken
  /// (p >= 1, h >= 1, k >= 0, 0 <= s_min <= s_max, s_max + p + k <= horizon).
  void validate() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// The slack reservation window of `a`: [max(startMax, endMin), endMin + k].
/// Written with its closed right end; everywhere it feeds profile arithmetic
/// it is read half-open, so endMin + k itself carries no reservation.
/// When the window closes before it opens the result is an empty interval
/// anchored at its start.
TimeInterval kcp(ActivityId a, const BoundsStore& bounds, const ActivitySpec& spec);

/// [startMax, endMin) when startMax < endMin, absent otherwise.
std::optional<TimeInterval> compulsoryPart(ActivityId a, const BoundsStore& bounds,
                                           const ActivitySpec& spec);

}  // namespace rcusp
