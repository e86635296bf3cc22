#include "model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rcusp {

BoundsStore::BoundsStore(std::vector<Time> start_min, std::vector<Time> start_max,
                         std::vector<Time> durations)
    : start_min_(std::move(start_min)),
      start_max_(std::move(start_max)),
      duration_(std::move(durations)) {
  if (start_min_.size() != start_max_.size() || start_min_.size() != duration_.size()) {
    throw std::invalid_argument("BoundsStore: vector sizes differ");
  }
  for (std::size_t a = 0; a < start_min_.size(); ++a) {
    if (start_min_[a] > start_max_[a]) failed_ = true;
  }
}

TightenResult BoundsStore::tightenStartMin(ActivityId a, Time value) {
  if (value <= start_min_[a]) return TightenResult::Unchanged;
  start_min_[a] = value;
  ++changes_;
  if (start_min_[a] > start_max_[a]) {
    failed_ = true;
    return TightenResult::Failed;
  }
  return TightenResult::Tightened;
}

TightenResult BoundsStore::tightenEndMax(ActivityId a, Time value) {
  if (value >= endMax(a)) return TightenResult::Unchanged;
  start_max_[a] = value - duration_[a];
  ++changes_;
  if (start_min_[a] > start_max_[a]) {
    failed_ = true;
    return TightenResult::Failed;
  }
  return TightenResult::Tightened;
}

BoundsStore Instance::initialBounds() const {
  std::vector<Time> durations;
  durations.reserve(activities.size());
  for (const ActivitySpec& spec : activities) durations.push_back(spec.duration);
  return BoundsStore(start_min, start_max, std::move(durations));
}

void Instance::validate() const {
  if (capacity < 1) throw std::invalid_argument("instance: capacity must be >= 1");
  const std::size_t n = activities.size();
  if (start_min.size() != n || start_max.size() != n) {
    throw std::invalid_argument("instance: bound vectors must match activity count");
  }
  for (std::size_t a = 0; a < n; ++a) {
    const ActivitySpec& spec = activities[a];
    const std::string where = "activity " + std::to_string(a) + ": ";
    if (spec.duration < 1) throw std::invalid_argument(where + "duration must be >= 1");
    if (spec.height < 1) throw std::invalid_argument(where + "height must be >= 1");
    if (spec.slack < 0) throw std::invalid_argument(where + "slack must be >= 0");
    if (start_min[a] < 0) throw std::invalid_argument(where + "start_min must be >= 0");
    if (start_min[a] > start_max[a]) {
      throw std::invalid_argument(where + "start_min exceeds start_max");
    }
    if (start_max[a] + spec.duration + spec.slack > horizon) {
      throw std::invalid_argument(where + "latest end plus slack exceeds the horizon");
    }
  }
}

TimeInterval kcp(ActivityId a, const BoundsStore& bounds, const ActivitySpec& spec) {
  const Time start = std::max(bounds.startMax(a), bounds.endMin(a));
  const Time end = bounds.endMin(a) + spec.slack;
  return TimeInterval{start, std::max(start, end)};
}

std::optional<TimeInterval> compulsoryPart(ActivityId a, const BoundsStore& bounds,
                                           const ActivitySpec& spec) {
  (void)spec;
  const Time start = bounds.startMax(a);
  const Time end = bounds.endMin(a);
  if (start >= end) return std::nullopt;
  return TimeInterval{start, end};
}

}  // namespace rcusp
