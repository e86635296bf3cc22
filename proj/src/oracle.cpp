#include "oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rcusp {
namespace oracle {
namespace {

bool cpCovers(const BoundsStore& bounds, ActivityId a, Time t) {
  return bounds.startMax(a) <= t && t < bounds.endMin(a);
}

bool kcpCovers(const Instance& inst, const BoundsStore& bounds, ActivityId a, Time t) {
  const Time start = std::max(bounds.startMax(a), bounds.endMin(a));
  const Time end = bounds.endMin(a) + inst.activities[a].slack;
  return start <= t && t < end;
}

Time cpSum(const Instance& inst, const BoundsStore& bounds, Time t, ActivityId skip) {
  Time sum = 0;
  for (ActivityId a = 0; a < inst.size(); ++a) {
    if (a == skip) continue;
    if (cpCovers(bounds, a, t)) sum += inst.activities[a].height;
  }
  return sum;
}

Time kcpMax(const Instance& inst, const BoundsStore& bounds, Time t, ActivityId skip) {
  Time best = 0;
  for (ActivityId a = 0; a < inst.size(); ++a) {
    if (a == skip) continue;
    if (kcpCovers(inst, bounds, a, t)) best = std::max(best, inst.activities[a].height);
  }
  return best;
}

}  // namespace

std::optional<Time> ttFailureCheck(const Instance& instance, const BoundsStore& bounds) {
  for (Time t = 0; t < instance.horizon; ++t) {
    if (cpSum(instance, bounds, t, -1) + kcpMax(instance, bounds, t, -1) >
        instance.capacity) {
      return t;
    }
  }
  return std::nullopt;
}

bool checkSolution(const Instance& instance, const std::vector<Time>& starts,
                   int reserve) {
  if (starts.size() != static_cast<std::size_t>(instance.size())) return false;
  if (reserve < 1) return false;
  for (ActivityId a = 0; a < instance.size(); ++a) {
    const ActivitySpec& spec = instance.activities[a];
    if (starts[a] < 0 || starts[a] + spec.duration + spec.slack > instance.horizon) {
      return false;
    }
  }

  // Event-swept per-instant evaluation: running profile as a difference
  // array, delay windows in a height-ordered multiset.
  std::vector<Time> profile_delta(static_cast<std::size_t>(instance.horizon) + 1, 0);
  std::vector<std::vector<Time>> window_open(static_cast<std::size_t>(instance.horizon) + 1);
  std::vector<std::vector<Time>> window_close(static_cast<std::size_t>(instance.horizon) + 1);
  for (ActivityId a = 0; a < instance.size(); ++a) {
    const ActivitySpec& spec = instance.activities[a];
    const Time s = starts[a];
    const Time e = s + spec.duration;
    profile_delta[s] += spec.height;
    profile_delta[e] -= spec.height;
    if (spec.slack > 0) {
      window_open[e].push_back(spec.height);
      window_close[e + spec.slack].push_back(spec.height);
    }
  }

  std::multiset<Time> delayed;
  Time running = 0;
  for (Time t = 0; t < instance.horizon; ++t) {
    running += profile_delta[t];
    for (Time h : window_open[t]) delayed.insert(h);
    for (Time h : window_close[t]) delayed.erase(delayed.find(h));
    Time load = running;
    int taken = 0;
    for (auto it = delayed.rbegin(); it != delayed.rend() && taken < reserve;
         ++it, ++taken) {
      load += *it;
    }
    if (load > instance.capacity) return false;
  }
  return true;
}

std::vector<Violation> verifyLowerFixpoint(const Instance& instance,
                                           const BoundsStore& bounds) {
  std::vector<Violation> violations;
  for (ActivityId b = 0; b < instance.size(); ++b) {
    const ActivitySpec& spec = instance.activities[b];
    for (Time t = bounds.startMin(b); t < bounds.endMin(b); ++t) {
      const Time load = spec.height + cpSum(instance, bounds, t, b) +
                        kcpMax(instance, bounds, t, b);
      if (load > instance.capacity) {
        violations.push_back({b, t, ConditionKind::EarliestBody});
      }
    }
    for (Time t = bounds.endMin(b); t < bounds.endMin(b) + spec.slack; ++t) {
      const Time load = cpSum(instance, bounds, t, -1) + spec.height;
      if (load > instance.capacity) {
        violations.push_back({b, t, ConditionKind::EarliestSlack});
      }
    }
  }
  return violations;
}

std::vector<Violation> verifyUpperFixpoint(const Instance& instance,
                                           const BoundsStore& bounds) {
  std::vector<Violation> violations;
  for (ActivityId b = 0; b < instance.size(); ++b) {
    const ActivitySpec& spec = instance.activities[b];
    for (Time t = bounds.startMax(b); t < bounds.endMax(b); ++t) {
      const Time load = spec.height + cpSum(instance, bounds, t, b) +
                        kcpMax(instance, bounds, t, b);
      if (load > instance.capacity) {
        violations.push_back({b, t, ConditionKind::LatestBody});
      }
    }
    for (Time t = bounds.endMax(b); t < bounds.endMax(b) + spec.slack; ++t) {
      const Time load = cpSum(instance, bounds, t, -1) + spec.height;
      if (load > instance.capacity) {
        violations.push_back({b, t, ConditionKind::LatestSlack});
      }
    }
  }
  return violations;
}

std::optional<BoundsStore> bruteforceTimeTableFixpoint(const Instance& instance,
                                                       BoundsStore bounds) {
  if (bounds.failed()) return std::nullopt;
  bool changed = true;
  while (changed) {
    changed = false;
    for (ActivityId a = 0; a < instance.size(); ++a) {
      // Raise the earliest start while fixing there is contradictory.
      while (true) {
        BoundsStore fixed = bounds;
        fixed.tightenEndMax(a, bounds.startMin(a) + bounds.duration(a));
        if (!ttFailureCheck(instance, fixed)) break;
        if (bounds.tightenStartMin(a, bounds.startMin(a) + 1) == TightenResult::Failed) {
          return std::nullopt;
        }
        changed = true;
      }
      // Lower the latest end while fixing there is contradictory.
      while (true) {
        BoundsStore fixed = bounds;
        fixed.tightenStartMin(a, bounds.endMax(a) - bounds.duration(a));
        if (!ttFailureCheck(instance, fixed)) break;
        if (bounds.tightenEndMax(a, bounds.endMax(a) - 1) == TightenResult::Failed) {
          return std::nullopt;
        }
        changed = true;
      }
    }
  }
  return bounds;
}

std::vector<std::vector<Time>> enumerateSolutions(const Instance& instance,
                                                  const BoundsStore& bounds,
                                                  int reserve) {
  if (instance.size() > 5 || instance.horizon > 12) {
    throw std::invalid_argument(
        "enumerateSolutions: refusing instance beyond n <= 5, horizon <= 12");
  }
  std::vector<std::vector<Time>> solutions;
  if (bounds.failed()) return solutions;
  std::vector<Time> starts(instance.size(), 0);
  const auto recurse = [&](auto&& self, ActivityId a) -> void {
    if (a == instance.size()) {
      if (checkSolution(instance, starts, reserve)) solutions.push_back(starts);
      return;
    }
    for (Time s = bounds.startMin(a); s <= bounds.startMax(a); ++s) {
      starts[a] = s;
      self(self, a + 1);
    }
  };
  recurse(recurse, 0);
  return solutions;
}

}  // namespace oracle
}  // namespace rcusp
