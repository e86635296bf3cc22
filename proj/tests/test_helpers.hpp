#pragma once

#include <vector>

#include "bench.hpp"
#include "model.hpp"

namespace rcusp::testing {

struct ActivityRow {
  Time p, h, k, s_min, s_max;
};

inline Instance makeInstance(Time capacity, std::vector<ActivityRow> rows,
                             Time horizon = -1) {
  Instance instance;
  instance.capacity = capacity;
  Time needed = 0;
  for (const ActivityRow& row : rows) {
    instance.activities.push_back({row.p, row.h, row.k});
    instance.start_min.push_back(row.s_min);
    instance.start_max.push_back(row.s_max);
    needed = std::max(needed, row.s_max + row.p + row.k);
  }
  instance.horizon = horizon >= 0 ? horizon : needed;
  instance.validate();
  return instance;
}

/// Small random instances for oracle-scale cross checks: mixed fixed and
/// unfixed activities, occasional overheight activity, narrow domains.
inline Instance randomSmallInstance(std::uint64_t seed, int max_n, Time max_horizon) {
  Rng rng(seed);
  const int n = static_cast<int>(rng.uniform(1, max_n));
  const Time capacity = rng.uniform(1, 4);
  const Time horizon = rng.uniform(max_horizon / 2, max_horizon);

  Instance instance;
  instance.capacity = capacity;
  instance.horizon = horizon;
  for (int i = 0; i < n; ++i) {
    ActivitySpec spec;
    spec.duration = rng.uniform(1, 4);
    spec.height = rng.uniform(1, capacity + (rng.uniform(0, 9) == 0 ? 1 : 0));
    spec.slack = rng.uniform(0, 3);
    const Time latest = horizon - spec.duration - spec.slack;
    if (latest < 0) {
      // Footprint does not fit this horizon; shrink to a unit activity.
      spec.duration = 1;
      spec.slack = 0;
    }
    const Time top = horizon - spec.duration - spec.slack;
    const Time s_min = rng.uniform(0, top);
    const Time width = rng.uniform(0, 4) == 0 ? 0 : rng.uniform(0, 5);
    const Time s_max = std::min(top, s_min + width);
    instance.activities.push_back(spec);
    instance.start_min.push_back(s_min);
    instance.start_max.push_back(s_max);
  }
  instance.validate();
  return instance;
}

}  // namespace rcusp::testing
