#pragma once

#include <cstdint>
#include <vector>

#include "model.hpp"

namespace rcusp {

enum class PropagateStatus { Fixpoint, Failure };

struct PruneRecord {
  ActivityId activity;
  Time from;  // bound value before the adjustment
  Time to;    // bound value requested (startMin up, endMax down)
};

struct SweepStats {
  std::int64_t events_processed = 0;
  std::vector<PruneRecord> prunes;
  /// Right-to-left sweep only: per-activity count of regenerated window-start
  /// events after a candidate moved.
  std::vector<std::int32_t> skcp_regens;
};

struct SweepOutcome {
  PropagateStatus status = PropagateStatus::Fixpoint;
  bool changed = false;
  SweepStats stats;
};

}  // namespace rcusp
