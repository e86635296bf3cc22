#pragma once

#include <vector>

#include "model.hpp"
#include "sweep_stats.hpp"

namespace rcusp {

struct PropagateResult {
  PropagateStatus status = PropagateStatus::Fixpoint;
  bool changed = false;
};

/// Per-sweep instrumentation collected across one propagate call.
struct PropagateTrace {
  std::vector<SweepOutcome> min_sweeps;
  std::vector<SweepOutcome> max_sweeps;
};

/// Runs the left-to-right and right-to-left sweeps alternately, starting
/// with the former, until neither changes a bound. On a fixpoint exit both
/// fixpoint verifiers come back empty.
PropagateResult propagate(const Instance& instance, BoundsStore& bounds,
                          PropagateTrace* trace = nullptr);

/// Plain cumulative filtering: propagation with every slack treated as zero.
PropagateResult cumulativePropagate(const Instance& instance, BoundsStore& bounds,
                                    PropagateTrace* trace = nullptr);

/// Copy with all slacks zeroed; capacity and bounds unchanged.
Instance withZeroSlack(const Instance& instance);

/// Folds each slack into the duration: p' = p + k, k' = 0. Start bounds are
/// kept; end bounds follow the longer duration.
Instance naiveTransform(const Instance& instance);

}  // namespace rcusp
