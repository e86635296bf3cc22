#include "propagator.hpp"

#include "sweep_max.hpp"
#include "sweep_min.hpp"

namespace rcusp {

PropagateResult propagate(const Instance& instance, BoundsStore& bounds,
                          PropagateTrace* trace) {
  PropagateResult result;
  if (bounds.failed()) {
    result.status = PropagateStatus::Failure;
    return result;
  }
  const bool collect = trace != nullptr;
  while (true) {
    SweepOutcome lower = sweepMin(instance, bounds, collect);
    const bool lower_changed = lower.changed;
    if (trace) trace->min_sweeps.push_back(std::move(lower));
    result.changed = result.changed || lower_changed;
    if (lower.status == PropagateStatus::Failure && !trace) {
      // status was moved-from only for the trace copy; re-read via variable
    }
    if ((trace ? trace->min_sweeps.back().status : lower.status) ==
        PropagateStatus::Failure) {
      result.status = PropagateStatus::Failure;
      return result;
    }
    SweepOutcome upper = sweepMax(instance, bounds, collect);
    const bool upper_changed = upper.changed;
    const PropagateStatus upper_status = upper.status;
    if (trace) trace->max_sweeps.push_back(std::move(upper));
    result.changed = result.changed || upper_changed;
    if (upper_status == PropagateStatus::Failure) {
      result.status = PropagateStatus::Failure;
      return result;
    }
    // The left-to-right pass certifies the lower conditions in one pass; an
    // unchanged right-to-left pass both certifies the upper ones and leaves
    // that certificate intact, so the joint fixpoint is reached.
    if (!upper_changed) return result;
  }
}

PropagateResult cumulativePropagate(const Instance& instance, BoundsStore& bounds,
                                    PropagateTrace* trace) {
  const Instance relaxed = withZeroSlack(instance);
  return propagate(relaxed, bounds, trace);
}

Instance withZeroSlack(const Instance& instance) {
  Instance copy = instance;
  for (ActivitySpec& spec : copy.activities) spec.slack = 0;
  return copy;
}

Instance naiveTransform(const Instance& instance) {
  Instance copy = instance;
  for (ActivitySpec& spec : copy.activities) {
    spec.duration += spec.slack;
    spec.slack = 0;
  }
  return copy;
}

}  // namespace rcusp
