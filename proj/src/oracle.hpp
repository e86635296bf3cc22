#pragma once

#include <optional>
#include <vector>

#include "model.hpp"

namespace rcusp {
namespace oracle {

// Time-indexed reference implementations of the declarative conditions the
// sweep propagator must enforce. Deliberately naive; used as ground truth.

enum class ConditionKind {
  Overload,       // compulsory profile plus tallest slack reservation exceeds C
  EarliestBody,   // activity at its earliest start overloads some instant
  EarliestSlack,  // its slack window after the earliest end overloads some instant
  LatestBody,     // activity at its latest end overloads some instant
  LatestSlack,    // its slack window after the latest end overloads some instant
};

struct Violation {
  ActivityId activity = -1;
  Time time = 0;
  ConditionKind condition = ConditionKind::Overload;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Scans every t in [0, H): sum of compulsory-part heights covering t plus
/// the single tallest slack-window height covering t (0 if none) against C.
/// Returns the first overloaded instant, or nullopt when consistent.
std::optional<Time> ttFailureCheck(const Instance& instance, const BoundsStore& bounds);

/// Feasibility of a full assignment when capacity must also absorb the
/// `reserve` tallest heights among activities whose delay window covers each
/// instant. reserve = 1 is the problem the propagator filters for.
bool checkSolution(const Instance& instance, const std::vector<Time>& starts,
                   int reserve = 1);

/// All instants where fixing an activity at its earliest start would overload
/// the resource, per the two lower-bound fixpoint conditions.
std::vector<Violation> verifyLowerFixpoint(const Instance& instance,
                                           const BoundsStore& bounds);

/// Mirror of verifyLowerFixpoint for latest ends.
std::vector<Violation> verifyUpperFixpoint(const Instance& instance,
                                           const BoundsStore& bounds);

/// Unit-step bound trimming to the time-table fixpoint: for each activity,
/// while fixing it at its earliest start fails the check, raise the bound;
/// same (mirrored) for latest ends; loop until globally stable.
/// Returns nullopt when some domain empties. Intended for small instances.
std::optional<BoundsStore> bruteforceTimeTableFixpoint(const Instance& instance,
                                                       BoundsStore bounds);

/// Exhaustive enumeration of assignments within the bounds that pass
/// checkSolution. Guarded: throws std::invalid_argument when n > 5 or
/// horizon > 12. Results are in lexicographic order.
std::vector<std::vector<Time>> enumerateSolutions(const Instance& instance,
                                                  const BoundsStore& bounds,
                                                  int reserve = 1);

}  // namespace oracle
}  // namespace rcusp
