#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "model.hpp"

namespace rcusp {

enum class SolveMode {
  Rcumulative,  // full constraint with slack reservations
  Cumulative,   // slacks ignored
  Naive,        // slacks folded into durations, then plain cumulative
};

enum class ObjectiveKind {
  WorstCaseMakespan,  // max over activities of end + slack
  Makespan,           // max end
};

struct SearchStats {
  std::int64_t nodes = 0;
  std::int64_t failures = 0;
  std::int64_t propagations = 0;
  double seconds = 0.0;
};

struct Solution {
  std::vector<Time> starts;
  Time objective = 0;
};

struct SolveResult {
  std::optional<Solution> solution;
  bool proven = false;    // optimality (or first-solution completion) proven
  bool timed_out = false;
  SearchStats stats;

  bool infeasible() const { return !solution && !timed_out; }
};

ObjectiveKind defaultObjective(SolveMode mode);

/// Depth-first search for a first feasible assignment. Branches on the
/// unfixed activity with the smallest earliest start (ties to the lower id),
/// fixing it there first, and propagates at every node. Deterministic.
SolveResult solveFirst(const Instance& instance, SolveMode mode,
                       double timeout_seconds = 0.0);

/// Branch and bound to a proven optimum, tightening every latest end from
/// each incumbent. Guarded to instances with at most 32 activities; throws
/// std::invalid_argument beyond that. On timeout the best incumbent is
/// returned unproven.
SolveResult solveOptimal(const Instance& instance, SolveMode mode,
                         ObjectiveKind objective, double timeout_seconds = 0.0);

}  // namespace rcusp
