#include "solver.hpp"

#include <chrono>
#include <stdexcept>

#include "oracle.hpp"
#include "propagator.hpp"

namespace rcusp {
namespace {

using Clock = std::chrono::steady_clock;

class Search {
 public:
  Search(const Instance& effective, ObjectiveKind objective, bool optimal,
         double timeout_seconds)
      : instance_(effective), objective_(objective), optimal_(optimal) {
    if (timeout_seconds > 0.0) {
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(timeout_seconds));
    }
  }

  SolveResult run() {
    SolveResult result;
    const auto started = Clock::now();
    BoundsStore root = instance_.initialBounds();
    if (propagateWithCut(root)) {
      dfs(std::move(root));
    } else {
      ++stats_.failures;
    }
    stats_.seconds = std::chrono::duration<double>(Clock::now() - started).count();
    result.solution = std::move(best_);
    result.proven = result.solution.has_value() && !timed_out_;
    result.timed_out = timed_out_;
    result.stats = stats_;
    return result;
  }

 private:
  bool timeUp() {
    if (!deadline_) return false;
    if (timed_out_) return true;
    timed_out_ = Clock::now() >= *deadline_;
    return timed_out_;
  }

  Time objectiveValue(const BoundsStore& bounds) const {
    Time value = 0;
    for (ActivityId a = 0; a < instance_.size(); ++a) {
      Time end = bounds.endMin(a);
      if (objective_ == ObjectiveKind::WorstCaseMakespan) {
        end += instance_.activities[a].slack;
      }
      value = std::max(value, end);
    }
    return value;
  }

  // Enforces objective < best by shaving every latest end; then propagates.
  bool propagateWithCut(BoundsStore& bounds) {
    if (optimal_ && best_) {
      const Time bound = best_->objective - 1;
      for (ActivityId a = 0; a < instance_.size(); ++a) {
        Time limit = bound;
        if (objective_ == ObjectiveKind::WorstCaseMakespan) {
          limit -= instance_.activities[a].slack;
        }
        if (bounds.tightenEndMax(a, limit) == TightenResult::Failed) return false;
      }
    }
    ++stats_.propagations;
    return propagate(instance_, bounds).status == PropagateStatus::Fixpoint;
  }

  std::optional<ActivityId> pickBranchVariable(const BoundsStore& bounds) const {
    std::optional<ActivityId> pick;
    for (ActivityId a = 0; a < instance_.size(); ++a) {
      if (bounds.fixed(a)) continue;
      if (!pick || bounds.startMin(a) < bounds.startMin(*pick)) pick = a;
    }
    return pick;
  }

  void recordLeaf(const BoundsStore& bounds) {
    const Time value = objectiveValue(bounds);
    if (best_ && value >= best_->objective) return;
    Solution solution;
    solution.starts.reserve(instance_.size());
    for (ActivityId a = 0; a < instance_.size(); ++a) {
      solution.starts.push_back(bounds.startMin(a));
    }
    solution.objective = value;
    best_ = std::move(solution);
  }

  // `bounds` is already propagated and consistent.
  void dfs(BoundsStore bounds) {
    ++stats_.nodes;
    const std::optional<ActivityId> branch = pickBranchVariable(bounds);
    if (!branch) {
      recordLeaf(bounds);
      return;
    }
    const ActivityId a = *branch;
    // Chronological value enumeration: try each remaining earliest start,
    // then exclude it and re-propagate.
    while (true) {
      if (timeUp()) return;
      const Time value = bounds.startMin(a);
      BoundsStore child = bounds;
      child.tightenEndMax(a, value + child.duration(a));
      if (propagateWithCut(child)) {
        dfs(std::move(child));
        if (timed_out_) return;
        if (!optimal_ && best_) return;
      } else {
        ++stats_.failures;
      }
      if (bounds.tightenStartMin(a, value + 1) == TightenResult::Failed) return;
      if (!propagateWithCut(bounds)) {
        ++stats_.failures;
        return;
      }
      if (bounds.fixed(a)) {
        // Propagation may fix other activities too; re-pick below.
        dfsFixedTail(std::move(bounds));
        return;
      }
    }
  }

  // Continues the search when value elimination left the branch variable
  // fixed; equivalent to descending into the remaining subtree.
  void dfsFixedTail(BoundsStore bounds) { dfs(std::move(bounds)); }

  const Instance& instance_;
  ObjectiveKind objective_;
  bool optimal_;
  std::optional<Clock::time_point> deadline_;
  std::optional<Solution> best_;
  SearchStats stats_;
  bool timed_out_ = false;
};

Instance effectiveInstance(const Instance& instance, SolveMode mode) {
  switch (mode) {
    case SolveMode::Rcumulative:
      return instance;
    case SolveMode::Cumulative:
      return withZeroSlack(instance);
    case SolveMode::Naive:
      return naiveTransform(instance);
  }
  throw std::logic_error("unknown solve mode");
}

void checkReturnedSolution(const Instance& effective, const SolveResult& result) {
  if (!result.solution) return;
  if (!oracle::checkSolution(effective, result.solution->starts, 1)) {
    throw std::logic_error("solver produced an assignment the checker rejects");
  }
}

SolveResult solveWith(const Instance& instance, SolveMode mode, bool optimal,
                      ObjectiveKind objective, double timeout_seconds) {
  instance.validate();
  const Instance effective = effectiveInstance(instance, mode);
  Search search(effective, objective, optimal, timeout_seconds);
  SolveResult result = search.run();
  checkReturnedSolution(effective, result);
  return result;
}

}  // namespace

ObjectiveKind defaultObjective(SolveMode mode) {
  return mode == SolveMode::Rcumulative ? ObjectiveKind::WorstCaseMakespan
                                        : ObjectiveKind::Makespan;
}

SolveResult solveFirst(const Instance& instance, SolveMode mode,
                       double timeout_seconds) {
  return solveWith(instance, mode, /*optimal=*/false, defaultObjective(mode),
                   timeout_seconds);
}

SolveResult solveOptimal(const Instance& instance, SolveMode mode,
                         ObjectiveKind objective, double timeout_seconds) {
  if (instance.size() > 32) {
    throw std::invalid_argument(
        "solveOptimal: complete search is guarded to instances with n <= 32");
  }
  return solveWith(instance, mode, /*optimal=*/true, objective, timeout_seconds);
}

}  // namespace rcusp
