#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "oracle.hpp"
#include "sweep_max.hpp"
#include "test_helpers.hpp"

using namespace rcusp;
using rcusp::testing::makeInstance;
using rcusp::testing::randomSmallInstance;

TEST_CASE("event generation: fixed activity yields window-end and end events only") {
  const Instance inst = makeInstance(2, {{2, 1, 1, 3, 3}});
  EventQueue queue = generateEventsMax(inst, inst.initialBounds());
  REQUIRE(queue.size() == 2);
  std::vector<Event> batch;
  CHECK(queue.extractFront(batch) == 6);  // window end 5+1
  CHECK(batch[0].kind == EventKind::Ekcp);
  CHECK(queue.extractFront(batch) == 5);  // earliest end
  CHECK(batch[0].kind == EventKind::Ecp);
}

TEST_CASE("event generation: candidate event sits at latest end plus slack") {
  const Instance inst = makeInstance(2, {{2, 1, 2, 0, 7}});  // e_max = 9
  EventQueue queue = generateEventsMax(inst, inst.initialBounds());
  REQUIRE(queue.size() == 3);
  std::vector<Event> batch;
  CHECK(queue.extractFront(batch) == 11);
  CHECK(batch[0].kind == EventKind::Pr);
}

TEST_CASE("event generation: between 2n and 3n events") {
  const Instance mixed = makeInstance(4, {{1, 1, 1, 0, 3},
                                          {2, 2, 0, 1, 1},
                                          {1, 1, 2, 0, 2}});
  const std::size_t count = generateEventsMax(mixed, mixed.initialBounds()).size();
  CHECK(count >= 6);
  CHECK(count <= 9);
  CHECK(count == 8);  // one fixed activity contributes no candidate event
}

TEST_CASE("end event entered from the right adds height and schedules the start") {
  // Fixed activity on [2,6): compulsory part spans the whole body.
  const Instance inst = makeInstance(3, {{4, 2, 0, 2, 2}});
  BoundsStore bounds = inst.initialBounds();
  MaxSweep sweep(inst, bounds);
  CHECK(sweep.advance() == PropagateStatus::Fixpoint);  // both events at 6
  CHECK(sweep.currentDate() == 6);
  CHECK(sweep.profileHeight() == 2);
  CHECK(sweep.nextDate() == Time{2});  // dynamically created start event
  CHECK(sweep.advance() == PropagateStatus::Fixpoint);
  CHECK(sweep.profileHeight() == 0);
  CHECK(sweep.finished());
}

TEST_CASE("window-end event inserts the reservation and schedules its start") {
  // Fixed on [1,5) with slack 3: reservation on [5,8).
  const Instance inst = makeInstance(3, {{4, 2, 3, 1, 1}});
  BoundsStore bounds = inst.initialBounds();
  MaxSweep sweep(inst, bounds);
  CHECK(sweep.advance() == PropagateStatus::Fixpoint);  // window end at 8
  CHECK(sweep.currentDate() == 8);
  CHECK(sweep.reservationMax() == 2);
  CHECK(sweep.nextDate() == Time{5});  // window start event
}

TEST_CASE("filter: delayed copy clears the blocked interval from the left") {
  // Full-capacity block on [4,6); candidate a (p=1, h=1, k=2) has window
  // [4,6) at its latest end 4, so the end is pushed down to 4 - 2 = 2.
  const Instance inst = makeInstance(2, {{1, 1, 2, 0, 3}, {2, 2, 0, 4, 4}});
  BoundsStore bounds = inst.initialBounds();
  const SweepOutcome outcome = sweepMax(inst, bounds);
  CHECK(outcome.status == PropagateStatus::Fixpoint);
  CHECK(bounds.endMax(0) == 2);
  CHECK(oracle::verifyUpperFixpoint(inst, bounds).empty());
}

TEST_CASE("filter: a candidate's own reservation never blocks itself") {
  // a is the only reservation over its own latest body; with the regret
  // lookup the condition stays within capacity and nothing is pruned.
  const Instance inst = makeInstance(3, {{2, 2, 2, 0, 2}, {2, 1, 0, 2, 2}});
  BoundsStore bounds = inst.initialBounds();
  const SweepOutcome outcome = sweepMax(inst, bounds);
  CHECK(outcome.status == PropagateStatus::Fixpoint);
  CHECK_FALSE(outcome.changed);
  CHECK(oracle::verifyUpperFixpoint(inst, bounds).empty());
}

TEST_CASE("filter: candidate leaves the set at its latest start") {
  const Instance inst = makeInstance(2, {{1, 1, 1, 0, 2}});
  BoundsStore bounds = inst.initialBounds();
  MaxSweep sweep(inst, bounds);
  CHECK(sweep.advance() == PropagateStatus::Fixpoint);  // candidate at 4
  CHECK(sweep.candidates().size() == 1);
  while (!sweep.finished()) {
    CHECK(sweep.advance() == PropagateStatus::Fixpoint);
  }
  CHECK(sweep.candidates().empty());
  CHECK_FALSE(bounds.failed());
}

TEST_CASE("stale window-start events are regenerated after a prune") {
  // a: s in [2,6], p=2, k=3. Its window start sits at its latest start 6
  // when the window-end event fires; the body rule then prunes the latest
  // end (block x runs [5,6) with reservation [6,8), block c runs [6,7)),
  // which moves the window start left and forces one regeneration.
  const Instance inst = makeInstance(4, {{2, 2, 3, 2, 6},
                                         {1, 2, 2, 5, 5},
                                         {1, 1, 0, 6, 6}});
  BoundsStore bounds = inst.initialBounds();
  const SweepOutcome outcome = sweepMax(inst, bounds);
  CHECK(outcome.status == PropagateStatus::Fixpoint);
  CHECK(bounds.endMax(0) == 6);
  CHECK(bounds.startMax(0) == 4);
  CHECK(outcome.stats.skcp_regens[0] == 1);
  CHECK(oracle::verifyUpperFixpoint(inst, bounds).empty());
  CHECK(oracle::verifyLowerFixpoint(inst, bounds).empty());
}

TEST_CASE("sweep leaves a fixed feasible schedule unchanged") {
  const Instance inst = makeInstance(2, {{2, 1, 1, 0, 0}, {3, 1, 2, 2, 2}});
  BoundsStore bounds = inst.initialBounds();
  const SweepOutcome outcome = sweepMax(inst, bounds);
  CHECK(outcome.status == PropagateStatus::Fixpoint);
  CHECK_FALSE(outcome.changed);
}

TEST_CASE("sweep fails on the reference overload instance") {
  const Instance inst = makeInstance(2, {{2, 2, 0, 1, 1}, {1, 1, 2, 0, 0}});
  BoundsStore bounds = inst.initialBounds();
  CHECK(sweepMax(inst, bounds).status == PropagateStatus::Failure);
}

TEST_CASE("random instances reach the upper fixpoint in a single pass") {
  int checked = 0;
  for (std::uint64_t seed = 1000; seed < 1400; ++seed) {
    const Instance inst = randomSmallInstance(seed, 8, 30);
    BoundsStore bounds = inst.initialBounds();
    if (sweepMax(inst, bounds).status != PropagateStatus::Fixpoint) continue;
    ++checked;
    CHECK(oracle::verifyUpperFixpoint(inst, bounds).empty());
    const SweepOutcome again = sweepMax(inst, bounds);
    CHECK(again.status == PropagateStatus::Fixpoint);
    CHECK_FALSE(again.changed);
  }
  CHECK(checked > 100);
}

TEST_CASE("every pruned latest end was genuinely unsupported") {
  for (std::uint64_t seed = 2000; seed < 2300; ++seed) {
    const Instance inst = randomSmallInstance(seed, 6, 24);
    BoundsStore bounds = inst.initialBounds();
    const SweepOutcome outcome = sweepMax(inst, bounds);
    if (outcome.status != PropagateStatus::Fixpoint) continue;
    for (const PruneRecord& prune : outcome.stats.prunes) {
      std::vector<Time> lo, hi, durations;
      for (ActivityId a = 0; a < inst.size(); ++a) {
        const Time pinned = prune.from - bounds.duration(prune.activity);
        lo.push_back(a == prune.activity ? pinned : bounds.startMin(a));
        hi.push_back(a == prune.activity ? pinned : bounds.startMax(a));
        durations.push_back(bounds.duration(a));
      }
      const BoundsStore fixed(lo, hi, durations);
      CHECK(oracle::ttFailureCheck(inst, fixed).has_value());
    }
  }
}

TEST_CASE("window-start regenerations stay within the slack budget") {
  for (std::uint64_t seed = 3000; seed < 3300; ++seed) {
    const Instance inst = randomSmallInstance(seed, 8, 30);
    BoundsStore bounds = inst.initialBounds();
    const SweepOutcome outcome = sweepMax(inst, bounds);
    if (outcome.status != PropagateStatus::Fixpoint) continue;
    for (ActivityId a = 0; a < inst.size(); ++a) {
      CHECK(outcome.stats.skcp_regens[a] <= inst.activities[a].slack + 1);
    }
  }
}
