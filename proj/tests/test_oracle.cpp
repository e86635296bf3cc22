#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "oracle.hpp"
#include "test_helpers.hpp"

using namespace rcusp;
using namespace rcusp::oracle;
using rcusp::testing::makeInstance;
using rcusp::testing::randomSmallInstance;

namespace {

// Independent re-derivation of the failure condition, structured differently
// from the library's scan (explicit profile arrays instead of predicates).
std::optional<Time> failureByProfiles(const Instance& inst, const BoundsStore& b) {
  std::vector<Time> running(static_cast<std::size_t>(inst.horizon), 0);
  std::vector<Time> reserve(static_cast<std::size_t>(inst.horizon), 0);
  for (ActivityId a = 0; a < inst.size(); ++a) {
    for (Time t = b.startMax(a); t < b.endMin(a); ++t) {
      running[static_cast<std::size_t>(t)] += inst.activities[a].height;
    }
    const Time lo = std::max(b.startMax(a), b.endMin(a));
    const Time hi = b.endMin(a) + inst.activities[a].slack;
    for (Time t = lo; t < hi; ++t) {
      reserve[static_cast<std::size_t>(t)] =
          std::max(reserve[static_cast<std::size_t>(t)], inst.activities[a].height);
    }
  }
  for (Time t = 0; t < inst.horizon; ++t) {
    if (running[static_cast<std::size_t>(t)] + reserve[static_cast<std::size_t>(t)] >
        inst.capacity) {
      return t;
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("failure check: reserved delay on top of a full profile") {
  // a fixed at 1 (p=2, h=2), b fixed at 0 (p=1, h=1, k=2), C=2.
  // At t=1 the running sum is 2 and b's delay window adds 1.
  const Instance inst = makeInstance(2, {{2, 2, 0, 1, 1}, {1, 1, 2, 0, 0}});
  const BoundsStore bounds = inst.initialBounds();
  CHECK(ttFailureCheck(inst, bounds) == Time{1});
}

TEST_CASE("failure check: single activity within capacity never fails") {
  const Instance inst = makeInstance(3, {{4, 2, 2, 0, 9}});
  CHECK_FALSE(ttFailureCheck(inst, inst.initialBounds()).has_value());
}

TEST_CASE("failure check: overlapping compulsory parts without slack") {
  const Instance inst = makeInstance(3, {{2, 2, 0, 0, 0}, {2, 2, 0, 1, 1}});
  CHECK(ttFailureCheck(inst, inst.initialBounds()) == Time{1});
}

TEST_CASE("failure check agrees with an independent profile evaluation") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Instance inst = randomSmallInstance(seed, 6, 24);
    const BoundsStore bounds = inst.initialBounds();
    CHECK(ttFailureCheck(inst, bounds) == failureByProfiles(inst, bounds));
  }
}

TEST_CASE("solution check: delayed copy collides with a running activity") {
  // a at 0 (p=1, h=1, k=2), b at 1 (p=2, h=2), C=2: at t=1 load 2 + max 1.
  const Instance inst = makeInstance(2, {{1, 1, 2, 0, 3}, {2, 2, 0, 0, 3}});
  CHECK_FALSE(checkSolution(inst, {0, 1}, 1));
  // Without b the delayed copy fits.
  const Instance solo = makeInstance(2, {{1, 1, 2, 0, 3}});
  CHECK(checkSolution(solo, {0}, 1));
}

TEST_CASE("solution check: zero slack collapses to the plain cumulative check") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Instance inst = randomSmallInstance(seed, 5, 16);
    for (ActivitySpec& spec : inst.activities) spec.slack = 0;
    std::vector<Time> starts;
    Rng rng(seed + 1000);
    for (ActivityId a = 0; a < inst.size(); ++a) {
      starts.push_back(rng.uniform(inst.start_min[a], inst.start_max[a]));
    }
    // Plain check: per-instant running sum only.
    bool plain_ok = true;
    for (Time t = 0; t < inst.horizon && plain_ok; ++t) {
      Time sum = 0;
      for (ActivityId a = 0; a < inst.size(); ++a) {
        if (starts[a] <= t && t < starts[a] + inst.activities[a].duration) {
          sum += inst.activities[a].height;
        }
      }
      plain_ok = sum <= inst.capacity;
    }
    for (int reserve = 1; reserve <= 3; ++reserve) {
      CHECK(checkSolution(inst, starts, reserve) == plain_ok);
    }
  }
}

TEST_CASE("solution check: reserve of two sums the two tallest delayed copies") {
  // Two activities end together at 1; both delay windows cover [1, 3).
  // With nothing running there the reserve-two load is 3 + 2 = 5.
  const Instance pair = makeInstance(5, {{1, 3, 2, 0, 0}, {1, 2, 2, 0, 0}});
  CHECK(checkSolution(pair, {0, 0}, 2));  // 3 + 2 <= 5, exactly
  const Instance pair_tight = makeInstance(4, {{1, 3, 2, 0, 0}, {1, 2, 2, 0, 0}});
  CHECK_FALSE(checkSolution(pair_tight, {0, 0}, 2));  // 3 + 2 > 4

  // Staggered bodies with converging windows: at t=2 activity 2 runs (h=3)
  // while the windows of the first two (h=1, h=2) cover it.
  const Instance chain =
      makeInstance(5, {{1, 1, 3, 0, 0}, {1, 2, 2, 1, 1}, {1, 3, 1, 2, 2}});
  CHECK(checkSolution(chain, {0, 1, 2}, 1));        // 3 + 2 = 5 fits
  CHECK_FALSE(checkSolution(chain, {0, 1, 2}, 2));  // 3 + 2 + 1 = 6 does not
  const Instance chain_wide =
      makeInstance(6, {{1, 1, 3, 0, 0}, {1, 2, 2, 1, 1}, {1, 3, 1, 2, 2}});
  CHECK(checkSolution(chain_wide, {0, 1, 2}, 2));
  CHECK(checkSolution(chain_wide, {0, 1, 2}, 3));
}

TEST_CASE("solution check is monotone in the reserve count") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = randomSmallInstance(seed, 5, 14);
    Rng rng(seed + 2000);
    std::vector<Time> starts;
    for (ActivityId a = 0; a < inst.size(); ++a) {
      starts.push_back(rng.uniform(inst.start_min[a], inst.start_max[a]));
    }
    bool previous = checkSolution(inst, starts, 1);
    for (int reserve = 2; reserve <= 4; ++reserve) {
      const bool current = checkSolution(inst, starts, reserve);
      if (!previous) CHECK_FALSE(current);
      previous = current;
    }
  }
}

TEST_CASE("lower fixpoint verifier flags a blocked earliest placement") {
  // a fixed on [2,4) at full capacity; b (h=1, p=1) has earliest start 2.
  const Instance inst = makeInstance(2, {{2, 2, 0, 2, 2}, {1, 1, 0, 2, 4}});
  const auto violations = verifyLowerFixpoint(inst, inst.initialBounds());
  REQUIRE(violations.size() == 1);
  CHECK(violations[0] == Violation{1, 2, ConditionKind::EarliestBody});
}

TEST_CASE("fixpoint verifiers accept a fixed feasible schedule") {
  const Instance inst =
      makeInstance(2, {{2, 1, 1, 0, 0}, {3, 1, 2, 2, 2}});
  REQUIRE(checkSolution(inst, {0, 2}, 1));
  CHECK(verifyLowerFixpoint(inst, inst.initialBounds()).empty());
  CHECK(verifyUpperFixpoint(inst, inst.initialBounds()).empty());
}

TEST_CASE("upper fixpoint verifier flags a blocked latest placement") {
  // a fixed on [2,4) at full capacity; b (h=1, p=1) has latest start 3.
  const Instance inst = makeInstance(2, {{2, 2, 0, 2, 2}, {1, 1, 0, 0, 3}});
  const auto violations = verifyUpperFixpoint(inst, inst.initialBounds());
  REQUIRE(violations.size() == 1);
  CHECK(violations[0] == Violation{1, 3, ConditionKind::LatestBody});
}

TEST_CASE("upper fixpoint verifier ignores the candidate's own reservation") {
  // Unfixed a: s in [0,2], p=4 => window [max(2,4), 4+k). On [2,6) its own
  // reservation must not be stacked on its own body.
  const Instance inst = makeInstance(2, {{4, 2, 1, 0, 2}});
  CHECK(verifyUpperFixpoint(inst, inst.initialBounds()).empty());
  CHECK(verifyLowerFixpoint(inst, inst.initialBounds()).empty());
}

TEST_CASE("bruteforce fixpoint: failing instance empties a domain") {
  const Instance inst = makeInstance(2, {{2, 2, 0, 1, 1}, {1, 1, 2, 0, 0}});
  CHECK_FALSE(bruteforceTimeTableFixpoint(inst, inst.initialBounds()).has_value());
}

TEST_CASE("bruteforce fixpoint: single activity is untouched") {
  const Instance inst = makeInstance(2, {{3, 1, 1, 0, 6}});
  const auto result = bruteforceTimeTableFixpoint(inst, inst.initialBounds());
  REQUIRE(result.has_value());
  CHECK(*result == inst.initialBounds());
}

TEST_CASE("bruteforce fixpoint trims an earliest start off a full block") {
  // a fixed on [0,2) at capacity, k=1 reserves [2,3); b must start at 3.
  const Instance inst = makeInstance(2, {{2, 2, 1, 0, 0}, {1, 2, 0, 0, 5}});
  const auto result = bruteforceTimeTableFixpoint(inst, inst.initialBounds());
  REQUIRE(result.has_value());
  CHECK(result->startMin(1) == 3);
}

TEST_CASE("bruteforce fixpoint is idempotent") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = randomSmallInstance(seed, 5, 20);
    const auto once = bruteforceTimeTableFixpoint(inst, inst.initialBounds());
    if (!once) continue;
    const auto twice = bruteforceTimeTableFixpoint(inst, *once);
    REQUIRE(twice.has_value());
    CHECK(*twice == *once);
  }
}

TEST_CASE("enumeration: empty, singleton and guard behavior") {
  // No feasible placement: both fixed at 0, heights exceed capacity jointly.
  const Instance blocked = makeInstance(1, {{2, 1, 0, 0, 0}, {2, 1, 0, 0, 0}});
  CHECK(enumerateSolutions(blocked, blocked.initialBounds()).empty());

  const Instance together = makeInstance(1, {{1, 1, 0, 0, 2}});
  CHECK(enumerateSolutions(together, together.initialBounds()).size() == 3);

  const Instance big = makeInstance(2, {{1, 1, 0, 0, 2},
                                        {1, 1, 0, 0, 2},
                                        {1, 1, 0, 0, 2},
                                        {1, 1, 0, 0, 2},
                                        {1, 1, 0, 0, 2},
                                        {1, 1, 0, 0, 2}});
  CHECK_THROWS_AS(enumerateSolutions(big, big.initialBounds()),
                  std::invalid_argument);
}

TEST_CASE("enumeration matches a direct cross product filter") {
  const Instance inst =
      makeInstance(2, {{1, 2, 1, 0, 2}, {1, 2, 1, 0, 2}}, 4);
  const auto solutions = enumerateSolutions(inst, inst.initialBounds());
  std::vector<std::vector<Time>> expected;
  for (Time s0 = 0; s0 <= 2; ++s0) {
    for (Time s1 = 0; s1 <= 2; ++s1) {
      if (checkSolution(inst, {s0, s1}, 1)) expected.push_back({s0, s1});
    }
  }
  CHECK(solutions == expected);
}
