#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "model.hpp"
#include "solver.hpp"

namespace rcusp {

/// Reproducible uniform integer draws, independent of the standard library's
/// distribution implementations so the same seed yields the same instances
/// on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  Time uniform(Time lo, Time hi);  // inclusive on both ends

 private:
  std::uint64_t state_;
};

struct SlackSpec {
  enum class Mode { Fixed, Average };
  Mode mode = Mode::Fixed;
  Time value = 0;  // the fixed slack, or the target average (>= 1)
};

struct GenParams {
  int n = 0;
  Time duration_min = 1, duration_max = 1;
  Time height_min = 1, height_max = 1;
  Time capacity = 1;
  SlackSpec slack;
  std::uint64_t seed = 1;
};

/// Random instance with start domains [0, sum(p + k)]; the horizon extends
/// past that by the largest footprint so every latest end plus slack fits.
/// Average slack mode draws uniformly from {1, ..., 2*avg - 1}.
Instance generateRandomInstance(const GenParams& params);

enum class BenchMode { Cumulative, Rcumulative, Decomposition };

const char* benchModeName(BenchMode mode);

struct ScalingParams {
  std::vector<int> sizes;
  std::vector<BenchMode> modes;
  std::uint64_t seed = 1;
  double timeout_seconds = 0.0;
  // Instance regime; defaults follow the scaling experiment setup.
  Time duration_min = 5, duration_max = 10;
  Time height_min = 1, height_max = 5;
  Time capacity = 30;
  Time slack_average = 4;
};

struct ScalingRow {
  int n = 0;
  BenchMode mode = BenchMode::Rcumulative;
  double seconds = 0.0;  // -1 when the solve timed out
  std::int64_t nodes = 0;
};

/// First-solution timing per (size, mode); every reported solution is
/// re-verified by the checker before its time is recorded.
std::vector<ScalingRow> runScaling(const ScalingParams& params);
std::string scalingCsv(const std::vector<ScalingRow>& rows);

struct CompareParams {
  int count = 50;
  int n = 10;
  Time capacity = 16;
  Time duration_min = 1, duration_max = 9;
  Time height_min = 1, height_max = 5;
  std::vector<double> ratios;  // slack-to-duration ratios
  std::uint64_t seed = 1;
  double timeout_seconds = 0.0;  // per optimal solve
};

struct CompareRow {
  double ratio = 0.0;
  double min_deviation_pct = 0.0;
  double avg_deviation_pct = 0.0;
  double max_deviation_pct = 0.0;
  int worse = 0;   // robust optimum worse than the naive one
  int better = 0;  // robust optimum strictly better
  int solved = 0;  // instances that completed all three optimal solves
};

struct CompareResult {
  std::vector<CompareRow> rows;
  std::vector<std::string> warnings;  // instances dropped on timeout
};

/// Optimal worst-case makespans under the robust constraint versus the naive
/// duration-extension, normalized by the plain cumulative optimum. Each
/// drawn instance is solved at every ratio with one shared slack value,
/// round(ratio * mean duration), at least 1.
CompareResult runComparison(const CompareParams& params);
std::string compareCsv(const std::vector<CompareRow>& rows);

}  // namespace rcusp
