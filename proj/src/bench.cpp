#include "bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "oracle.hpp"
#include "propagator.hpp"

namespace rcusp {

std::uint64_t Rng::next() {
  // splitmix64; fixed algorithm keeps seeded runs identical everywhere.
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Time Rng::uniform(Time lo, Time hi) {
  if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling to keep the draw unbiased.
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
  std::uint64_t draw;
  do {
    draw = next();
  } while (draw >= limit);
  return lo + static_cast<Time>(draw % span);
}

Instance generateRandomInstance(const GenParams& params) {
  if (params.n < 0) throw std::invalid_argument("generateRandomInstance: n < 0");
  if (params.slack.mode == SlackSpec::Mode::Average && params.slack.value < 1) {
    throw std::invalid_argument("generateRandomInstance: average slack must be >= 1");
  }
  if (params.slack.mode == SlackSpec::Mode::Fixed && params.slack.value < 0) {
    throw std::invalid_argument("generateRandomInstance: fixed slack must be >= 0");
  }

  Rng rng(params.seed);
  Instance instance;
  instance.capacity = params.capacity;
  instance.activities.reserve(static_cast<std::size_t>(params.n));

  Time footprint_sum = 0;
  Time footprint_max = 0;
  for (int i = 0; i < params.n; ++i) {
    ActivitySpec spec;
    spec.duration = rng.uniform(params.duration_min, params.duration_max);
    spec.height = rng.uniform(params.height_min, params.height_max);
    spec.slack = params.slack.mode == SlackSpec::Mode::Fixed
                     ? params.slack.value
                     : rng.uniform(1, 2 * params.slack.value - 1);
    instance.activities.push_back(spec);
    footprint_sum += spec.duration + spec.slack;
    footprint_max = std::max(footprint_max, spec.duration + spec.slack);
  }

  instance.start_min.assign(static_cast<std::size_t>(params.n), 0);
  instance.start_max.assign(static_cast<std::size_t>(params.n), footprint_sum);
  instance.horizon = footprint_sum + footprint_max;
  instance.validate();
  return instance;
}

const char* benchModeName(BenchMode mode) {
  switch (mode) {
    case BenchMode::Cumulative:
      return "cumulative";
    case BenchMode::Rcumulative:
      return "rcumulative";
    case BenchMode::Decomposition:
      return "decomposition";
  }
  return "?";
}

namespace {

SolveMode solveModeFor(BenchMode mode) {
  switch (mode) {
    case BenchMode::Cumulative:
      return SolveMode::Cumulative;
    case BenchMode::Rcumulative:
      return SolveMode::Rcumulative;
    case BenchMode::Decomposition:
      // Baseline model: slacks folded into durations, plain cumulative solve.
      return SolveMode::Naive;
  }
  throw std::logic_error("unknown bench mode");
}

std::uint64_t mixSeed(std::uint64_t seed, std::uint64_t salt) {
  Rng rng(seed ^ (salt * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL));
  return rng.next();
}

}  // namespace

std::vector<ScalingRow> runScaling(const ScalingParams& params) {
  std::vector<ScalingRow> rows;
  for (const int n : params.sizes) {
    GenParams gen;
    gen.n = n;
    gen.duration_min = params.duration_min;
    gen.duration_max = params.duration_max;
    gen.height_min = params.height_min;
    gen.height_max = params.height_max;
    gen.capacity = params.capacity;
    gen.slack = {SlackSpec::Mode::Average, params.slack_average};
    gen.seed = mixSeed(params.seed, static_cast<std::uint64_t>(n));
    const Instance instance = generateRandomInstance(gen);

    for (const BenchMode mode : params.modes) {
      const SolveResult result =
          solveFirst(instance, solveModeFor(mode), params.timeout_seconds);
      ScalingRow row;
      row.n = n;
      row.mode = mode;
      row.nodes = result.stats.nodes;
      row.seconds = result.timed_out ? -1.0 : result.stats.seconds;
      rows.push_back(row);
    }
  }
  return rows;
}

std::string scalingCsv(const std::vector<ScalingRow>& rows) {
  std::ostringstream out;
  out << "n,mode,seconds,nodes\n";
  for (const ScalingRow& row : rows) {
    char seconds[32];
    std::snprintf(seconds, sizeof seconds, "%.6f", row.seconds);
    out << row.n << ',' << benchModeName(row.mode) << ',' << seconds << ','
        << row.nodes << '\n';
  }
  return out.str();
}

CompareResult runComparison(const CompareParams& params) {
  CompareResult result;
  struct Accumulator {
    double min_dev = 0.0, max_dev = 0.0, sum_dev = 0.0;
    int worse = 0, better = 0, solved = 0;
  };
  std::vector<Accumulator> acc(params.ratios.size());

  for (int i = 0; i < params.count; ++i) {
    // One draw of durations and heights per instance, shared by all ratios.
    Rng rng(mixSeed(params.seed, static_cast<std::uint64_t>(i)));
    std::vector<Time> durations, heights;
    for (int a = 0; a < params.n; ++a) {
      durations.push_back(rng.uniform(params.duration_min, params.duration_max));
      heights.push_back(rng.uniform(params.height_min, params.height_max));
    }

    // One slack value shared by every activity at a given ratio; the ratio
    // scales the mean duration of the drawn range.
    const double mean_duration =
        0.5 * static_cast<double>(params.duration_min + params.duration_max);
    const auto build = [&](double ratio) {
      Instance instance;
      instance.capacity = params.capacity;
      const Time shared_slack =
          ratio <= 0.0 ? 0
                       : std::max<Time>(1, std::llround(ratio * mean_duration));
      Time footprint_sum = 0, footprint_max = 0;
      for (int a = 0; a < params.n; ++a) {
        ActivitySpec spec;
        spec.duration = durations[static_cast<std::size_t>(a)];
        spec.height = heights[static_cast<std::size_t>(a)];
        spec.slack = shared_slack;
        instance.activities.push_back(spec);
        footprint_sum += spec.duration + spec.slack;
        footprint_max = std::max(footprint_max, spec.duration + spec.slack);
      }
      instance.start_min.assign(static_cast<std::size_t>(params.n), 0);
      instance.start_max.assign(static_cast<std::size_t>(params.n), footprint_sum);
      instance.horizon = footprint_sum + footprint_max;
      return instance;
    };

    // Plain cumulative optimum; the slack-free denominator of the deviation.
    const SolveResult base = solveOptimal(build(0.0), SolveMode::Cumulative,
                                          ObjectiveKind::Makespan,
                                          params.timeout_seconds);
    if (!base.proven || !base.solution) {
      result.warnings.push_back("instance " + std::to_string(i) +
                                ": cumulative solve timed out, instance dropped");
      continue;
    }
    const double denominator = static_cast<double>(base.solution->objective);

    for (std::size_t r = 0; r < params.ratios.size(); ++r) {
      const Instance instance = build(params.ratios[r]);
      const SolveResult robust =
          solveOptimal(instance, SolveMode::Rcumulative,
                       ObjectiveKind::WorstCaseMakespan, params.timeout_seconds);
      const SolveResult naive =
          solveOptimal(instance, SolveMode::Naive, ObjectiveKind::Makespan,
                       params.timeout_seconds);
      if (!robust.proven || !robust.solution || !naive.proven || !naive.solution) {
        result.warnings.push_back("instance " + std::to_string(i) + " ratio " +
                                  std::to_string(params.ratios[r]) +
                                  ": optimal solve timed out, sample dropped");
        continue;
      }
      const Time robust_obj = robust.solution->objective;
      const Time naive_obj = naive.solution->objective;
      const double deviation =
          100.0 * static_cast<double>(naive_obj - robust_obj) / denominator;

      Accumulator& bucket = acc[r];
      if (bucket.solved == 0) {
        bucket.min_dev = bucket.max_dev = deviation;
      } else {
        bucket.min_dev = std::min(bucket.min_dev, deviation);
        bucket.max_dev = std::max(bucket.max_dev, deviation);
      }
      bucket.sum_dev += deviation;
      if (robust_obj > naive_obj) ++bucket.worse;
      if (robust_obj < naive_obj) ++bucket.better;
      ++bucket.solved;
    }
  }

  for (std::size_t r = 0; r < params.ratios.size(); ++r) {
    CompareRow row;
    row.ratio = params.ratios[r];
    row.min_deviation_pct = acc[r].min_dev;
    row.avg_deviation_pct = acc[r].solved ? acc[r].sum_dev / acc[r].solved : 0.0;
    row.max_deviation_pct = acc[r].max_dev;
    row.worse = acc[r].worse;
    row.better = acc[r].better;
    row.solved = acc[r].solved;
    result.rows.push_back(row);
  }
  return result;
}

std::string compareCsv(const std::vector<CompareRow>& rows) {
  std::ostringstream out;
  out << "ratio,min_deviation_pct,avg_deviation_pct,max_deviation_pct,worse,better,"
         "solved\n";
  for (const CompareRow& row : rows) {
    char buffer[128];
    std::snprintf(buffer, sizeof buffer, "%.1f,%.1f,%.1f,%.1f", row.ratio,
                  row.min_deviation_pct, row.avg_deviation_pct,
                  row.max_deviation_pct);
    out << buffer << ',' << row.worse << ',' << row.better << ',' << row.solved
        << '\n';
  }
  return out.str();
}

}  // namespace rcusp
