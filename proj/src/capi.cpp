#include "rcusp/rcusp.h"

#include <cstdio>
#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "bench.hpp"
#include "io.hpp"
#include "model.hpp"
#include "oracle.hpp"
#include "propagator.hpp"
#include "solver.hpp"

struct rcusp_instance {
  rcusp::Instance impl;
};

namespace {

thread_local std::string g_last_error;

void setError(const std::string& message) { g_last_error = message; }

rcusp_status fail(rcusp_status status, const std::string& message) {
  setError(message);
  return status;
}

rcusp_status ok() {
  g_last_error.clear();
  return RCUSP_OK;
}

// Maps C++ exceptions from the core onto status codes.
template <typename Fn>
rcusp_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const rcusp::ParseError& e) {
    return fail(RCUSP_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(RCUSP_ERR_PARSE, e.what());
  } catch (const std::exception& e) {
    return fail(RCUSP_ERR_INVALID, e.what());
  }
}

bool boundsArgsValid(const rcusp_instance* instance, const int64_t* start_min,
                     const int64_t* start_max) {
  return instance && start_min && start_max;
}

rcusp::BoundsStore makeBounds(const rcusp::Instance& instance,
                              const int64_t* start_min, const int64_t* start_max) {
  const std::size_t n = instance.activities.size();
  std::vector<rcusp::Time> lo(start_min, start_min + n);
  std::vector<rcusp::Time> hi(start_max, start_max + n);
  std::vector<rcusp::Time> durations;
  durations.reserve(n);
  for (const rcusp::ActivitySpec& spec : instance.activities) {
    durations.push_back(spec.duration);
  }
  return rcusp::BoundsStore(std::move(lo), std::move(hi), std::move(durations));
}

rcusp::SolveMode toSolveMode(rcusp_solve_mode mode) {
  switch (mode) {
    case RCUSP_MODE_RCUMULATIVE:
      return rcusp::SolveMode::Rcumulative;
    case RCUSP_MODE_CUMULATIVE:
      return rcusp::SolveMode::Cumulative;
    case RCUSP_MODE_NAIVE:
      return rcusp::SolveMode::Naive;
  }
  throw std::invalid_argument("unknown solve mode");
}

}  // namespace

extern "C" {

const char* rcusp_status_name(rcusp_status status) {
  switch (status) {
    case RCUSP_OK:
      return "ok";
    case RCUSP_ERR_PARSE:
      return "parse-error";
    case RCUSP_INFEASIBLE:
      return "infeasible";
    case RCUSP_VIOLATION:
      return "verification-violation";
    case RCUSP_TIMEOUT:
      return "timeout";
    case RCUSP_ERR_IO:
      return "io-error";
    case RCUSP_ERR_INVALID:
      return "invalid-argument";
  }
  return "unknown";
}

const char* rcusp_last_error(void) { return g_last_error.c_str(); }

const char* rcusp_version(void) { return "1.0.0"; }

rcusp_status rcusp_instance_from_text(const char* text, rcusp_instance** out) {
  if (!text || !out) return fail(RCUSP_ERR_INVALID, "null argument");
  return guarded([&] {
    auto handle = new rcusp_instance{rcusp::parseInstance(text)};
    *out = handle;
    return ok();
  });
}

rcusp_status rcusp_instance_from_file(const char* path, rcusp_instance** out) {
  if (!path || !out) return fail(RCUSP_ERR_INVALID, "null argument");
  try {
    auto handle = new rcusp_instance{rcusp::loadInstance(path)};
    *out = handle;
    return ok();
  } catch (const rcusp::ParseError& e) {
    return fail(RCUSP_ERR_PARSE, std::string(path) + ": " + e.what());
  } catch (const std::exception& e) {
    return fail(RCUSP_ERR_IO, e.what());
  }
}

rcusp_status rcusp_instance_to_text(const rcusp_instance* instance, char** out_text) {
  if (!instance || !out_text) return fail(RCUSP_ERR_INVALID, "null argument");
  return guarded([&] {
    const std::string text = rcusp::serializeInstance(instance->impl);
    char* buffer = new char[text.size() + 1];
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    *out_text = buffer;
    return ok();
  });
}

rcusp_status rcusp_instance_to_file(const rcusp_instance* instance, const char* path) {
  if (!instance || !path) return fail(RCUSP_ERR_INVALID, "null argument");
  try {
    rcusp::saveInstance(instance->impl, path);
    return ok();
  } catch (const std::exception& e) {
    return fail(RCUSP_ERR_IO, e.what());
  }
}

void rcusp_text_free(char* text) { delete[] text; }

void rcusp_instance_free(rcusp_instance* instance) { delete instance; }

int32_t rcusp_instance_activity_count(const rcusp_instance* instance) {
  return instance ? instance->impl.size() : -1;
}

int64_t rcusp_instance_capacity(const rcusp_instance* instance) {
  return instance ? instance->impl.capacity : -1;
}

int64_t rcusp_instance_horizon(const rcusp_instance* instance) {
  return instance ? instance->impl.horizon : -1;
}

rcusp_status rcusp_instance_activity(const rcusp_instance* instance, int32_t index,
                                     int64_t* duration, int64_t* height,
                                     int64_t* slack, int64_t* start_min,
                                     int64_t* start_max) {
  if (!instance) return fail(RCUSP_ERR_INVALID, "null instance");
  if (index < 0 || index >= instance->impl.size()) {
    return fail(RCUSP_ERR_INVALID, "activity index out of range");
  }
  const rcusp::ActivitySpec& spec = instance->impl.activities[index];
  if (duration) *duration = spec.duration;
  if (height) *height = spec.height;
  if (slack) *slack = spec.slack;
  if (start_min) *start_min = instance->impl.start_min[index];
  if (start_max) *start_max = instance->impl.start_max[index];
  return ok();
}

rcusp_status rcusp_instance_initial_bounds(const rcusp_instance* instance,
                                           int64_t* start_min, int64_t* start_max) {
  if (!boundsArgsValid(instance, start_min, start_max)) {
    return fail(RCUSP_ERR_INVALID, "null argument");
  }
  for (rcusp::ActivityId a = 0; a < instance->impl.size(); ++a) {
    start_min[a] = instance->impl.start_min[a];
    start_max[a] = instance->impl.start_max[a];
  }
  return ok();
}

rcusp_status rcusp_instance_generate(const rcusp_gen_params* params,
                                     rcusp_instance** out) {
  if (!params || !out) return fail(RCUSP_ERR_INVALID, "null argument");
  return guarded([&] {
    rcusp::GenParams gen;
    gen.n = params->activity_count;
    gen.duration_min = params->duration_min;
    gen.duration_max = params->duration_max;
    gen.height_min = params->height_min;
    gen.height_max = params->height_max;
    gen.capacity = params->capacity;
    gen.slack.mode = params->slack_mode == RCUSP_SLACK_AVERAGE
                         ? rcusp::SlackSpec::Mode::Average
                         : rcusp::SlackSpec::Mode::Fixed;
    gen.slack.value = params->slack_value;
    gen.seed = params->seed;
    *out = new rcusp_instance{rcusp::generateRandomInstance(gen)};
    return ok();
  });
}

rcusp_status rcusp_propagate(const rcusp_instance* instance, int64_t* start_min,
                             int64_t* start_max, int* any_change) {
  if (!boundsArgsValid(instance, start_min, start_max)) {
    return fail(RCUSP_ERR_INVALID, "null argument");
  }
  return guarded([&] {
    rcusp::BoundsStore bounds = makeBounds(instance->impl, start_min, start_max);
    if (bounds.failed()) return fail(RCUSP_INFEASIBLE, "bounds already crossed");
    const rcusp::PropagateResult result = rcusp::propagate(instance->impl, bounds);
    if (any_change) *any_change = result.changed ? 1 : 0;
    if (result.status == rcusp::PropagateStatus::Failure) {
      return fail(RCUSP_INFEASIBLE, "propagation proved the instance infeasible");
    }
    for (rcusp::ActivityId a = 0; a < instance->impl.size(); ++a) {
      start_min[a] = bounds.startMin(a);
      start_max[a] = bounds.startMax(a);
    }
    return ok();
  });
}

rcusp_status rcusp_verify_fixpoint(const rcusp_instance* instance,
                                   const int64_t* start_min, const int64_t* start_max,
                                   int32_t* violation_count) {
  if (!boundsArgsValid(instance, start_min, start_max)) {
    return fail(RCUSP_ERR_INVALID, "null argument");
  }
  return guarded([&] {
    const rcusp::BoundsStore bounds =
        makeBounds(instance->impl, start_min, start_max);
    const auto lower = rcusp::oracle::verifyLowerFixpoint(instance->impl, bounds);
    const auto upper = rcusp::oracle::verifyUpperFixpoint(instance->impl, bounds);
    const std::int32_t total = static_cast<std::int32_t>(lower.size() + upper.size());
    if (violation_count) *violation_count = total;
    if (total > 0) {
      return fail(RCUSP_VIOLATION,
                  std::to_string(total) + " fixpoint violation(s) found");
    }
    return ok();
  });
}

rcusp_status rcusp_solve(const rcusp_instance* instance,
                         const rcusp_solve_options* options, int64_t* starts,
                         int64_t* objective, rcusp_solve_stats* stats) {
  if (!instance || !options || !starts) {
    return fail(RCUSP_ERR_INVALID, "null argument");
  }
  return guarded([&] {
    const rcusp::SolveMode mode = toSolveMode(options->mode);
    const rcusp::SolveResult result =
        options->optimal
            ? rcusp::solveOptimal(instance->impl, mode,
                                  rcusp::defaultObjective(mode),
                                  options->timeout_seconds)
            : rcusp::solveFirst(instance->impl, mode, options->timeout_seconds);
    if (stats) {
      stats->nodes = result.stats.nodes;
      stats->failures = result.stats.failures;
      stats->propagations = result.stats.propagations;
      stats->seconds = result.stats.seconds;
      stats->proven = result.proven ? 1 : 0;
      stats->found = result.solution ? 1 : 0;
    }
    if (result.solution) {
      for (rcusp::ActivityId a = 0; a < instance->impl.size(); ++a) {
        starts[a] = result.solution->starts[a];
      }
      if (objective) *objective = result.solution->objective;
    }
    if (result.timed_out) return fail(RCUSP_TIMEOUT, "solve hit its deadline");
    if (!result.solution) return fail(RCUSP_INFEASIBLE, "no solution exists");
    return ok();
  });
}

rcusp_status rcusp_bench_scaling(const rcusp_scaling_params* params,
                                 const char* csv_path) {
  if (!params || !csv_path || !params->sizes || !params->modes) {
    return fail(RCUSP_ERR_INVALID, "null argument");
  }
  return guarded([&] {
    rcusp::ScalingParams scaling;
    scaling.sizes.assign(params->sizes, params->sizes + params->size_count);
    for (int32_t i = 0; i < params->mode_count; ++i) {
      switch (params->modes[i]) {
        case RCUSP_MODE_CUMULATIVE:
          scaling.modes.push_back(rcusp::BenchMode::Cumulative);
          break;
        case RCUSP_MODE_RCUMULATIVE:
          scaling.modes.push_back(rcusp::BenchMode::Rcumulative);
          break;
        case RCUSP_MODE_NAIVE:
          scaling.modes.push_back(rcusp::BenchMode::Decomposition);
          break;
        default:
          return fail(RCUSP_ERR_INVALID, "unknown bench mode");
      }
    }
    scaling.seed = params->seed;
    scaling.timeout_seconds = params->timeout_seconds;
    const std::string csv = rcusp::scalingCsv(rcusp::runScaling(scaling));
    std::FILE* out = std::fopen(csv_path, "wb");
    if (!out) return fail(RCUSP_ERR_IO, std::string("cannot write ") + csv_path);
    std::fwrite(csv.data(), 1, csv.size(), out);
    std::fclose(out);
    return ok();
  });
}

rcusp_status rcusp_bench_compare(const rcusp_compare_params* params,
                                 const char* csv_path) {
  if (!params || !csv_path || !params->ratios) {
    return fail(RCUSP_ERR_INVALID, "null argument");
  }
  return guarded([&] {
    rcusp::CompareParams compare;
    compare.count = params->instance_count;
    compare.n = params->activity_count;
    compare.capacity = params->capacity;
    compare.duration_min = params->duration_min;
    compare.duration_max = params->duration_max;
    compare.height_min = params->height_min;
    compare.height_max = params->height_max;
    compare.ratios.assign(params->ratios, params->ratios + params->ratio_count);
    compare.seed = params->seed;
    compare.timeout_seconds = params->timeout_seconds;
    const rcusp::CompareResult result = rcusp::runComparison(compare);
    for (const std::string& warning : result.warnings) {
      std::fprintf(stderr, "warning: %s\n", warning.c_str());
    }
    const std::string csv = rcusp::compareCsv(result.rows);
    std::FILE* out = std::fopen(csv_path, "wb");
    if (!out) return fail(RCUSP_ERR_IO, std::string("cannot write ") + csv_path);
    std::fwrite(csv.data(), 1, csv.size(), out);
    std::fclose(out);
    return ok();
  });
}

}  // extern "C"
