// Command line front end. Talks to the library exclusively through the
// shared C API.
//
// Exit codes: 0 ok, 1 usage or parse error, 2 infeasible, 3 verification
// violation, 4 timeout.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rcusp/rcusp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitViolation = 3;
constexpr int kExitTimeout = 4;

int exitCodeFor(rcusp_status status) {
  switch (status) {
    case RCUSP_OK:
      return kExitOk;
    case RCUSP_INFEASIBLE:
      return kExitInfeasible;
    case RCUSP_VIOLATION:
      return kExitViolation;
    case RCUSP_TIMEOUT:
      return kExitTimeout;
    case RCUSP_ERR_PARSE:
    case RCUSP_ERR_IO:
    case RCUSP_ERR_INVALID:
      return kExitUsage;
  }
  return kExitUsage;
}

int report(rcusp_status status) {
  if (status != RCUSP_OK) {
    std::fprintf(stderr, "error (%s): %s\n", rcusp_status_name(status),
                 rcusp_last_error());
  }
  return exitCodeFor(status);
}

struct InstanceHandle {
  rcusp_instance* ptr = nullptr;
  ~InstanceHandle() { rcusp_instance_free(ptr); }
};

void printBounds(const rcusp_instance* instance, const std::vector<int64_t>& smin,
                 const std::vector<int64_t>& smax) {
  const int32_t n = rcusp_instance_activity_count(instance);
  for (int32_t a = 0; a < n; ++a) {
    int64_t p = 0, h = 0, k = 0;
    rcusp_instance_activity(instance, a, &p, &h, &k, nullptr, nullptr);
    std::printf("  %3d: s in [%" PRId64 ", %" PRId64 "]  e in [%" PRId64
                ", %" PRId64 "]  (p=%" PRId64 " h=%" PRId64 " k=%" PRId64 ")\n",
                a, smin[a], smax[a], smin[a] + p, smax[a] + p, p, h, k);
  }
}

bool parseModeName(const std::string& name, rcusp_solve_mode& mode) {
  if (name == "rcumulative") {
    mode = RCUSP_MODE_RCUMULATIVE;
  } else if (name == "cumulative") {
    mode = RCUSP_MODE_CUMULATIVE;
  } else if (name == "naive" || name == "decomposition") {
    mode = RCUSP_MODE_NAIVE;
  } else {
    return false;
  }
  return true;
}

int runGenerate(int n, int64_t pmin, int64_t pmax, int64_t hmin, int64_t hmax,
                int64_t cap, int64_t kavg, int64_t kfixed, bool has_kavg,
                uint64_t seed, const std::string& out_path) {
  rcusp_gen_params params{};
  params.activity_count = n;
  params.duration_min = pmin;
  params.duration_max = pmax;
  params.height_min = hmin;
  params.height_max = hmax;
  params.capacity = cap;
  params.slack_mode = has_kavg ? RCUSP_SLACK_AVERAGE : RCUSP_SLACK_FIXED;
  params.slack_value = has_kavg ? kavg : kfixed;
  params.seed = seed;

  InstanceHandle instance;
  rcusp_status status = rcusp_instance_generate(&params, &instance.ptr);
  if (status != RCUSP_OK) return report(status);
  status = rcusp_instance_to_file(instance.ptr, out_path.c_str());
  if (status != RCUSP_OK) return report(status);
  std::printf("wrote %s (n=%d)\n", out_path.c_str(), n);
  return kExitOk;
}

int runPropagate(const std::string& in_path, bool verify) {
  InstanceHandle instance;
  rcusp_status status = rcusp_instance_from_file(in_path.c_str(), &instance.ptr);
  if (status != RCUSP_OK) return report(status);

  const int32_t n = rcusp_instance_activity_count(instance.ptr);
  std::vector<int64_t> smin(n), smax(n);
  rcusp_instance_initial_bounds(instance.ptr, smin.data(), smax.data());

  std::printf("before:\n");
  printBounds(instance.ptr, smin, smax);

  int changed = 0;
  status = rcusp_propagate(instance.ptr, smin.data(), smax.data(), &changed);
  if (status != RCUSP_OK) return report(status);

  std::printf("after (%s):\n", changed ? "tightened" : "no change");
  printBounds(instance.ptr, smin, smax);

  if (verify) {
    int32_t violations = 0;
    status = rcusp_verify_fixpoint(instance.ptr, smin.data(), smax.data(),
                                   &violations);
    std::printf("verification: %d violation(s)\n", violations);
    if (status != RCUSP_OK) return report(status);
  }
  return kExitOk;
}

int runSolve(const std::string& in_path, const std::string& mode_name, bool optimal,
             double timeout) {
  rcusp_solve_mode mode;
  if (!parseModeName(mode_name, mode)) {
    std::fprintf(stderr, "error: unknown mode '%s'\n", mode_name.c_str());
    return kExitUsage;
  }

  InstanceHandle instance;
  rcusp_status status = rcusp_instance_from_file(in_path.c_str(), &instance.ptr);
  if (status != RCUSP_OK) return report(status);

  const int32_t n = rcusp_instance_activity_count(instance.ptr);
  std::vector<int64_t> starts(std::max(n, 1));
  int64_t objective = 0;
  rcusp_solve_stats stats{};
  rcusp_solve_options options{};
  options.mode = mode;
  options.optimal = optimal ? 1 : 0;
  options.timeout_seconds = timeout;

  status = rcusp_solve(instance.ptr, &options, starts.data(), &objective, &stats);

  if (stats.found) {
    std::printf("assignment:\n");
    for (int32_t a = 0; a < n; ++a) {
      int64_t p = 0;
      rcusp_instance_activity(instance.ptr, a, &p, nullptr, nullptr, nullptr,
                              nullptr);
      std::printf("  %3d: s=%" PRId64 " e=%" PRId64 "\n", a, starts[a],
                  starts[a] + p);
    }
    std::printf("objective: %" PRId64 "%s\n", objective,
                stats.proven ? "" : " (not proven)");
  }
  std::printf("stats: nodes=%" PRId64 " failures=%" PRId64 " propagations=%" PRId64
              " seconds=%.6f\n",
              stats.nodes, stats.failures, stats.propagations, stats.seconds);
  if (status != RCUSP_OK) return report(status);
  return kExitOk;
}

std::vector<int32_t> parseIntList(const std::string& text) {
  std::vector<int32_t> values;
  std::string token;
  for (const char c : text + ",") {
    if (c == ',') {
      if (!token.empty()) values.push_back(std::stoi(token));
      token.clear();
    } else {
      token += c;
    }
  }
  return values;
}

std::vector<double> parseDoubleList(const std::string& text) {
  std::vector<double> values;
  std::string token;
  for (const char c : text + ",") {
    if (c == ',') {
      if (!token.empty()) values.push_back(std::stod(token));
      token.clear();
    } else {
      token += c;
    }
  }
  return values;
}

int runBenchScaling(const std::string& ns, const std::string& modes, uint64_t seed,
                    double timeout, const std::string& out_path) {
  const std::vector<int32_t> sizes = parseIntList(ns);
  std::vector<rcusp_solve_mode> mode_values;
  std::string token;
  for (const char c : modes + ",") {
    if (c == ',') {
      if (!token.empty()) {
        rcusp_solve_mode mode;
        if (!parseModeName(token, mode)) {
          std::fprintf(stderr, "error: unknown mode '%s'\n", token.c_str());
          return kExitUsage;
        }
        mode_values.push_back(mode);
      }
      token.clear();
    } else {
      token += c;
    }
  }
  if (sizes.empty() || mode_values.empty()) {
    std::fprintf(stderr, "error: need at least one size and one mode\n");
    return kExitUsage;
  }

  rcusp_scaling_params params{};
  params.sizes = sizes.data();
  params.size_count = static_cast<int32_t>(sizes.size());
  params.modes = mode_values.data();
  params.mode_count = static_cast<int32_t>(mode_values.size());
  params.seed = seed;
  params.timeout_seconds = timeout;

  const rcusp_status status = rcusp_bench_scaling(&params, out_path.c_str());
  if (status != RCUSP_OK) return report(status);
  std::printf("wrote %s\n", out_path.c_str());
  return kExitOk;
}

int runBenchCompare(int count, int n, int64_t cap, int64_t pmin, int64_t pmax,
                    int64_t hmin, int64_t hmax, const std::string& ratios,
                    uint64_t seed, double timeout, const std::string& out_path) {
  const std::vector<double> ratio_values = parseDoubleList(ratios);
  if (ratio_values.empty()) {
    std::fprintf(stderr, "error: need at least one ratio\n");
    return kExitUsage;
  }

  rcusp_compare_params params{};
  params.instance_count = count;
  params.activity_count = n;
  params.capacity = cap;
  params.duration_min = pmin;
  params.duration_max = pmax;
  params.height_min = hmin;
  params.height_max = hmax;
  params.ratios = ratio_values.data();
  params.ratio_count = static_cast<int32_t>(ratio_values.size());
  params.seed = seed;
  params.timeout_seconds = timeout;

  const rcusp_status status = rcusp_bench_compare(&params, out_path.c_str());
  if (status != RCUSP_OK) return report(status);
  std::printf("wrote %s\n", out_path.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cumulative scheduling with delay slack: time-table filtering, "
               "solving and benchmarks"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "write a random instance file");
  int gen_n = 10;
  int64_t gen_pmin = 5, gen_pmax = 10, gen_hmin = 1, gen_hmax = 5, gen_cap = 30;
  int64_t gen_kavg = 4, gen_kfixed = 0;
  uint64_t gen_seed = 1;
  std::string gen_out;
  generate->add_option("--n", gen_n, "number of activities")->required();
  generate->add_option("--pmin", gen_pmin, "minimum duration");
  generate->add_option("--pmax", gen_pmax, "maximum duration");
  generate->add_option("--hmin", gen_hmin, "minimum height");
  generate->add_option("--hmax", gen_hmax, "maximum height");
  generate->add_option("--cap", gen_cap, "resource capacity");
  auto* kavg_opt = generate->add_option("--kavg", gen_kavg, "average slack");
  auto* kfixed_opt = generate->add_option("--kfixed", gen_kfixed, "fixed slack");
  kavg_opt->excludes(kfixed_opt);
  generate->add_option("--seed", gen_seed, "random seed");
  generate->add_option("--out", gen_out, "output file")->required();

  // propagate
  auto* propagate = app.add_subcommand("propagate", "tighten bounds to the fixpoint");
  std::string prop_in;
  bool prop_verify = false;
  propagate->add_option("--in", prop_in, "instance file")->required();
  propagate->add_flag("--verify", prop_verify, "run both fixpoint verifiers");

  // solve
  auto* solve = app.add_subcommand("solve", "find a first or optimal assignment");
  std::string solve_in, solve_mode = "rcumulative";
  bool solve_optimal = false;
  double solve_timeout = 0.0;
  solve->add_option("--in", solve_in, "instance file")->required();
  solve->add_option("--mode", solve_mode, "rcumulative|cumulative|naive");
  solve->add_flag("--optimal", solve_optimal, "branch and bound to the optimum");
  solve->add_option("--timeout", solve_timeout, "seconds, 0 = none");

  // bench
  auto* bench = app.add_subcommand("bench", "benchmark harness");
  bench->require_subcommand(1);

  auto* scaling = bench->add_subcommand("scaling", "first-solution scaling CSV");
  std::string sc_ns = "100,200,400,800,1600";
  std::string sc_modes = "cumulative,rcumulative";
  uint64_t sc_seed = 1;
  double sc_timeout = 0.0;
  std::string sc_out;
  scaling->add_option("--ns", sc_ns, "comma separated sizes");
  scaling->add_option("--modes", sc_modes,
                      "comma separated: cumulative,rcumulative,decomposition");
  scaling->add_option("--seed", sc_seed, "random seed");
  scaling->add_option("--timeout", sc_timeout, "per-solve seconds, 0 = none");
  scaling->add_option("--out", sc_out, "output CSV")->required();

  auto* compare = bench->add_subcommand("compare", "robust vs naive optima CSV");
  int cmp_count = 50, cmp_n = 10;
  int64_t cmp_cap = 16, cmp_pmin = 1, cmp_pmax = 9, cmp_hmin = 1, cmp_hmax = 5;
  std::string cmp_ratios = "0.2,0.4,0.6,0.8,1.0,1.2,1.4,1.6,1.8,2.0";
  uint64_t cmp_seed = 1;
  double cmp_timeout = 0.0;
  std::string cmp_out;
  compare->add_option("--count", cmp_count, "instances per ratio");
  compare->add_option("--n", cmp_n, "activities per instance");
  compare->add_option("--cap", cmp_cap, "resource capacity");
  compare->add_option("--pmin", cmp_pmin, "minimum duration");
  compare->add_option("--pmax", cmp_pmax, "maximum duration");
  compare->add_option("--hmin", cmp_hmin, "minimum height");
  compare->add_option("--hmax", cmp_hmax, "maximum height");
  compare->add_option("--ratios", cmp_ratios, "comma separated slack ratios");
  compare->add_option("--seed", cmp_seed, "random seed");
  compare->add_option("--timeout", cmp_timeout, "per-solve seconds, 0 = none");
  compare->add_option("--out", cmp_out, "output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed()) {
      return runGenerate(gen_n, gen_pmin, gen_pmax, gen_hmin, gen_hmax, gen_cap,
                         gen_kavg, gen_kfixed, kavg_opt->count() > 0, gen_seed,
                         gen_out);
    }
    if (propagate->parsed()) return runPropagate(prop_in, prop_verify);
    if (solve->parsed()) {
      return runSolve(solve_in, solve_mode, solve_optimal, solve_timeout);
    }
    if (bench->parsed()) {
      if (scaling->parsed()) {
        return runBenchScaling(sc_ns, sc_modes, sc_seed, sc_timeout, sc_out);
      }
      if (compare->parsed()) {
        return runBenchCompare(cmp_count, cmp_n, cmp_cap, cmp_pmin, cmp_pmax,
                               cmp_hmin, cmp_hmax, cmp_ratios, cmp_seed,
                               cmp_timeout, cmp_out);
      }
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
