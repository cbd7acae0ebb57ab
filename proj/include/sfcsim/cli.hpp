#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sfcsim/scenario.hpp"
#include "sfcsim/trace.hpp"

namespace sfcsim::cli {

struct RunConfig {
    std::filesystem::path scenario;
    std::filesystem::path out_dir = "out";
    std::vector<std::string> solvers;  // empty: the scenario's solver
    std::optional<std::uint64_t> seed;
    std::vector<int> sweep;            // sfc_count values; needs a poisson workload
    int repeat = 1;
    int jobs = 1;

    // Throws ValidationError.
    void validate() const;
};

struct RunSpec {
    std::string solver;
    int sfc_count = 0;   // requests in this run
    int repeat = 0;
    std::size_t index = 0;  // position in (sweep value x repeat)
    std::uint64_t seed = 0;
    std::string label;
};

struct RunResult {
    RunSpec spec;
    TraceSummary summary;
    double acceptance_ratio = 1.0;
    std::map<FailureReason, int> breakdown;
    TraceLog trace;
};

// One run per (solver x sweep value x repeat). Seeds are base + index over
// (sweep value x repeat), so different solvers face identical workloads.
std::vector<RunSpec> plan_runs(const Scenario& scenario, const RunConfig& config);

// Executes runs (concurrently when jobs > 1); results follow plan order.
std::vector<RunResult> execute_runs(const Scenario& scenario, const std::vector<RunSpec>& plan, int jobs = 1);

// Workload a run sees: regenerated from the poisson generator when present.
std::vector<SfcRequest> workload_for(const Scenario& scenario, const RunSpec& spec);

void write_sweep_summary(const std::vector<RunResult>& results, const std::filesystem::path& path);

// Exit codes: 0 ok, 1 IO error, 2 parse / validation error.
int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_generate(const std::filesystem::path& input, const std::filesystem::path& out_dir, std::ostream& out,
                 std::ostream& err);
int cmd_validate(const std::filesystem::path& input, std::ostream& out, std::ostream& err);

// "50,100,200" -> {50, 100, 200}; throws ValidationError.
std::vector<int> parse_int_list(const std::string& text);
std::vector<std::string> split_list(const std::string& text);

}  // namespace sfcsim::cli
