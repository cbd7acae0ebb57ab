#include "sfcsim/cli.hpp"

#include <atomic>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "sfcsim/engine.hpp"
#include "sfcsim/errors.hpp"

namespace sfcsim::cli {

void RunConfig::validate() const {
    if (repeat < 1) throw ValidationError("--repeat", "must be >= 1");
    if (jobs < 1) throw ValidationError("--jobs", "must be >= 1");
    for (std::size_t i = 0; i < sweep.size(); ++i) {
        if (sweep[i] <= 0) throw ValidationError("--sweep", "values must be positive");
        if (i > 0 && sweep[i] <= sweep[i - 1]) throw ValidationError("--sweep", "values must be strictly increasing");
    }
    for (const auto& s : solvers) {
        if (!is_known_solver(s)) throw ValidationError("--solver", "UnknownSolver: '" + s + "'");
    }
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(item);
    if (!text.empty() && text.back() == ',') out.emplace_back();
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const auto& item : split_list(text)) {
        int v = 0;
        const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc{} || end != item.data() + item.size() || item.empty()) {
            throw ValidationError("--sweep", "not an integer: '" + item + "'");
        }
        out.push_back(v);
    }
    return out;
}

std::vector<RunSpec> plan_runs(const Scenario& scenario, const RunConfig& config) {
    if (!config.sweep.empty() && !scenario.workload_generator) {
        throw ValidationError("--sweep", "requires a workload generator in the scenario");
    }
    const std::uint64_t base = config.seed.value_or(scenario.seed);
    const std::vector<std::string> solvers = config.solvers.empty() ? std::vector{scenario.solver} : config.solvers;
    std::vector<int> counts = config.sweep;
    if (counts.empty()) counts.push_back(static_cast<int>(scenario.requests.size()));

    std::vector<RunSpec> plan;
    for (const auto& solver : solvers) {
        std::size_t index = 0;
        for (int count : counts) {
            for (int r = 0; r < config.repeat; ++r, ++index) {
                RunSpec spec{solver, count, r, index, base + index, {}};
                spec.label = solver + "_n" + std::to_string(count) + "_r" + std::to_string(r);
                plan.push_back(std::move(spec));
            }
        }
    }
    return plan;
}

std::vector<SfcRequest> workload_for(const Scenario& scenario, const RunSpec& spec) {
    if (!scenario.workload_generator) return scenario.requests;
    PoissonParams p = *scenario.workload_generator;
    p.sfc_count = spec.sfc_count;
    p.seed += spec.index;
    return generate_poisson_workload(scenario.topology, scenario.catalog, p);
}

std::vector<RunResult> execute_runs(const Scenario& scenario, const std::vector<RunSpec>& plan, int jobs) {
    std::vector<RunResult> results(plan.size());
    auto execute = [&](std::size_t i) {
        const RunSpec& spec = plan[i];
        const auto requests = workload_for(scenario, spec);
        auto solver = make_solver(spec.solver);
        SimulationReport report = run(scenario.topology, requests, scenario.catalog, *solver, spec.seed);
        RunResult& r = results[i];
        r.spec = spec;
        r.summary = summarize(report.trace);
        r.acceptance_ratio = acceptance_ratio(report.trace);
        r.breakdown = failure_breakdown(report.trace);
        r.trace = std::move(report.trace);
    };

    if (jobs <= 1 || plan.size() <= 1) {
        for (std::size_t i = 0; i < plan.size(); ++i) execute(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(plan.size());
    {
        std::vector<std::jthread> workers;
        const auto n = std::min<std::size_t>(static_cast<std::size_t>(jobs), plan.size());
        for (std::size_t w = 0; w < n; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < plan.size(); i = next++) {
                    try {
                        execute(i);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return results;
}

void write_sweep_summary(const std::vector<RunResult>& results, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << "solver,sfc_count,repeat,seed,arrivals,accepted,rejected,terminated_early,acceptance_ratio";
    for (FailureReason reason : kAllFailureReasons) out << ',' << to_string(reason);
    out << '\n';
    for (const auto& r : results) {
        out << r.spec.solver << ',' << r.spec.sfc_count << ',' << r.spec.repeat << ',' << r.spec.seed << ','
            << r.summary.arrivals << ',' << r.summary.accepted << ',' << r.summary.rejected << ','
            << r.summary.terminated_early << ',' << format_fixed(r.acceptance_ratio);
        for (FailureReason reason : kAllFailureReasons) {
            auto it = r.breakdown.find(reason);
            out << ',' << (it == r.breakdown.end() ? 0 : it->second);
        }
        out << '\n';
    }
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
}

namespace {

void print_summary(const std::vector<RunResult>& results, std::ostream& out) {
    out << "label arrivals accepted rejected terminated_early acceptance_ratio failures\n";
    for (const auto& r : results) {
        out << r.spec.label << ' ' << r.summary.arrivals << ' ' << r.summary.accepted << ' ' << r.summary.rejected
            << ' ' << r.summary.terminated_early << ' ' << format_fixed(r.acceptance_ratio) << ' ';
        if (r.breakdown.empty()) out << '-';
        bool first = true;
        for (const auto& [reason, count] : r.breakdown) {
            out << (first ? "" : ",") << to_string(reason) << '=' << count;
            first = false;
        }
        out << '\n';
    }
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        config.validate();
        const Scenario scenario = load_scenario(config.scenario);
        const auto plan = plan_runs(scenario, config);
        const auto results = execute_runs(scenario, plan, config.jobs);
        for (const auto& r : results) emit_csv(r.trace, config.out_dir / r.spec.label);
        write_sweep_summary(results, config.out_dir / "sweep_summary.csv");
        print_summary(results, out);
        return 0;
    });
}

int cmd_generate(const std::filesystem::path& input, const std::filesystem::path& out_dir, std::ostream& out,
                 std::ostream& err) {
    return guarded(err, [&] {
        const nlohmann::json j = read_json_file(input);
        if (j.is_object() && j.contains("sagin")) {
            SubstrateTopology topo = [&] {
                try {
                    return generate_sagin(sagin_params_from_json(j["sagin"]));
                } catch (const InvalidParams& e) {
                    throw ValidationError("sagin", e.what());
                }
            }();
            write_json_file(out_dir / "substrate.json", topology_to_json(topo));
            out << "substrate: " << topo.node_count() << " nodes, " << topo.size() << " time points\n";
            return 0;
        }
        const Scenario s = scenario_from_json(j, input.parent_path());
        write_json_file(out_dir / "substrate.json", topology_to_json(s.topology));
        write_json_file(out_dir / "workload.json", workload_to_json(s.requests, s.catalog));
        write_json_file(out_dir / "scenario.json", scenario_to_json(s));
        out << "substrate: " << s.topology.node_count() << " nodes, " << s.topology.size() << " time points\n"
            << "workload: " << s.requests.size() << " sfcs\n";
        return 0;
    });
}

int cmd_validate(const std::filesystem::path& input, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Scenario s = load_scenario(input);
        out << "ok: " << s.topology.node_count() << " nodes, " << s.topology.size() << " time points, "
            << s.requests.size() << " sfcs, " << s.catalog.templates().size() << " vnf templates, solver "
            << s.solver << '\n';
        return 0;
    });
}

}  // namespace sfcsim::cli
