#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sfcsim/cli.hpp"
#include "sfcsim/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Discrete-event SFC embedding and migration simulator"};
    app.require_subcommand(1);

    const char* env_out = std::getenv("SFC_SIM_OUT");
    const std::string default_out = env_out && *env_out ? env_out : "out";

    sfcsim::cli::RunConfig config;
    config.out_dir = default_out;
    std::string scenario, solvers, sweep, out_dir = default_out;
    std::uint64_t seed = 0;

    auto* run = app.add_subcommand("run", "Run a scenario (optionally a sweep) and write CSV traces");
    run->add_option("scenario", scenario, "Scenario bundle (JSON)")->required();
    run->add_option("--solver", solvers, "Solver name or comma list (random,greedy)");
    auto* seed_opt = run->add_option("--seed", seed, "Base seed override");
    run->add_option("--sweep", sweep, "Comma list of SFC counts, e.g. 50,100,200");
    run->add_option("--repeat", config.repeat, "Runs per sweep value")->default_val(1);
    run->add_option("--jobs", config.jobs, "Concurrent runs")->default_val(1);
    run->add_option("--out", out_dir, "Output root (default $SFC_SIM_OUT or ./out)");

    std::string gen_input, gen_out = default_out;
    auto* generate = app.add_subcommand("generate", "Materialize generated substrate/workload as plain JSON");
    generate->add_option("input", gen_input, "Scenario bundle or {\"sagin\": {...}} params file")->required();
    generate->add_option("--out", gen_out, "Output directory");

    std::string val_input;
    auto* validate = app.add_subcommand("validate", "Load and validate a scenario bundle");
    validate->add_option("scenario", val_input, "Scenario bundle (JSON)")->required();

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        config.scenario = scenario;
        config.out_dir = out_dir;
        try {
            config.solvers = sfcsim::cli::split_list(solvers);
            config.sweep = sfcsim::cli::parse_int_list(sweep);
        } catch (const sfcsim::Error& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 2;
        }
        if (seed_opt->count() > 0) config.seed = seed;
        return sfcsim::cli::cmd_run(config, std::cout, std::cerr);
    }
    if (generate->parsed()) return sfcsim::cli::cmd_generate(gen_input, gen_out, std::cout, std::cerr);
    return sfcsim::cli::cmd_validate(val_input, std::cout, std::cerr);
}
