#include "sqdet/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <utility>

int main(int argc, char** argv) {
    sqdet::RunConfig cfg;
    CLI::App app{"Exact intersection forms of affine arrangements and their determinants"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", sqdet::kToolVersion);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "Write the report here instead of stdout");
        sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
        sub->add_option("--seed", cfg.seed, "Seed for random draws (xi, random instances)");
        sub->add_option("--dim", cfg.dim, "Dimension (random only)");
        sub->add_option("--n", cfg.n, "Number of hyperplanes (random only)");
        sub->add_flag("--timings", cfg.timings, "Add wall-clock timings to the report");
    };
    const std::pair<const char*, const char*> commands[] = {
        {"check", "Forms, determinants and the product formula for one instance"},
        {"matrix", "Only S and S_q"},
        {"det", "Only det S and det S_q"},
        {"rhs", "Only the product side and its factors"},
        {"invariants", "Structural, flag-space and y-matrix checks"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--input", cfg.input, "Arrangement or oriented matroid JSON")->required();
        sub->add_option("--nudge", cfg.nudge, "Re-randomize the offsets with this seed");
        sub->add_flag("--include-matrices", cfg.include_matrices, "Always include S and S_q");
        common(sub);
        sub->callback([&cfg, name] { cfg.command = name; });
    }
    auto* rnd = app.add_subcommand("random", "Random generic arrangements, one JSON line each");
    rnd->add_option("--count", cfg.count, "Number of instances");
    rnd->add_flag("--include-matrices", cfg.include_matrices, "Always include S and S_q");
    common(rnd);
    rnd->callback([&cfg] { cfg.command = "random"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : sqdet::kExitError;
    }
    return sqdet::run(cfg, std::cout, std::cerr);
}
