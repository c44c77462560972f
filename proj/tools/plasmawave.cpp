#include <iostream>

#include "CLI11.hpp"
#include "plasmawave/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"plasmawave: Euler-Poisson pseudospectral simulator and normal-form toolkit"};
    app.require_subcommand(1);
    pw::CliOptions o;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--config", o.config, "key = value run configuration");
        c->add_option("--out", o.out, "output root (overrides PLASMAWAVE_OUT and output_dir)");
        c->add_option("--seed", seed, "seed for randomized suites and bootstrap bands");
    };
    auto* sim = app.add_subcommand("simulate", "integrate one configuration");
    add_common(sim);
    auto* ver = app.add_subcommand("verify", "run property suites");
    add_common(ver);
    ver->add_option("--suite", o.suite, "symbols | identities | scattering | appendix | all")
        ->check(CLI::IsMember({"symbols", "identities", "scattering", "appendix", "all"}));
    auto* swp = app.add_subcommand("sweep", "grid of (eps0, k0, sigma) runs");
    add_common(swp);
    swp->add_option("--jobs", o.jobs, "concurrent cells")->check(CLI::PositiveNumber);
    auto* exp = app.add_subcommand("export-plotdata", "normalized CSV bundle from a run directory");
    exp->add_option("--run,run", o.run_dir, "run directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : pw::exit_config;
    }
    for (auto* c : {sim, ver, swp})
        if (c->parsed() && c->count("--seed")) o.seed = seed;

    if (sim->parsed()) return pw::cmd_simulate(o, std::cout, std::cerr);
    if (ver->parsed()) return pw::cmd_verify(o, std::cout, std::cerr);
    if (swp->parsed()) return pw::cmd_sweep(o, std::cout, std::cerr);
    return pw::cmd_export_plotdata(o, std::cout, std::cerr);
}
