// One PASS/FAIL line per acceptance criterion; tolerances live in the check functions.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "plasmawave/checks.hpp"

using namespace pw;

int main(int argc, char** argv) {
    CLI::App app{"plasmawave acceptance criteria"};
    std::vector<int> which;
    std::string cache = "acceptance_cache";
    bool prepare = false;
    app.add_option("criteria", which, "criterion numbers (default: all)")->check(CLI::Range(1, 13));
    app.add_option("--cache", cache, "directory for the shared decay run and scratch files");
    app.add_flag("--prepare-decay", prepare, "only run (or reuse) the shared decay run");
    CLI11_PARSE(app, argc, argv);

    const std::string decay_dir = (std::filesystem::path(cache) / "decay").string();
    const std::string scratch = (std::filesystem::path(cache) / "scratch").string();
    if (prepare) {
        try {
            const DecaySummary d = load_or_run_decay(decay_dir);
            std::cout << "decay run ready: " << d.records.size() << " records in " << decay_dir << "\n";
            return 0;
        } catch (const std::exception& e) {
            std::cerr << "decay run failed: " << e.what() << "\n";
            return 1;
        }
    }

    const std::map<int, std::function<std::vector<CheckResult>()>> criteria = {
        {1, [] { return std::vector{check_orthogonality({})}; }},
        {2, [] { return std::vector{check_identities({})}; }},
        {3, [] { return std::vector{check_backsubstitution(10000, {1, 6, 300}, 12345)}; }},
        {4, [] { return std::vector{check_shatah_residual({})}; }},
        {5, [] { return std::vector{check_homogeneity(512, 64.0 * M_PI, 0.05)}; }},
        {6, [] { return std::vector{check_resonance(1000, 12345)}; }},
        {7, [&] { return std::vector{check_decay_rate(load_or_run_decay(decay_dir))}; }},
        {8, [] { return std::vector{check_shock_twin({})}; }},
        {9, [&] { return std::vector{check_modified_scattering(load_or_run_decay(decay_dir))}; }},
        {10, [&] { return std::vector{check_growth(load_or_run_decay(decay_dir))}; }},
        {11, [] { return std::vector{check_quadrature_scaling({})}; }},
        {12, [] { return std::vector{check_dispersive_constant({})}; }},
        {13, [&] {
             return std::vector{check_conservation({}), check_checkpoint_resume(scratch),
                                check_deterministic_csv(scratch)};
         }},
    };
    if (which.empty())
        for (const auto& [k, f] : criteria) which.push_back(k);

    int failures = 0;
    for (int c : which) {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<CheckResult> parts;
        try {
            parts = criteria.at(c)();
        } catch (const std::exception& e) {
            parts = {{"error", false, e.what()}};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = true;
        std::string detail;
        for (const auto& p : parts) {
            pass = pass && p.pass;
            detail += " [" + p.name + (p.pass ? " ok " : " FAILED ") + p.detail + "]";
        }
        char head[64];
        std::snprintf(head, sizeof head, "criterion %02d %s (%.1fs)", c, pass ? "PASS" : "FAIL", secs);
        std::cout << head << detail << std::endl;
        failures += pass ? 0 : 1;
    }
    return failures ? 1 : 0;
}
