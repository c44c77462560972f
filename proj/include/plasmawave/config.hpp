#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plasmawave/dynamics.hpp"

namespace pw {

struct RunConfig {
    std::size_t num_points = 8192;
    double box_length = 800.0 * M_PI;
    InitialProfile profile;
    double dt = 0.1;
    double t_final = 300.0;
    Formulation formulation = Formulation::h;
    bool electric_field_on = true;
    double diag_every = 0.5;
    int n_sob = 6;
    int n1_sob = 4;
    double p0 = 0.01;
    bool allow_wraparound = false;
    bool normal_form_diagnostics = true;  // g, w, theta on the half grid
    double checkpoint_at = 0.0;           // 0: no checkpoint

    GridSpec grid() const { return GridSpec(num_points, box_length); }
    // cadence in steps; throws when diag_every is not a multiple of dt
    std::size_t diag_stride() const;
    std::size_t total_steps() const;
};

struct ExperimentConfig {
    RunConfig run;
    std::string label = "run";
    std::string output_dir = "output";
    std::uint64_t seed = 12345;
    std::string suite = "all";
    // sweep axes; empty means the base value
    std::vector<double> sweep_eps0, sweep_k0, sweep_sigma;
};

// Flat "key = value" text; '#' starts a comment. Unknown keys are rejected by name.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);
std::string to_text(const ExperimentConfig& c);
// Static checks (grid, CFL, cadence, label). The wraparound horizon is checked by run().
void validate(const ExperimentConfig& c);
void validate(const RunConfig& c);

bool label_is_safe(const std::string& label);

}  // namespace pw
