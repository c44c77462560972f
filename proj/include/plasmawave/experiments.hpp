#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "plasmawave/config.hpp"
#include "plasmawave/diagnostics.hpp"
#include "plasmawave/scattering.hpp"

namespace pw {

enum class RunStatus { clean, resolution_loss, blowup };
const char* run_status_name(RunStatus s);

struct RunOptions {
    std::optional<State> resume_from;  // continue from this state (its own time) to t_final
    std::string checkpoint_path;       // written at checkpoint_at when set
    bool keep_snapshots = true;        // keep w^ and theta snapshots for scattering_analysis
    bool analyze_scattering = true;
};

struct RunResult {
    GridSpec grid;
    std::vector<DiagnosticsRecord> records;
    RunStatus status = RunStatus::clean;
    ShockStatus shock = ShockStatus::clean;
    std::optional<double> steepening_time, resolution_loss_time, oracle_time;
    double t_valid = 0.0;
    double t_reached = 0.0;
    std::size_t steps = 0;
    State initial_state, final_state;

    // scattering inputs on the profile grid (num_points/2, same box)
    GridSpec profile_grid;
    std::size_t carrier_index = 0;
    std::vector<double> snap_t;
    std::vector<cvec> snap_w;
    std::vector<rvec> snap_theta;
    std::optional<ScatteringReport> scattering;
};

// Integrates cfg from its initial profile (or the resume state) to t_final.
// Config errors throw; blowup ends the run early with status blowup.
RunResult run(const RunConfig& cfg, const RunOptions& opt = {}, std::uint64_t seed = 12345);

// One diagnostics record for a state. Profile quantities need ctx and acc; pass null to skip them.
class NormalFormContext;
struct RecordInputs {
    const NormalFormContext* ctx = nullptr;  // on the profile grid
    PhaseAccumulator* acc = nullptr;
    std::size_t carrier_index = 0;
    double t_valid = 0.0;
    bool electric_field_on = true;
    int n_sob = 6, n1_sob = 4;
};
DiagnosticsRecord make_record(const GridSpec& g, const State& s, const RecordInputs& in, cvec* w_out = nullptr);

// Files under dir: diagnostics.csv, status.txt, and with scattering: scattering.txt,
// scattering_curve.csv, w_inf.csv; spectrum.csv always.
void write_run_artifacts(const std::string& dir, const ExperimentConfig& cfg, const RunResult& r,
                         bool with_timestamp = true);

}  // namespace pw
