#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace pw {

struct CliOptions {
    std::string config;
    std::string out;  // output root; beats PLASMAWAVE_OUT, which beats the config's output_dir
    std::optional<std::uint64_t> seed;
    std::string suite;
    std::string run_dir;  // export-plotdata input
    int jobs = 1;
};

constexpr int exit_ok = 0, exit_config = 2, exit_numeric = 3, exit_blowup = 4, exit_verify = 5;

// Each command returns its exit status and reports errors on err instead of throwing.
int cmd_simulate(const CliOptions& o, std::ostream& out, std::ostream& err);
int cmd_verify(const CliOptions& o, std::ostream& out, std::ostream& err);
int cmd_sweep(const CliOptions& o, std::ostream& out, std::ostream& err);
int cmd_export_plotdata(const CliOptions& o, std::ostream& out, std::ostream& err);

// Column layouts of the export bundle.
extern const char* const plot_decay_header;
extern const char* const plot_spectrum_header;
extern const char* const plot_scattering_header;

constexpr std::size_t sweep_max_cells = 64;
constexpr double sweep_max_work = 5e10;  // cells * steps * num_points

}  // namespace pw
