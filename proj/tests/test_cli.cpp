#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "plasmawave/commands.hpp"
#include "plasmawave/config.hpp"

using namespace pw;
namespace fs = std::filesystem;

namespace {
fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("pw_cli_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}
std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}
std::string without_timestamp(const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line))
        if (line.rfind("# timestamp", 0) != 0) out += line + "\n";
    return out;
}
std::string data_only(const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line))
        if (line.rfind("#", 0) != 0) out += line + "\n";
    return out;
}
std::string first_line(const fs::path& p) {
    std::ifstream in(p);
    std::string l;
    std::getline(in, l);
    return l;
}
const std::string bundled = std::string(PW_SOURCE_DIR) + "/configs/";
}  // namespace

TEST_CASE("simulate and export the small bundled run") {
    const fs::path root = scratch("small");
    CliOptions o;
    o.config = bundled + "ep_small.cfg";
    o.out = root.string();
    std::ostringstream out, err;
    REQUIRE(cmd_simulate(o, out, err) == exit_ok);
    CHECK(out.str().find("status = clean") != std::string::npos);
    const fs::path run = root / "ep_small";
    int rows = 0;
    {
        std::ifstream in(run / "diagnostics.csv");
        std::string l;
        while (std::getline(in, l))
            if (!l.empty() && l[0] != '#') ++rows;
    }
    CHECK(rows - 1 >= 100);

    CliOptions e;
    e.run_dir = run.string();
    REQUIRE(cmd_export_plotdata(e, out, err) == exit_ok);
    CHECK(first_line(run / "plotdata" / "decay.csv") == plot_decay_header);
    CHECK(first_line(run / "plotdata" / "spectrum.csv") == plot_spectrum_header);
    CHECK(first_line(run / "plotdata" / "scattering.csv") == plot_scattering_header);
    const std::string before = slurp(run / "plotdata" / "decay.csv") + slurp(run / "plotdata" / "scattering.csv");
    REQUIRE(cmd_export_plotdata(e, out, err) == exit_ok);
    CHECK(slurp(run / "plotdata" / "decay.csv") + slurp(run / "plotdata" / "scattering.csv") == before);

    // same config, same bytes apart from the timestamp
    const std::string first = without_timestamp(slurp(run / "diagnostics.csv"));
    REQUIRE(cmd_simulate(o, out, err) == exit_ok);
    CHECK(without_timestamp(slurp(run / "diagnostics.csv")) == first);

    // a one-cell sweep reproduces simulate
    CliOptions s = o;
    s.out = (root / "sweep").string();
    REQUIRE(cmd_sweep(s, out, err) == exit_ok);
    CHECK(data_only(slurp(root / "sweep" / "ep_small" / "cell0" / "diagnostics.csv")) == data_only(first));
    fs::remove_all(root);
}

TEST_CASE("export from an empty directory is a structured error") {
    const fs::path root = scratch("empty");
    CliOptions e;
    e.run_dir = root.string();
    std::ostringstream out, err;
    CHECK(cmd_export_plotdata(e, out, err) == exit_config);
    CHECK(err.str().find("error:") == 0);
    fs::remove_all(root);
}

TEST_CASE("malformed config names the key") {
    const fs::path root = scratch("bad");
    std::ofstream(root / "bad.cfg") << "num_points = 256\nbogus = 3\n";
    CliOptions o;
    o.config = (root / "bad.cfg").string();
    o.out = root.string();
    std::ostringstream out, err;
    CHECK(cmd_simulate(o, out, err) == exit_config);
    CHECK(err.str().find("bogus") != std::string::npos);
    o.config = (root / "missing.cfg").string();
    CHECK(cmd_simulate(o, out, err) == exit_config);
    fs::remove_all(root);
}

TEST_CASE("sweep cost guard") {
    const fs::path root = scratch("guard");
    std::ofstream(root / "big.cfg") << "sweep_eps0 = 0.01, 0.02, 0.03, 0.04, 0.05\nsweep_k0 = 1, 2, 3, 4\n"
                                    << "sweep_sigma = 1, 2, 3, 4\n";
    CliOptions o;
    o.config = (root / "big.cfg").string();
    o.out = root.string();
    std::ostringstream out, err;
    CHECK(cmd_sweep(o, out, err) == exit_config);
    CHECK(err.str().find("cost guard") != std::string::npos);
    fs::remove_all(root);
}

TEST_CASE("output root precedence") {
    const fs::path root = scratch("env");
    std::ofstream(root / "tiny.cfg") << "num_points = 1024\nbox_length = 64pi\nt_final = 1\ndt = 0.05\n"
                                     << "normal_form_diagnostics = false\nlabel = tiny\noutput_dir = "
                                     << (root / "fromcfg").string() << "\n";
    CliOptions o;
    o.config = (root / "tiny.cfg").string();
    std::ostringstream out, err;
    ::setenv("PLASMAWAVE_OUT", (root / "fromenv").string().c_str(), 1);
    REQUIRE_MESSAGE(cmd_simulate(o, out, err) == exit_ok, err.str());
    CHECK(fs::exists(root / "fromenv" / "tiny" / "diagnostics.csv"));
    o.out = (root / "fromflag").string();
    REQUIRE(cmd_simulate(o, out, err) == exit_ok);
    CHECK(fs::exists(root / "fromflag" / "tiny" / "diagnostics.csv"));
    ::unsetenv("PLASMAWAVE_OUT");
    o.out.clear();
    REQUIRE(cmd_simulate(o, out, err) == exit_ok);
    CHECK(fs::exists(root / "fromcfg" / "tiny" / "diagnostics.csv"));
    fs::remove_all(root);
}

TEST_CASE("unknown verify suite") {
    CliOptions o;
    o.suite = "nonsense";
    std::ostringstream out, err;
    CHECK(cmd_verify(o, out, err) == exit_config);
}

TEST_CASE("verify symbols suite") {
    CliOptions o;
    o.suite = "symbols";
    std::ostringstream out, err;
    CHECK(cmd_verify(o, out, err) == exit_ok);
    CHECK(out.str().find("summary suite=symbols passed=3 failed=0") != std::string::npos);
}
