#include "plasmawave/commands.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>
#include <vector>

#include "plasmawave/checks.hpp"

namespace pw {

const char* const plot_decay_header = "t,sup_h,U_HN,U_Wm_inf,gammaU_HN1,xU_HN1,max_dx_n,tail_ratio";
const char* const plot_spectrum_header = "xi,abs_h_initial,abs_h_final";
const char* const plot_scattering_header = "t,D,D_control";

namespace fs = std::filesystem;

namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string opt_text(const std::optional<double>& v) { return v ? g17(*v) : "none"; }

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_numeric;
    }
}

ExperimentConfig load_with_overrides(const CliOptions& o) {
    if (o.config.empty()) throw config_error("--config is required");
    ExperimentConfig c = load_config(o.config);
    if (o.seed) c.seed = *o.seed;
    if (!o.out.empty())
        c.output_dir = o.out;
    else if (const char* env = std::getenv("PLASMAWAVE_OUT"); env && *env)
        c.output_dir = env;
    return c;
}

int status_exit(RunStatus s) {
    switch (s) {
    case RunStatus::clean: return exit_ok;
    case RunStatus::resolution_loss: return exit_numeric;
    case RunStatus::blowup: return exit_blowup;
    }
    return exit_numeric;
}

}  // namespace

int cmd_simulate(const CliOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const ExperimentConfig c = load_with_overrides(o);
        const fs::path dir = fs::path(c.output_dir) / c.label;
        fs::create_directories(dir);
        RunOptions opt;
        if (c.run.checkpoint_at > 0.0) opt.checkpoint_path = (dir / "checkpoint.ckpt").string();
        const RunResult r = run(c.run, opt, c.seed);
        write_run_artifacts(dir.string(), c, r);
        out << "status = " << run_status_name(r.status) << "\n"
            << "t_reached = " << g17(r.t_reached) << "\n"
            << "records = " << r.records.size() << "\n"
            << "shock = " << shock_status_name(r.shock) << "\n"
            << "steepening_time = " << opt_text(r.steepening_time) << "\n"
            << "oracle_time = " << opt_text(r.oracle_time) << "\n"
            << "output = " << dir.string() << "\n";
        if (r.scattering) out << "delta = " << g17(r.scattering->delta()) << "\n";
        return status_exit(r.status);
    });
}

namespace {

std::vector<std::function<CheckResult()>> suite_checks(const std::string& suite, std::uint64_t seed) {
    std::vector<std::function<CheckResult()>> v;
    const bool all = suite == "all";
    PropertySetup ps;
    ps.seeds = 5;
    ps.seed = seed;
    if (all || suite == "symbols") {
        v.push_back([=] { return check_b_selfadjoint(1000, seed); });
        v.push_back([=] { return check_backsubstitution(2000, {1, 6, 300}, seed); });
        v.push_back([=] { return check_resonance(1000, seed); });
    }
    if (all || suite == "identities") {
        v.push_back([=] { return check_orthogonality(ps); });
        v.push_back([=] { return check_identities(ps); });
        v.push_back([=] { return check_adjoint(ps); });
        v.push_back([=] { return check_bony(ps); });
    }
    if (all || suite == "scattering") {
        v.push_back([] { return check_profile_and_theta(256, 32.0 * M_PI); });
        v.push_back([=] { return check_cubic_consistency(64, 16.0 * M_PI, 2.0, seed); });
        v.push_back([] { return check_homogeneity(256, 32.0 * M_PI, 0.05); });
    }
    if (all || suite == "appendix") {
        v.push_back([] { return check_quadrature_scaling({}); });
        v.push_back([] {
            DispersiveSetup d;
            d.box_length = 800.0 * M_PI;
            d.coarse = 4096;
            d.fine = 8192;
            d.t_max = 200.0;
            return check_dispersive_constant(d);
        });
    }
    if (v.empty()) throw config_error("unknown suite '" + suite + "'");
    return v;
}

}  // namespace

int cmd_verify(const CliOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::string suite = o.suite;
        std::uint64_t seed = o.seed.value_or(12345);
        if (!o.config.empty()) {
            const ExperimentConfig c = load_with_overrides(o);
            if (suite.empty()) suite = c.suite;
            seed = c.seed;
        }
        if (suite.empty()) suite = "all";
        int passed = 0, failed = 0;
        for (const auto& check : suite_checks(suite, seed)) {
            const CheckResult r = check();
            out << (r.pass ? "PASS " : "FAIL ") << r.name << " " << r.detail << "\n";
            (r.pass ? passed : failed)++;
        }
        out << "summary suite=" << suite << " passed=" << passed << " failed=" << failed << "\n";
        return failed ? exit_verify : exit_ok;
    });
}

int cmd_sweep(const CliOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const ExperimentConfig base = load_with_overrides(o);
        auto axis = [](const std::vector<double>& v, double b) { return v.empty() ? std::vector<double>{b} : v; };
        const auto e = axis(base.sweep_eps0, base.run.profile.eps0);
        const auto k = axis(base.sweep_k0, base.run.profile.k0);
        const auto s = axis(base.sweep_sigma, base.run.profile.sigma);
        std::vector<ExperimentConfig> cells;
        for (double ev : e)
            for (double kv : k)
                for (double sv : s) {
                    ExperimentConfig c = base;
                    c.run.profile.eps0 = ev;
                    c.run.profile.k0 = kv;
                    c.run.profile.sigma = sv;
                    c.label = "cell" + std::to_string(cells.size());
                    c.output_dir = (fs::path(base.output_dir) / base.label).string();
                    validate(c);
                    cells.push_back(c);
                }
        const double work = static_cast<double>(cells.size()) * static_cast<double>(base.run.total_steps()) *
                            static_cast<double>(base.run.num_points);
        if (cells.size() > sweep_max_cells || work > sweep_max_work)
            throw Error(ErrorKind::cost_guard, "sweep of " + std::to_string(cells.size()) + " cells exceeds the cost guard");

        struct Row {
            std::string status = "error";
            std::optional<double> steep, oracle;
            double horizon = 0.0, slope = std::numeric_limits<double>::quiet_NaN();
            std::string message;
        };
        std::vector<Row> rows(cells.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < cells.size(); i = next++) {
                Row& row = rows[i];
                try {
                    RunOptions opt;
                    const RunResult r = run(cells[i].run, opt, cells[i].seed);
                    write_run_artifacts((fs::path(cells[i].output_dir) / cells[i].label).string(), cells[i], r);
                    row.status = run_status_name(r.status);
                    row.steep = r.steepening_time;
                    row.oracle = r.oracle_time;
                    row.horizon = r.t_reached;
                    std::vector<double> t, y;
                    for (const auto& rec : r.records) {
                        t.push_back(rec.t);
                        y.push_back(rec.sup_h);
                    }
                    try {
                        row.slope = rate_fit(t, y, std::min(20.0, 0.1 * r.t_reached), r.t_reached, cells[i].seed).slope;
                    } catch (const Error&) {
                    }
                } catch (const std::exception& ex) {
                    row.message = ex.what();
                }
            }
        };
        const int jobs = std::max(1, o.jobs);
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();

        const fs::path dir = fs::path(base.output_dir) / base.label;
        fs::create_directories(dir);
        std::ofstream csv(dir / "sweep.csv");
        if (!csv) throw Error(ErrorKind::io, "cannot write sweep.csv");
        const std::string header = "cell,eps0,k0,sigma,status,steepening_time,oracle_time,horizon,decay_slope";
        csv << header << "\n";
        out << header << "\n";
        bool errors = false;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const auto& p = cells[i].run.profile;
            const Row& r = rows[i];
            std::ostringstream line;
            line << i << ',' << g17(p.eps0) << ',' << g17(p.k0) << ',' << g17(p.sigma) << ',' << r.status << ','
                 << opt_text(r.steep) << ',' << opt_text(r.oracle) << ',' << g17(r.horizon) << ',' << g17(r.slope);
            csv << line.str() << "\n";
            out << line.str() << "\n";
            if (!r.message.empty()) {
                err << "cell " << i << ": " << r.message << "\n";
                errors = true;
            }
        }
        return errors ? exit_numeric : exit_ok;
    });
}

namespace {

std::vector<std::string> data_lines(const fs::path& p, std::string& header) {
    std::ifstream in(p);
    if (!in) throw Error(ErrorKind::io, "missing artifact " + p.string());
    std::vector<std::string> rows;
    std::string line;
    header.clear();
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (header.empty())
            header = line;
        else
            rows.push_back(line);
    }
    return rows;
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> v;
    std::stringstream ss(s);
    std::string c;
    while (std::getline(ss, c, ',')) v.push_back(c);
    return v;
}

// picks the named columns of a CSV body, text preserved
void project(const fs::path& in, const fs::path& out, const std::string& wanted) {
    std::string header;
    const auto rows = data_lines(in, header);
    const auto cols = split(header), want = split(wanted);
    std::vector<std::size_t> idx;
    for (const auto& w : want) {
        std::size_t j = 0;
        while (j < cols.size() && cols[j] != w) ++j;
        if (j == cols.size()) throw Error(ErrorKind::io, in.string() + " has no column " + w);
        idx.push_back(j);
    }
    std::ofstream o(out, std::ios::binary);
    if (!o) throw Error(ErrorKind::io, "cannot write " + out.string());
    o << wanted << "\n";
    for (const auto& r : rows) {
        const auto cells = split(r);
        for (std::size_t k = 0; k < idx.size(); ++k) o << (k ? "," : "") << cells.at(idx[k]);
        o << "\n";
    }
}

}  // namespace

int cmd_export_plotdata(const CliOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (o.run_dir.empty()) throw config_error("--run is required");
        const fs::path dir(o.run_dir);
        if (!fs::exists(dir / "diagnostics.csv") || !fs::exists(dir / "spectrum.csv"))
            throw Error(ErrorKind::io, "no run artifacts in " + dir.string());
        const fs::path pd = dir / "plotdata";
        fs::create_directories(pd);
        project(dir / "diagnostics.csv", pd / "decay.csv", plot_decay_header);
        project(dir / "spectrum.csv", pd / "spectrum.csv", plot_spectrum_header);
        if (fs::exists(dir / "scattering_curve.csv")) {
            project(dir / "scattering_curve.csv", pd / "scattering.csv", plot_scattering_header);
        } else {
            std::ofstream s(pd / "scattering.csv", std::ios::binary);
            s << plot_scattering_header << "\n";
        }
        out << "exported = " << pd.string() << "\n";
        return exit_ok;
    });
}

}  // namespace pw
