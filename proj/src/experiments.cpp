#include "plasmawave/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>

#include "plasmawave/normal_form.hpp"

namespace pw {

const char* run_status_name(RunStatus s) {
    switch (s) {
    case RunStatus::clean: return "clean";
    case RunStatus::resolution_loss: return "resolution_loss";
    case RunStatus::blowup: return "blowup";
    }
    return "?";
}

namespace {

StateEV as_ev(const GridSpec& g, const State& s) { return std::get<StateEV>(convert(g, s, Formulation::ev)); }

double vec2_weighted(const GridSpec& g, const rvec& a, const rvec& b, double s, bool& ok) {
    const WeightedNorm x = xweighted_sobolev(g, a, s), y = xweighted_sobolev(g, b, s);
    ok = ok && x.support_ok && y.support_ok;
    return std::hypot(x.value, y.value);
}

}  // namespace

DiagnosticsRecord make_record(const GridSpec& g, const State& s, const RecordInputs& in, cvec* w_out) {
    DiagnosticsRecord rec;
    rec.t = time_of(s);
    const StateEV ev = as_ev(g, s);
    const StateNV nv = to_nv(g, ev);
    const StateRU ru = to_ru(g, ev);
    const ComplexState h = to_h(ru);

    const cvec Es = forward(g, ev.E), vs = forward(g, ev.v);
    const Vec2 U{forward(g, ru.r), forward(g, ru.u)};
    rec.sup_h = sup_norm(h.h);
    rec.U_HN = sobolev_norm(g, U, in.n_sob);
    rec.U_Wm_inf = std::max(wk_inf_norm(g, U.a, in.n1_sob + 10), wk_inf_norm(g, U.b, in.n1_sob + 10));

    // U_t through the (E, v) equations, which also cover pure Euler
    const Spectra d = rhs(g, Formulation::ev, {Es, vs}, Physics{in.electric_field_on, true});
    Vec2 Ut{cvec(g.num_points), multiply(g, d[1], [](double xi) { return cplx(-0.5 / jb(xi)); })};
    for (std::size_t i = 0; i < g.num_points; ++i) Ut.a[i] = 0.5 * d[0][i];
    rec.gammaU_HN1 = sobolev_norm(g, gamma_field(g, U, rec.t, Ut), in.n1_sob);
    cvec hs(g.num_points), ht(g.num_points);
    for (std::size_t i = 0; i < g.num_points; ++i) {
        hs[i] = U.a[i] + cplx(0.0, 1.0) * U.b[i];
        ht[i] = Ut.a[i] + cplx(0.0, 1.0) * Ut.b[i];
    }
    rec.gammah_HN1 = sobolev_norm(g, gamma_field(g, hs, rec.t, ht), in.n1_sob);

    bool support_ok = true;
    rec.xU_HN1 = vec2_weighted(g, ru.r, ru.u, in.n1_sob, support_ok);
    rec.neutrality = neutrality_residual(nv);
    rvec n1(g.num_points);
    for (std::size_t j = 0; j < n1.size(); ++j) n1[j] = nv.n[j] - 1.0;
    const cvec ns = forward(g, n1);
    rec.tail_ratio = spectral_tail_ratio(g, Vec2{ns, forward(g, nv.v)});
    rec.max_dx_n = sup_norm(inverse_real(g, multiply(g, ns, sym_dx)));

    if (in.ctx) {
        const GridSpec& pg = in.ctx->grid();
        const cvec hp = resample_spectrum(g, hs, pg);
        const cvec w = profile_w(pg, shatah_g(*in.ctx, hp), rec.t);
        if (in.acc && (!in.acc->started() || rec.t > in.acc->last_time())) in.acc->accumulate(rec.t, w);
        const WeightedNorm xw = xweighted_sobolev(pg, inverse(pg, w), in.n1_sob - 4);
        rec.xw_HN1m4 = xw.value;
        support_ok = support_ok && xw.support_ok;
        const double window = 0.5 * pg.xi_max();
        for (std::size_t i = 0; i < pg.num_points; ++i) {
            const double xi = pg.xi(i);
            if (std::abs(xi) <= window)
                rec.sup_weighted_w = std::max(rec.sup_weighted_w, std::pow(jb(xi), in.n1_sob + 10) * std::abs(w[i]));
        }
        if (in.acc) rec.theta_carrier = in.acc->theta_at_index(in.carrier_index);
        if (w_out) *w_out = w;
    }
    rec.wrap_valid = support_ok && rec.t <= in.t_valid;
    return rec;
}

RunResult run(const RunConfig& cfg, const RunOptions& opt, std::uint64_t seed) {
    validate(cfg);
    const GridSpec g = cfg.grid();
    RunResult res;
    res.grid = g;
    const Formulation f = cfg.formulation;
    State s0;
    if (opt.resume_from) {
        if (formulation_of(*opt.resume_from) != f) throw config_error("resume state has a different formulation");
        s0 = *opt.resume_from;
    } else {
        s0 = convert(g, State{initial_state(g, cfg.profile)}, f);
    }
    const double t0 = time_of(s0);
    if (!(cfg.t_final > t0)) throw config_error("t_final must exceed the start time");
    res.initial_state = s0;
    // horizon of the configured initial data, so a resumed run keeps the original budget
    res.t_valid = valid_horizon(g, State{initial_state(g, cfg.profile)});
    if (cfg.t_final > res.t_valid && !cfg.allow_wraparound)
        throw config_error("t_final " + std::to_string(cfg.t_final) + " exceeds the wraparound horizon " +
                           std::to_string(res.t_valid) + " (set allow_wraparound = true to override)");
    const Physics ph{cfg.electric_field_on, true};
    if (!cfg.electric_field_on) {
        const StateNV nv = std::get<StateNV>(convert(g, s0, Formulation::nv));
        res.oracle_time = riemann_blowup_oracle(g, nv.n, nv.v);
        if (res.oracle_time) *res.oracle_time += t0;
    }

    const std::size_t stride = cfg.diag_stride();
    const double span = (cfg.t_final - t0) / cfg.dt;
    const auto steps = static_cast<std::size_t>(std::llround(span));
    if (steps == 0 || std::abs(span - static_cast<double>(steps)) > 1e-9 * span)
        throw config_error("t_final - start time must be a positive multiple of dt");

    const bool nf = cfg.normal_form_diagnostics && cfg.electric_field_on;
    std::optional<NormalFormContext> ctx;
    std::optional<PhaseAccumulator> acc;
    if (nf) {
        res.profile_grid = GridSpec(g.num_points / 2, g.box_length);
        ctx.emplace(res.profile_grid, cfg.n_sob);
        acc.emplace(res.profile_grid);
    }
    RecordInputs rin;
    rin.ctx = ctx ? &*ctx : nullptr;
    rin.acc = acc ? &*acc : nullptr;
    rin.t_valid = res.t_valid;
    rin.electric_field_on = cfg.electric_field_on;
    rin.n_sob = cfg.n_sob;
    rin.n1_sob = cfg.n1_sob;

    ShockDetector detector;
    Spectra spec = to_spectra(g, s0);
    State current = s0;
    for (std::size_t step = 0;; ++step) {
        const double t = t0 + static_cast<double>(step) * cfg.dt;
        current = from_spectra(g, spec, f, t);
        if (step % stride == 0 || step == steps) {
            cvec w;
            res.records.push_back(make_record(g, current, rin, nf ? &w : nullptr));
            const DiagnosticsRecord& rec = res.records.back();
            if (nf) {
                if (res.snap_t.empty()) {
                    std::size_t best = 0;
                    for (std::size_t i = 0; i < w.size(); ++i)
                        if (std::abs(w[i]) > std::abs(w[best])) best = i;
                    res.carrier_index = rin.carrier_index = best;
                    res.records.back().theta_carrier = acc->theta_at_index(best);
                }
                if (opt.keep_snapshots) {
                    res.snap_t.push_back(t);
                    res.snap_w.push_back(std::move(w));
                    res.snap_theta.push_back(acc->theta());
                }
            }
            detector.observe(t, rec.max_dx_n, rec.tail_ratio);
            if (!cfg.electric_field_on && detector.steepening_time()) {
                res.status = RunStatus::blowup;
                res.t_reached = t;
                res.steps = step;
                break;
            }
        }
        if (!opt.checkpoint_path.empty() && cfg.checkpoint_at > 0.0 && std::abs(t - cfg.checkpoint_at) < 0.5 * cfg.dt)
            write_checkpoint(opt.checkpoint_path, g, current);
        if (step == steps) {
            res.t_reached = t;
            res.steps = step;
            break;
        }
        try {
            if (f == Formulation::h)
                spec[0] = step_ifrk4(g, spec[0], cfg.dt, ph);
            else
                spec = step_rk4(g, f, spec, cfg.dt, ph);
        } catch (const Error& e) {
            if (cfg.electric_field_on || e.kind() != ErrorKind::numeric) throw;
            // pure Euler past the shock: report as blowup at the last good time
            res.status = RunStatus::blowup;
            res.t_reached = t;
            res.steps = step;
            if (!detector.steepening_time()) detector.observe(t, 1e300, 1.0);
            break;
        }
    }
    res.final_state = current;
    res.shock = detector.status();
    res.steepening_time = detector.steepening_time();
    res.resolution_loss_time = detector.resolution_loss_time();
    if (res.status == RunStatus::clean && res.resolution_loss_time) res.status = RunStatus::resolution_loss;

    if (nf && opt.keep_snapshots && opt.analyze_scattering && res.snap_t.size() >= 20) {
        ScatteringInputs in;
        in.grid = res.profile_grid;
        in.times = res.snap_t;
        in.w = res.snap_w;
        in.theta = res.snap_theta;
        in.weight_m = cfg.n1_sob + 10;
        in.xi_window = 0.5 * res.profile_grid.xi_max();
        in.carrier_xi = std::abs(res.profile_grid.xi(res.carrier_index));
        in.seed = seed;
        try {
            res.scattering = scattering_analysis(in);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::analysis) throw;
        }
    }
    return res;
}

namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string opt_text(const std::optional<double>& v) { return v ? g17(*v) : "none"; }

std::ofstream open_out(const std::filesystem::path& p) {
    std::ofstream o(p);
    if (!o) throw Error(ErrorKind::io, "cannot write " + p.string());
    return o;
}

cvec h_spectrum(const GridSpec& g, const State& s) {
    return forward(g, std::get<ComplexState>(convert(g, s, Formulation::h)).h);
}

}  // namespace

void write_run_artifacts(const std::string& dir, const ExperimentConfig& cfg, const RunResult& r,
                         bool with_timestamp) {
    namespace fs = std::filesystem;
    const fs::path d(dir);
    fs::create_directories(d);
    {
        auto o = open_out(d / "diagnostics.csv");
        o << "# plasmawave diagnostics\n";
        if (with_timestamp) {
            char buf[32];
            const std::time_t now = std::time(nullptr);
            std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
            o << "# timestamp = " << buf << "\n";
        }
        o << "# label = " << cfg.label << "\n";
        o << "# t_valid = " << g17(r.t_valid) << "\n";
        o << csv_header() << "\n";
        for (const auto& rec : r.records) o << csv_row(rec) << "\n";
    }
    {
        auto o = open_out(d / "status.txt");
        o << "status = " << run_status_name(r.status) << "\n"
          << "shock = " << shock_status_name(r.shock) << "\n"
          << "steepening_time = " << opt_text(r.steepening_time) << "\n"
          << "resolution_loss_time = " << opt_text(r.resolution_loss_time) << "\n"
          << "oracle_time = " << opt_text(r.oracle_time) << "\n"
          << "t_valid = " << g17(r.t_valid) << "\n"
          << "t_reached = " << g17(r.t_reached) << "\n"
          << "steps = " << r.steps << "\n"
          << "records = " << r.records.size() << "\n";
    }
    {
        auto o = open_out(d / "config.cfg");
        o << to_text(cfg);
    }
    {
        const GridSpec& g = r.grid;
        const cvec a = h_spectrum(g, r.initial_state), b = h_spectrum(g, r.final_state);
        auto o = open_out(d / "spectrum.csv");
        o << "xi,abs_h_initial,abs_h_final\n";
        const long h = static_cast<long>(g.num_points / 2);
        for (long k = -h + 1; k < h; ++k) {
            const std::size_t i = g.index(k);
            o << g17(g.xi(i)) << ',' << g17(std::abs(a[i])) << ',' << g17(std::abs(b[i])) << "\n";
        }
    }
    if (r.scattering) {
        const ScatteringReport& s = *r.scattering;
        {
            auto o = open_out(d / "scattering.txt");
            o << s.to_text();
        }
        {
            auto o = open_out(d / "scattering_curve.csv");
            o << "t,D,D_control\n";
            for (std::size_t i = 0; i < s.times.size(); ++i)
                o << g17(s.times[i]) << ',' << g17(s.D[i]) << ',' << g17(s.D_control[i]) << "\n";
        }
        {
            auto o = open_out(d / "w_inf.csv");
            o << "xi,re,im\n";
            const GridSpec& pg = s.grid;
            const long h = static_cast<long>(pg.num_points / 2);
            for (long k = -h + 1; k < h; ++k) {
                const std::size_t i = pg.index(k);
                o << g17(pg.xi(i)) << ',' << g17(s.w_inf[i].real()) << ',' << g17(s.w_inf[i].imag()) << "\n";
            }
        }
    }
}

}  // namespace pw
