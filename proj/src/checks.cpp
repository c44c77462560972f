#include "plasmawave/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "plasmawave/normal_form.hpp"

namespace pw {

namespace {

std::string g6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double rel_diff(const cvec& a, const cvec& b) {
    double d = 0.0, s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
        s = std::max(s, std::max(std::abs(a[i]), std::abs(b[i])));
    }
    return s == 0.0 ? d : d / s;
}

GridSpec setup_grid(const PropertySetup& s) { return GridSpec(s.num_points, s.box_length); }
long setup_band(const PropertySetup& s) { return static_cast<long>(s.num_points / 4) - 1; }

Vec2 random_vec2(const GridSpec& g, long band, std::mt19937_64& rng, bool real) {
    if (real) {
        cvec a = random_real_spectrum(g, band, rng);
        return {a, random_real_spectrum(g, band, rng)};
    }
    cvec a = random_complex_spectrum(g, band, rng);
    return {a, random_complex_spectrum(g, band, rng)};
}

cplx inner2(const GridSpec& g, const Vec2& x, const Vec2& y) { return inner(g, x.a, y.a) + inner(g, x.b, y.b); }

cvec h_spectrum_of(const GridSpec& g, const InitialProfile& p) {
    return to_spectra(g, convert(g, State{initial_state(g, p)}, Formulation::h))[0];
}

}  // namespace

cvec random_real_spectrum(const GridSpec& g, long band, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    cvec s(g.num_points);
    const double amp = g.box_length / std::sqrt(2.0 * static_cast<double>(band));
    for (long k = 1; k <= band; ++k) {
        const cplx c(nd(rng), nd(rng));
        s[g.index(k)] = amp * c;
        s[g.index(-k)] = amp * std::conj(c);
    }
    return s;
}

cvec random_complex_spectrum(const GridSpec& g, long band, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    cvec s(g.num_points);
    const double amp = g.box_length / std::sqrt(2.0 * static_cast<double>(band));
    for (long k = -band; k <= band; ++k) s[g.index(k)] = amp * cplx(nd(rng), nd(rng));
    return s;
}

CheckResult check_orthogonality(const PropertySetup& s) {
    const GridSpec g = setup_grid(s);
    double worst = 0.0;
    std::vector<double> controls;
    for (int k = 0; k < s.seeds; ++k) {
        std::mt19937_64 rng(s.seed + static_cast<std::uint64_t>(k));
        const Vec2 U = random_vec2(g, setup_band(s), rng, true);
        for (auto which : {EnergyPair::r_Q1_B1, EnergyPair::u_Q2_B2}) {
            const cvec& f = which == EnergyPair::r_Q1_B1 ? U.a : U.b;
            worst = std::max(worst, energy_orthogonality_check(g, f, U, s.N, which));
            controls.push_back(energy_orthogonality_check(g, f, U, s.N, which, true));
        }
    }
    // the control is a sign-indefinite integral, so single draws can sit near zero; judge its median
    std::sort(controls.begin(), controls.end());
    const double median = controls[controls.size() / 2];
    return {"energy_orthogonality", worst <= 1e-9 && median >= 1e-3,
            "max_ratio=" + g6(worst) + " tol=1e-9 control_median=" + g6(median) + " control_min=" + g6(controls[0]) +
                " control_tol=1e-3 seeds=" + std::to_string(s.seeds)};
}

CheckResult check_identities(const PropertySetup& s) {
    const GridSpec g = setup_grid(s);
    const NormalFormContext ctx(g, s.N);
    double worst = 0.0;
    for (int k = 0; k < s.seeds; ++k) {
        std::mt19937_64 rng(s.seed + 1000 + static_cast<std::uint64_t>(k));
        const Vec2 U = random_vec2(g, setup_band(s), rng, true);
        for (auto kind : {IdentityKind::A_B, IdentityKind::C_S}) {
            worst = std::max(worst, operator_identity_r(ctx, U.a, U, kind).relative());
            worst = std::max(worst, operator_identity_u(ctx, U.b, U, kind).relative());
        }
    }
    return {"normal_form_identities", worst <= 1e-9,
            "max_relative_residual=" + g6(worst) + " tol=1e-9 seeds=" + std::to_string(s.seeds)};
}

CheckResult check_adjoint(const PropertySetup& s) {
    const GridSpec g = setup_grid(s);
    const NormalFormContext ctx(g, s.N);
    std::mt19937_64 rng(s.seed + 2000);
    double worst = 0.0;
    for (Label l : {Label::Q1, Label::Q2, Label::S1, Label::S2, Label::B1, Label::B2, Label::A1, Label::A2, Label::C1,
                    Label::C2}) {
        const auto plan = ctx.matrix_plan(l);
        const BilinearPlan adj = adjoint_plan(*plan);
        const cvec f = random_complex_spectrum(g, setup_band(s), rng);
        const Vec2 U = random_vec2(g, setup_band(s), rng, false), V = random_vec2(g, setup_band(s), rng, false);
        const cplx lhs = inner2(g, apply_bilinear(f, *plan, U), V);
        const cplx rhs = inner2(g, U, apply_bilinear(conj_spectrum(g, f), adj, V));
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-300));
    }
    return {"adjoint_identity", worst <= 1e-11, "max_relative=" + g6(worst) + " tol=1e-11"};
}

CheckResult check_bony(const PropertySetup& s) {
    const GridSpec g = setup_grid(s);
    std::mt19937_64 rng(s.seed + 3000);
    const cvec f = random_complex_spectrum(g, setup_band(s), rng), h = random_complex_spectrum(g, setup_band(s), rng);
    cvec sum = paraproduct(g, f, h);
    const cvec b = paraproduct(g, h, f), r = bony_remainder(g, f, h);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += b[i] + r[i];
    const cvec pf = inverse(g, f), ph = inverse(g, h);
    cvec prod(g.num_points);
    for (std::size_t j = 0; j < prod.size(); ++j) prod[j] = pf[j] * ph[j];
    const double d = rel_diff(sum, forward(g, prod));
    return {"bony_recombination", d <= 1e-12, "relative=" + g6(d) + " tol=1e-12"};
}

CheckResult check_b_selfadjoint(int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-30.0, 30.0);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double a = u(rng), b = u(rng);
        for (Label l : {Label::B1, Label::B2})
            for (int N : {1, 6, 300}) {
                const SymbolMatrix2 m = b_matrix(l, N, a, b);
                const SymbolMatrix2 adj = b_matrix(l, N, -a, a + b).conj_transpose();
                worst = std::max(worst, (m - adj).max_abs() / std::max(m.max_abs(), 1.0));
            }
    }
    return {"b_selfadjoint", worst <= 1e-12, "max_relative=" + g6(worst) + " tol=1e-12"};
}

CheckResult check_backsubstitution(int samples, const std::vector<int>& Ns, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    // |xi| log-uniform on [1e-3, 1e2], which covers every lattice in use; the system's condition
    // number grows like xi^2, so the 1e-10 scaled bound is out of reach in double near |xi| = 1e3
    std::uniform_real_distribution<double> ex(-3.0, 2.0);
    std::bernoulli_distribution sign;
    auto draw = [&] { return (sign(rng) ? 1.0 : -1.0) * std::pow(10.0, ex(rng)); };
    double worst = 0.0;
    for (int N : Ns)
        for (int i = 0; i < samples; ++i) {
            const double a = draw(), b = draw();
            const auto M = normal_form_system(a, b);
            for (auto kind : {NormalFormKind::A, NormalFormKind::C}) {
                const auto x = solve_normal_form(kind, N, a, b);
                const auto r = normal_form_rhs(kind, N, a, b);
                double rmax = 0.0, res = 0.0;
                for (int row = 0; row < 4; ++row) {
                    cplx acc = 0.0;
                    for (int c = 0; c < 4; ++c) acc += M[row * 4 + c] * x[c];
                    res = std::max(res, std::abs(acc - r[row]));
                    rmax = std::max(rmax, std::abs(r[row]));
                }
                worst = std::max(worst, res / std::max(rmax, 1.0));
            }
        }
    return {"backsubstitution", worst <= 1e-10,
            "max_scaled_residual=" + g6(worst) + " tol=1e-10 samples=" + std::to_string(samples)};
}

CheckResult check_resonance(int samples, std::uint64_t seed) {
    const double c0 = std::abs(c_star(0.0));
    const double hstep = 1e-4;
    const double d0 = std::abs((c_star(hstep) - c_star(-hstep)) / (2.0 * hstep));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double xi = u(rng);
        const double c = c_star(xi);
        worst = std::max(worst, std::abs(cubic_symbol(PPM, xi, 0.0, -xi) - c) / std::max(std::abs(c), 1.0));
    }
    return {"resonance_coefficient", c0 <= 1e-12 && d0 <= 1e-7 && worst <= 1e-12,
            "c_star_0=" + g6(c0) + " dc_star_0=" + g6(d0) + " max_mismatch=" + g6(worst) +
                " tol=1e-12,1e-7,1e-12"};
}

CheckResult check_shatah_residual(const ShatahSetup& s) {
    const GridSpec g(s.num_points, s.box_length);
    InitialProfile p;
    p.eps0 = s.eps0;
    cvec h = h_spectrum_of(g, p);
    // states at t_mid + j * dt / 2, j = -2..2, from an integration step of dt / 4
    const double sub = s.dt / 4.0;
    const auto first = static_cast<long>(std::llround((s.t_mid - s.dt) / sub));
    const Physics ph;
    for (long k = 0; k < first; ++k) h = step_ifrk4(g, h, sub, ph);
    std::vector<cvec> at;
    for (int j = 0; j <= 8; ++j) {
        if (j % 2 == 0) at.push_back(h);
        if (j < 8) h = step_ifrk4(g, h, sub, ph);
    }
    const NormalFormContext ctx(g, s.N);
    const double r1 = residual_g(ctx, at[0], at[2], at[4], s.dt);
    const double r2 = residual_g(ctx, at[1], at[2], at[3], 0.5 * s.dt);
    const double r0 = residual_g(ctx, at[0], at[2], at[4], s.dt, true);
    const double ratio = r1 / r2, inflate = r0 / r1;
    return {"shatah_residual", ratio >= 3.5 && ratio <= 4.5 && inflate >= 100.0,
            "residual_dt=" + g6(r1) + " residual_dt2=" + g6(r2) + " ratio=" + g6(ratio) +
                " band=[3.5,4.5] zero_b_inflation=" + g6(inflate) + " min=100"};
}

CheckResult check_homogeneity(std::size_t num_points, double box_length, double eps0) {
    const GridSpec g(num_points, box_length);
    InitialProfile p;
    p.eps0 = eps0;
    const cvec h = h_spectrum_of(g, p);
    const NormalFormContext ctx(g, 6);
    const double eps = 0.37;
    cvec he = h;
    for (auto& z : he) z *= eps;
    cvec n1 = cubic_N(ctx, h);
    for (auto& z : n1) z *= eps * eps * eps;
    const double hom = rel_diff(cubic_N(ctx, he), n1);
    cvec hh = h;
    for (auto& z : hh) z *= 0.5;
    const double q = l2_norm(g, quartic_remainder(ctx, h)) / l2_norm(g, quartic_remainder(ctx, hh));
    return {"cubic_homogeneity", hom <= 1e-12 && q >= 14.0 && q <= 18.0,
            "homogeneity=" + g6(hom) + " tol=1e-12 quartic_ratio=" + g6(q) + " band=[14,18]"};
}

CheckResult check_profile_and_theta(std::size_t num_points, double box_length) {
    const GridSpec g(num_points, box_length);
    InitialProfile p;
    p.eps0 = 0.05;
    const cvec h0 = h_spectrum_of(g, p);
    // unitarity and exact inversion
    const cvec w = profile_w(g, h0, 3.7);
    const double unit = std::abs(l2_norm(g, w) - l2_norm(g, h0)) / l2_norm(g, h0);
    const double inv = rel_diff(unprofile(g, w, 3.7), h0);
    // linear flow keeps the profile fixed
    cvec h = h0;
    const double dt = 0.05;
    for (int k = 0; k < 200; ++k) h = step_ifrk4(g, h, dt, Physics{true, false});
    const double lin = rel_diff(profile_w(g, h, 200 * dt), h0);
    // constant |w|^2 = A: theta increment against the closed form
    const double A = 2.5, t1 = 1.0, t2 = 9.0;
    PhaseAccumulator acc(g);
    cvec flat(g.num_points, cplx(std::sqrt(A)));
    flat[g.nyquist()] = 0.0;
    const int samples = 4000;
    for (int k = 0; k <= samples; ++k) acc.accumulate(t1 + (t2 - t1) * k / samples, flat);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.num_points; ++i) {
        if (i == g.nyquist()) continue;
        const double xi = g.xi(i);
        const double exact = -c_star(xi) * std::pow(jb(xi), 3) * A / (2.0 * M_PI) * std::log((t2 + 1) / (t1 + 1));
        worst = std::max(worst, std::abs(acc.theta_at_index(i) - exact) / std::max(std::abs(exact), 1e-300));
    }
    const double at0 = std::abs(acc.theta_at_index(0));
    const bool pass = unit <= 1e-13 && inv <= 1e-13 && lin <= 1e-12 && worst <= 1e-6 && at0 == 0.0;
    return {"profile_and_theta", pass,
            "unitarity=" + g6(unit) + " inversion=" + g6(inv) + " linear_drift=" + g6(lin) +
                " theta_closed_form=" + g6(worst) + " theta_0=" + g6(at0)};
}

CheckResult check_cubic_consistency(std::size_t num_points, double box_length, double t, std::uint64_t seed) {
    const GridSpec g(num_points, box_length);
    std::mt19937_64 rng(seed);
    const cvec w = random_complex_spectrum(g, static_cast<long>(num_points / 6) - 1, rng);
    const cvec gs = unprofile(g, w, t);
    const NormalFormContext ctx(g, 6);
    const cvec rhs = profile_w(g, cubic_N(ctx, gs), t);
    cvec sum(g.num_points);
    for (Signs3 tr : cubic_triples) {
        const cvec I = cubic_interaction(tr, g, w, t);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += cplx(0.0, 1.0) / (4.0 * M_PI * M_PI) * I[i];
    }
    const double d = rel_diff(sum, rhs);
    return {"cubic_interaction_consistency", d <= 1e-9, "relative=" + g6(d) + " tol=1e-9"};
}

CheckResult check_quadrature_scaling(const QuadratureScaling& q) {
    std::vector<double> err;
    std::string detail;
    for (double l : q.lambdas) {
        const QuadratureB4 r = quadrature_check_B4(l, q.mu);
        err.push_back(r.error);
        detail += "err(" + g6(l) + ")=" + g6(r.error) + " ";
    }
    bool pass = true;
    for (std::size_t i = 0; i + 1 < err.size(); ++i) {
        const double ratio = err[i] / err[i + 1];
        detail += "ratio" + std::to_string(i + 1) + "=" + g6(ratio) + " ";
        pass = pass && ratio >= 2.0 && ratio <= 6.0;
    }
    return {"quadrature_B4_scaling", pass, detail + "band=[2,6] mu=" + g6(q.mu)};
}

CheckResult check_dispersive_constant(const DispersiveSetup& s) {
    std::vector<double> times;
    for (double t = 0.0; t <= s.t_max + 1e-9; t += s.t_step) times.push_back(t);
    double sup[2] = {0.0, 0.0};
    double tv = 0.0;
    int i = 0;
    for (std::size_t n : {s.coarse, s.fine}) {
        const GridSpec g(n, s.box_length);
        cvec f(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double x = g.x(j);
            f[j] = std::exp(-(x / s.sigma) * (x / s.sigma)) * std::polar(1.0, s.k0 * x);
        }
        const DispersiveTable tab = dispersive_constant_check(g, f, times);
        sup[i++] = tab.sup_ratio;
        tv = tab.t_valid;
    }
    const double change = std::abs(sup[1] / sup[0] - 1.0);
    const bool pass = std::isfinite(sup[0]) && std::isfinite(sup[1]) && change <= 0.2 && tv >= s.t_max;
    return {"dispersive_constant", pass,
            "sup_R_coarse=" + g6(sup[0]) + " sup_R_fine=" + g6(sup[1]) + " change=" + g6(change) +
                " tol=0.2 t_valid=" + g6(tv)};
}

CheckResult check_shock_twin(const ShockSetup& s) {
    RunConfig c;
    c.num_points = s.num_points;
    c.box_length = s.box_length;
    c.profile.eps0 = s.eps0;
    c.profile.sigma = s.sigma;
    c.profile.k0 = s.k0;
    c.formulation = Formulation::nv;
    c.electric_field_on = false;
    c.dt = s.dt;
    c.diag_every = s.diag_every;
    c.normal_form_diagnostics = false;
    const GridSpec g = c.grid();
    const StateNV nv = to_nv(g, initial_state(g, c.profile));
    const auto oracle = riemann_blowup_oracle(g, nv.n, nv.v);
    if (!oracle) return {"shock_dichotomy", false, "oracle=none"};
    c.t_final = std::ceil(s.horizon_factor * *oracle / s.diag_every) * s.diag_every;
    RunOptions opt;
    opt.keep_snapshots = false;
    const RunResult euler = run(c, opt);
    c.electric_field_on = true;
    const RunResult ep = run(c, opt);
    const double t_meas = euler.steepening_time.value_or(std::numeric_limits<double>::quiet_NaN());
    const double rel = std::abs(t_meas - *oracle) / *oracle;
    double peak = 0.0;
    for (const auto& r : ep.records) peak = std::max(peak, r.max_dx_n);
    const double grow = peak / ep.records.front().max_dx_n;
    const bool pass = euler.steepening_time && rel <= 0.15 && ep.shock == ShockStatus::clean && grow <= 2.0;
    return {"shock_dichotomy", pass,
            "oracle=" + g6(*oracle) + " euler_steepening=" + g6(t_meas) + " rel=" + g6(rel) +
                " tol=0.15 horizon=" + g6(c.t_final) + " ep_status=" + shock_status_name(ep.shock) +
                " ep_gradient_growth=" + g6(grow) + " max=2"};
}

CheckResult check_conservation(const ConservationSetup& s) {
    const GridSpec g(s.num_points, s.box_length);
    InitialProfile p;
    p.eps0 = s.eps0;
    const StateNV nv0 = to_nv(g, initial_state(g, p));
    Spectra spec = to_spectra(g, State{nv0});
    for (std::size_t k = 0; k < s.steps; ++k) spec = step_rk4(g, Formulation::nv, spec, s.dt);
    const StateNV nv1 = std::get<StateNV>(from_spectra(g, spec, Formulation::nv, s.dt * s.steps));
    const double drift = std::abs(neutrality_residual(nv1) - neutrality_residual(nv0));
    return {"neutrality_drift", drift <= 1e-12,
            "drift=" + g6(drift) + " steps=" + std::to_string(s.steps) + " tol=1e-12"};
}

namespace {
RunConfig small_run() {
    RunConfig c;
    c.num_points = 1024;
    c.box_length = 64.0 * M_PI;
    c.profile.eps0 = 0.05;
    c.dt = 0.05;
    c.t_final = 20.0;
    c.diag_every = 0.5;
    c.normal_form_diagnostics = false;
    return c;
}
}  // namespace

CheckResult check_checkpoint_resume(const std::string& scratch_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(scratch_dir);
    RunConfig c = small_run();
    RunOptions plain;
    plain.keep_snapshots = false;
    const RunResult straight = run(c, plain);
    c.checkpoint_at = 10.0;
    RunOptions first = plain;
    first.checkpoint_path = (fs::path(scratch_dir) / "resume.ckpt").string();
    run(c, first);
    GridSpec g;
    RunOptions second = plain;
    second.resume_from = read_checkpoint(first.checkpoint_path, g);
    const RunResult resumed = run(c, second);
    const cvec& a = std::get<ComplexState>(straight.final_state).h;
    const cvec& b = std::get<ComplexState>(resumed.final_state).h;
    const double d = rel_diff(a, b);
    return {"checkpoint_resume", g == straight.grid && d <= 1e-12,
            "relative=" + g6(d) + " tol=1e-12 resume_time=" + g6(time_of(*second.resume_from))};
}

CheckResult check_deterministic_csv(const std::string& scratch_dir) {
    namespace fs = std::filesystem;
    ExperimentConfig e;
    e.run = small_run();
    e.run.normal_form_diagnostics = true;
    e.run.t_final = 12.0;
    e.label = "determinism";
    auto body = [](const fs::path& p) {
        std::ifstream in(p);
        std::string line, out;
        while (std::getline(in, line))
            if (line.rfind("# timestamp", 0) != 0) out += line + "\n";
        return out;
    };
    std::string text[2];
    for (int k = 0; k < 2; ++k) {
        const fs::path dir = fs::path(scratch_dir) / ("det" + std::to_string(k));
        write_run_artifacts(dir.string(), e, run(e.run, {}, e.seed));
        text[k] = body(dir / "diagnostics.csv") + body(dir / "scattering.txt");
    }
    const bool same = !text[0].empty() && text[0] == text[1];
    return {"deterministic_csv", same, std::string("identical=") + (same ? "true" : "false")};
}

RunConfig decay_run_config() {
    RunConfig c;
    c.num_points = 8192;
    c.box_length = 800.0 * M_PI;
    c.profile.eps0 = 0.01;
    c.profile.sigma = 2.0;
    c.profile.k0 = 1.0;
    c.dt = 0.1;
    c.t_final = 300.0;
    c.formulation = Formulation::h;
    c.diag_every = 0.5;
    c.n_sob = 6;
    c.n1_sob = 4;
    return c;
}

std::string report_value(const std::string& text, const std::string& key) {
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        const auto eq = line.find(" = ");
        if (eq != std::string::npos && line.substr(0, eq) == key) return line.substr(eq + 3);
    }
    throw Error(ErrorKind::analysis, "report has no key " + key);
}

DecaySummary load_or_run_decay(const std::string& dir, bool force) {
    namespace fs = std::filesystem;
    ExperimentConfig e;
    e.run = decay_run_config();
    e.label = "decay";
    const fs::path d(dir);
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const bool cached = !force && fs::exists(d / "config.cfg") && fs::exists(d / "diagnostics.csv") &&
                        fs::exists(d / "scattering.txt") && slurp(d / "config.cfg") == to_text(e);
    if (!cached) {
        const RunResult r = run(e.run, {}, e.seed);
        if (!r.scattering) throw Error(ErrorKind::analysis, "decay run produced no scattering report");
        write_run_artifacts(dir, e, r);
    }
    DecaySummary s;
    std::ifstream in(d / "diagnostics.csv");
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header) {
            header = true;
            continue;
        }
        s.records.push_back(parse_csv_row(line));
    }
    s.scattering_text = slurp(d / "scattering.txt");
    return s;
}

namespace {
RateFit fit_column(const DecaySummary& d, double DiagnosticsRecord::*col, double lo, double hi) {
    std::vector<double> t, y;
    for (const auto& r : d.records) {
        t.push_back(r.t);
        y.push_back(r.*col);
    }
    return rate_fit(t, y, lo, hi);
}
}  // namespace

CheckResult check_decay_rate(const DecaySummary& d) {
    const RateFit f = fit_column(d, &DiagnosticsRecord::sup_h, 20.0, 300.0);
    return {"dispersive_decay", std::abs(f.slope + 0.5) <= 0.08,
            "slope=" + g6(f.slope) + " target=-0.5+-0.08 band=[" + g6(f.band_lo) + "," + g6(f.band_hi) +
                "] points=" + std::to_string(f.points)};
}

CheckResult check_modified_scattering(const DecaySummary& d) {
    const double delta = std::stod(report_value(d.scattering_text, "delta"));
    const bool control = report_value(d.scattering_text, "control_exceeds") == "true";
    return {"modified_scattering", delta > 0.1 && control,
            "delta=" + g6(delta) + " min=0.1 band=[" + report_value(d.scattering_text, "delta_band_lo") + "," +
                report_value(d.scattering_text, "delta_band_hi") +
                "] carrier_corrected=" + report_value(d.scattering_text, "carrier_corrected") +
                " carrier_control=" + report_value(d.scattering_text, "carrier_control")};
}

CheckResult check_growth(const DecaySummary& d) {
    const RateFit hn = fit_column(d, &DiagnosticsRecord::U_HN, 20.0, 300.0);
    const RateFit gm = fit_column(d, &DiagnosticsRecord::gammaU_HN1, 20.0, 300.0);
    const RateFit xu = fit_column(d, &DiagnosticsRecord::xU_HN1, 20.0, 300.0);
    const bool pass = hn.slope <= 0.05 && gm.slope <= 0.2 && xu.slope >= 0.8 && xu.slope <= 1.2;
    return {"growth_monitors", pass,
            "U_HN=" + g6(hn.slope) + " max=0.05 gammaU=" + g6(gm.slope) + " max=0.2 xU=" + g6(xu.slope) +
                " band=[0.8,1.2]"};
}

}  // namespace pw
