#include "plasmawave/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace pw {

const char* formulation_name(Formulation f) {
    switch (f) {
    case Formulation::nv: return "nv";
    case Formulation::ev: return "ev";
    case Formulation::ru: return "ru";
    case Formulation::h: return "h";
    }
    return "?";
}

Formulation parse_formulation(const std::string& s) {
    if (s == "nv") return Formulation::nv;
    if (s == "ev") return Formulation::ev;
    if (s == "ru") return Formulation::ru;
    if (s == "h") return Formulation::h;
    throw config_error("unknown formulation '" + s + "' (expected nv, ev, ru or h)");
}

Formulation formulation_of(const State& s) { return static_cast<Formulation>(s.index()); }

double time_of(const State& s) {
    return std::visit([](const auto& x) { return x.t; }, s);
}

double neutrality_residual(const StateNV& s) {
    double acc = 0.0;
    for (double v : s.n) acc += v - 1.0;
    return acc / static_cast<double>(s.n.size());
}

StateEV to_ev(const GridSpec& g, const StateNV& s) {
    const double mean = neutrality_residual(s);
    double scale = 0.0;
    for (double v : s.n) scale = std::max(scale, std::abs(v - 1.0));
    if (std::abs(mean) > 1e-12 * std::max(1.0, scale))
        throw numeric_error("neutrality violation: mean(n-1) = " + std::to_string(mean));
    rvec dn(s.n.size());
    for (std::size_t j = 0; j < dn.size(); ++j) dn[j] = s.n[j] - 1.0;
    cvec spec = forward(g, dn);
    return {inverse_real(g, antiderivative_edge(g, spec)), s.v, s.t};
}

StateNV to_nv(const GridSpec& g, const StateEV& s) {
    rvec ex = apply_multiplier(g, s.E, sym_dx);
    for (double& v : ex) v += 1.0;
    return {ex, s.v, s.t};
}

StateRU to_ru(const GridSpec& g, const StateEV& s) {
    rvec r(s.E.size());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = 0.5 * s.E[j];
    rvec u = apply_multiplier(g, s.v, [](double xi) { return cplx(-0.5 / jb(xi)); });
    return {r, u, s.t};
}

StateEV to_ev(const GridSpec& g, const StateRU& s) {
    rvec E(s.r.size());
    for (std::size_t j = 0; j < E.size(); ++j) E[j] = 2.0 * s.r[j];
    rvec v = apply_multiplier(g, s.u, [](double xi) { return cplx(-2.0 * jb(xi)); });
    return {E, v, s.t};
}

ComplexState to_h(const StateRU& s) {
    cvec h(s.r.size());
    for (std::size_t j = 0; j < h.size(); ++j) h[j] = cplx(s.r[j], s.u[j]);
    return {h, s.t};
}

StateRU to_ru(const ComplexState& s) {
    rvec r(s.h.size()), u(s.h.size());
    for (std::size_t j = 0; j < r.size(); ++j) {
        r[j] = s.h[j].real();
        u[j] = s.h[j].imag();
    }
    return {r, u, s.t};
}

namespace {
StateEV any_to_ev(const GridSpec& g, const State& s) {
    switch (formulation_of(s)) {
    case Formulation::nv: return to_ev(g, std::get<StateNV>(s));
    case Formulation::ev: return std::get<StateEV>(s);
    case Formulation::ru: return to_ev(g, std::get<StateRU>(s));
    case Formulation::h: return to_ev(g, to_ru(std::get<ComplexState>(s)));
    }
    throw config_error("bad state");
}
}  // namespace

State convert(const GridSpec& g, const State& s, Formulation target) {
    if (formulation_of(s) == target) return s;
    if (formulation_of(s) == Formulation::h && target == Formulation::ru) return to_ru(std::get<ComplexState>(s));
    if (formulation_of(s) == Formulation::ru && target == Formulation::h) return to_h(std::get<StateRU>(s));
    const StateEV ev = any_to_ev(g, s);
    switch (target) {
    case Formulation::nv: return to_nv(g, ev);
    case Formulation::ev: return ev;
    case Formulation::ru: return to_ru(g, ev);
    case Formulation::h: return to_h(to_ru(g, ev));
    }
    throw config_error("bad target formulation");
}

Spectra to_spectra(const GridSpec& g, const State& s) {
    switch (formulation_of(s)) {
    case Formulation::nv: {
        const auto& x = std::get<StateNV>(s);
        return {forward(g, x.n), forward(g, x.v)};
    }
    case Formulation::ev: {
        const auto& x = std::get<StateEV>(s);
        return {forward(g, x.E), forward(g, x.v)};
    }
    case Formulation::ru: {
        const auto& x = std::get<StateRU>(s);
        return {forward(g, x.r), forward(g, x.u)};
    }
    case Formulation::h: return {forward(g, std::get<ComplexState>(s).h)};
    }
    throw config_error("bad state");
}

State from_spectra(const GridSpec& g, const Spectra& s, Formulation f, double t) {
    switch (f) {
    case Formulation::nv: return StateNV{inverse_real(g, s.at(0)), inverse_real(g, s.at(1)), t};
    case Formulation::ev: return StateEV{inverse_real(g, s.at(0)), inverse_real(g, s.at(1)), t};
    case Formulation::ru: return StateRU{inverse_real(g, s.at(0)), inverse_real(g, s.at(1)), t};
    case Formulation::h: return ComplexState{inverse(g, s.at(0)), t};
    }
    throw config_error("bad formulation");
}

namespace {

rvec physical(const GridSpec& g, const cvec& spec, const char* what) {
    rvec f = inverse_real(g, spec);
    for (std::size_t j = 0; j < f.size(); ++j)
        if (!std::isfinite(f[j]))
            throw numeric_error(std::string("non-finite ") + what + " at sample index " + std::to_string(j));
    return f;
}

// dealiased spectrum of a pointwise expression
template <class F>
cvec pointwise(const GridSpec& g, std::size_t n, F f) {
    rvec out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = f(j);
    cvec s = forward(g, out);
    dealias_inplace(g, s);
    return s;
}

cvec add(const cvec& a, const cvec& b, double sb = 1.0) {
    cvec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += sb * b[i];
    return r;
}

// (r^, u^) from h^
void split_h(const GridSpec& g, const cvec& h, cvec& r, cvec& u) {
    const cvec hc = conj_spectrum(g, h);
    r.resize(h.size());
    u.resize(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        r[i] = 0.5 * (h[i] + hc[i]);
        u[i] = cplx(0.0, -0.5) * (h[i] - hc[i]);
    }
}

// Quadratic terms of the (r,u) system.
void quadratic_ru(const GridSpec& g, const cvec& r, const cvec& u, cvec& nr, cvec& nu) {
    const std::size_t n = g.num_points;
    const rvec A = physical(g, multiply(g, u, sym_jb), "<d>u");
    const rvec B = physical(g, multiply(g, r, sym_dx), "r_x");
    nr = pointwise(g, n, [&](std::size_t j) { return 2.0 * A[j] * B[j]; });
    nu = multiply(g, pointwise(g, n, [&](std::size_t j) { return A[j] * A[j] + B[j] * B[j]; }), sym_dx_over_jb);
}

}  // namespace

cvec quadratic_h(const GridSpec& g, const cvec& h) {
    cvec r, u, nr, nu;
    split_h(g, h, r, u);
    quadratic_ru(g, r, u, nr, nu);
    cvec out(h.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = nr[i] + cplx(0.0, 1.0) * nu[i];
    return out;
}

Spectra rhs(const GridSpec& g, Formulation f, const Spectra& s, const Physics& ph) {
    const std::size_t n = g.num_points;
    if (!ph.electric_field_on && f != Formulation::nv && f != Formulation::ev)
        throw config_error("pure Euler mode needs the nv or ev formulation");
    switch (f) {
    case Formulation::h: {
        cvec lin = multiply(g, s.at(0), [](double xi) { return cplx(0.0, -jb(xi)); });
        if (!ph.nonlinear) return {lin};
        return {add(lin, quadratic_h(g, s[0]))};
    }
    case Formulation::ru: {
        cvec rt = multiply(g, s.at(1), sym_jb);
        cvec ut = multiply(g, s.at(0), [](double xi) { return cplx(-jb(xi)); });
        if (!ph.nonlinear) return {rt, ut};
        cvec nr, nu;
        quadratic_ru(g, s[0], s[1], nr, nu);
        return {add(rt, nr), add(ut, nu)};
    }
    case Formulation::ev: {
        const cvec& E = s.at(0);
        const cvec& v = s.at(1);
        cvec Et(n), vt(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double xi = g.xi(i);
            Et[i] = -v[i];
            vt[i] = xi * xi * E[i] + (ph.electric_field_on ? E[i] : cplx(0.0));
        }
        vt[g.nyquist()] = 0.0;
        if (!ph.nonlinear) return {Et, vt};
        const rvec vp = physical(g, v, "v");
        const rvec Ex = physical(g, multiply(g, E, sym_dx), "E_x");
        const cvec vEx = pointwise(g, n, [&](std::size_t j) { return vp[j] * Ex[j]; });
        const cvec q = multiply(g, pointwise(g, n, [&](std::size_t j) { return 0.5 * (vp[j] * vp[j] + Ex[j] * Ex[j]); }),
                                sym_dx);
        return {add(Et, vEx, -1.0), add(vt, q, -1.0)};
    }
    case Formulation::nv: {
        const cvec& nh = s.at(0);
        const cvec& vh = s.at(1);
        cvec nt, vt;
        if (ph.nonlinear) {
            const rvec np = physical(g, nh, "n");
            const rvec vp = physical(g, vh, "v");
            nt = multiply(g, pointwise(g, n, [&](std::size_t j) { return np[j] * vp[j]; }),
                          [](double xi) { return cplx(0.0, -xi); });
            vt = multiply(g, pointwise(g, n, [&](std::size_t j) { return 0.5 * (vp[j] * vp[j] + np[j] * np[j]); }),
                          [](double xi) { return cplx(0.0, -xi); });
        } else {
            nt = multiply(g, vh, [](double xi) { return cplx(0.0, -xi); });
            vt = multiply(g, nh, [](double xi) { return cplx(0.0, -xi); });
        }
        if (ph.electric_field_on) {
            cvec dn = nh;
            dn[0] = 0.0;
            const cvec E = antiderivative_edge(g, dn);
            for (std::size_t i = 0; i < n; ++i) vt[i] += E[i];
        }
        return {nt, vt};
    }
    }
    throw config_error("bad formulation");
}

State rhs(const GridSpec& g, const State& s, const Physics& ph) {
    const Formulation f = formulation_of(s);
    return from_spectra(g, rhs(g, f, to_spectra(g, s), ph), f, time_of(s));
}

void check_cfl(const GridSpec& g, double dt) {
    if (!(std::abs(dt) <= cfl_limit(g)) || dt == 0.0)
        throw numeric_error("time step " + std::to_string(dt) + " violates the CFL guard |dt| <= 0.5*dx = " +
                            std::to_string(cfl_limit(g)));
}

cvec step_ifrk4(const GridSpec& g, const cvec& h, double dt, const Physics& ph) {
    check_cfl(g, dt);
    const std::size_t n = g.num_points;
    cvec e_half(n), e_full(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double w = jb(g.xi(i));
        e_half[i] = std::polar(1.0, -0.5 * dt * w);
        e_full[i] = std::polar(1.0, -dt * w);
    }
    e_half[g.nyquist()] = e_full[g.nyquist()] = 0.0;
    auto N = [&](const cvec& x) {
        if (!ph.nonlinear) return cvec(n);
        return quadratic_h(g, x);
    };
    const cvec k1 = N(h);
    cvec a(n), b(n), c(n), out(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = e_half[i] * (h[i] + 0.5 * dt * k1[i]);
    const cvec k2 = N(a);
    for (std::size_t i = 0; i < n; ++i) b[i] = e_half[i] * h[i] + 0.5 * dt * k2[i];
    const cvec k3 = N(b);
    for (std::size_t i = 0; i < n; ++i) c[i] = e_full[i] * h[i] + dt * e_half[i] * k3[i];
    const cvec k4 = N(c);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = e_full[i] * h[i] + dt / 6.0 * (e_full[i] * k1[i] + 2.0 * e_half[i] * (k2[i] + k3[i]) + k4[i]);
    return out;
}

ComplexState step_ifrk4(const GridSpec& g, const ComplexState& s, double dt, const Physics& ph) {
    return {inverse(g, step_ifrk4(g, forward(g, s.h), dt, ph)), s.t + dt};
}

Spectra step_rk4(const GridSpec& g, Formulation f, const Spectra& s, double dt, const Physics& ph) {
    check_cfl(g, dt);
    auto axpy = [](const Spectra& x, double a, const Spectra& y) {
        Spectra r = x;
        for (std::size_t c = 0; c < r.size(); ++c)
            for (std::size_t i = 0; i < r[c].size(); ++i) r[c][i] += a * y[c][i];
        return r;
    };
    const Spectra k1 = rhs(g, f, s, ph);
    const Spectra k2 = rhs(g, f, axpy(s, 0.5 * dt, k1), ph);
    const Spectra k3 = rhs(g, f, axpy(s, 0.5 * dt, k2), ph);
    const Spectra k4 = rhs(g, f, axpy(s, dt, k3), ph);
    Spectra out = s;
    for (std::size_t c = 0; c < out.size(); ++c)
        for (std::size_t i = 0; i < out[c].size(); ++i)
            out[c][i] += dt / 6.0 * (k1[c][i] + 2.0 * k2[c][i] + 2.0 * k3[c][i] + k4[c][i]);
    return out;
}

std::optional<double> riemann_blowup_oracle(const GridSpec& g, const rvec& n0, const rvec& v0) {
    const rvec nx = apply_multiplier(g, n0, sym_dx);
    const rvec vx = apply_multiplier(g, v0, sym_dx);
    double smin = 0.0;
    for (std::size_t j = 0; j < nx.size(); ++j) smin = std::min({smin, vx[j] + nx[j], vx[j] - nx[j]});
    if (smin < 0.0) return -1.0 / smin;
    return std::nullopt;
}

StateEV initial_state(const GridSpec& g, const InitialProfile& p) {
    const std::size_t n = g.num_points;
    rvec E(n), v(n);
    if (p.family == "packet") {
        if (!(p.sigma > 0.0)) throw config_error("packet width sigma must be positive");
        // makes int E dx = 0 without a box-wide constant
        const double mean_shift = std::exp(-0.25 * p.k0 * p.k0 * p.sigma * p.sigma);
        for (std::size_t j = 0; j < n; ++j) {
            const double x = g.x(j);
            const double env = p.eps0 * std::exp(-(x / p.sigma) * (x / p.sigma));
            E[j] = env * (std::cos(p.k0 * x) - mean_shift);
            v[j] = env * std::sin(p.k0 * x);
        }
    } else if (p.family == "mode") {
        for (std::size_t j = 0; j < n; ++j) E[j] = p.eps0 * std::cos(p.k0 * g.x(j));
    } else if (p.family != "zero") {
        throw config_error("unknown initial profile family '" + p.family + "'");
    }
    cvec Es = forward(g, E), vs = forward(g, v);
    dealias_inplace(g, Es);
    dealias_inplace(g, vs);
    return {inverse_real(g, Es), inverse_real(g, vs), 0.0};
}

double valid_horizon(const GridSpec& g, const State& s) {
    const StateEV ev = any_to_ev(g, s);
    double peak = 0.0;
    for (std::size_t j = 0; j < g.num_points; ++j) peak = std::max({peak, std::abs(ev.E[j]), std::abs(ev.v[j])});
    if (peak == 0.0) return 0.5 * g.box_length;
    double r0 = 0.0;
    for (std::size_t j = 0; j < g.num_points; ++j)
        if (std::abs(ev.E[j]) >= 1e-10 * peak || std::abs(ev.v[j]) >= 1e-10 * peak)
            r0 = std::max(r0, std::abs(g.x(j)));
    return 0.5 * g.box_length - r0;
}

}  // namespace pw
