#include "plasmawave/scattering.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>
#include <sstream>

namespace pw {

cvec profile_w(const GridSpec& g, const cvec& gs, double t) {
    return multiply(g, gs, [t](double xi) { return std::polar(1.0, t * jb(xi)); });
}

cvec unprofile(const GridSpec& g, const cvec& ws, double t) {
    return multiply(g, ws, [t](double xi) { return std::polar(1.0, -t * jb(xi)); });
}

PhaseAccumulator::PhaseAccumulator(const GridSpec& g, bool zero_coefficient)
    : g_(g), coef_(g.num_points), integral_(g.num_points), last_val_(g.num_points) {
    if (zero_coefficient) return;
    for (std::size_t i = 0; i < g.num_points; ++i) {
        const double xi = g.xi(i);
        coef_[i] = -c_star(xi) * std::pow(jb(xi), 3) / (2.0 * M_PI);
    }
}

void PhaseAccumulator::accumulate(double t, const cvec& w) {
    check_length(g_, w.size(), "profile spectrum");
    if (started_ && !(t > last_t_))
        throw Error(ErrorKind::analysis, "phase accumulator needs increasing times");
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double v = std::norm(w[i]) / (t + 1.0);
        if (started_) integral_[i] += 0.5 * (t - last_t_) * (last_val_[i] + v);
        last_val_[i] = v;
    }
    last_t_ = t;
    started_ = true;
}

rvec PhaseAccumulator::theta() const {
    rvec th(integral_.size());
    for (std::size_t i = 0; i < th.size(); ++i) th[i] = coef_[i] * integral_[i];
    return th;
}

double PhaseAccumulator::theta_at_index(std::size_t i) const { return coef_.at(i) * integral_.at(i); }

namespace {
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
}  // namespace

std::string ScatteringReport::to_text() const {
    std::ostringstream os;
    double wl2 = 0.0;
    for (const auto& z : w_inf) wl2 += std::norm(z);
    os << "weight_m = " << weight_m << "\n"
       << "xi_window = " << num(xi_window) << "\n"
       << "snapshots = " << times.size() << "\n"
       << "final_time = " << num(times.empty() ? 0.0 : times.back()) << "\n"
       << "fit_t_lo = " << num(fit_t_lo) << "\n"
       << "fit_t_hi = " << num(fit_t_hi) << "\n"
       << "fit_points = " << fit.points << "\n"
       << "delta = " << num(delta()) << "\n"
       << "delta_band_lo = " << num(-fit.band_hi) << "\n"
       << "delta_band_hi = " << num(-fit.band_lo) << "\n"
       << "carrier_xi = " << num(carrier_xi) << "\n"
       << "compare_time = " << num(compare_time) << "\n"
       << "carrier_corrected = " << num(carrier_corrected) << "\n"
       << "carrier_control = " << num(carrier_control) << "\n"
       << "control_exceeds = " << (control_exceeds ? "true" : "false") << "\n"
       << "w_inf_l2 = " << num(std::sqrt(wl2 / (grid.num_points ? grid.box_length : 1.0))) << "\n";
    return os.str();
}

ScatteringReport scattering_analysis(const ScatteringInputs& in) {
    const std::size_t ns = in.times.size();
    if (ns < 20 || in.w.size() != ns || in.theta.size() != ns)
        throw Error(ErrorKind::analysis, "scattering analysis needs at least 20 snapshots of w and theta");
    const GridSpec& g = in.grid;
    ScatteringReport rep;
    rep.grid = g;
    rep.weight_m = in.weight_m;
    rep.xi_window = in.xi_window > 0.0 ? in.xi_window : g.xi_max();
    rep.times = in.times;
    rep.carrier_xi = in.carrier_xi;
    const double T = in.times.back();
    rep.fit_t_lo = in.fit_t_lo;
    rep.fit_t_hi = in.fit_t_hi > 0.0 ? in.fit_t_hi : 0.5 * T;

    rvec weight(g.num_points);
    std::vector<bool> in_window(g.num_points), in_carrier(g.num_points);
    for (std::size_t i = 0; i < g.num_points; ++i) {
        const double xi = g.xi(i);
        weight[i] = std::pow(jb(xi), in.weight_m);
        in_window[i] = i != g.nyquist() && std::abs(xi) <= rep.xi_window;
        in_carrier[i] = std::abs(std::abs(xi) - in.carrier_xi) <= in.carrier_halfwidth;
    }
    auto corrected = [&](std::size_t s) {
        cvec c(g.num_points);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::polar(1.0, in.theta[s][i]) * in.w[s][i];
        return c;
    };
    const cvec cT = corrected(ns - 1);
    const cvec& wT = in.w[ns - 1];
    std::size_t compare = 0;
    for (std::size_t s = 0; s < ns; ++s)
        if (std::abs(in.times[s] - rep.fit_t_hi) < std::abs(in.times[compare] - rep.fit_t_hi)) compare = s;
    rep.compare_time = in.times[compare];

    for (std::size_t s = 0; s < ns; ++s) {
        const cvec c = corrected(s);
        double d = 0.0, dc = 0.0, bc = 0.0, bcc = 0.0;
        for (std::size_t i = 0; i < g.num_points; ++i) {
            const double a = std::abs(c[i] - cT[i]);
            const double b = std::abs(in.w[s][i] - wT[i]);
            if (in_window[i]) {
                d = std::max(d, weight[i] * a);
                dc = std::max(dc, weight[i] * b);
            }
            if (in_carrier[i]) {
                bc = std::max(bc, a);
                bcc = std::max(bcc, b);
            }
        }
        rep.D.push_back(d);
        rep.D_control.push_back(dc);
        if (s == compare) {
            rep.carrier_corrected = bc;
            rep.carrier_control = bcc;
        }
    }
    rep.control_exceeds = rep.carrier_control > rep.carrier_corrected;
    double d_max = 0.0;
    for (std::size_t s = 0; s < ns; ++s)
        if (rep.times[s] >= rep.fit_t_lo && rep.times[s] <= rep.fit_t_hi) d_max = std::max(d_max, rep.D[s]);
    if (d_max == 0.0) {
        // profile already at its limit (linear flow): no rate to fit
        rep.fit.slope = rep.fit.band_lo = rep.fit.band_hi = std::numeric_limits<double>::quiet_NaN();
    } else {
        rep.fit = rate_fit(rep.times, rep.D, rep.fit_t_lo, rep.fit_t_hi, in.seed);
    }

    rep.w_inf.assign(g.num_points, cplx(0.0));
    std::size_t count = 0;
    for (std::size_t s = 0; s < ns; ++s) {
        if (in.times[s] < 0.9 * T) continue;
        const cvec c = corrected(s);
        for (std::size_t i = 0; i < g.num_points; ++i) rep.w_inf[i] += c[i];
        ++count;
    }
    for (auto& z : rep.w_inf) z /= static_cast<double>(count);
    return rep;
}

cvec cubic_interaction(Signs3 tr, const GridSpec& g, const cvec& w, double t) {
    if (g.num_points > 256)
        throw Error(ErrorKind::cost_guard, "cubic_interaction is limited to num_points <= 256");
    check_length(g, w.size(), "profile spectrum");
    const long h = static_cast<long>(g.num_points / 2);
    cvec wp(g.num_points), wm(g.num_points);
    for (long m = -h + 1; m < h; ++m) {
        wp[m + h] = w[g.index(m)];
        wm[m + h] = std::conj(w[g.index(-m)]);
    }
    auto pick = [&](int sign, long m) { return sign > 0 ? wp[m + h] : wm[m + h]; };
    const double dxi = g.dxi();
    const double quad = dxi * dxi;
    cvec out(g.num_points);
    for (long k = -h + 1; k < h; ++k) {
        const double xi = dxi * k;
        cplx acc = 0.0;
        for (long e = -h + 1; e < h; ++e) {
            const long a = k - e;
            if (a <= -h || a >= h) continue;
            const cplx w1 = pick(tr.i1, a);
            if (w1 == cplx(0.0)) continue;
            const double eta = dxi * e;
            for (long s = -h + 1; s < h; ++s) {
                const long b = e - s;
                if (b <= -h || b >= h) continue;
                const cplx w23 = pick(tr.i2, b) * pick(tr.i3, s);
                if (w23 == cplx(0.0)) continue;
                const double sigma = dxi * s;
                acc += cubic_symbol(tr, xi, eta, sigma) * std::polar(1.0, t * phase(tr, xi, eta, sigma)) * w1 * w23;
            }
        }
        out[g.index(k)] = quad * acc;
    }
    return out;
}

DispersiveTable dispersive_constant_check(const GridSpec& g, const cvec& f, const std::vector<double>& times) {
    const cvec fs = forward(g, f);
    double fhat_inf = 0.0;
    for (const auto& z : fs) fhat_inf = std::max(fhat_inf, std::abs(z));
    const double h2 = sobolev_norm(g, fs, 2.0);
    const double xf = xweighted_sobolev(g, f, 1.0).value;
    double peak = sup_norm(f), r0 = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j)
        if (std::abs(f[j]) >= 1e-10 * peak) r0 = std::max(r0, std::abs(g.x(j)));
    DispersiveTable tab;
    tab.t_valid = 0.5 * g.box_length - r0;
    for (double t : times) {
        const double num = sup_norm(inverse(g, profile_w(g, fs, t)));
        const double den = std::pow(1.0 + t, -0.5) * fhat_inf + std::pow(1.0 + t, -0.625) * (h2 + xf);
        tab.times.push_back(t);
        tab.ratio.push_back(num / den);
        tab.valid.push_back(t <= tab.t_valid);
        if (t <= tab.t_valid) tab.sup_ratio = std::max(tab.sup_ratio, num / den);
    }
    return tab;
}

QuadratureB4 quadrature_check_B4(double lambda, double mu, int n) {
    if (!(lambda > 0.0) || !(mu > 0.0)) throw config_error("quadrature_check_B4 needs lambda, mu > 0");
    using GL = boost::math::quadrature::gauss<double, 10>;
    const double step = std::min(0.05, 0.5 / (lambda * mu));
    if (1.6 * mu / step > 2e5) throw Error(ErrorKind::cost_guard, "B.4 quadrature grid too large");
    // panels aligned with the bump breakpoints 5/4 and 8/5 (scaled by mu)
    std::vector<double> nodes, weights;
    auto add_segment = [&](double a, double b) {
        const int panels = static_cast<int>(std::ceil((b - a) / step));
        const double w = (b - a) / panels;
        const auto& ab = GL::abscissa();
        const auto& wt = GL::weights();
        for (int p = 0; p < panels; ++p) {
            const double c = a + (p + 0.5) * w;
            for (std::size_t q = 0; q < ab.size(); ++q) {
                for (int sgn : {-1, 1}) {
                    if (ab[q] == 0.0 && sgn < 0) continue;
                    nodes.push_back(c + sgn * 0.5 * w * ab[q]);
                    weights.push_back(0.5 * w * wt[q]);
                }
            }
        }
    };
    add_segment(0.0, 1.25 * mu);
    add_segment(1.25 * mu, 1.6 * mu);
    rvec phw(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) phw[i] = weights[i] * bump(nodes[i] / mu);
    long double total = 0.0L;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        double row = 0.0;
        const double lx = lambda * nodes[i];
        for (std::size_t j = 0; j < nodes.size(); ++j) row += phw[j] * std::cos(lx * nodes[j]);
        total += static_cast<long double>(phw[i]) * row;
    }
    QuadratureB4 r;
    r.value = static_cast<double>(4.0L * total);
    r.error = std::abs(r.value - 2.0 * M_PI / lambda);
    r.step = step;
    r.bound_ref = std::pow(lambda, -1.0 - n) * std::pow(mu, -2.0 * n);
    return r;
}

}  // namespace pw
