#include "plasmawave/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace pw {

std::string csv_header() {
    return "t,sup_h,U_HN,U_Wm_inf,gammaU_HN1,xU_HN1,xw_HN1m4,neutrality,tail_ratio,max_dx_n,"
           "sup_weighted_w,theta_carrier,wrap_valid,gammah_HN1";
}

namespace {
std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
}  // namespace

std::string csv_row(const DiagnosticsRecord& r) {
    std::string s;
    for (double v : {r.t, r.sup_h, r.U_HN, r.U_Wm_inf, r.gammaU_HN1, r.xU_HN1, r.xw_HN1m4, r.neutrality,
                     r.tail_ratio, r.max_dx_n, r.sup_weighted_w, r.theta_carrier}) {
        s += g17(v);
        s += ',';
    }
    s += r.wrap_valid ? "1," : "0,";
    s += g17(r.gammah_HN1);
    return s;
}

DiagnosticsRecord parse_csv_row(const std::string& line) {
    std::vector<double> v;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) v.push_back(std::stod(cell));
    if (v.size() != 14) throw Error(ErrorKind::io, "diagnostics row has " + std::to_string(v.size()) + " columns");
    DiagnosticsRecord r;
    r.t = v[0];
    r.sup_h = v[1];
    r.U_HN = v[2];
    r.U_Wm_inf = v[3];
    r.gammaU_HN1 = v[4];
    r.xU_HN1 = v[5];
    r.xw_HN1m4 = v[6];
    r.neutrality = v[7];
    r.tail_ratio = v[8];
    r.max_dx_n = v[9];
    r.sup_weighted_w = v[10];
    r.theta_carrier = v[11];
    r.wrap_valid = v[12] != 0.0;
    r.gammah_HN1 = v[13];
    return r;
}

cvec gamma_field(const GridSpec& g, const cvec& h, double t, const cvec& ht) {
    const cvec dx = inverse(g, multiply(g, h, sym_dx));
    const cvec tp = inverse(g, ht);
    cvec out(g.num_points);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = t * dx[j] + g.x(j) * tp[j];
    return forward(g, out);
}

Vec2 gamma_field(const GridSpec& g, const Vec2& U, double t, const Vec2& Ut) {
    return {gamma_field(g, U.a, t, Ut.a), gamma_field(g, U.b, t, Ut.b)};
}

cvec gamma_tilde_profile(const GridSpec& g, const cvec& gs, double t, const cvec& Nh) {
    cvec gt = multiply(g, gs, [](double xi) { return cplx(0.0, -jb(xi)); });
    for (std::size_t i = 0; i < gt.size(); ++i) gt[i] += Nh[i];
    const cvec gamma_g = gamma_field(g, gs, t, gt);
    const cvec nh = inverse(g, Nh);
    cvec xn(g.num_points);
    for (std::size_t j = 0; j < xn.size(); ++j) xn[j] = g.x(j) * nh[j];
    const cvec xns = forward(g, xn);
    const cvec corr = multiply(g, gs, sym_dx_over_jb);
    cvec out(g.num_points);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = gamma_g[i] - xns[i] + cplx(0.0, 1.0) * corr[i];
    out[g.nyquist()] = 0.0;
    return out;
}

namespace {
std::pair<double, double> ols(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) return {0.0, my};
    const double b = sxy / sxx;
    return {b, my - b * mx};
}
}  // namespace

RateFit rate_fit(const std::vector<double>& t, const std::vector<double>& y, double t_lo, double t_hi,
                 std::uint64_t seed, int resamples) {
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < t.size() && i < y.size(); ++i) {
        if (t[i] < t_lo || t[i] > t_hi) continue;
        if (!(y[i] > 0.0) || !(t[i] > 0.0))
            throw Error(ErrorKind::analysis, "rate_fit needs positive samples in the window");
        lx.push_back(std::log(t[i]));
        ly.push_back(std::log(y[i]));
    }
    if (lx.size() < 8) throw Error(ErrorKind::analysis, "rate_fit needs at least 8 points in the window");
    RateFit f;
    f.points = lx.size();
    std::tie(f.slope, f.intercept) = ols(lx, ly);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, lx.size() - 1);
    std::vector<double> slopes;
    std::vector<double> bx(lx.size()), by(lx.size());
    for (int r = 0; r < resamples; ++r) {
        for (std::size_t i = 0; i < lx.size(); ++i) {
            const std::size_t k = pick(rng);
            bx[i] = lx[k];
            by[i] = ly[k];
        }
        slopes.push_back(ols(bx, by).first);
    }
    std::sort(slopes.begin(), slopes.end());
    if (slopes.empty()) {
        f.band_lo = f.band_hi = f.slope;
    } else {
        f.band_lo = slopes[static_cast<std::size_t>(0.025 * (slopes.size() - 1))];
        f.band_hi = slopes[static_cast<std::size_t>(0.975 * (slopes.size() - 1))];
    }
    return f;
}

const char* shock_status_name(ShockStatus s) {
    switch (s) {
    case ShockStatus::clean: return "clean";
    case ShockStatus::steepening: return "steepening";
    case ShockStatus::resolution_loss: return "resolution_loss";
    }
    return "?";
}

void ShockDetector::observe(double t, double g, double tail) {
    if (hist_.empty()) first_ = g;
    hist_.push_back(g);
    peak_ = std::max(peak_, g);
    if (!resolution_ && tail > tail_threshold) resolution_ = t;
    const std::size_t n = hist_.size();
    if (!steepening_ && n >= 3 && first_ > 0.0 && g > steepening_factor * first_) {
        const double second = hist_[n - 1] - 2.0 * hist_[n - 2] + hist_[n - 3];
        if (second > 0.0) steepening_ = t;
    }
}

ShockStatus ShockDetector::status() const {
    if (steepening_) return ShockStatus::steepening;
    if (resolution_) return ShockStatus::resolution_loss;
    return ShockStatus::clean;
}

double spectral_tail_ratio(const GridSpec& g, const cvec& spec) {
    const long band = static_cast<long>(g.num_points / 3);
    const long top = 2 * band / 3;
    double all = 0.0, tail = 0.0;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        const long k = std::labs(g.mode(i));
        if (k > band) continue;
        const double e = std::norm(spec[i]);
        all += e;
        if (k > top) tail += e;
    }
    return all > 0.0 ? tail / all : 0.0;
}

double spectral_tail_ratio(const GridSpec& g, const Vec2& U) {
    const long band = static_cast<long>(g.num_points / 3);
    const long top = 2 * band / 3;
    double all = 0.0, tail = 0.0;
    for (const cvec* c : {&U.a, &U.b})
        for (std::size_t i = 0; i < c->size(); ++i) {
            const long k = std::labs(g.mode(i));
            if (k > band) continue;
            const double e = std::norm((*c)[i]);
            all += e;
            if (k > top) tail += e;
        }
    return all > 0.0 ? tail / all : 0.0;
}

}  // namespace pw
