#include "plasmawave/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace pw {

GridSpec::GridSpec(std::size_t n, double L) : num_points(n), box_length(L) {
    if (n < 4 || (n & (n - 1)) != 0)
        throw config_error("num_points must be a power of two >= 4, got " + std::to_string(n));
    if (!(L > 0.0) || !std::isfinite(L))
        throw config_error("box_length must be positive");
}

void check_length(const GridSpec& g, std::size_t len, const char* what) {
    if (len != g.num_points)
        throw config_error(std::string(what) + " length " + std::to_string(len) +
                           " does not match grid size " + std::to_string(g.num_points));
}

namespace {

struct Plans {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

std::mutex plan_mutex;

const Plans& plans_for(std::size_t n) {
    static std::map<std::size_t, Plans> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto* a = fftw_alloc_complex(n);
    auto* b = fftw_alloc_complex(n);
    Plans p;
    int ni = static_cast<int>(n);
    p.fwd = fftw_plan_dft_1d(ni, a, b, FFTW_FORWARD, FFTW_ESTIMATE);
    p.bwd = fftw_plan_dft_1d(ni, a, b, FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_free(a);
    fftw_free(b);
    return cache.emplace(n, p).first->second;
}

struct Buffer {
    explicit Buffer(std::size_t n) : p(fftw_alloc_complex(n)) {}
    ~Buffer() { fftw_free(p); }
    Buffer(const Buffer&) = delete;
    Buffer& operator=(const Buffer&) = delete;
    fftw_complex* p;
    cplx* c() { return reinterpret_cast<cplx*>(p); }
};

// x_0 = -L/2 gives the factor exp(i pi k) = (-1)^k on mode k
inline double parity(long k) { return (k & 1) ? -1.0 : 1.0; }

cvec forward_impl(const GridSpec& g, const cplx* f) {
    const std::size_t n = g.num_points;
    const Plans& pl = plans_for(n);
    Buffer in(n), out(n);
    std::copy(f, f + n, in.c());
    fftw_execute_dft(pl.fwd, in.p, out.p);
    cvec s(n);
    const double dx = g.dx();
    for (std::size_t i = 0; i < n; ++i) s[i] = dx * parity(g.mode(i)) * out.c()[i];
    s[g.nyquist()] = 0.0;
    return s;
}

}  // namespace

cvec forward(const GridSpec& g, const cvec& f) {
    check_length(g, f.size(), "field");
    return forward_impl(g, f.data());
}

cvec forward(const GridSpec& g, const rvec& f) {
    check_length(g, f.size(), "field");
    cvec c(f.begin(), f.end());
    return forward_impl(g, c.data());
}

cvec inverse(const GridSpec& g, const cvec& spec) {
    check_length(g, spec.size(), "spectrum");
    const std::size_t n = g.num_points;
    const Plans& pl = plans_for(n);
    Buffer in(n), out(n);
    for (std::size_t i = 0; i < n; ++i) in.c()[i] = parity(g.mode(i)) * spec[i];
    in.c()[g.nyquist()] = 0.0;
    fftw_execute_dft(pl.bwd, in.p, out.p);
    cvec f(n);
    const double s = 1.0 / g.box_length;
    for (std::size_t j = 0; j < n; ++j) f[j] = s * out.c()[j];
    return f;
}

rvec inverse_real(const GridSpec& g, const cvec& spec) {
    cvec c = inverse(g, spec);
    rvec r(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) r[j] = c[j].real();
    return r;
}

cvec conj_spectrum(const GridSpec& g, const cvec& spec) {
    check_length(g, spec.size(), "spectrum");
    cvec out(spec.size());
    for (std::size_t i = 0; i < spec.size(); ++i) {
        if (i == g.nyquist()) continue;
        out[i] = std::conj(spec[g.index(-g.mode(i))]);
    }
    return out;
}

cvec antiderivative(const GridSpec& g, const cvec& spec, cplx gauge) {
    check_length(g, spec.size(), "spectrum");
    cvec out(spec.size());
    for (std::size_t i = 1; i < spec.size(); ++i) {
        if (i == g.nyquist()) continue;
        out[i] = spec[i] / cplx(0.0, g.xi(i));
    }
    out[0] = gauge;
    return out;
}

cvec antiderivative_edge(const GridSpec& g, const cvec& spec) {
    cvec out = antiderivative(g, spec, 0.0);
    const double x0 = g.x(0);
    cplx at_edge = 0.0;
    for (std::size_t i = 1; i < out.size(); ++i) at_edge += out[i] * std::polar(1.0, x0 * g.xi(i));
    out[0] = -at_edge;
    return out;
}

double bump(double r) {
    r = std::abs(r);
    if (r <= 1.25) return 1.0;
    if (r >= 1.6) return 0.0;
    double u = (1.6 - r) / (1.6 - 1.25);
    return u * u * u * (10.0 - 15.0 * u + 6.0 * u * u);
}

double lp_piece(int k, double xi) {
    double a = std::ldexp(1.0, k);
    return bump(xi / a) - bump(xi / (0.5 * a));
}

namespace {
template <class F>
cvec project_spec(const GridSpec& g, const cvec& f, F w) {
    return multiply(g, f, [&](double xi) { return cplx(w(xi)); });
}
}  // namespace

rvec lp_project(const GridSpec& g, const rvec& f, int k) {
    return inverse_real(g, project_spec(g, forward(g, f), [k](double xi) { return lp_piece(k, xi); }));
}
rvec lp_project_le(const GridSpec& g, const rvec& f, double a) {
    return inverse_real(g, project_spec(g, forward(g, f), [a](double xi) { return bump(xi / a); }));
}
cvec lp_project(const GridSpec& g, const cvec& f, int k) {
    return inverse(g, project_spec(g, forward(g, f), [k](double xi) { return lp_piece(k, xi); }));
}
cvec lp_project_le(const GridSpec& g, const cvec& f, double a) {
    return inverse(g, project_spec(g, forward(g, f), [a](double xi) { return bump(xi / a); }));
}

void dealias_inplace(const GridSpec& g, cvec& spec) {
    check_length(g, spec.size(), "spectrum");
    const long cut = static_cast<long>(g.num_points / 3);
    for (std::size_t i = 0; i < spec.size(); ++i)
        if (std::labs(g.mode(i)) > cut) spec[i] = 0.0;
}

cvec dealias(const GridSpec& g, const cvec& spec) {
    cvec out = spec;
    dealias_inplace(g, out);
    return out;
}

double l2_norm(const GridSpec& g, const cvec& spec) { return sobolev_norm(g, spec, 0.0); }

double sobolev_norm(const GridSpec& g, const cvec& spec, double s) {
    check_length(g, spec.size(), "spectrum");
    double acc = 0.0;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        double w = s == 0.0 ? 1.0 : std::pow(1.0 + g.xi(i) * g.xi(i), s);
        acc += w * std::norm(spec[i]);
    }
    return std::sqrt(acc / g.box_length);
}

double sobolev_norm2(const GridSpec& g, const cvec& a, const cvec& b, double s) {
    double na = sobolev_norm(g, a, s), nb = sobolev_norm(g, b, s);
    return std::sqrt(na * na + nb * nb);
}

double sup_norm(const rvec& f) {
    double m = 0.0;
    for (double v : f) m = std::max(m, std::abs(v));
    return m;
}

double sup_norm(const cvec& f) {
    double m = 0.0;
    for (const cplx& v : f) m = std::max(m, std::abs(v));
    return m;
}

double wk_inf_norm(const GridSpec& g, const cvec& spec, int k) {
    double m = 0.0;
    cvec d = spec;
    for (int j = 0; j <= k; ++j) {
        if (j > 0) d = multiply(g, d, sym_dx);
        m = std::max(m, sup_norm(inverse(g, d)));
    }
    return m;
}

namespace {
template <class V>
bool support_clean_impl(const GridSpec& g, const V& f, double tol) {
    double peak = 0.0;
    for (const auto& v : f) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) return true;
    const std::size_t edge = std::max<std::size_t>(1, g.num_points / 20);
    for (std::size_t j = 0; j < edge; ++j) {
        if (std::abs(f[j]) >= tol * peak) return false;
        if (std::abs(f[g.num_points - 1 - j]) >= tol * peak) return false;
    }
    return true;
}
}  // namespace

bool support_clean(const GridSpec& g, const cvec& f, double tol) { return support_clean_impl(g, f, tol); }
bool support_clean(const GridSpec& g, const rvec& f, double tol) { return support_clean_impl(g, f, tol); }

WeightedNorm xweighted_sobolev(const GridSpec& g, const cvec& f, double s) {
    check_length(g, f.size(), "field");
    cvec xf(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) xf[j] = g.x(j) * f[j];
    return {sobolev_norm(g, forward(g, xf), s), support_clean(g, f)};
}

WeightedNorm xweighted_sobolev(const GridSpec& g, const rvec& f, double s) {
    return xweighted_sobolev(g, cvec(f.begin(), f.end()), s);
}

cvec resample_spectrum(const GridSpec& from, const cvec& spec, const GridSpec& to) {
    check_length(from, spec.size(), "spectrum");
    if (from.box_length != to.box_length)
        throw config_error("resample_spectrum needs equal box lengths");
    cvec out(to.num_points);
    for (std::size_t i = 0; i < to.num_points; ++i) {
        long k = to.mode(i);
        if (!to.resolved(k) || !from.resolved(k)) continue;
        out[i] = spec[from.index(k)];
    }
    return out;
}

cplx inner(const GridSpec& g, const cvec& a, const cvec& b) {
    check_length(g, a.size(), "spectrum");
    check_length(g, b.size(), "spectrum");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * std::conj(b[i]);
    return acc / g.box_length;
}

}  // namespace pw
