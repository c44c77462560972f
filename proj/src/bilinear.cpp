#include "plasmawave/bilinear.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>

namespace pw {

namespace {

inline long half(const GridSpec& g) { return static_cast<long>(g.num_points / 2); }
inline double xi_of(const GridSpec& g, long m) { return g.dxi() * static_cast<double>(m); }

cplx entry(const SymbolMatrix2& m, int e) {
    switch (e) {
    case 0: return m.m11;
    case 1: return m.m12;
    case 2: return m.m21;
    default: return m.m22;
    }
}

// spectrum in FFT order -> centered array indexed by m + n/2
cvec centered(const GridSpec& g, const cvec& s) {
    check_length(g, s.size(), "spectrum");
    const long h = half(g);
    cvec c(g.num_points);
    for (long m = -h + 1; m < h; ++m) c[m + h] = s[g.index(m)];
    return c;
}

cvec uncentered(const GridSpec& g, const cvec& c, double scale) {
    const long h = half(g);
    cvec s(g.num_points);
    for (long m = -h + 1; m < h; ++m) s[g.index(m)] = scale * c[m + h];
    return s;
}

// out[m1+m2] += f * row[m2] * v[m2] over the admissible m2 range
inline void accumulate_row(cplx* out, cplx f, const cplx* row, const cplx* v, long lo, long hi, long shift) {
    const double fr = f.real(), fi = f.imag();
    for (long j = lo; j <= hi; ++j) {
        const double mr = row[j].real(), mi = row[j].imag();
        const double vr = v[j].real(), vi = v[j].imag();
        const double pr = mr * vr - mi * vi, pi = mr * vi + mi * vr;
        double* o = reinterpret_cast<double*>(out + j + shift);
        o[0] += fr * pr - fi * pi;
        o[1] += fr * pi + fi * pr;
    }
}

}  // namespace

BilinearPlan::BilinearPlan(const GridSpec& g, ScalarSymbol s, bool precompute) : g_(g), ssym_(std::move(s)) {
    pre_ = precompute && g.num_points * g.num_points * sizeof(cplx) <= default_cap_bytes;
    if (pre_) build();
}

BilinearPlan::BilinearPlan(const GridSpec& g, MatrixSymbol m, bool precompute) : g_(g), msym_(std::move(m)) {
    pre_ = precompute && 4 * g.num_points * g.num_points * sizeof(cplx) <= default_cap_bytes;
    if (pre_) build();
}

void BilinearPlan::build() {
    const std::size_t n = g_.num_points;
    const long h = half(g_);
    const int ne = is_matrix() ? 4 : 1;
    for (int e = 0; e < ne; ++e) lat_[e].assign(n * n, cplx(0.0));
    for (long m1 = -h + 1; m1 < h; ++m1) {
        const double x1 = xi_of(g_, m1);
        for (long m2 = -h + 1; m2 < h; ++m2) {
            const double x2 = xi_of(g_, m2);
            const std::size_t at = static_cast<std::size_t>(m1 + h) * n + static_cast<std::size_t>(m2 + h);
            if (is_matrix()) {
                const SymbolMatrix2 v = msym_(x1, x2);
                for (int e = 0; e < 4; ++e) lat_[e][at] = entry(v, e);
            } else {
                lat_[0][at] = ssym_(x1, x2);
            }
        }
    }
    for (int e = 0; e < ne; ++e) {
        for (const cplx& v : lat_[e])
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw numeric_error("non-finite symbol value in bilinear lattice");
        zero_[e] = std::all_of(lat_[e].begin(), lat_[e].end(), [](const cplx& v) { return v == cplx(0.0); });
        if (zero_[e]) cvec().swap(lat_[e]);
    }
}

cplx BilinearPlan::scalar(long m1, long m2) const {
    if (pre_) {
        const long h = half(g_);
        return lat_[0][static_cast<std::size_t>(m1 + h) * g_.num_points + static_cast<std::size_t>(m2 + h)];
    }
    return ssym_(xi_of(g_, m1), xi_of(g_, m2));
}

SymbolMatrix2 BilinearPlan::matrix(long m1, long m2) const {
    if (!pre_) return msym_(xi_of(g_, m1), xi_of(g_, m2));
    const long h = half(g_);
    const std::size_t at = static_cast<std::size_t>(m1 + h) * g_.num_points + static_cast<std::size_t>(m2 + h);
    SymbolMatrix2 v;
    if (!zero_[0]) v.m11 = lat_[0][at];
    if (!zero_[1]) v.m12 = lat_[1][at];
    if (!zero_[2]) v.m21 = lat_[2][at];
    if (!zero_[3]) v.m22 = lat_[3][at];
    return v;
}

const cplx* BilinearPlan::row(int e, long m1) const {
    if (!pre_ || zero_[e]) return nullptr;
    return lat_[e].data() + static_cast<std::size_t>(m1 + half(g_)) * g_.num_points;
}

std::size_t BilinearPlan::lattice_bytes() const {
    std::size_t b = 0;
    for (const auto& l : lat_) b += l.size() * sizeof(cplx);
    return b;
}

namespace {

// Evaluates the row of entry e for mode m1 into buf when the plan is not precomputed.
const cplx* fetch_row(const BilinearPlan& plan, int e, long m1, cvec& buf) {
    if (plan.precomputed()) return plan.row(e, m1);
    const GridSpec& g = plan.grid();
    const long h = half(g);
    buf.assign(g.num_points, cplx(0.0));
    for (long m2 = -h + 1; m2 < h; ++m2)
        buf[m2 + h] = plan.is_matrix() ? entry(plan.matrix(m1, m2), e) : plan.scalar(m1, m2);
    return buf.data();
}

void bilinear_core(const GridSpec& g, const cvec& fc, const BilinearPlan& plan,
                   const std::array<const cvec*, 2>& vin, std::array<cvec*, 2>& vout, int comps) {
    const long h = half(g);
    std::array<cvec, 4> bufs;
    for (long m1 = -h + 1; m1 < h; ++m1) {
        const cplx f = fc[m1 + h];
        if (f == cplx(0.0)) continue;
        const long lo = std::max(-h + 1, -h + 1 - m1) + h;
        const long hi = std::min(h - 1, h - 1 - m1) + h;
        if (comps == 1) {
            const cplx* r = fetch_row(plan, 0, m1, bufs[0]);
            if (r) accumulate_row(vout[0]->data(), f, r, vin[0]->data(), lo, hi, m1);
            continue;
        }
        for (int e = 0; e < 4; ++e) {
            if (plan.precomputed() && plan.entry_zero(e)) continue;
            const cplx* r = fetch_row(plan, e, m1, bufs[e]);
            if (!r) continue;
            const int out_c = e / 2, in_c = e % 2;
            accumulate_row(vout[out_c]->data(), f, r, vin[in_c]->data(), lo, hi, m1);
        }
    }
}

}  // namespace

cvec apply_bilinear(const cvec& f, const BilinearPlan& plan, const cvec& V) {
    const GridSpec& g = plan.grid();
    if (plan.is_matrix()) throw config_error("matrix plan applied to a scalar field");
    const cvec fc = centered(g, f), vc = centered(g, V);
    cvec oc(g.num_points);
    std::array<const cvec*, 2> in{&vc, nullptr};
    std::array<cvec*, 2> out{&oc, nullptr};
    bilinear_core(g, fc, plan, in, out, 1);
    return uncentered(g, oc, 1.0 / g.box_length);
}

Vec2 apply_bilinear(const cvec& f, const BilinearPlan& plan, const Vec2& V) {
    const GridSpec& g = plan.grid();
    if (!plan.is_matrix()) {
        return {apply_bilinear(f, plan, V.a), apply_bilinear(f, plan, V.b)};
    }
    const cvec fc = centered(g, f), v1 = centered(g, V.a), v2 = centered(g, V.b);
    cvec o1(g.num_points), o2(g.num_points);
    std::array<const cvec*, 2> in{&v1, &v2};
    std::array<cvec*, 2> out{&o1, &o2};
    bilinear_core(g, fc, plan, in, out, 2);
    return {uncentered(g, o1, 1.0 / g.box_length), uncentered(g, o2, 1.0 / g.box_length)};
}

BilinearPlan adjoint_plan(const BilinearPlan& plan) {
    if (plan.is_matrix()) {
        MatrixSymbol m = plan.matrix_symbol();
        return BilinearPlan(plan.grid(), MatrixSymbol([m](double x1, double x2) {
                                return m(-x1, x1 + x2).conj_transpose();
                            }),
                            plan.precomputed());
    }
    ScalarSymbol s = plan.scalar_symbol();
    return BilinearPlan(plan.grid(), ScalarSymbol([s](double x1, double x2) { return std::conj(s(-x1, x1 + x2)); }),
                        plan.precomputed());
}

cvec apply_trilinear(const GridSpec& g, const cvec& f1, const cvec& f2, const TrilinearSymbol& M, const cvec& V) {
    if (g.num_points > 512)
        throw Error(ErrorKind::cost_guard, "apply_trilinear is limited to num_points <= 512");
    const long h = half(g);
    const cvec a = centered(g, f1), b = centered(g, f2), c = centered(g, V);
    cvec out(g.num_points);
    for (long m1 = -h + 1; m1 < h; ++m1) {
        if (a[m1 + h] == cplx(0.0)) continue;
        for (long m2 = -h + 1; m2 < h; ++m2) {
            const cplx ab = a[m1 + h] * b[m2 + h];
            if (ab == cplx(0.0)) continue;
            for (long m3 = -h + 1; m3 < h; ++m3) {
                const long k = m1 + m2 + m3;
                if (k <= -h || k >= h || c[m3 + h] == cplx(0.0)) continue;
                out[k + h] += ab * M(xi_of(g, m1), xi_of(g, m2), xi_of(g, m3)) * c[m3 + h];
            }
        }
    }
    return uncentered(g, out, 1.0 / (g.box_length * g.box_length));
}

namespace {
std::string cutoff_key(const CutoffParams& p) {
    return std::to_string(p.eps1) + "," + std::to_string(p.eps2);
}
}  // namespace

cvec paraproduct(const GridSpec& g, const cvec& f, const cvec& gs, const CutoffParams& p) {
    auto plan = cached_plan(g, "theta/" + cutoff_key(p), [&] {
        return BilinearPlan(g, ScalarSymbol([p](double a, double b) { return cplx(theta(a, b, p)); }));
    });
    return apply_bilinear(f, *plan, gs);
}

cvec bony_remainder(const GridSpec& g, const cvec& f, const cvec& gs, const CutoffParams& p) {
    auto plan = cached_plan(g, "bony_rest/" + cutoff_key(p), [&] {
        return BilinearPlan(g, ScalarSymbol([p](double a, double b) { return cplx(remainder_weight(a, b, p)); }));
    });
    return apply_bilinear(f, *plan, gs);
}

namespace {
struct CacheEntry {
    std::shared_future<std::shared_ptr<const BilinearPlan>> plan;
};
std::mutex cache_mutex;
std::map<std::string, CacheEntry>& cache() {
    static std::map<std::string, CacheEntry> c;
    return c;
}
}  // namespace

std::shared_ptr<const BilinearPlan> cached_plan(const GridSpec& g, const std::string& key,
                                                const std::function<BilinearPlan()>& build) {
    const std::string full = std::to_string(g.num_points) + "/" + std::to_string(g.box_length) + "/" + key;
    std::promise<std::shared_ptr<const BilinearPlan>> promise;
    std::shared_future<std::shared_ptr<const BilinearPlan>> existing;
    bool found = false;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache().find(full);
        if (it != cache().end()) {
            existing = it->second.plan;
            found = true;
        } else {
            cache()[full] = CacheEntry{promise.get_future().share()};
        }
    }
    if (found) return existing.get();
    try {
        auto p = std::make_shared<const BilinearPlan>(build());
        promise.set_value(p);
        return p;
    } catch (...) {
        promise.set_exception(std::current_exception());
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache().erase(full);
        throw;
    }
}

void clear_plan_cache() {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache().clear();
}

Vec2 operator+(const Vec2& x, const Vec2& y) {
    Vec2 r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    for (std::size_t i = 0; i < r.b.size(); ++i) r.b[i] += y.b[i];
    return r;
}

Vec2 operator-(const Vec2& x, const Vec2& y) {
    Vec2 r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    for (std::size_t i = 0; i < r.b.size(); ++i) r.b[i] -= y.b[i];
    return r;
}

Vec2 scale(const Vec2& x, cplx s) {
    Vec2 r = x;
    for (auto& v : r.a) v *= s;
    for (auto& v : r.b) v *= s;
    return r;
}

Vec2 apply_D(const GridSpec& g, const Vec2& U) {
    Vec2 r{multiply(g, U.b, [](double xi) { return cplx(-jb(xi)); }), multiply(g, U.a, sym_jb)};
    return r;
}

double l2_norm(const GridSpec& g, const Vec2& U) { return sobolev_norm2(g, U.a, U.b, 0.0); }
double sobolev_norm(const GridSpec& g, const Vec2& U, double s) { return sobolev_norm2(g, U.a, U.b, s); }

double max_abs(const Vec2& U) {
    double m = 0.0;
    for (const auto& v : U.a) m = std::max(m, std::abs(v));
    for (const auto& v : U.b) m = std::max(m, std::abs(v));
    return m;
}

double energy_orthogonality_check(const GridSpec& g, const cvec& f, const Vec2& U, int N, EnergyPair which,
                                  bool zero_b, const CutoffParams& p) {
    const Label q = which == EnergyPair::r_Q1_B1 ? Label::Q1 : Label::Q2;
    const Label b = which == EnergyPair::r_Q1_B1 ? Label::B1 : Label::B2;
    const std::string key = std::string("energy/") + label_name(q) + "/" + std::to_string(N) + "/" +
                            (zero_b ? "noB/" : "B/") + cutoff_key(p);
    auto plan = cached_plan(g, key, [&] {
        return BilinearPlan(g, MatrixSymbol([=](double x1, double x2) {
                                SymbolMatrix2 m = q_matrix(q, x1, x2, p);
                                return zero_b ? m : m - b_matrix(b, N, x1, x2, p);
                            }));
    });
    const Vec2 W = apply_bilinear(f, *plan, U);
    // <xi>^{2N} rescaled by <xi_max>^{2N}; the ratio below is scale free
    const double lmax = std::log(jb(g.xi_max()));
    auto weight = [&](double xi) { return std::exp(2.0 * N * (std::log(jb(xi)) - lmax)); };
    double pair = 0.0, unorm = 0.0;
    for (std::size_t i = 0; i < g.num_points; ++i) {
        const double w = weight(g.xi(i));
        pair += w * (W.a[i] * std::conj(U.a[i]) + W.b[i] * std::conj(U.b[i])).real();
        unorm += w * (std::norm(U.a[i]) + std::norm(U.b[i]));
    }
    pair /= g.box_length;
    unorm /= g.box_length;
    const double fn = wk_inf_norm(g, f, 1);
    if (fn == 0.0 || unorm == 0.0) return 0.0;
    return std::abs(pair) / (fn * unorm);
}

}  // namespace pw
