#include "plasmawave/normal_form.hpp"

#include <string>

namespace pw {

NormalFormContext::NormalFormContext(const GridSpec& g, int N, const CutoffParams& p) : g_(g), N_(N), p_(p) {
    if (N < 1) throw config_error("Sobolev index N must be >= 1");
    p.validate();
}

namespace {
std::string cut_key(const CutoffParams& p) { return std::to_string(p.eps1) + "," + std::to_string(p.eps2); }
std::string sign_key(Signs2 s) { return std::string(s.i1 > 0 ? "+" : "-") + (s.i2 > 0 ? "+" : "-"); }

cvec add(cvec a, const cvec& b, double s = 1.0) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
    return a;
}
}  // namespace

std::shared_ptr<const BilinearPlan> NormalFormContext::matrix_plan(Label l) const {
    const std::string key = std::string("nf/") + label_name(l) + "/" + std::to_string(N_) + "/" + cut_key(p_);
    const int N = N_;
    const CutoffParams p = p_;
    return cached_plan(g_, key, [&] {
        return BilinearPlan(g_, MatrixSymbol([=](double a, double b) { return symbol_matrix(l, N, a, b, p); }));
    });
}

std::shared_ptr<const BilinearPlan> NormalFormContext::q_plan(Signs2 s) const {
    return cached_plan(g_, "shatah_q/" + sign_key(s), [&] {
        return BilinearPlan(g_, ScalarSymbol([s](double a, double b) { return cplx(shatah_q(s, a, b)); }));
    });
}

std::shared_ptr<const BilinearPlan> NormalFormContext::b_plan(Signs2 s) const {
    return cached_plan(g_, "shatah_b/" + sign_key(s), [&] {
        return BilinearPlan(g_, ScalarSymbol([s](double a, double b) { return shatah_b(s, a, b); }));
    });
}

Vec2 phi_transform(const NormalFormContext& ctx, const Vec2& U) {
    Vec2 out = U;
    out = out + apply_bilinear(U.b, *ctx.matrix_plan(Label::A1), U);
    out = out + apply_bilinear(U.a, *ctx.matrix_plan(Label::A2), U);
    out = out + apply_bilinear(U.b, *ctx.matrix_plan(Label::C1), U);
    out = out + apply_bilinear(U.a, *ctx.matrix_plan(Label::C2), U);
    return out;
}

cvec quadratic_Q(const NormalFormContext& ctx, const cvec& h) {
    const cvec hb = conj_spectrum(ctx.grid(), h);
    cvec q = apply_bilinear(h, *ctx.q_plan(PP), h);
    q = add(q, apply_bilinear(h, *ctx.q_plan(PM), hb));
    q = add(q, apply_bilinear(hb, *ctx.q_plan(MM), hb));
    return q;
}

cvec shatah_g(const NormalFormContext& ctx, const cvec& h, bool zero_b) {
    if (zero_b) return h;
    const cvec hb = conj_spectrum(ctx.grid(), h);
    cvec g = add(h, apply_bilinear(h, *ctx.b_plan(PP), h));
    g = add(g, apply_bilinear(h, *ctx.b_plan(PM), hb));
    g = add(g, apply_bilinear(hb, *ctx.b_plan(MM), hb));
    return g;
}

cvec cubic_N(const NormalFormContext& ctx, const cvec& h) {
    const GridSpec& g = ctx.grid();
    const cvec hb = conj_spectrum(g, h);
    const cvec Q = quadratic_Q(ctx, h);
    const cvec Qb = conj_spectrum(g, Q);
    const auto bpp = ctx.b_plan(PP), bpm = ctx.b_plan(PM), bmm = ctx.b_plan(MM);
    cvec n = apply_bilinear(Q, *bpp, h);
    n = add(n, apply_bilinear(h, *bpp, Q));
    n = add(n, apply_bilinear(Q, *bpm, hb));
    n = add(n, apply_bilinear(h, *bpm, Qb));
    n = add(n, apply_bilinear(Qb, *bmm, hb));
    n = add(n, apply_bilinear(hb, *bmm, Qb));
    return n;
}

cvec quartic_remainder(const NormalFormContext& ctx, const cvec& h) {
    return add(cubic_N(ctx, h), cubic_N(ctx, shatah_g(ctx, h)), -1.0);
}

double residual_g(const NormalFormContext& ctx, const cvec& hm, const cvec& h0, const cvec& hp, double dt,
                  bool zero_b) {
    const GridSpec& g = ctx.grid();
    const cvec gm = shatah_g(ctx, hm, zero_b), g0 = shatah_g(ctx, h0, zero_b), gp = shatah_g(ctx, hp, zero_b);
    const cvec lin = multiply(g, g0, [](double xi) { return cplx(0.0, jb(xi)); });
    cvec res(g.num_points);
    for (std::size_t i = 0; i < res.size(); ++i) res[i] = (gp[i] - gm[i]) / (2.0 * dt) + lin[i];
    if (!zero_b) res = add(res, cubic_N(ctx, h0), -1.0);
    dealias_inplace(g, res);
    return l2_norm(g, res);
}

namespace {

double vnorm(const GridSpec& g, const Vec2& v) { return l2_norm(g, v); }

Label first(IdentityKind k) { return k == IdentityKind::A_B ? Label::A1 : Label::C1; }
Label second(IdentityKind k) { return k == IdentityKind::A_B ? Label::A2 : Label::C2; }

Vec2 rhs_term(const NormalFormContext& ctx, const cvec& f, const Vec2& U, IdentityKind k, bool r_line) {
    if (k == IdentityKind::A_B)
        return apply_bilinear(f, *ctx.matrix_plan(r_line ? Label::B1 : Label::B2), U);
    return apply_bilinear(f, *ctx.matrix_plan(r_line ? Label::S1 : Label::S2), U);
}

IdentityResidual combine(const GridSpec& g, const std::initializer_list<std::pair<double, Vec2>>& terms) {
    IdentityResidual r;
    Vec2 acc;
    bool first_term = true;
    for (const auto& [s, v] : terms) {
        r.scale = std::max(r.scale, vnorm(g, v));
        Vec2 sv = scale(v, s);
        acc = first_term ? sv : acc + sv;
        first_term = false;
    }
    r.residual = vnorm(g, acc);
    return r;
}

}  // namespace

IdentityResidual operator_identity_r(const NormalFormContext& ctx, const cvec& r, const Vec2& U, IdentityKind k) {
    const GridSpec& g = ctx.grid();
    const auto x1 = ctx.matrix_plan(first(k)), x2 = ctx.matrix_plan(second(k));
    const cvec jr = multiply(g, r, sym_jb);
    return combine(g, {{1.0, apply_D(g, apply_bilinear(r, *x2, U))},
                       {-1.0, apply_bilinear(jr, *x1, U)},
                       {-1.0, apply_bilinear(r, *x2, apply_D(g, U))},
                       {1.0, rhs_term(ctx, r, U, k, true)}});
}

IdentityResidual operator_identity_u(const NormalFormContext& ctx, const cvec& u, const Vec2& U, IdentityKind k) {
    const GridSpec& g = ctx.grid();
    const auto x1 = ctx.matrix_plan(first(k)), x2 = ctx.matrix_plan(second(k));
    const cvec ju = multiply(g, u, sym_jb);
    return combine(g, {{1.0, apply_D(g, apply_bilinear(u, *x1, U))},
                       {1.0, apply_bilinear(ju, *x2, U)},
                       {-1.0, apply_bilinear(u, *x1, apply_D(g, U))},
                       {1.0, rhs_term(ctx, u, U, k, false)}});
}

}  // namespace pw
