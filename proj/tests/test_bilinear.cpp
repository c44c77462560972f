#include <random>

#include "doctest.h"
#include "plasmawave/bilinear.hpp"
#include "plasmawave/checks.hpp"

using namespace pw;

namespace {
// definition evaluated term by term
cvec naive(const GridSpec& g, const cvec& f, const ScalarSymbol& M, const cvec& V) {
    const long h = static_cast<long>(g.size() / 2);
    cvec out(g.size());
    for (long k = -h + 1; k < h; ++k)
        for (long j = -h + 1; j < h; ++j) {
            const long m = k - j;
            if (m <= -h || m >= h) continue;
            out[g.index(k)] += f[g.index(j)] * M(g.dxi() * j, g.dxi() * m) * V[g.index(m)];
        }
    for (auto& z : out) z /= g.box_length;
    return out;
}

double max_diff(const cvec& a, const cvec& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}
double max_abs(const cvec& a) {
    double d = 0.0;
    for (const auto& z : a) d = std::max(d, std::abs(z));
    return d;
}
}  // namespace

TEST_CASE("bilinear operator matches the direct sum") {
    const GridSpec g(64, 8.0 * M_PI);
    std::mt19937_64 rng(1);
    const cvec f = random_complex_spectrum(g, 31, rng), V = random_complex_spectrum(g, 31, rng);
    const ScalarSymbol M = [](double a, double b) { return shatah_b(PM, a, b) + cplx(std::cos(a), b); };
    const cvec ref = naive(g, f, M, V);
    for (bool pre : {true, false}) {
        const BilinearPlan plan(g, M, pre);
        CHECK(max_diff(apply_bilinear(f, plan, V), ref) <= 1e-12 * max_abs(ref));
    }
}

TEST_CASE("unit symbol is the dealiased product") {
    const GridSpec g(128, 12.0);
    std::mt19937_64 rng(2);
    const cvec f = random_real_spectrum(g, 16, rng), V = random_real_spectrum(g, 16, rng);
    const BilinearPlan one(g, ScalarSymbol([](double, double) { return cplx(1.0); }));
    const rvec fx = inverse_real(g, f), vx = inverse_real(g, V);
    rvec p(g.size());
    for (std::size_t j = 0; j < p.size(); ++j) p[j] = fx[j] * vx[j];
    const cvec ref = forward(g, p);
    const cvec out = apply_bilinear(f, one, V);
    CHECK(max_diff(out, ref) <= 1e-12 * max_abs(ref));
    CHECK(max_abs(apply_bilinear(cvec(g.size()), one, V)) == 0.0);
}

TEST_CASE("adjoint plan is an involution") {
    const GridSpec g(32, 4.0 * M_PI);
    const BilinearPlan p(g, MatrixSymbol([](double a, double b) { return b_matrix(Label::B2, 6, a, b); }));
    const BilinearPlan back = adjoint_plan(adjoint_plan(p));
    double d = 0.0;
    for (long m1 = -15; m1 < 16; ++m1)
        for (long m2 = -15; m2 < 16; ++m2) d = std::max(d, (back.matrix(m1, m2) - p.matrix(m1, m2)).max_abs());
    CHECK(d <= 1e-13);
}

TEST_CASE("nested bilinear passes equal the composed trilinear symbol") {
    const GridSpec g(128, 16.0 * M_PI);
    std::mt19937_64 rng(4);
    const cvec h = random_complex_spectrum(g, 20, rng);
    const BilinearPlan q(g, ScalarSymbol([](double a, double b) { return cplx(shatah_q(PP, a, b)); }));
    const BilinearPlan b(g, ScalarSymbol([](double a, double c) { return shatah_b(PP, a, c); }));
    const cvec nested = apply_bilinear(apply_bilinear(h, q, h), b, h);
    const cvec flat = apply_trilinear(
        g, h, h, [](double x1, double x2, double x3) { return shatah_q(PP, x1, x2) * shatah_b(PP, x1 + x2, x3); }, h);
    CHECK(max_diff(nested, flat) <= 1e-10 * max_abs(flat));
}

TEST_CASE("property suites on a small budget") {
    PropertySetup s;
    s.seeds = 3;
    for (const auto& r : {check_bony(s), check_adjoint(s), check_identities(s), check_orthogonality(s)}) {
        INFO(r.name << " " << r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("energy orthogonality vanishes for zero U") {
    const GridSpec g(64, 8.0 * M_PI);
    std::mt19937_64 rng(9);
    const cvec f = random_real_spectrum(g, 20, rng);
    const Vec2 U{cvec(64), cvec(64)};
    CHECK(energy_orthogonality_check(g, f, U, 6, EnergyPair::r_Q1_B1) == 0.0);
}
