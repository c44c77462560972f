#include <random>

#include "doctest.h"
#include "plasmawave/spectral.hpp"

using namespace pw;

namespace {
rvec sample(const GridSpec& g, double (*f)(double)) {
    rvec v(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) v[j] = f(g.x(j));
    return v;
}
}  // namespace

TEST_CASE("forward transform of constant and cosine") {
    const GridSpec g(64, 2.0 * M_PI);
    const cvec one = forward(g, rvec(64, 1.0));
    CHECK(std::abs(one[0] - cplx(2.0 * M_PI)) < 1e-13);
    for (std::size_t i = 1; i < 64; ++i) CHECK(std::abs(one[i]) < 1e-13);

    const cvec c = forward(g, sample(g, [](double x) { return std::cos(x); }));
    CHECK(std::abs(c[g.index(1)] - cplx(M_PI)) < 1e-12);
    CHECK(std::abs(c[g.index(-1)] - cplx(M_PI)) < 1e-12);
    CHECK(std::abs(c[g.index(2)]) < 1e-12);
}

TEST_CASE("gaussian matches its continuous transform") {
    // exp(-x^2/4) -> 2 sqrt(pi) exp(-xi^2)
    const GridSpec g(256, 40.0);
    const cvec s = forward(g, sample(g, [](double x) { return std::exp(-0.25 * x * x); }));
    for (long k : {0L, 3L, -5L, 10L}) {
        const double xi = g.dxi() * k;
        CHECK(std::abs(s[g.index(k)] - cplx(2.0 * std::sqrt(M_PI) * std::exp(-xi * xi))) < 1e-12);
    }
}

TEST_CASE("round trip") {
    // the Nyquist mode is dropped by convention, so the field carries none
    const GridSpec g(128, 10.0);
    std::mt19937_64 rng(7);
    std::normal_distribution<double> nd;
    cvec s(128);
    for (std::size_t i = 0; i < s.size(); ++i)
        if (i != g.nyquist()) s[i] = {nd(rng), nd(rng)};
    const cvec f = inverse(g, s);
    const cvec back = inverse(g, forward(g, f));
    double err = 0.0, ref = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        err = std::max(err, std::abs(back[j] - f[j]));
        ref = std::max(ref, std::abs(f[j]));
    }
    CHECK(err / ref < 1e-13);
}

TEST_CASE("multipliers on single modes") {
    const GridSpec g(64, 2.0 * M_PI);
    const rvec s = sample(g, [](double x) { return std::sin(x); });
    const rvec c = sample(g, [](double x) { return std::cos(x); });
    const rvec a = apply_multiplier(g, s, sym_jb);
    const rvec b = apply_multiplier(g, c, sym_dx_over_jb);
    const rvec id = apply_multiplier(g, s, [](double) { return cplx(1.0); });
    for (std::size_t j = 0; j < 64; ++j) {
        CHECK(a[j] == doctest::Approx(std::sqrt(2.0) * s[j]).epsilon(1e-13));
        CHECK(std::abs(b[j] + s[j] / std::sqrt(2.0)) < 1e-13);
        CHECK(std::abs(id[j] - s[j]) < 1e-14);
    }
}

TEST_CASE("Littlewood-Paley pieces") {
    for (double xi : {std::ldexp(1.0, -19), 0.37, 1.0, 3.3, 1000.0, std::ldexp(1.0, 19)}) {
        double sum = 0.0;
        for (int k = -20; k <= 20; ++k) sum += lp_piece(k, xi);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
    // phi(1.5) - phi(3): u = 0.1/0.35
    const double u = 0.1 / 0.35;
    CHECK(lp_piece(0, 1.5) == doctest::Approx(u * u * u * (10 - 15 * u + 6 * u * u)).epsilon(1e-14));
    CHECK(bump(1.25) == 1.0);
    CHECK(bump(1.6) == 0.0);

    const GridSpec g(64, 2.0 * M_PI);
    const rvec f = sample(g, [](double x) { return std::cos(x) + std::sin(7 * x); });
    const rvec all = lp_project_le(g, f, 100.0);
    for (std::size_t j = 0; j < 64; ++j) CHECK(std::abs(all[j] - f[j]) < 1e-13);
}

TEST_CASE("Sobolev norms of sin") {
    const GridSpec g(64, 2.0 * M_PI);
    const cvec s = forward(g, sample(g, [](double x) { return std::sin(x); }));
    CHECK(l2_norm(g, s) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
    // int |f|^2 + |f'|^2 = 2 pi
    CHECK(sobolev_norm(g, s, 1.0) == doctest::Approx(std::sqrt(2.0 * M_PI)).epsilon(1e-13));
    const cvec z(64);
    CHECK(l2_norm(g, z) == 0.0);
    CHECK(sobolev_norm(g, z, 6.0) == 0.0);
    CHECK(wk_inf_norm(g, z, 3) == 0.0);
}

TEST_CASE("dealiasing") {
    const GridSpec g(128, 2.0 * M_PI);
    cvec s(128);
    s[g.index(42)] = 1.0;
    s[g.index(-42)] = 1.0;
    s[g.index(5)] = 2.0;
    const cvec d = dealias(g, s);
    CHECK(d == s);
    cvec hi(128);
    hi[g.index(63)] = 1.0;
    for (const auto& z : dealias(g, hi)) CHECK(z == cplx(0.0));

    // sin(8x)^2 = (1 - cos(16x)) / 2 with 16 <= 128/3
    const rvec f = sample(g, [](double x) { return std::sin(8 * x); });
    rvec f2(128);
    for (std::size_t j = 0; j < 128; ++j) f2[j] = f[j] * f[j];
    const cvec p = dealias(g, forward(g, f2));
    CHECK(std::abs(p[0] - cplx(M_PI)) < 1e-12);
    CHECK(std::abs(p[g.index(16)] + cplx(0.5 * M_PI)) < 1e-12);
    CHECK(std::abs(p[g.index(-16)] + cplx(0.5 * M_PI)) < 1e-12);
}

TEST_CASE("grid length mismatch is rejected") {
    const GridSpec g(64, 2.0 * M_PI);
    CHECK_THROWS_AS(forward(g, rvec(32)), Error);
}
