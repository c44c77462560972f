#include <random>

#include "doctest.h"
#include "plasmawave/checks.hpp"
#include "plasmawave/scattering.hpp"

using namespace pw;

TEST_CASE("profile is unitary and inverts") {
    const GridSpec g(128, 16.0 * M_PI);
    std::mt19937_64 rng(2);
    const cvec s = random_complex_spectrum(g, 40, rng);
    CHECK(profile_w(g, s, 0.0) == s);
    const cvec w = profile_w(g, s, 3.7);
    CHECK(l2_norm(g, w) == doctest::Approx(l2_norm(g, s)).epsilon(1e-14));
    const cvec back = unprofile(g, w, 3.7);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(back[i] - s[i]) < 1e-12 * std::abs(s[0]) + 1e-13);
}

TEST_CASE("free Klein-Gordon flow against quadrature") {
    // exp(it<d>) exp(-x^2/4) at x = 0
    const GridSpec g(2048, 200.0);
    rvec f(g.size());
    for (std::size_t j = 0; j < f.size(); ++j) f[j] = std::exp(-0.25 * g.x(j) * g.x(j));
    const cvec fs = forward(g, f);
    const struct {
        double t;
        cplx v;
    } ref[] = {{5.0, {0.5124466977283646, -0.38963162654973453}},
               {20.0, {-0.10367076579135272, 0.29932191971261756}}};
    for (const auto& r : ref) {
        const cvec x = inverse(g, profile_w(g, fs, r.t));
        CHECK(std::abs(x[g.size() / 2] - r.v) < 1e-12);
    }
}

TEST_CASE("phase accumulator") {
    const GridSpec g(64, 8.0 * M_PI);
    PhaseAccumulator zero(g);
    for (double t = 0.0; t <= 5.0; t += 0.5) zero.accumulate(t, cvec(64));
    for (double th : zero.theta()) CHECK(th == 0.0);

    // constant |w|^2 = A: theta = -c* <xi>^3 A / (2 pi) log(t + 1)
    const double A = 4.0;
    cvec w(64, cplx(0.0, 2.0));
    PhaseAccumulator acc(g);
    const double T = 10.0, dt = 1e-3;
    for (int k = 0; k <= 10000; ++k) acc.accumulate(k * dt, w);
    const rvec th = acc.theta();
    CHECK(th[0] == 0.0);
    for (long m : {1L, 5L, -9L}) {
        const double xi = g.dxi() * m;
        const double want = -c_star(xi) * std::pow(jb(xi), 3) * A / (2.0 * M_PI) * std::log(T + 1.0);
        CHECK(th[g.index(m)] == doctest::Approx(want).epsilon(1e-6));
    }
    CHECK_THROWS_AS(acc.accumulate(5.0, w), Error);
    PhaseAccumulator control(g, true);
    control.accumulate(0.0, w);
    control.accumulate(1.0, w);
    for (double v : control.theta()) CHECK(v == 0.0);
}

TEST_CASE("scattering analysis of a linear flow") {
    const GridSpec g(64, 16.0 * M_PI);
    std::mt19937_64 rng(6);
    const cvec w = random_complex_spectrum(g, 20, rng);
    ScatteringInputs in;
    in.grid = g;
    for (int k = 0; k <= 60; ++k) {
        in.times.push_back(k * 0.5);
        in.w.push_back(w);
        in.theta.push_back(rvec(64, 0.0));
    }
    const ScatteringReport r = scattering_analysis(in);
    for (double d : r.D) CHECK(d <= 1e-14);
    for (std::size_t i = 0; i < w.size(); ++i) CHECK(std::abs(r.w_inf[i] - w[i]) <= 1e-12 * std::abs(w[i]) + 1e-14);
}

TEST_CASE("cubic interaction is cubic") {
    const GridSpec g(32, 8.0 * M_PI);
    std::mt19937_64 rng(12);
    const cvec w = random_complex_spectrum(g, 8, rng);
    cvec w2 = w;
    for (auto& z : w2) z *= 0.5;
    for (Signs3 t : cubic_triples) {
        const cvec a = cubic_interaction(t, g, w, 1.5), b = cubic_interaction(t, g, w2, 1.5);
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - 8.0 * b[i]) <= 1e-12 * (std::abs(a[i]) + 1e-300));
        for (const auto& z : cubic_interaction(t, g, cvec(32), 1.5)) CHECK(z == cplx(0.0));
    }
}

TEST_CASE("oscillatory quadrature against reference values") {
    const QuadratureB4 a = quadrature_check_B4(20.0, 2.0);
    CHECK(a.error == doctest::Approx(3.262527081826505e-09).epsilon(1e-3));
    const QuadratureB4 b = quadrature_check_B4(40.0, 2.0);
    CHECK(b.error == doctest::Approx(7.554012970700796e-12).epsilon(2e-2));
    CHECK(quadrature_check_B4(20.0, 3.0).error < a.error);
}

TEST_CASE("dispersive constant table") {
    const GridSpec g(2048, 200.0);
    cvec f(g.size());
    for (std::size_t j = 0; j < f.size(); ++j) f[j] = std::exp(-0.25 * g.x(j) * g.x(j));
    const DispersiveTable t = dispersive_constant_check(g, f, {0.0, 1.0, 10.0, 40.0});
    CHECK(t.sup_ratio > 0.0);
    CHECK(std::isfinite(t.sup_ratio));
    CHECK(t.ratio[0] <= 1.0);
}
