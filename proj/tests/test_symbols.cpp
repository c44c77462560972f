#include <random>

#include "doctest.h"
#include "plasmawave/symbols.hpp"

using namespace pw;

TEST_CASE("cutoff theta") {
    CHECK(theta(0.0, 5.0) == 1.0);
    CHECK(theta(5.0, 5.0) == 0.0);
    CHECK(theta(-3.0, 10.0) == theta(3.0, 10.0));
    CHECK(theta(-0.7, -2.0) == theta(0.7, 2.0));
    for (double a : {0.0, 0.3, 1.0, 4.0})
        for (double b : {0.0, 0.5, 2.0, 9.0}) {
            const double w = remainder_weight(a, b);
            CHECK(theta(a, b) + theta(b, a) + w == doctest::Approx(1.0).epsilon(1e-15));
        }
    CutoffParams bad{0.3, 0.4};
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("quadratic matrices") {
    for (double x2 : {-7.0, 0.5, 3.0}) {
        CHECK(q_matrix(Label::Q1, 0.0, x2).max_abs() == 0.0);
        CHECK(b_matrix(Label::B1, 6, 0.0, x2).max_abs() == 0.0);
    }
    // plateau: theta = 1
    const double x1 = 0.01, x2 = 20.0;
    REQUIRE(theta(x1, x2) == 1.0);
    const cplx q1 = q_matrix(Label::Q1, x1, x2).m12;
    CHECK(std::abs(q1 - cplx(0.0, 2.0 * x1 * jb(x2))) < 1e-15);
    CHECK_THROWS_AS(q_matrix(Label::A1, 1.0, 1.0), Error);
}

TEST_CASE("B matrices are self-adjoint as symbols") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-50.0, 50.0);
    for (int N : {6, 300})
        for (int i = 0; i < 200; ++i) {
            const double a = u(rng), b = u(rng);
            for (Label l : {Label::B1, Label::B2}) {
                const SymbolMatrix2 d = b_matrix(l, N, a, b) - b_matrix(l, N, -a, a + b).conj_transpose();
                CHECK(d.max_abs() <= 1e-12 * std::max(1.0, b_matrix(l, N, a, b).max_abs()));
            }
        }
}

TEST_CASE("normal form system") {
    CHECK(normal_form_G(1.0, 1.0) == 15.0);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 500; ++i) {
        const double a = u(rng), b = u(rng);
        for (auto kind : {NormalFormKind::A, NormalFormKind::C}) {
            const auto x = solve_normal_form(kind, 6, a, b);
            const auto M = normal_form_system(a, b);
            const auto r = normal_form_rhs(kind, 6, a, b);
            double scale = 1.0;
            for (const auto& v : r) scale = std::max(scale, std::abs(v));
            for (int row = 0; row < 4; ++row) {
                cplx s = 0.0;
                for (int k = 0; k < 4; ++k) s += M[4 * row + k] * x[k];
                CHECK(std::abs(s - r[row]) <= 1e-10 * scale);
            }
        }
    }
}

TEST_CASE("Shatah symbols against reference values") {
    struct Row {
        Signs2 s;
        double x, e, q, bq;
    };
    const Row rows[] = {
        {PP, 0.7, -1.3, 0.43358225623609485, -0.25586306466151555},
        {PP, 2.5, 0.4, 2.2680298588692414, -3.2306137172960062},
        {PM, 0.7, -1.3, -0.61835680871584588, -0.38996889031913912},
        {PM, 2.5, 0.4, -1.7058790536151341, -1.174829314218225},
        {MM, 0.7, -1.3, -0.71450310644387587, -0.17742955157650694},
        {MM, 2.5, 0.4, -0.42455254469801064, -0.062094616037327253},
    };
    for (const auto& r : rows) {
        CHECK(shatah_q(r.s, r.x, r.e) == doctest::Approx(r.q).epsilon(1e-14));
        CHECK(shatah_b(r.s, r.x, r.e).imag() == doctest::Approx(r.bq).epsilon(1e-13));
        CHECK(shatah_b(r.s, r.x, r.e).real() == 0.0);
    }
    for (double eta : {-3.0, 0.25, 8.0}) CHECK(shatah_q(PP, 0.0, eta) == doctest::Approx(eta / 4.0).epsilon(1e-15));
    CHECK(std::abs(shatah_b(PP, 0.0, 0.0)) == 0.0);
    CHECK(shatah_denominator(PP, 0.0, 0.0) == doctest::Approx(-1.0));
}

TEST_CASE("denominator lower bound") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int i = 0; i < 100000; ++i) {
        const double x = u(rng) * std::abs(u(rng)) * 1e-3, e = u(rng);
        const double sum = jb(x + e) + jb(x) + jb(e);
        for (Signs2 s : {PP, PM, MM}) CHECK(std::abs(shatah_denominator(s, x, e)) * sum >= 1.0 - 1e-9);
    }
}

TEST_CASE("cubic symbols and phases against reference values") {
    struct Row {
        Signs3 t;
        double c, psi;
    };
    const Row rows[] = {
        {PPM, -0.70260405101319397, -0.083822299167275739},
        {PMM, 1.0982814394518683, 2.8893914502964254},
        {PPP, -0.65957993132682131, -2.6450719941404152},
        {MMM, -0.54722393619118216, 4.9774527520785354},
    };
    for (const auto& r : rows) {
        CHECK(cubic_symbol(r.t, 0.6, 0.3, -0.8) == doctest::Approx(r.c).epsilon(1e-13));
        CHECK(phase(r.t, 0.6, 0.3, -0.8) == doctest::Approx(r.psi).epsilon(1e-14));
    }
    CHECK(phase(PPP, 0.0, 0.0, 0.0) == -2.0);
    for (double xi : {-4.0, 0.3, 2.0, 17.0}) CHECK(std::abs(phase(PPM, xi, 0.0, -xi)) < 1e-14);
}

TEST_CASE("resonance coefficient") {
    CHECK(c_star(0.5) == doctest::Approx(-0.3540440964374667).epsilon(1e-14));
    CHECK(c_star(2.0) == doctest::Approx(-188.42599490398228).epsilon(1e-14));
    CHECK(std::abs(c_star(0.0)) < 1e-12);
    CHECK(std::abs(c_star(1e-4) - c_star(-1e-4)) / 2e-4 < 1e-7);
    for (double xi : {-3.0, -0.2, 0.9, 6.0})
        CHECK(cubic_symbol(PPM, xi, 0.0, -xi) == doctest::Approx(c_star(xi)).epsilon(1e-12));
    double C = 0.0;
    for (double xi = -50.0; xi <= 50.0; xi += 0.25)
        if (xi != 0.0) C = std::max(C, std::abs(c_star(xi)) / (xi * xi * std::pow(jb(xi), 3)));
    CHECK(C < 10.0);
}
