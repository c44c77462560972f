#include <random>

#include "doctest.h"
#include "plasmawave/diagnostics.hpp"

using namespace pw;

TEST_CASE("rate fit") {
    std::vector<double> t, y, c;
    for (int k = 1; k <= 100; ++k) {
        t.push_back(k);
        y.push_back(3.0 / std::sqrt(k));
        c.push_back(2.0);
    }
    const RateFit f = rate_fit(t, y, 1.0, 100.0);
    CHECK(std::abs(f.slope + 0.5) < 1e-12);
    CHECK(f.points == 100);
    CHECK(std::abs(rate_fit(t, c, 1.0, 100.0).slope) < 1e-12);
    CHECK_THROWS_AS(rate_fit(t, y, 1.0, 3.0), Error);
}

TEST_CASE("shock detector") {
    ShockDetector quiet;
    for (int k = 0; k < 50; ++k) quiet.observe(k, 1.0, 1e-12);
    CHECK(quiet.status() == ShockStatus::clean);

    ShockDetector steep;
    for (int k = 0; k < 50; ++k) steep.observe(k * 0.1, 1.0 / (5.0 - k * 0.1 + 1e-3), 1e-12);
    CHECK(steep.status() == ShockStatus::steepening);
    REQUIRE(steep.steepening_time().has_value());
    CHECK(*steep.steepening_time() < 5.0);

    ShockDetector loss;
    loss.observe(0.0, 1.0, 1e-12);
    loss.observe(1.0, 1.0, 1e-3);
    CHECK(loss.status() == ShockStatus::resolution_loss);
}

TEST_CASE("CSV round trip") {
    DiagnosticsRecord r;
    r.t = 1.5;
    r.sup_h = 0.1234567890123456789;
    r.U_HN = 1e-300;
    r.gammaU_HN1 = 3.0;
    r.wrap_valid = false;
    const DiagnosticsRecord b = parse_csv_row(csv_row(r));
    CHECK(b.t == r.t);
    CHECK(b.sup_h == r.sup_h);
    CHECK(b.U_HN == r.U_HN);
    CHECK(b.gammaU_HN1 == r.gammaU_HN1);
    CHECK(b.wrap_valid == false);
    CHECK(csv_header().rfind("t,", 0) == 0);
}

TEST_CASE("vector field at t = 0 is x times the time derivative") {
    const GridSpec g(64, 8.0 * M_PI);
    rvec u(64), ut(64);
    for (std::size_t j = 0; j < 64; ++j) {
        u[j] = std::exp(-g.x(j) * g.x(j));
        ut[j] = std::exp(-0.5 * g.x(j) * g.x(j));
    }
    const cvec us = forward(g, u), uts = forward(g, ut);
    const cvec out = inverse(g, gamma_field(g, us, 0.0, uts));
    for (std::size_t j = 0; j < 64; ++j) CHECK(std::abs(out[j] - g.x(j) * ut[j]) < 1e-12);
    const cvec zero = gamma_field(g, cvec(64), 2.0, cvec(64));
    for (const auto& z : zero) CHECK(z == cplx(0.0));
}

TEST_CASE("tail ratio") {
    const GridSpec g(128, 2.0 * M_PI);
    cvec s(128);
    s[g.index(3)] = 1.0;
    CHECK(spectral_tail_ratio(g, s) == 0.0);
    s[g.index(40)] = 1.0;
    CHECK(spectral_tail_ratio(g, s) == doctest::Approx(0.5));
}
