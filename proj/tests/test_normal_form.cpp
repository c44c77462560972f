#include <random>

#include "doctest.h"
#include "plasmawave/checks.hpp"
#include "plasmawave/normal_form.hpp"

using namespace pw;

namespace {
cvec scaled(const cvec& a, double s) {
    cvec o = a;
    for (auto& z : o) z *= s;
    return o;
}
cvec diff(const cvec& a, const cvec& b) {
    cvec o = a;
    for (std::size_t i = 0; i < o.size(); ++i) o[i] -= b[i];
    return o;
}
}  // namespace

TEST_CASE("energy normal form") {
    const GridSpec g(128, 16.0 * M_PI);
    const NormalFormContext ctx(g, 6);
    const Vec2 zero{cvec(128), cvec(128)};
    CHECK(max_abs(phi_transform(ctx, zero)) == 0.0);

    std::mt19937_64 rng(8);
    const Vec2 U{random_real_spectrum(g, 20, rng), random_real_spectrum(g, 20, rng)};
    const double eps = 1e-3;
    auto corr = [&](double e) {
        const Vec2 V = scale(U, e);
        return l2_norm(g, phi_transform(ctx, V) - V);
    };
    CHECK(corr(eps) / corr(eps / 2) == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("Shatah transformation") {
    const GridSpec g(128, 16.0 * M_PI);
    const NormalFormContext ctx(g, 6);
    const cvec zero(128);
    CHECK(l2_norm(g, shatah_g(ctx, zero)) == 0.0);
    CHECK(l2_norm(g, cubic_N(ctx, zero)) == 0.0);
    CHECK(l2_norm(g, quartic_remainder(ctx, zero)) == 0.0);

    std::mt19937_64 rng(10);
    const cvec h = random_complex_spectrum(g, 20, rng);
    const double e = 1e-3;
    const double d1 = l2_norm(g, diff(shatah_g(ctx, scaled(h, e)), scaled(h, e)));
    const double d2 = l2_norm(g, diff(shatah_g(ctx, scaled(h, e / 2)), scaled(h, e / 2)));
    CHECK(d1 / d2 == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(shatah_g(ctx, h, true) == h);

    const cvec n1 = cubic_N(ctx, scaled(h, 0.3)), n0 = scaled(cubic_N(ctx, h), 0.027);
    CHECK(l2_norm(g, diff(n1, n0)) <= 1e-12 * l2_norm(g, n0));
}

TEST_CASE("cubic term against interaction integrals") {
    const CheckResult r = check_cubic_consistency(64, 16.0 * M_PI, 2.0, 12345);
    INFO(r.detail);
    CHECK(r.pass);
}

TEST_CASE("quartic remainder and homogeneity") {
    const CheckResult r = check_homogeneity(256, 32.0 * M_PI, 0.05);
    INFO(r.detail);
    CHECK(r.pass);
}
