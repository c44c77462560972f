#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "plasmawave/checks.hpp"
#include "plasmawave/dynamics.hpp"

using namespace pw;

namespace {
double rel_diff(const cvec& a, const cvec& b) {
    double d = 0.0, s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
        s = std::max(s, std::abs(b[i]));
    }
    return s == 0.0 ? d : d / s;
}
cvec spec_of(const GridSpec& g, const State& s, Formulation f) { return to_spectra(g, convert(g, s, f))[0]; }
}  // namespace

TEST_CASE("equilibrium converts to zero") {
    const GridSpec g(64, 2.0 * M_PI);
    const StateNV eq{rvec(64, 1.0), rvec(64, 0.0)};
    const StateEV ev = to_ev(g, eq);
    const ComplexState h = to_h(to_ru(g, ev));
    for (std::size_t j = 0; j < 64; ++j) {
        CHECK(std::abs(ev.E[j]) < 1e-15);
        CHECK(std::abs(h.h[j]) < 1e-15);
    }
}

TEST_CASE("single mode gives a real h of half amplitude") {
    const GridSpec g(64, 2.0 * M_PI);
    InitialProfile p;
    p.family = "mode";
    p.eps0 = 0.01;
    const StateEV ev = initial_state(g, p);
    const ComplexState h = to_h(to_ru(g, ev));
    for (std::size_t j = 0; j < 64; ++j) {
        CHECK(h.h[j].real() == doctest::Approx(0.005 * std::cos(g.x(j))).epsilon(1e-12));
        CHECK(std::abs(h.h[j].imag()) < 1e-15);
    }
}

TEST_CASE("conversion round trip") {
    const GridSpec g(128, 16.0 * M_PI);
    InitialProfile p;
    p.eps0 = 0.05;
    const StateNV nv = to_nv(g, initial_state(g, p));
    const State h = convert(g, State{nv}, Formulation::h);
    const StateNV back = std::get<StateNV>(convert(g, h, Formulation::nv));
    for (std::size_t j = 0; j < 128; ++j) {
        CHECK(std::abs(back.n[j] - nv.n[j]) < 1e-12);
        CHECK(std::abs(back.v[j] - nv.v[j]) < 1e-12);
    }
}

TEST_CASE("linear dispersion and exact integrating factor") {
    const GridSpec g(32, 2.0 * M_PI);
    cvec h(32);
    for (std::size_t j = 0; j < 32; ++j) h[j] = std::polar(1.0, g.x(j));
    const cvec hs = forward(g, h);
    const Physics lin{true, false};
    const cvec t = rhs(g, Formulation::h, Spectra{hs}, lin)[0];
    const cvec want = multiply(g, hs, [](double) { return cplx(0.0, -std::sqrt(2.0)); });
    CHECK(rel_diff(t, want) < 1e-14);
    for (double dt : {0.01, 0.05, 0.09}) {
        const cvec stepped = step_ifrk4(g, hs, dt, lin);
        const cvec exact = multiply(g, hs, [&](double xi) { return std::polar(1.0, -dt * jb(xi)); });
        CHECK(rel_diff(stepped, exact) < 1e-13);
    }
    const cvec zero = rhs(g, Formulation::h, Spectra{cvec(32)})[0];
    for (const auto& z : zero) CHECK(z == cplx(0.0));
}

TEST_CASE("formulations agree on the tendency") {
    // resolved grid: the nv products must not leak past the retained band
    const GridSpec g(512, 16.0 * M_PI);
    InitialProfile p;
    p.eps0 = 0.05;
    const State ev{initial_state(g, p)};
    const double dt = 0.01;
    const Spectra sh = step_rk4(g, Formulation::ev, to_spectra(g, ev), dt);
    const State after_ev = from_spectra(g, sh, Formulation::ev, dt);
    const cvec via_h = step_ifrk4(g, spec_of(g, ev, Formulation::h), dt);
    CHECK(rel_diff(spec_of(g, after_ev, Formulation::h), via_h) < 1e-10);
    const Spectra snv = step_rk4(g, Formulation::nv, to_spectra(g, convert(g, ev, Formulation::nv)), dt);
    CHECK(rel_diff(spec_of(g, from_spectra(g, snv, Formulation::nv, dt), Formulation::h), via_h) < 1e-10);
}

TEST_CASE("fourth order self-convergence") {
    const GridSpec g(128, 16.0 * M_PI);
    InitialProfile p;
    p.eps0 = 0.2;
    const cvec h0 = spec_of(g, State{initial_state(g, p)}, Formulation::h);
    auto evolve = [&](int steps) {
        cvec h = h0;
        for (int i = 0; i < steps; ++i) h = step_ifrk4(g, h, 1.0 / steps);
        return h;
    };
    const cvec a = evolve(10), b = evolve(20), c = evolve(40);
    double e1 = 0.0, e2 = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        e1 = std::max(e1, std::abs(a[i] - b[i]));
        e2 = std::max(e2, std::abs(b[i] - c[i]));
    }
    CHECK(e1 / e2 >= 14.0);
    CHECK(e1 / e2 <= 18.0);
}

TEST_CASE("zero data stays zero") {
    const GridSpec g(64, 8.0 * M_PI);
    cvec h(64);
    for (int i = 0; i < 1000; ++i) h = step_ifrk4(g, h, 0.1);
    for (const auto& z : h) CHECK(std::abs(z) <= 1e-11);
}

TEST_CASE("neutrality is conserved") {
    ConservationSetup s;
    s.steps = 2000;
    const CheckResult r = check_conservation(s);
    INFO(r.detail);
    CHECK(r.pass);
}

TEST_CASE("Riemann blowup oracle") {
    const GridSpec g(256, 2.0 * M_PI);
    rvec n(256), v(256, 0.0);
    CHECK_FALSE(riemann_blowup_oracle(g, rvec(256, 1.0), v).has_value());
    for (std::size_t j = 0; j < 256; ++j) n[j] = 1.0 - 0.1 * std::sin(g.x(j));
    const auto t = riemann_blowup_oracle(g, n, v);
    REQUIRE(t.has_value());
    CHECK(*t == doctest::Approx(10.0).epsilon(1e-6));
}

TEST_CASE("CFL guard") {
    const GridSpec g(256, 2.0 * M_PI);
    CHECK_NOTHROW(check_cfl(g, 0.5 * g.dx()));
    CHECK_THROWS_AS(check_cfl(g, 0.6 * g.dx()), Error);
}

TEST_CASE("wraparound horizon ignores nothing inside the packet") {
    const GridSpec g(1024, 64.0 * M_PI);
    const double T = valid_horizon(g, State{initial_state(g, {})});
    CHECK(T > 80.0);
    CHECK(T < 0.5 * g.box_length);
}

TEST_CASE("checkpoint round trip") {
    namespace fs = std::filesystem;
    const GridSpec g(64, 8.0 * M_PI);
    InitialProfile p;
    p.eps0 = 0.03;
    ComplexState h = std::get<ComplexState>(convert(g, State{initial_state(g, p)}, Formulation::h));
    h.t = 2.5;
    const auto path = (fs::temp_directory_path() / "pw_unit.ckpt").string();
    write_checkpoint(path, g, State{h});
    GridSpec g2;
    const State back = read_checkpoint(path, g2);
    CHECK(g2 == g);
    CHECK(time_of(back) == 2.5);
    CHECK(std::get<ComplexState>(back).h == h.h);
    {
        std::ofstream bad(path, std::ios::binary);
        bad << "NOPE";
    }
    CHECK_THROWS_AS(read_checkpoint(path, g2), Error);
    fs::remove(path);
}
