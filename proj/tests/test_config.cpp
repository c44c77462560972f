#include "doctest.h"
#include "plasmawave/config.hpp"

using namespace pw;

namespace {
std::string error_of(const std::string& text) {
    try {
        validate(parse_config(text));
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}
}  // namespace

TEST_CASE("defaults and parsing") {
    const ExperimentConfig c = parse_config("num_points = 512\nbox_length = 64pi  # comment\nlabel = a-b.c\n");
    CHECK(c.run.num_points == 512);
    CHECK(c.run.box_length == doctest::Approx(64.0 * M_PI).epsilon(1e-15));
    CHECK(c.label == "a-b.c");
    CHECK(c.run.dt == 0.1);
    CHECK(c.seed == 12345);
}

TEST_CASE("lossless round trip") {
    ExperimentConfig c;
    c.run.dt = 0.1 / 3.0;
    c.run.t_final = 1.0 / 7.0 * 21.0;
    c.run.profile.k0 = std::sqrt(2.0);
    c.sweep_eps0 = {0.01, 1.0 / 3.0};
    c.label = "x1";
    const ExperimentConfig d = parse_config(to_text(c));
    CHECK(to_text(d) == to_text(c));
    CHECK(d.run.profile.k0 == c.run.profile.k0);
    CHECK(d.sweep_eps0 == c.sweep_eps0);
}

TEST_CASE("errors name the key") {
    CHECK(error_of("bogus_key = 1\n").find("bogus_key") != std::string::npos);
    CHECK(error_of("dt = fast\n").find("dt") != std::string::npos);
    CHECK(error_of("dt = 0.1\ndt = 0.2\n").find("dt") != std::string::npos);
    CHECK(error_of("label = ../x\n").find("label") != std::string::npos);
    CHECK_FALSE(error_of("dt = 5\n").empty());           // CFL
    CHECK_FALSE(error_of("diag_every = 0.15\n").empty());  // not a multiple of dt
    CHECK_FALSE(error_of("formulation = h\nelectric_field_on = false\n").empty());
    CHECK(error_of("").empty());
}

TEST_CASE("label safety") {
    CHECK(label_is_safe("run_01.b"));
    CHECK_FALSE(label_is_safe(""));
    CHECK_FALSE(label_is_safe("a/b"));
    CHECK_FALSE(label_is_safe(".."));
}

TEST_CASE("step counts") {
    RunConfig r;
    CHECK(r.total_steps() == 3000);
    CHECK(r.diag_stride() == 5);
}
