#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "plasmawave/spectral.hpp"

namespace pw {

enum class Formulation : std::uint8_t { nv = 0, ev = 1, ru = 2, h = 3 };
const char* formulation_name(Formulation f);
Formulation parse_formulation(const std::string& s);

struct StateNV {
    rvec n, v;
    double t = 0.0;
};
struct StateEV {
    rvec E, v;
    double t = 0.0;
};
struct StateRU {
    rvec r, u;
    double t = 0.0;
};
struct ComplexState {
    cvec h;  // physical samples
    double t = 0.0;
};

using State = std::variant<StateNV, StateEV, StateRU, ComplexState>;

Formulation formulation_of(const State& s);
double time_of(const State& s);

StateEV to_ev(const GridSpec& g, const StateNV& s);
StateNV to_nv(const GridSpec& g, const StateEV& s);
StateRU to_ru(const GridSpec& g, const StateEV& s);
StateEV to_ev(const GridSpec& g, const StateRU& s);
ComplexState to_h(const StateRU& s);
StateRU to_ru(const ComplexState& s);
State convert(const GridSpec& g, const State& s, Formulation target);

// mean(n - 1) over the box
double neutrality_residual(const StateNV& s);

struct Physics {
    bool electric_field_on = true;  // false: pure Euler, nv only
    bool nonlinear = true;
};

// Evolution works on spectra: one spectrum per component, FFT order.
// nv: (n^, v^); ev: (E^, v^); ru: (r^, u^); h: (h^).
using Spectra = std::vector<cvec>;

Spectra to_spectra(const GridSpec& g, const State& s);
State from_spectra(const GridSpec& g, const Spectra& s, Formulation f, double t);

// Full time derivative, products dealiased. Throws on non-finite samples.
Spectra rhs(const GridSpec& g, Formulation f, const Spectra& s, const Physics& ph = {});
// Quadratic part of the h equation, N(h) = h_t + i<d>h
cvec quadratic_h(const GridSpec& g, const cvec& h_spec);
State rhs(const GridSpec& g, const State& s, const Physics& ph = {});

// Integrating-factor RK4 on h^ with exact propagator exp(-i dt <xi>).
cvec step_ifrk4(const GridSpec& g, const cvec& h_spec, double dt, const Physics& ph = {});
ComplexState step_ifrk4(const GridSpec& g, const ComplexState& s, double dt, const Physics& ph = {});
// Classical RK4 for the real formulations.
Spectra step_rk4(const GridSpec& g, Formulation f, const Spectra& s, double dt, const Physics& ph = {});

// Largest admissible |dt| for a grid.
inline double cfl_limit(const GridSpec& g) { return 0.5 * g.dx(); }
void check_cfl(const GridSpec& g, double dt);

// -1 / min over both invariants of d/dx (v +- n) at t=0, when compressive.
std::optional<double> riemann_blowup_oracle(const GridSpec& g, const rvec& n0, const rvec& v0);

struct InitialProfile {
    std::string family = "packet";  // packet | mode | zero
    double eps0 = 0.01;
    double sigma = 2.0;
    double k0 = 1.0;
};

// E = eps0 exp(-(x/sigma)^2) (cos(k0 x) - exp(-(k0 sigma)^2/4)), v = eps0 exp(-(x/sigma)^2) sin(k0 x),
// band limited to |k| <= n/3. The shift gives E zero mean while keeping it localized.
// "mode": E = eps0 cos(k0 x), v = 0.
StateEV initial_state(const GridSpec& g, const InitialProfile& p);

// Wraparound horizon (L/2 - R0) with R0 the support radius at 1e-10 of the peak (group speed < 1).
double valid_horizon(const GridSpec& g, const State& s);

// Binary checkpoint, little endian: "EPKG", u32 version, u64 num_points, f64 box_length, f64 t,
// u8 formulation tag, then num_points f64 pairs (component 1, component 2) or (Re h, Im h).
constexpr std::uint32_t checkpoint_version = 1;
void write_checkpoint(const std::string& path, const GridSpec& g, const State& s);
State read_checkpoint(const std::string& path, GridSpec& g);

}  // namespace pw
