#pragma once

#include <map>
#include <string>
#include <vector>

#include "plasmawave/diagnostics.hpp"
#include "plasmawave/symbols.hpp"

namespace pw {

// w = exp(it<d>) g, spectra in and out
cvec profile_w(const GridSpec& g, const cvec& gs, double t);
cvec unprofile(const GridSpec& g, const cvec& ws, double t);  // inverse of profile_w

// theta(t, xi) = -c*(xi) <xi>^3 / (2 pi) * int_0^t |w^(s,xi)|^2 / (s+1) ds, trapezoid in s.
class PhaseAccumulator {
public:
    explicit PhaseAccumulator(const GridSpec& g, bool zero_coefficient = false);

    // First call fixes the origin; later calls need strictly increasing t.
    void accumulate(double t, const cvec& w_spec);

    const GridSpec& grid() const { return g_; }
    double last_time() const { return last_t_; }
    bool started() const { return started_; }
    const rvec& integral() const { return integral_; }
    rvec theta() const;
    double theta_at_index(std::size_t i) const;

private:
    GridSpec g_;
    rvec coef_;
    rvec integral_;
    rvec last_val_;
    double last_t_ = 0.0;
    bool started_ = false;
};

struct ScatteringReport {
    int weight_m = 0;
    double xi_window = 0.0;
    double fit_t_lo = 0.0, fit_t_hi = 0.0;
    RateFit fit;                // D(t) ~ t^{-delta}, slope = -delta
    double delta() const { return -fit.slope; }
    std::vector<double> times;
    std::vector<double> D;          // corrected
    std::vector<double> D_control;  // theta = 0
    double carrier_xi = 0.0;
    double compare_time = 0.0;
    double carrier_corrected = 0.0;  // sup over the carrier band at compare_time
    double carrier_control = 0.0;
    bool control_exceeds = false;
    cvec w_inf;                 // averaged corrected profile over the last 10% of the run
    GridSpec grid;

    std::string to_text() const;
};

struct ScatteringInputs {
    GridSpec grid;                    // profile grid
    std::vector<double> times;        // snapshot times, increasing
    std::vector<cvec> w;              // w^ at each time
    std::vector<rvec> theta;          // theta at each time (same lattice)
    int weight_m = 14;
    double xi_window = 0.0;           // 0 means the whole resolved lattice
    double fit_t_lo = 10.0;
    double fit_t_hi = 0.0;            // 0 means half the final time
    double carrier_xi = 1.0;          // |xi| of the carrier
    double carrier_halfwidth = 0.25;
    std::uint64_t seed = 12345;
};

ScatteringReport scattering_analysis(const ScatteringInputs& in);

// I(t, xi) = (2pi/L)^2 sum_{eta,sigma} c(xi,eta,sigma) exp(it Psi) w^i1(xi-eta) w^i2(eta-sigma) w^i3(sigma);
// n <= 256
cvec cubic_interaction(Signs3 triple, const GridSpec& g, const cvec& w_spec, double t);

struct DispersiveTable {
    std::vector<double> times;
    std::vector<double> ratio;
    std::vector<bool> valid;  // t <= T_valid
    double sup_ratio = 0.0;   // over valid times
    double t_valid = 0.0;
};

// R(t) = ||exp(it<d>) f||_inf / [(1+t)^{-1/2} ||f^||_inf + (1+t)^{-5/8} (||f||_{H^2} + ||x f||_{H^1})]
DispersiveTable dispersive_constant_check(const GridSpec& g, const cvec& f, const std::vector<double>& times);

// |I(lambda, mu) - 2 pi / lambda| with I = int int exp(i lambda x y) phi(x/mu) phi(y/mu) dx dy.
// The exponent n of the error bound enters only through the reported reference bound.
struct QuadratureB4 {
    double value = 0.0;
    double error = 0.0;
    double step = 0.0;
    double bound_ref = 0.0;  // lambda^{-1-n} mu^{-2n}
};
QuadratureB4 quadrature_check_B4(double lambda, double mu, int n = 1);

}  // namespace pw
