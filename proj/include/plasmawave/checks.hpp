#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "plasmawave/experiments.hpp"

namespace pw {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // key=value measurements
};

// Real field with iid normal coefficients on 0 < |k| <= band; returns its spectrum.
cvec random_real_spectrum(const GridSpec& g, long band, std::mt19937_64& rng);
cvec random_complex_spectrum(const GridSpec& g, long band, std::mt19937_64& rng);

struct PropertySetup {
    std::size_t num_points = 256;
    double box_length = 32.0 * M_PI;
    int N = 6;
    int seeds = 50;
    std::uint64_t seed = 12345;
};

// energy orthogonality for (r, Q1 - B1) and (u, Q2 - B2); control with B = 0
CheckResult check_orthogonality(const PropertySetup& s);
// operator identities for (A, B) and (C, S), r- and u-lines
CheckResult check_identities(const PropertySetup& s);
// <O[f,M]U, V> = <U, O[conj f, M*]V> for the Q, B, A, C, S matrices
CheckResult check_adjoint(const PropertySetup& s);
// T_f g + T_g f + R(f, g) = f g on band limited fields
CheckResult check_bony(const PropertySetup& s);
// B = conj(B^T(-xi1, xi1 + xi2)) pointwise
CheckResult check_b_selfadjoint(int samples, std::uint64_t seed);
// 4x4 system back-substitution for N in Ns
CheckResult check_backsubstitution(int samples, const std::vector<int>& Ns, std::uint64_t seed);
// c*(0), c*'(0), c^{++-}(xi, 0, -xi) = c*(xi)
CheckResult check_resonance(int samples, std::uint64_t seed);

struct ShatahSetup {
    std::size_t num_points = 2048;
    double box_length = 100.0 * M_PI;
    double dt = 0.004;
    double eps0 = 0.01;
    double t_mid = 1.0;
    int N = 6;
};
CheckResult check_shatah_residual(const ShatahSetup& s);

// N(eps h) = eps^3 N(h) and quartic scaling of the remainder
CheckResult check_homogeneity(std::size_t num_points, double box_length, double eps0);

// phase accumulator against the closed form, profile unitarity, linear-flow constancy
CheckResult check_profile_and_theta(std::size_t num_points, double box_length);
// sum over triples of i (2pi)^-2 I(t) = exp(it<xi>) N^(g) on a coarse grid
CheckResult check_cubic_consistency(std::size_t num_points, double box_length, double t, std::uint64_t seed);

struct QuadratureScaling {
    std::vector<double> lambdas{20.0, 40.0, 80.0};
    double mu = 2.0;
};
CheckResult check_quadrature_scaling(const QuadratureScaling& q);

struct DispersiveSetup {
    double box_length = 1600.0 * M_PI;
    std::size_t coarse = 8192, fine = 16384;
    double t_max = 500.0;
    double t_step = 1.0;
    double sigma = 2.0, k0 = 1.0;
};
CheckResult check_dispersive_constant(const DispersiveSetup& s);

struct ShockSetup {
    std::size_t num_points = 16384;
    double box_length = 64.0 * M_PI;
    double eps0 = 0.02;
    double sigma = 2.0, k0 = 1.0;
    double dt = 0.005;
    double diag_every = 0.1;
    double horizon_factor = 1.3;  // horizon = factor * oracle time
};
CheckResult check_shock_twin(const ShockSetup& s);

struct ConservationSetup {
    std::size_t num_points = 256;
    double box_length = 32.0 * M_PI;
    double dt = 0.05;
    std::size_t steps = 10000;
    double eps0 = 0.05;
};
CheckResult check_conservation(const ConservationSetup& s);
CheckResult check_checkpoint_resume(const std::string& scratch_dir);
CheckResult check_deterministic_csv(const std::string& scratch_dir);

// The small-data run shared by the decay, scattering and growth criteria.
RunConfig decay_run_config();
struct DecaySummary {
    std::vector<DiagnosticsRecord> records;
    std::string scattering_text;  // ScatteringReport::to_text()
};
// Loads dir/diagnostics.csv and dir/scattering.txt when they match the config, otherwise runs and writes them.
DecaySummary load_or_run_decay(const std::string& dir, bool force = false);
CheckResult check_decay_rate(const DecaySummary& d);
CheckResult check_modified_scattering(const DecaySummary& d);
CheckResult check_growth(const DecaySummary& d);

// key = value lookup in report text; throws analysis error when missing
std::string report_value(const std::string& text, const std::string& key);

}  // namespace pw
