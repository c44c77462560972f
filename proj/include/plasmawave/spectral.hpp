#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "plasmawave/errors.hpp"

namespace pw {

using cplx = std::complex<double>;
using rvec = std::vector<double>;
using cvec = std::vector<cplx>;

inline double jb(double xi) { return std::sqrt(1.0 + xi * xi); }  // <xi>

// Periodic grid on [-L/2, L/2). Spectra are stored in FFT order:
// index i holds mode k = i for i < n/2 and k = i - n otherwise.
struct GridSpec {
    std::size_t num_points = 0;
    double box_length = 0.0;

    GridSpec() = default;
    GridSpec(std::size_t n, double L);

    std::size_t size() const { return num_points; }
    double dx() const { return box_length / static_cast<double>(num_points); }
    double x(std::size_t j) const { return -0.5 * box_length + static_cast<double>(j) * dx(); }
    long mode(std::size_t i) const {
        long n = static_cast<long>(num_points);
        long k = static_cast<long>(i);
        return k < n / 2 ? k : k - n;
    }
    std::size_t index(long k) const {
        long n = static_cast<long>(num_points);
        return static_cast<std::size_t>(k >= 0 ? k : k + n);
    }
    std::size_t nyquist() const { return num_points / 2; }
    double dxi() const { return 2.0 * M_PI / box_length; }
    double xi(std::size_t i) const { return dxi() * static_cast<double>(mode(i)); }
    double xi_max() const { return dxi() * static_cast<double>(num_points / 2); }
    // true when mode k lies on the lattice and is not the Nyquist mode
    bool resolved(long k) const {
        long h = static_cast<long>(num_points / 2);
        return k > -h && k < h;
    }

    bool operator==(const GridSpec& o) const {
        return num_points == o.num_points && box_length == o.box_length;
    }
    bool operator!=(const GridSpec& o) const { return !(*this == o); }
};

void check_length(const GridSpec& g, std::size_t len, const char* what);

// f^(xi_k) = dx * sum_j f(x_j) exp(-i x_j xi_k)
cvec forward(const GridSpec& g, const rvec& f);
cvec forward(const GridSpec& g, const cvec& f);
// f(x_j) = (1/L) sum_k f^(xi_k) exp(i x_j xi_k)
cvec inverse(const GridSpec& g, const cvec& spec);
rvec inverse_real(const GridSpec& g, const cvec& spec);

// Spectrum of conj(f) given the spectrum of f.
cvec conj_spectrum(const GridSpec& g, const cvec& spec);

template <class Symbol>
cvec multiply(const GridSpec& g, const cvec& spec, Symbol m) {
    check_length(g, spec.size(), "spectrum");
    cvec out(spec.size());
    for (std::size_t i = 0; i < spec.size(); ++i) {
        if (i == g.nyquist()) continue;
        cplx mv = m(g.xi(i));
        if (!std::isfinite(mv.real()) || !std::isfinite(mv.imag()))
            throw numeric_error("singular symbol at mode k=" + std::to_string(g.mode(i)));
        out[i] = mv * spec[i];
    }
    return out;
}

template <class Symbol>
rvec apply_multiplier(const GridSpec& g, const rvec& f, Symbol m) {
    return inverse_real(g, multiply(g, forward(g, f), m));
}

template <class Symbol>
cvec apply_multiplier(const GridSpec& g, const cvec& f, Symbol m) {
    return inverse(g, multiply(g, forward(g, f), m));
}

// Common symbols.
inline cplx sym_dx(double xi) { return {0.0, xi}; }
inline cplx sym_jb(double xi) { return jb(xi); }
inline cplx sym_inv_jb(double xi) { return 1.0 / jb(xi); }
inline cplx sym_dx_over_jb(double xi) { return {0.0, xi / jb(xi)}; }

// d/dx^{-1} with the mean mode gauge-fixed to `gauge`.
cvec antiderivative(const GridSpec& g, const cvec& spec, cplx gauge = 0.0);
// d/dx^{-1} vanishing at the left box edge, the periodic stand-in for int_{-inf}^x
cvec antiderivative_edge(const GridSpec& g, const cvec& spec);

// Bump: 1 on [0,5/4], 0 beyond 8/5, quintic smoothstep in between.
double bump(double r);
double lp_piece(int k, double xi);  // phi(|xi|/2^k) - phi(|xi|/2^{k-1})

rvec lp_project(const GridSpec& g, const rvec& f, int k);
rvec lp_project_le(const GridSpec& g, const rvec& f, double a);
cvec lp_project(const GridSpec& g, const cvec& f, int k);
cvec lp_project_le(const GridSpec& g, const cvec& f, double a);

// Zero |k| > n/3.
cvec dealias(const GridSpec& g, const cvec& spec);
void dealias_inplace(const GridSpec& g, cvec& spec);

// Norms. All take spectra unless stated otherwise.
double l2_norm(const GridSpec& g, const cvec& spec);
double sobolev_norm(const GridSpec& g, const cvec& spec, double s);
double sobolev_norm2(const GridSpec& g, const cvec& a, const cvec& b, double s);  // 2-vector
double sup_norm(const rvec& f);
double sup_norm(const cvec& f);
// max over j <= k of sup|d^j f|, field given by its spectrum
double wk_inf_norm(const GridSpec& g, const cvec& spec, int k);

struct WeightedNorm {
    double value = 0.0;
    bool support_ok = true;  // false: field not negligible near the box ends
};

// True when |f| < tol * max|f| on the outer 5% of the box at each end.
bool support_clean(const GridSpec& g, const cvec& f, double tol = 1e-10);
bool support_clean(const GridSpec& g, const rvec& f, double tol = 1e-10);
// || x f ||_{H^s} with the centered coordinate; f in physical space
WeightedNorm xweighted_sobolev(const GridSpec& g, const cvec& f, double s);
WeightedNorm xweighted_sobolev(const GridSpec& g, const rvec& f, double s);

// Copy a spectrum between grids of equal box length, truncating or zero padding.
cvec resample_spectrum(const GridSpec& from, const cvec& spec, const GridSpec& to);

// Complex L^2 pairing sum a * conj(b) dx in physical space, expressed on spectra.
cplx inner(const GridSpec& g, const cvec& a_spec, const cvec& b_spec);

}  // namespace pw
