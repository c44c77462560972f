#pragma once

#include <array>
#include <string>

#include "plasmawave/spectral.hpp"

namespace pw {

struct CutoffParams {
    double eps1 = 0.1;
    double eps2 = 0.4;
    void validate() const;  // 0 < 2 eps1 < eps2 < 1/2
};

double smoothstep(double u);  // quintic, clamped to [0,1]
double theta(double xi1, double xi2, const CutoffParams& p = {});
// 1 - theta(xi1,xi2) - theta(xi2,xi1): share of the high-high remainder
double remainder_weight(double xi1, double xi2, const CutoffParams& p = {});

enum class Label { Q1, Q2, S1, S2, B1, B2, A1, A2, C1, C2 };
const char* label_name(Label l);
inline bool is_antidiagonal(Label l) {
    return l == Label::Q1 || l == Label::S1 || l == Label::B1 || l == Label::A1 || l == Label::C1;
}

// Row-major 2x2 complex matrix.
struct SymbolMatrix2 {
    cplx m11{}, m12{}, m21{}, m22{};

    SymbolMatrix2 conj_transpose() const {
        return {std::conj(m11), std::conj(m21), std::conj(m12), std::conj(m22)};
    }
    SymbolMatrix2 operator+(const SymbolMatrix2& o) const {
        return {m11 + o.m11, m12 + o.m12, m21 + o.m21, m22 + o.m22};
    }
    SymbolMatrix2 operator-(const SymbolMatrix2& o) const {
        return {m11 - o.m11, m12 - o.m12, m21 - o.m21, m22 - o.m22};
    }
    SymbolMatrix2 operator*(cplx s) const { return {s * m11, s * m12, s * m21, s * m22}; }
    double max_abs() const;
};

SymbolMatrix2 q_matrix(Label kind, double xi1, double xi2, const CutoffParams& p = {});

// lambda = <xi1+xi2>^{2N} / (<xi1+xi2>^{2N} + <xi2>^{2N}), and 1 - lambda, both log-stable
struct SobolevWeight {
    int N = 6;
    double lambda(double xi1, double xi2) const;
    double one_minus_lambda(double xi1, double xi2) const;
};

SymbolMatrix2 b_matrix(Label kind, int N, double xi1, double xi2, const CutoffParams& p = {});

enum class NormalFormKind { A, C };
double normal_form_G(double xi1, double xi2);
// (x1..x4) for kind A (right-hand side from B1,B2) or kind C (from S1,S2)
std::array<cplx, 4> solve_normal_form(NormalFormKind kind, int N, double xi1, double xi2,
                                      const CutoffParams& p = {});
// Row i of the 4x4 system acting on (x1..x4).
std::array<double, 16> normal_form_system(double xi1, double xi2);
// Right-hand side (-r1, -r4, -r2, -r3) with r from B (kind A) or S (kind C)
std::array<cplx, 4> normal_form_rhs(NormalFormKind kind, int N, double xi1, double xi2,
                                    const CutoffParams& p = {});

// A1, A2, C1, C2 as matrices. A1 = [[0,a1],[a4,0]], A2 = diag(a2,a3).
SymbolMatrix2 normal_form_matrix(Label kind, int N, double xi1, double xi2, const CutoffParams& p = {});

// Any label through one entry point. N is ignored for Q and S.
SymbolMatrix2 symbol_matrix(Label kind, int N, double xi1, double xi2, const CutoffParams& p = {});

// Shatah symbols. Signs: +1 for h, -1 for its conjugate.
struct Signs2 {
    int i1, i2;
};
constexpr Signs2 PP{1, 1}, PM{1, -1}, MM{-1, -1};
double shatah_q(Signs2 s, double xi, double eta);
// <xi+eta> - i1 <xi> - i2 <eta>, evaluated without cancellation
double shatah_denominator(Signs2 s, double xi, double eta);
cplx shatah_b(Signs2 s, double xi, double eta);

struct Signs3 {
    int i1, i2, i3;
};
constexpr Signs3 PPM{1, 1, -1}, PMM{1, -1, -1}, PPP{1, 1, 1}, MMM{-1, -1, -1};
constexpr std::array<Signs3, 4> cubic_triples{PPM, PMM, PPP, MMM};
std::string triple_name(Signs3 t);
double phase(Signs3 t, double xi, double eta, double sigma);
double cubic_symbol(Signs3 t, double xi, double eta, double sigma);
double c_star(double xi);

}  // namespace pw
