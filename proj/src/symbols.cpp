#include "plasmawave/symbols.hpp"

#include <algorithm>
#include <cmath>

namespace pw {

void CutoffParams::validate() const {
    if (!(eps1 > 0.0 && 2.0 * eps1 < eps2 && eps2 < 0.5))
        throw config_error("cutoff parameters need 0 < 2*eps1 < eps2 < 1/2");
}

double smoothstep(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    return u * u * u * (10.0 - 15.0 * u + 6.0 * u * u);
}

double theta(double xi1, double xi2, const CutoffParams& p) {
    const double z = xi1 * xi1 / (p.eps2 * p.eps2 * (1.0 + xi2 * xi2));
    const double lo = (p.eps1 / p.eps2) * (p.eps1 / p.eps2);
    return smoothstep((1.0 - z) / (1.0 - lo));
}

double remainder_weight(double xi1, double xi2, const CutoffParams& p) {
    return 1.0 - theta(xi1, xi2, p) - theta(xi2, xi1, p);
}

const char* label_name(Label l) {
    switch (l) {
    case Label::Q1: return "Q1";
    case Label::Q2: return "Q2";
    case Label::S1: return "S1";
    case Label::S2: return "S2";
    case Label::B1: return "B1";
    case Label::B2: return "B2";
    case Label::A1: return "A1";
    case Label::A2: return "A2";
    case Label::C1: return "C1";
    case Label::C2: return "C2";
    }
    return "?";
}

double SymbolMatrix2::max_abs() const {
    return std::max({std::abs(m11), std::abs(m12), std::abs(m21), std::abs(m22)});
}

SymbolMatrix2 q_matrix(Label kind, double xi1, double xi2, const CutoffParams& p) {
    const double s = xi1 + xi2;
    const double a = jb(xi1), b = jb(xi2), c = jb(s);
    const cplx I(0.0, 1.0);
    SymbolMatrix2 m;
    switch (kind) {
    case Label::Q1: {
        const double t = theta(xi1, xi2, p);
        m.m12 = 2.0 * I * xi1 * b * t;
        m.m21 = -2.0 * I * s * xi1 * xi2 / c * t;
        break;
    }
    case Label::Q2: {
        const double t = theta(xi1, xi2, p);
        m.m11 = 2.0 * I * xi2 * a * t;
        m.m22 = 2.0 * I * s * a * b / c * t;
        break;
    }
    case Label::S1: {
        const double w = remainder_weight(xi1, xi2, p);
        m.m12 = I * xi1 * b * w;
        m.m21 = -I * s * xi1 * xi2 / c * w;
        break;
    }
    case Label::S2: {
        const double w = remainder_weight(xi1, xi2, p);
        m.m11 = I * xi2 * a * w;
        m.m22 = I * s * a * b / c * w;
        break;
    }
    default: throw config_error(std::string("q_matrix does not evaluate ") + label_name(kind));
    }
    return m;
}

namespace {
double logistic(double z) {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}
}  // namespace

double SobolevWeight::lambda(double xi1, double xi2) const {
    return logistic(2.0 * N * (std::log(jb(xi1 + xi2)) - std::log(jb(xi2))));
}

double SobolevWeight::one_minus_lambda(double xi1, double xi2) const {
    return logistic(-2.0 * N * (std::log(jb(xi1 + xi2)) - std::log(jb(xi2))));
}

SymbolMatrix2 b_matrix(Label kind, int N, double xi1, double xi2, const CutoffParams& p) {
    Label q;
    if (kind == Label::B1) q = Label::Q1;
    else if (kind == Label::B2) q = Label::Q2;
    else throw config_error(std::string("b_matrix does not evaluate ") + label_name(kind));
    if (N < 1) throw config_error("Sobolev index N must be >= 1");
    SobolevWeight w{N};
    const SymbolMatrix2 direct = q_matrix(q, xi1, xi2, p);
    const SymbolMatrix2 reflected = q_matrix(q, -xi1, xi1 + xi2, p).conj_transpose();
    return direct * w.lambda(xi1, xi2) + reflected * w.one_minus_lambda(xi1, xi2);
}

double normal_form_G(double xi1, double xi2) {
    const double s = xi1 + xi2;
    return 2.0 * xi1 * xi1 + 2.0 * xi2 * xi2 + 2.0 * s * s + 3.0;
}

std::array<double, 16> normal_form_system(double xi1, double xi2) {
    const double a = jb(xi1), b = jb(xi2), c = jb(xi1 + xi2);
    return {-a, b, -c, 0.0,   //
            0.0, c, -b, -a,   //
            -b, a, 0.0, -c,   //
            c, 0.0, a, b};
}

namespace {
// entries (r1, r2, r3, r4) of the right-hand side matrices: r1, r4 antidiagonal, r2, r3 diagonal
std::array<cplx, 4> rhs_entries(NormalFormKind kind, int N, double xi1, double xi2, const CutoffParams& p) {
    SymbolMatrix2 m1, m2;
    if (kind == NormalFormKind::A) {
        m1 = b_matrix(Label::B1, N, xi1, xi2, p);
        m2 = b_matrix(Label::B2, N, xi1, xi2, p);
    } else {
        m1 = q_matrix(Label::S1, xi1, xi2, p);
        m2 = q_matrix(Label::S2, xi1, xi2, p);
    }
    return {m1.m12, m2.m11, m2.m22, m1.m21};
}
}  // namespace

std::array<cplx, 4> normal_form_rhs(NormalFormKind kind, int N, double xi1, double xi2, const CutoffParams& p) {
    auto r = rhs_entries(kind, N, xi1, xi2, p);
    return {-r[0], -r[3], -r[1], -r[2]};
}

std::array<cplx, 4> solve_normal_form(NormalFormKind kind, int N, double xi1, double xi2, const CutoffParams& p) {
    const auto r = rhs_entries(kind, N, xi1, xi2, p);
    const cplx b1 = r[0], b2 = r[1], b3 = r[2], b4 = r[3];
    const double a = jb(xi1), b = jb(xi2), c = jb(xi1 + xi2);
    const double G = normal_form_G(xi1, xi2);
    const double pm = 1.0 + 2.0 * xi2 * (xi1 + xi2);  // -a^2 + b^2 + c^2
    const double bc2 = 2.0 * b * c;
    const cplx u1 = a * b1 - b * b2 + c * b3;
    const cplx u2 = a * b2 - b * b1 - c * b4;
    const cplx u3 = a * b3 + b * b4 + c * b1;
    const cplx u4 = a * b4 + b * b3 - c * b2;
    return {(pm * u1 - bc2 * u4) / G, (-pm * u2 - bc2 * u3) / G, (-pm * u3 - bc2 * u2) / G,
            (pm * u4 - bc2 * u1) / G};
}

SymbolMatrix2 normal_form_matrix(Label kind, int N, double xi1, double xi2, const CutoffParams& p) {
    const bool is_a = kind == Label::A1 || kind == Label::A2;
    if (!is_a && kind != Label::C1 && kind != Label::C2)
        throw config_error(std::string("normal_form_matrix does not evaluate ") + label_name(kind));
    const auto x = solve_normal_form(is_a ? NormalFormKind::A : NormalFormKind::C, N, xi1, xi2, p);
    SymbolMatrix2 m;
    if (kind == Label::A1 || kind == Label::C1) {
        m.m12 = x[0];
        m.m21 = x[3];
    } else {
        m.m11 = x[1];
        m.m22 = x[2];
    }
    return m;
}

SymbolMatrix2 symbol_matrix(Label kind, int N, double xi1, double xi2, const CutoffParams& p) {
    switch (kind) {
    case Label::Q1:
    case Label::Q2:
    case Label::S1:
    case Label::S2: return q_matrix(kind, xi1, xi2, p);
    case Label::B1:
    case Label::B2: return b_matrix(kind, N, xi1, xi2, p);
    default: return normal_form_matrix(kind, N, xi1, xi2, p);
    }
}

double shatah_q(Signs2 sg, double xi, double eta) {
    const double s = xi + eta;
    const double a = jb(xi), b = jb(eta), c = jb(s);
    if (sg.i1 == 1 && sg.i2 == 1)
        return 0.5 * xi * b + s * a * b / (4.0 * c) + s * xi * eta / (4.0 * c);
    if (sg.i1 == 1 && sg.i2 == -1)
        return -0.5 * xi * b + 0.5 * a * eta - s * a * b / (2.0 * c) + s * xi * eta / (2.0 * c);
    if (sg.i1 == -1 && sg.i2 == -1)
        return -0.5 * xi * b + s * a * b / (4.0 * c) + s * xi * eta / (4.0 * c);
    throw config_error("no quadratic symbol for signs (-,+)");
}

namespace {
// <a><b> + ab without cancellation
double jb_prod_plus(double a, double b) {
    if (a * b >= 0.0) return jb(a) * jb(b) + a * b;
    return (1.0 + a * a + b * b) / (jb(a) * jb(b) - a * b);
}
}  // namespace

double shatah_denominator(Signs2 sg, double xi, double eta) {
    const double s = xi + eta;
    const double sum = jb(s) + jb(xi) + jb(eta);
    if (sg.i1 == -1 && sg.i2 == -1) return sum;
    if (sg.i1 == 1 && sg.i2 == 1) return -(1.0 + 2.0 * jb_prod_plus(xi, -eta)) / sum;
    if (sg.i1 == 1) return (1.0 + 2.0 * jb_prod_plus(s, eta)) / sum;
    return (1.0 + 2.0 * jb_prod_plus(s, xi)) / sum;
}

cplx shatah_b(Signs2 sg, double xi, double eta) {
    return cplx(0.0, shatah_q(sg, xi, eta) / shatah_denominator(sg, xi, eta));
}

std::string triple_name(Signs3 t) {
    std::string s;
    for (int v : {t.i1, t.i2, t.i3}) s += v > 0 ? '+' : '-';
    return s;
}

double phase(Signs3 t, double xi, double eta, double sigma) {
    return jb(xi) - t.i1 * jb(xi - eta) - t.i2 * jb(eta - sigma) - t.i3 * jb(sigma);
}

namespace {
// b / i, the real kernel q / denominator
double bq(Signs2 s, double xi, double eta) { return shatah_q(s, xi, eta) / shatah_denominator(s, xi, eta); }
}  // namespace

double cubic_symbol(Signs3 t, double x, double e, double s) {
    const auto q = shatah_q;
    if (t.i1 == 1 && t.i2 == 1 && t.i3 == -1)
        return bq(PP, e, x - e) * q(PM, e - s, s) + bq(PP, x - e, e) * q(PM, e - s, s) +
               bq(PM, x - s, s) * q(PP, x - e, e - s) + bq(PM, x - e, e) * q(PM, -s, s - e) +
               bq(MM, x - s, s) * q(MM, e - x, s - e) + bq(MM, s, x - s) * q(MM, e - x, s - e);
    if (t.i1 == 1 && t.i2 == -1 && t.i3 == -1)
        return bq(PP, e, x - e) * q(MM, e - s, s) + bq(PP, x - e, e) * q(MM, e - s, s) +
               bq(PM, x - s, s) * q(PM, x - e, e - s) + bq(PM, x - e, e) * q(PP, s - e, -s) +
               bq(MM, x - s, s) * q(PM, s - e, e - x) + bq(MM, s, x - s) * q(PM, s - e, e - x);
    if (t.i1 == 1 && t.i2 == 1 && t.i3 == 1)
        return bq(PP, e, x - e) * q(PP, e - s, s) + bq(PP, x - e, e) * q(PP, e - s, s) +
               bq(PM, x - e, e) * q(MM, s - e, -s);
    if (t.i1 == -1 && t.i2 == -1 && t.i3 == -1)
        return bq(PM, x - s, s) * q(MM, x - e, e - s) + bq(MM, x - s, s) * q(PP, e - x, s - e) +
               bq(MM, s, x - s) * q(PP, e - x, s - e);
    throw config_error("no cubic symbol for triple " + triple_name(t));
}

double c_star(double xi) {
    const double a = jb(xi), b = jb(2.0 * xi), x2 = xi * xi;
    const double t1 = a * b + x2 + a * a;
    const double t2 = a * b - a * a - x2;
    return x2 * (2.0 * a - (2.0 * a + b) * t1 * t1 / (6.0 * a * b) + t2 * t2 / (2.0 * (2.0 * a + b) * a * b));
}

}  // namespace pw
