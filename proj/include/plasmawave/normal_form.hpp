#pragma once

#include <memory>

#include "plasmawave/bilinear.hpp"
#include "plasmawave/symbols.hpp"

namespace pw {

// Shared operator inventory for one grid and Sobolev index. Plans are built on first use.
class NormalFormContext {
public:
    NormalFormContext(const GridSpec& g, int N, const CutoffParams& p = {});

    const GridSpec& grid() const { return g_; }
    int sobolev_N() const { return N_; }
    const CutoffParams& cutoff() const { return p_; }

    std::shared_ptr<const BilinearPlan> matrix_plan(Label l) const;
    std::shared_ptr<const BilinearPlan> q_plan(Signs2 s) const;
    std::shared_ptr<const BilinearPlan> b_plan(Signs2 s) const;

private:
    GridSpec g_;
    int N_;
    CutoffParams p_;
};

// Phi = U + O[u,A1]U + O[r,A2]U + O[u,C1]U + O[r,C2]U, U = (r^, u^)
Vec2 phi_transform(const NormalFormContext& ctx, const Vec2& U);

// sum over (++, +-, --) of O[h^i1, q^{i1 i2}] h^i2: the quadratic part of the h equation
cvec quadratic_Q(const NormalFormContext& ctx, const cvec& h);
// g = h + O[h,b++]h + O[h,b+-]conj(h) + O[conj(h),b--]conj(h); with zero_b, g = h
cvec shatah_g(const NormalFormContext& ctx, const cvec& h, bool zero_b = false);
cvec cubic_N(const NormalFormContext& ctx, const cvec& h);
cvec quartic_remainder(const NormalFormContext& ctx, const cvec& h);

// || (g(t+dt) - g(t-dt)) / (2 dt) + i<d>g(t) - N(h(t)) ||_{L2} on the dealiased band |k| <= n/3.
// With zero_b the b-symbols are dropped (g = h) and N is dropped with them.
double residual_g(const NormalFormContext& ctx, const cvec& h_minus, const cvec& h_mid, const cvec& h_plus,
                  double dt, bool zero_b = false);

struct IdentityResidual {
    double residual = 0.0;  // || lhs + rhs ||
    double scale = 0.0;     // largest term norm
    double relative() const { return scale == 0.0 ? 0.0 : residual / scale; }
};

enum class IdentityKind { A_B, C_S };
// r-line:  D O[r,X2]U - O[<d>r,X1]U - O[r,X2]DU + O[r,Y1]U
// u-line:  D O[u,X1]U + O[<d>u,X2]U - O[u,X1]DU + O[u,Y2]U
// (X,Y) = (A,B) or (C,S)
IdentityResidual operator_identity_r(const NormalFormContext& ctx, const cvec& r, const Vec2& U, IdentityKind k);
IdentityResidual operator_identity_u(const NormalFormContext& ctx, const cvec& u, const Vec2& U, IdentityKind k);

}  // namespace pw
