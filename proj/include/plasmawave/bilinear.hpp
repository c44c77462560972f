#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>

#include "plasmawave/spectral.hpp"
#include "plasmawave/symbols.hpp"

namespace pw {

// Spectra of the two components of a 2-vector field.
struct Vec2 {
    cvec a, b;
};

using ScalarSymbol = std::function<cplx(double, double)>;
using MatrixSymbol = std::function<SymbolMatrix2(double, double)>;
using TrilinearSymbol = std::function<cplx(double, double, double)>;

// Symbol M(xi_a, xi_b) sampled on every ordered pair of lattice modes.
// Lattices larger than the memory cap are evaluated on the fly instead.
class BilinearPlan {
public:
    static constexpr std::size_t default_cap_bytes = std::size_t(1) << 31;

    BilinearPlan(const GridSpec& g, ScalarSymbol s, bool precompute = true);
    BilinearPlan(const GridSpec& g, MatrixSymbol m, bool precompute = true);

    const GridSpec& grid() const { return g_; }
    bool is_matrix() const { return static_cast<bool>(msym_); }
    bool precomputed() const { return pre_; }
    const ScalarSymbol& scalar_symbol() const { return ssym_; }
    const MatrixSymbol& matrix_symbol() const { return msym_; }

    // modes m1, m2 in (-n/2, n/2)
    cplx scalar(long m1, long m2) const;
    SymbolMatrix2 matrix(long m1, long m2) const;
    // entry e (0..3 row-major) lattice row for mode m1, or nullptr when the entry vanishes identically
    const cplx* row(int e, long m1) const;
    bool entry_zero(int e) const { return zero_[e]; }
    std::size_t lattice_bytes() const;

private:
    void build();

    GridSpec g_;
    ScalarSymbol ssym_;
    MatrixSymbol msym_;
    bool pre_ = false;
    std::array<cvec, 4> lat_;
    std::array<bool, 4> zero_{false, false, false, false};
};

// Output spectrum at xi_k: (1/L) sum_j f^(xi_j) M(xi_j, xi_k - xi_j) V^(xi_k - xi_j), no wraparound.
// All arguments and results are spectra.
cvec apply_bilinear(const cvec& f, const BilinearPlan& plan, const cvec& V);
Vec2 apply_bilinear(const cvec& f, const BilinearPlan& plan, const Vec2& V);

// Plan for conj(M^T(-xi1, xi1 + xi2)).
BilinearPlan adjoint_plan(const BilinearPlan& plan);

// (1/L^2) sum f1^(x1) f2^(x2) M(x1, x2, x3) V^(x3) at x1+x2+x3; n <= 512.
cvec apply_trilinear(const GridSpec& g, const cvec& f1, const cvec& f2, const TrilinearSymbol& M, const cvec& V);

// Bony pieces.
cvec paraproduct(const GridSpec& g, const cvec& f, const cvec& gs, const CutoffParams& p = {});
cvec bony_remainder(const GridSpec& g, const cvec& f, const cvec& gs, const CutoffParams& p = {});

// Memoized plans keyed by grid and a caller-chosen label.
std::shared_ptr<const BilinearPlan> cached_plan(const GridSpec& g, const std::string& key,
                                                const std::function<BilinearPlan()>& build);
void clear_plan_cache();

enum class EnergyPair { r_Q1_B1, u_Q2_B2 };
// |Re<<d>^N O[f, Q - B] U, <d>^N U>| / (||f||_{W^{1,inf}} ||U||_{H^N}^2), f real, U real.
// With zero_b the B matrix is dropped (control).
double energy_orthogonality_check(const GridSpec& g, const cvec& f, const Vec2& U, int N, EnergyPair which,
                                  bool zero_b = false, const CutoffParams& p = {});

// Pointwise helpers on 2-vectors of spectra.
Vec2 operator+(const Vec2& x, const Vec2& y);
Vec2 operator-(const Vec2& x, const Vec2& y);
Vec2 scale(const Vec2& x, cplx s);
// D U = (-<d> u2, <d> u1)
Vec2 apply_D(const GridSpec& g, const Vec2& U);
double l2_norm(const GridSpec& g, const Vec2& U);
double sobolev_norm(const GridSpec& g, const Vec2& U, double s);
double max_abs(const Vec2& U);

}  // namespace pw
