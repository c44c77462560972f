#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plasmawave/bilinear.hpp"
#include "plasmawave/spectral.hpp"

namespace pw {

struct DiagnosticsRecord {
    double t = 0.0;
    double sup_h = 0.0;
    double U_HN = 0.0;          // ||U||_{H^{N_sob}}
    double U_Wm_inf = 0.0;      // ||U||_{W^{N1_sob+10,inf}}
    double gammaU_HN1 = 0.0;    // ||Gamma U||_{H^{N1_sob}}
    double xU_HN1 = 0.0;        // ||x U||_{H^{N1_sob}}
    double xw_HN1m4 = 0.0;      // ||x w||_{H^{N1_sob-4}}
    double neutrality = 0.0;    // mean(n - 1)
    double tail_ratio = 0.0;    // energy share of the top third of the retained band
    double max_dx_n = 0.0;
    double sup_weighted_w = 0.0;  // sup over the resolved window of <xi>^m |w^|
    double theta_carrier = 0.0;
    bool wrap_valid = true;
    double gammah_HN1 = 0.0;    // ||Gamma h||_{H^{N1_sob}}, equal to gammaU_HN1 pointwise
};

std::string csv_header();
std::string csv_row(const DiagnosticsRecord& r);
DiagnosticsRecord parse_csv_row(const std::string& line);

// Gamma U = t dU/dx + x dU/dt. U and dU/dt are given as spectra.
Vec2 gamma_field(const GridSpec& g, const Vec2& U, double t, const Vec2& Ut);
cvec gamma_field(const GridSpec& g, const cvec& h, double t, const cvec& ht);

// Gamma~ g = Gamma g - x N(h) + (i d/<d>) g with g_t = -i<d>g + N(h). Spectra in and out.
cvec gamma_tilde_profile(const GridSpec& g, const cvec& gs, double t, const cvec& Nh);

struct RateFit {
    double slope = 0.0;
    double intercept = 0.0;
    double band_lo = 0.0;  // bootstrap 2.5% / 97.5% quantiles of the slope
    double band_hi = 0.0;
    std::size_t points = 0;
};

// Least squares of log y against log t on t in [t_lo, t_hi]; needs >= 8 positive points.
RateFit rate_fit(const std::vector<double>& t, const std::vector<double>& y, double t_lo, double t_hi,
                 std::uint64_t seed = 12345, int resamples = 200);

enum class ShockStatus { clean, steepening, resolution_loss };
const char* shock_status_name(ShockStatus s);

// Steepening: max|dn/dx| above 10x its first value and accelerating (positive second difference).
// Resolution loss: tail ratio above 1e-4.
class ShockDetector {
public:
    void observe(double t, double max_dx_n, double tail_ratio);
    ShockStatus status() const;
    std::optional<double> steepening_time() const { return steepening_; }
    std::optional<double> resolution_loss_time() const { return resolution_; }
    double initial_gradient() const { return first_; }
    double max_gradient() const { return peak_; }

    static constexpr double steepening_factor = 10.0;
    static constexpr double tail_threshold = 1e-4;

private:
    std::vector<double> hist_;
    double first_ = 0.0, peak_ = 0.0;
    std::optional<double> steepening_, resolution_;
};

// Top-third share of sum |s|^2 inside |k| <= n/3.
double spectral_tail_ratio(const GridSpec& g, const cvec& spec);
double spectral_tail_ratio(const GridSpec& g, const Vec2& U);

}  // namespace pw
