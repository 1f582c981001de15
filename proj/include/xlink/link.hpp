#ifndef XLINK_LINK_HPP
#define XLINK_LINK_HPP

#include <limits>

namespace xlink {

/// Radio parameters shared by every satellite in a scenario.
struct RadioParams {
    double tx_power_w = 1.0;
    double wavelength_m = 1e-3;   // 1 mm ~ 300 GHz
    double beamwidth_rad = 0.0;   // full cone angle alpha
};

struct LinkBudget {
    double signal_w = 0.0;
    double interference_w = 0.0;
    double sir_linear = std::numeric_limits<double>::infinity();
};

/// Cone-pattern main-lobe gain G = 2 / (1 - cos(alpha/2)). Defined so that
/// G times the cone solid angle equals 4*pi.
double cone_gain(double beamwidth_rad);

/// Free-space received power P_tx * g_tx * g_rx * (lambda / (4*pi*d))^2.
double friis_rx_power_w(const RadioParams& radio, double g_tx, double g_rx, double distance_m);

/// signal/interference; +infinity when interference is zero.
double sir_linear(double signal_w, double interference_w);

/// 10*log10(x); +/-infinity pass through.
double to_db(double linear);

/// Angular guard applied at the cone edge: an angle within this of alpha/2
/// counts as outside the beam. Absorbs rounding when a satellite sits
/// exactly on the cone boundary (the boundary itself carries no gain).
constexpr double kBeamEdgeGuardRad = 1e-9;

/// Strict cone-membership test shared by the analytic models and the
/// simulation oracle.
inline bool inside_beam(double off_axis_rad, double beamwidth_rad) {
    return off_axis_rad < 0.5 * beamwidth_rad - kBeamEdgeGuardRad;
}

}  // namespace xlink

#endif
