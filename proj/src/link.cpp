#include "xlink/link.hpp"

#include "xlink/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace xlink {

double cone_gain(double beamwidth_rad) {
    if (beamwidth_rad <= 0.0 || beamwidth_rad > kTwoPi)
        throw std::domain_error("cone_gain: beamwidth must be in (0, 2*pi]");
    return 2.0 / (1.0 - std::cos(0.5 * beamwidth_rad));
}

double friis_rx_power_w(const RadioParams& radio, double g_tx, double g_rx, double distance_m) {
    if (distance_m <= 0.0)
        throw std::domain_error("friis_rx_power_w: distance must be > 0");
    const double f = radio.wavelength_m / (4.0 * kPi * distance_m);
    return radio.tx_power_w * g_tx * g_rx * f * f;
}

double sir_linear(double signal_w, double interference_w) {
    if (signal_w <= 0.0)
        throw std::domain_error("sir_linear: signal power must be > 0");
    if (interference_w == 0.0) return std::numeric_limits<double>::infinity();
    return signal_w / interference_w;
}

double to_db(double linear) {
    if (linear == std::numeric_limits<double>::infinity()) return linear;
    return 10.0 * std::log10(linear);
}

}  // namespace xlink
