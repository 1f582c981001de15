#include "xlink/single_orbit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xlink::single_orbit {

namespace {

void check_params(int n, double h, double alpha) {
    if (n < 3) throw std::domain_error("single_orbit: need at least 3 satellites");
    if (h <= 0.0) throw std::domain_error("single_orbit: altitude must be > 0");
    if (alpha <= 0.0 || alpha > kTwoPi)
        throw std::domain_error("single_orbit: beamwidth must be in (0, 2*pi]");
}

}  // namespace

double theta_i(int i, int num_satellites) {
    if (i < 1 || i > num_satellites)
        throw std::out_of_range("theta_i: index must be in [1, N]");
    return kPi / 2.0 - i * kPi / num_satellites;
}

double blockage_bound(int num_satellites, double altitude_km, const EarthModel& earth) {
    return num_satellites / kPi *
           std::acos(earth.radius_km / (earth.radius_km + altitude_km));
}

double beam_bound(int num_satellites, double beamwidth_rad) {
    return 1.0 + num_satellites * (beamwidth_rad - 2.0 * kBeamEdgeGuardRad) / kTwoPi;
}

bool beam_bound_active(int num_satellites, double altitude_km, double beamwidth_rad,
                       const EarthModel& earth) {
    return beam_bound(num_satellites, beamwidth_rad) <
           blockage_bound(num_satellites, altitude_km, earth);
}

int num_interferers(int num_satellites, double altitude_km, double beamwidth_rad,
                    const EarthModel& earth) {
    check_params(num_satellites, altitude_km, beamwidth_rad);
    const double bound = std::min(blockage_bound(num_satellites, altitude_km, earth),
                                  beam_bound(num_satellites, beamwidth_rad));
    // largest integer strictly below the bound; a bound sitting exactly on an
    // integer excludes that value
    int i_max = static_cast<int>(std::ceil(bound)) - 1;
    i_max = std::min(i_max, num_satellites);
    return std::clamp(i_max - 1, 0, num_satellites - 2);
}

double interferer_distance_km(int i, int num_satellites, double altitude_km,
                              const EarthModel& earth) {
    if (i < 1 || i > num_satellites - 1)
        throw std::out_of_range("interferer_distance_km: index must be in [1, N-1]");
    const double a = earth.radius_km + altitude_km;
    return std::sqrt(2.0 * a * a * (1.0 - std::cos(kTwoPi * i / num_satellites)));
}

double mean_interference_w(int num_satellites, double altitude_km, const RadioParams& radio,
                           const EarthModel& earth) {
    const int ni = num_interferers(num_satellites, altitude_km, radio.beamwidth_rad, earth);
    const double a_m = (earth.radius_km + altitude_km) * kKmToM;
    const double cone = 1.0 - std::cos(0.5 * radio.beamwidth_rad);
    const double common = radio.wavelength_m * radio.wavelength_m * radio.tx_power_w /
                          (8.0 * kPi * kPi * cone * cone * a_m * a_m);
    double sum = 0.0;
    for (int i = 2; i <= ni + 1; ++i)
        sum += common / (1.0 - std::cos(kTwoPi * i / num_satellites));
    return sum;
}

double sir(int num_satellites, double altitude_km, double beamwidth_rad,
           const EarthModel& earth) {
    const int ni = num_interferers(num_satellites, altitude_km, beamwidth_rad, earth);
    if (ni == 0) return std::numeric_limits<double>::infinity();
    const double signal_term = 1.0 / (1.0 - std::cos(kTwoPi / num_satellites));
    double interference_term = 0.0;
    for (int i = 2; i <= ni + 1; ++i)
        interference_term += 1.0 / (1.0 - std::cos(kTwoPi * i / num_satellites));
    return signal_term / interference_term;
}

Result evaluate(int num_satellites, double altitude_km, const RadioParams& radio,
                const EarthModel& earth) {
    Result r;
    r.num_interferers = num_interferers(num_satellites, altitude_km, radio.beamwidth_rad, earth);
    r.mean_interference_w = mean_interference_w(num_satellites, altitude_km, radio, earth);
    r.sir = sir(num_satellites, altitude_km, radio.beamwidth_rad, earth);
    r.interferer_distances_km.reserve(r.num_interferers);
    for (int i = 2; i <= r.num_interferers + 1; ++i)
        r.interferer_distances_km.push_back(
            interferer_distance_km(i, num_satellites, altitude_km, earth));
    return r;
}

}  // namespace xlink::single_orbit
