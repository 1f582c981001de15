#ifndef XLINK_SINGLE_ORBIT_HPP
#define XLINK_SINGLE_ORBIT_HPP

#include "xlink/geometry.hpp"
#include "xlink/link.hpp"

#include <vector>

namespace xlink::single_orbit {

/// Closed-form interference for N evenly spaced satellites in one circular
/// orbit. Index 0 is the receiver, index 1 the serving transmitter, indices
/// 2..N_i+1 the interferers on the transmitter side.

struct Result {
    int num_interferers = 0;
    double mean_interference_w = 0.0;
    double sir = 0.0;  // linear, +inf when no interferers
    std::vector<double> interferer_distances_km;
};

/// Elevation-style angle of satellite i seen from the receiver chord
/// geometry: theta_i = pi/2 - i*pi/N, for i in [1, N].
double theta_i(int i, int num_satellites);

/// Angular bound below which satellite index i is not blocked by the Earth:
/// i < (N/pi) * arccos(Re/(Re+h)).
double blockage_bound(int num_satellites, double altitude_km, const EarthModel& earth);

/// Angular bound from the mutual beam-coverage condition:
/// i < 1 + N*alpha/(2*pi). Carries the cone-edge guard so exact-boundary
/// satellites are excluded, matching the oracle's strict test.
double beam_bound(int num_satellites, double beamwidth_rad);

/// True when the beam bound is the strictly smaller of the two (the case
/// where the SIR is altitude-independent).
bool beam_bound_active(int num_satellites, double altitude_km, double beamwidth_rad,
                       const EarthModel& earth);

/// Number of interferers: integers i in [2, N] strictly below both bounds,
/// clamped to [0, N-2].
int num_interferers(int num_satellites, double altitude_km, double beamwidth_rad,
                    const EarthModel& earth);

/// Chord distance between the receiver and satellite i, km.
double interferer_distance_km(int i, int num_satellites, double altitude_km,
                              const EarthModel& earth);

/// Sum of received interference powers over the interferer set, watts.
double mean_interference_w(int num_satellites, double altitude_km, const RadioParams& radio,
                           const EarthModel& earth);

/// Average SIR; independent of transmit power and wavelength, and of the
/// altitude whenever the beam bound is the active minimum.
double sir(int num_satellites, double altitude_km, double beamwidth_rad,
           const EarthModel& earth);

Result evaluate(int num_satellites, double altitude_km, const RadioParams& radio,
                const EarthModel& earth);

}  // namespace xlink::single_orbit

#endif
