#ifndef XLINK_COPLANAR_HPP
#define XLINK_COPLANAR_HPP

#include "xlink/geometry.hpp"
#include "xlink/link.hpp"

#include <cmath>
#include <vector>

namespace xlink::coplanar {

/// Two circular orbits in the same plane at different altitudes. The
/// receiver sits at the top of its circle, (0, Re+h); angles are measured
/// from its radial direction, positive toward the serving transmitter.

struct Geometry {
    double rx_altitude_km = 0.0;          // h
    double interferer_altitude_km = 0.0;  // h_c
    int num_rx_satellites = 0;            // N
    int num_interferer_satellites = 0;    // N_c
    double delta_beta_rad = 0.0;          // relative angular offset
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm() const { return std::sqrt(x * x + y * y); }
};

/// Angle between two non-zero 2D vectors, [0, pi].
double angle_between2(const Vec2& u, const Vec2& v);

/// Angular position of interferer j from the receiver's radial direction.
double interferer_angle(const Geometry& geom, int j);

Vec2 rx_position(const Geometry& geom, const EarthModel& earth);
Vec2 interferer_position(const Geometry& geom, int j, const EarthModel& earth);

/// Unit vector along the receiver's beam axis (toward its in-orbit
/// neighbor), (sin A, -cos A) with A = pi/2 - pi/N.
Vec2 rx_beam_direction(const Geometry& geom);

/// Off-axis angle of interferer j seen from the receiver.
double psi_j(const Geometry& geom, int j, const EarthModel& earth);

/// Off-axis angle of the receiver seen from interferer j, whose beam points
/// at its own in-orbit neighbor (j-1 mod N_c).
double psi_j_prime(const Geometry& geom, int j, const EarthModel& earth);

/// Distance from the receiver to interferer j, km.
double interferer_distance_km(const Geometry& geom, int j, const EarthModel& earth);

/// Indices of orbit-2 satellites satisfying visibility and both beam
/// conditions.
std::vector<int> interferer_set(const Geometry& geom, double beamwidth_rad,
                                const EarthModel& earth);

double mean_interference_w(const Geometry& geom, const RadioParams& radio,
                           const EarthModel& earth);

/// Serving-link distance 2*(Re+h)*sin(pi/N), km.
double serving_distance_km(const Geometry& geom, const EarthModel& earth);

/// Signal power over interference power; +inf when the set is empty.
double sir(const Geometry& geom, const RadioParams& radio, const EarthModel& earth);

}  // namespace xlink::coplanar

#endif
