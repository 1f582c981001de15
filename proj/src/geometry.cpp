#include "xlink/geometry.hpp"

#include <algorithm>
#include <limits>

namespace xlink {

double orbital_period_s(double altitude_km, const EarthModel& earth) {
    if (altitude_km <= 0.0) throw std::domain_error("orbital_period_s: altitude must be > 0");
    const double a_m = (earth.radius_km + altitude_km) * kKmToM;
    return kTwoPi * std::sqrt(a_m * a_m * a_m / earth.mu_m3s2);
}

double mean_motion_rad_s(double altitude_km, const EarthModel& earth) {
    return kTwoPi / orbital_period_s(altitude_km, earth);
}

double true_anomaly(int sat_index, int num_satellites, double delta_beta_rad) {
    if (sat_index < 0 || sat_index >= num_satellites)
        throw std::out_of_range("true_anomaly: satellite index out of range");
    return wrap_two_pi(delta_beta_rad + kTwoPi * sat_index / num_satellites);
}

Vec3 in_plane_position(double true_anomaly_rad, double semi_major_axis_km) {
    return {semi_major_axis_km * std::cos(true_anomaly_rad),
            semi_major_axis_km * std::sin(true_anomaly_rad), 0.0};
}

Mat3 plane_to_gec_matrix(double raan_rad, double inclination_rad) {
    const double co = std::cos(raan_rad), so = std::sin(raan_rad);
    const double cg = std::cos(inclination_rad), sg = std::sin(inclination_rad);
    Mat3 r;
    r.m = {{{co, -so * cg, so * sg},
            {so, co * cg, -co * sg},
            {0.0, sg, cg}}};
    return r;
}

Vec3 gec_position(const OrbitSpec& orbit, int sat_index, double t_s, const EarthModel& earth) {
    const double phi = true_anomaly(sat_index, orbit.num_satellites, orbit.phase_offset_rad) +
                       mean_motion_rad_s(orbit.altitude_km, earth) * t_s;
    const Vec3 in_plane = in_plane_position(phi, orbit.semi_major_axis_km(earth));
    return plane_to_gec_matrix(orbit.raan_rad, orbit.inclination_rad) * in_plane;
}

double rise_set_metric(const Vec3& sat, const Vec3& receiver, const EarthModel& earth) {
    const double re2 = earth.radius_km * earth.radius_km;
    const double a = sat.norm2();
    const double b = receiver.norm2();
    if (a <= re2 || b <= re2)
        throw std::domain_error("rise_set_metric: position inside the Earth");
    const double u = sat.dot(receiver);
    return u * u - a * b + (a + b) * re2 - 2.0 * re2 * u;
}

bool segment_blocked(const Vec3& r1, const Vec3& r2, const EarthModel& earth) {
    const Vec3 d = r2 - r1;
    const double dd = d.norm2();
    if (dd == 0.0) return false;
    // closest point of the segment to the Earth center
    double s = -r1.dot(d) / dd;
    s = std::clamp(s, 0.0, 1.0);
    const Vec3 p = r1 + d * s;
    return p.norm2() < earth.radius_km * earth.radius_km;
}

double angle_between(const Vec3& u, const Vec3& v) {
    const double nu = u.norm(), nv = v.norm();
    if (nu == 0.0 || nv == 0.0)
        throw std::domain_error("angle_between: zero vector");
    const double c = std::clamp(u.dot(v) / (nu * nv), -1.0, 1.0);
    return std::acos(c);
}

double relative_angular_offset(double t_s, double h_low_km, double h_high_km,
                               double delta_beta0_rad, const EarthModel& earth) {
    if (h_low_km == h_high_km) return wrap_two_pi(delta_beta0_rad);
    const double dn = mean_motion_rad_s(h_high_km, earth) - mean_motion_rad_s(h_low_km, earth);
    return wrap_two_pi(delta_beta0_rad + dn * t_s);
}

double synodic_period_s(double h1_km, double h2_km, const EarthModel& earth) {
    const double dn = mean_motion_rad_s(h2_km, earth) - mean_motion_rad_s(h1_km, earth);
    if (dn == 0.0) return std::numeric_limits<double>::infinity();
    return kTwoPi / std::abs(dn);
}

}  // namespace xlink
