#ifndef XLINK_GEOMETRY_HPP
#define XLINK_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <stdexcept>

namespace xlink {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kKmToM = 1000.0;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Wraps an angle into [0, 2*pi).
inline double wrap_two_pi(double angle_rad) {
    double a = std::fmod(angle_rad, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a = 0.0;  // fmod can land exactly on 2*pi after the add
    return a;
}

/// 3D vector in the Geocentric Equatorial Coordinate frame, kilometers
/// unless a caller says otherwise.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }

    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    constexpr double norm2() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }

    Vec3 normalized() const {
        const double n = norm();
        if (n == 0.0) throw std::domain_error("cannot normalize a zero vector");
        return {x / n, y / n, z / n};
    }
};

inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

/// Row-major 3x3 matrix.
struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    Vec3 operator*(const Vec3& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }
    Mat3 transpose() const {
        Mat3 t;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t.m[i][j] = m[j][i];
        return t;
    }
    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }
    double determinant() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }
    static Mat3 identity() {
        Mat3 r;
        r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
        return r;
    }
};

/// Spherical Earth with a gravitational parameter for Kepler's third law.
struct EarthModel {
    double radius_km = 6371.0;
    double mu_m3s2 = 3.986004418e14;
};

/// One circular orbit. Angles in radians.
struct OrbitSpec {
    double altitude_km = 0.0;
    double inclination_rad = 0.0;
    double raan_rad = 0.0;
    int num_satellites = 0;
    double phase_offset_rad = 0.0;

    double semi_major_axis_km(const EarthModel& earth) const {
        return earth.radius_km + altitude_km;
    }
};

struct SatelliteState {
    Vec3 position;      // km, GEC
    Vec3 tx_pointing;   // unit vector toward the in-orbit transmit neighbor
    int orbit_index = 0;
    int sat_index = 0;
};

/// Orbital period from Kepler's third law, seconds.
double orbital_period_s(double altitude_km, const EarthModel& earth);

/// Mean motion 2*pi/T, rad/s.
double mean_motion_rad_s(double altitude_km, const EarthModel& earth);

/// phi_j = delta_beta + 2*pi*j/N, wrapped to [0, 2*pi).
double true_anomaly(int sat_index, int num_satellites, double delta_beta_rad);

/// Position on the orbital circle in the orbital-plane frame.
Vec3 in_plane_position(double true_anomaly_rad, double semi_major_axis_km);

/// Rotation from the orbital-plane frame to GEC: Rz(raan) * Rx(inclination).
Mat3 plane_to_gec_matrix(double raan_rad, double inclination_rad);

/// GEC position of satellite j at time t, with the anomaly advanced by the
/// mean motion.
Vec3 gec_position(const OrbitSpec& orbit, int sat_index, double t_s, const EarthModel& earth);

/// Rise/set metric for Earth blockage between two satellites.
/// <= 0 means the path is clear (visible); > 0 means the line between the
/// endpoints passes within one Earth radius of the center.
double rise_set_metric(const Vec3& sat, const Vec3& receiver, const EarthModel& earth);

/// True iff the closed segment r1-r2 dips inside the Earth sphere.
/// Independent of rise_set_metric; used to cross-check it.
bool segment_blocked(const Vec3& r1, const Vec3& r2, const EarthModel& earth);

/// Angle between two non-zero vectors, [0, pi]; the arccos argument is
/// clamped to [-1, 1].
double angle_between(const Vec3& u, const Vec3& v);

/// Relative angular offset between two co-planar orbits at time t:
/// delta_beta0 + (n_high - n_low) * t, wrapped to [0, 2*pi).
double relative_angular_offset(double t_s, double h_low_km, double h_high_km,
                               double delta_beta0_rad, const EarthModel& earth);

/// 2*pi / |n2 - n1|: the time for the relative phase of two co-planar orbits
/// to repeat. Infinite when the altitudes coincide.
double synodic_period_s(double h1_km, double h2_km, const EarthModel& earth);

}  // namespace xlink

#endif
