// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace irssim {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Cartesian point in the global frame, meters.
struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

Point3 operator+(const Point3& a, const Point3& b);
Point3 operator-(const Point3& a, const Point3& b);
Point3 operator*(double s, const Point3& p);
double dot(const Point3& a, const Point3& b);
double norm(const Point3& p);

/// Euclidean distance between two points.
double distance(const Point3& a, const Point3& b);

/// Carrier frequency with derived wavelength and wave number.
struct CarrierConfig {
    double frequency_hz = 0.0;
    double wavelength_m = 0.0;
    double wavenumber_rad_per_m = 0.0;
};

/// Builds a CarrierConfig from the frequency; throws on non-positive input.
CarrierConfig make_carrier(double frequency_hz);

/// Rectangular reflecting panel lying in a plane of constant global x,
/// with its local y/z axes aligned with the global frame.  Elements form
/// a uniform grid of cell centers; fractional cells are dropped, never
/// stretched, so the spacing is exact.
struct IrsPanel {
    Point3 center;
    double side_y_m = 0.0;
    double side_z_m = 0.0;
    double spacing_y_m = 0.0;
    double spacing_z_m = 0.0;
    double tau = 1.0; // field reflection magnitude
    std::size_t element_count = 0;
    std::vector<std::pair<double, double>> element_local_offsets; // (y, z), meters
};

/// Constructs the panel and its element grid.  Throws std::invalid_argument
/// on non-positive spacing, spacing larger than the side, or tau outside (0, 1].
IrsPanel make_panel(const Point3& center, double side_y_m, double side_z_m,
                    double spacing_y_m, double spacing_z_m, double tau = 1.0);

/// Element centers in the global frame, row-major over (y, z) grid indices.
std::vector<Point3> element_positions(const IrsPanel& panel);

/// Elevation (from +z) and azimuth (from +x, in the x-y plane) in the
/// panel-centered spherical frame.
struct AnglePair {
    double theta_rad = 0.0;
    double phi_rad = 0.0;
};

/// Direction cosines (A_x, A_y, A_z) of an angle pair; the unit vector they
/// form points from the panel center toward the source/destination.
struct DirectionCosines {
    double a_x = 0.0;
    double a_y = 0.0;
    double a_z = 0.0;
};

DirectionCosines direction_cosines(const AnglePair& angles);

/// Spherical angles of `source` as seen from the panel center.
/// Throws std::invalid_argument when source coincides with the center.
AnglePair incidence_angles(const Point3& source, const IrsPanel& panel);

/// Far-field (Fraunhofer) distance of the panel aperture:
/// 8 (L_y^2 + L_z^2) / lambda.
double fraunhofer_distance(const IrsPanel& panel, const CarrierConfig& carrier);

/// Wraps an angle to (-pi, pi].
double wrap_to_pi(double angle_rad);

} // namespace irssim
