// SPDX-License-Identifier: Apache-2.0
#include "irssim/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace irssim {

Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Point3 operator*(double s, const Point3& p) { return {s * p.x, s * p.y, s * p.z}; }
double dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(const Point3& p) { return std::sqrt(dot(p, p)); }

double distance(const Point3& a, const Point3& b) { return norm(a - b); }

CarrierConfig make_carrier(double frequency_hz) {
    if (!(frequency_hz > 0.0)) {
        throw std::invalid_argument("carrier frequency must be positive");
    }
    CarrierConfig c;
    c.frequency_hz = frequency_hz;
    c.wavelength_m = kSpeedOfLight / frequency_hz;
    c.wavenumber_rad_per_m = kTwoPi / c.wavelength_m;
    return c;
}

IrsPanel make_panel(const Point3& center, double side_y_m, double side_z_m,
                    double spacing_y_m, double spacing_z_m, double tau) {
    if (!(spacing_y_m > 0.0) || !(spacing_z_m > 0.0)) {
        throw std::invalid_argument("element spacing must be positive");
    }
    if (side_y_m < spacing_y_m || side_z_m < spacing_z_m) {
        throw std::invalid_argument("panel side smaller than element spacing");
    }
    if (!(tau > 0.0) || tau > 1.0) {
        throw std::invalid_argument("tau must lie in (0, 1]");
    }

    const auto n_y = static_cast<std::size_t>(std::floor(side_y_m / spacing_y_m));
    const auto n_z = static_cast<std::size_t>(std::floor(side_z_m / spacing_z_m));

    IrsPanel p;
    p.center = center;
    p.side_y_m = side_y_m;
    p.side_z_m = side_z_m;
    p.spacing_y_m = spacing_y_m;
    p.spacing_z_m = spacing_z_m;
    p.tau = tau;
    p.element_count = n_y * n_z;
    p.element_local_offsets.reserve(p.element_count);
    // Cell centers of the n_y x n_z grid; centroid is (0, 0) by construction.
    for (std::size_t i = 0; i < n_y; ++i) {
        const double y = (static_cast<double>(i) - 0.5 * static_cast<double>(n_y - 1)) * spacing_y_m;
        for (std::size_t j = 0; j < n_z; ++j) {
            const double z = (static_cast<double>(j) - 0.5 * static_cast<double>(n_z - 1)) * spacing_z_m;
            p.element_local_offsets.emplace_back(y, z);
        }
    }
    return p;
}

std::vector<Point3> element_positions(const IrsPanel& panel) {
    std::vector<Point3> out;
    out.reserve(panel.element_local_offsets.size());
    for (const auto& [y, z] : panel.element_local_offsets) {
        out.push_back({panel.center.x, panel.center.y + y, panel.center.z + z});
    }
    return out;
}

DirectionCosines direction_cosines(const AnglePair& angles) {
    const double st = std::sin(angles.theta_rad);
    return {st * std::cos(angles.phi_rad), st * std::sin(angles.phi_rad), std::cos(angles.theta_rad)};
}

AnglePair incidence_angles(const Point3& source, const IrsPanel& panel) {
    const Point3 d = source - panel.center;
    const double r = norm(d);
    if (!(r > 0.0)) {
        throw std::invalid_argument("source coincides with the panel center");
    }
    AnglePair a;
    a.theta_rad = std::acos(d.z / r);
    a.phi_rad = std::atan2(d.y, d.x);
    return a;
}

double fraunhofer_distance(const IrsPanel& panel, const CarrierConfig& carrier) {
    return 8.0 * (panel.side_y_m * panel.side_y_m + panel.side_z_m * panel.side_z_m) /
           carrier.wavelength_m;
}

double wrap_to_pi(double angle_rad) {
    double w = std::remainder(angle_rad, kTwoPi); // [-pi, pi]
    if (w <= -kPi) {
        w = kPi;
    }
    return w;
}

} // namespace irssim
