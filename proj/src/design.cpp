// SPDX-License-Identifier: Apache-2.0
#include "irssim/design.hpp"

#include <cmath>
#include <stdexcept>

#include "irssim/protocol.hpp"

namespace irssim {

namespace {

void require_square(const IrsPanel& panel) {
    if (panel.side_y_m != panel.side_z_m) {
        throw std::invalid_argument("illumination mapping requires a square panel");
    }
}

} // namespace

FarFieldSpec make_farfield_spec(double ay_min, double ay_max, double az_min, double az_max,
                                double panel_side_m) {
    if (ay_min > ay_max || az_min > az_max) {
        throw std::invalid_argument("direction-cosine window has min > max");
    }
    if (!(panel_side_m > 0.0)) {
        throw std::invalid_argument("panel side must be positive");
    }
    FarFieldSpec s;
    s.ay_min = ay_min;
    s.ay_max = ay_max;
    s.az_min = az_min;
    s.az_max = az_max;
    s.a_y = (ay_max - ay_min) / panel_side_m;
    s.b_y = (ay_max + ay_min) / 2.0;
    s.a_z = (az_max - az_min) / panel_side_m;
    s.b_z = (az_max + az_min) / 2.0;
    return s;
}

PhaseProfile focus_profile(const IrsPanel& panel, const Point3& bs, const Point3& target,
                           const CarrierConfig& carrier) {
    if (!(distance(target, panel.center) > 0.0)) {
        throw std::invalid_argument("focus target coincides with the panel center");
    }
    const double kappa = carrier.wavenumber_rad_per_m;
    PhaseProfile profile;
    profile.phases_rad.reserve(panel.element_count);
    for (const Point3& p : element_positions(panel)) {
        const double incident_phase = kappa * distance(bs, p);
        profile.phases_rad.push_back(
            wrap_to_pi(-kappa * distance(target, p) - incident_phase));
    }
    return profile;
}

Point3 illumination_map(double local_y_m, double local_z_m, const IlluminationSpec& spec,
                        double panel_side_m) {
    const double scale = spec.delta_m / panel_side_m;
    return {scale * local_z_m + spec.center.x, scale * local_y_m + spec.center.y, spec.center.z};
}

PhaseProfile wide_profile(const IrsPanel& panel, const Point3& bs, const IlluminationSpec& spec,
                          const CarrierConfig& carrier) {
    require_square(panel);
    if (spec.delta_m < 0.0) {
        throw std::invalid_argument("illumination width must be nonnegative");
    }
    const double kappa = carrier.wavenumber_rad_per_m;
    const auto elements = element_positions(panel);

    PhaseProfile profile;
    profile.phases_rad.reserve(panel.element_count);
    for (std::size_t q = 0; q < elements.size(); ++q) {
        const auto& [off_y, off_z] = panel.element_local_offsets[q];
        const Point3 target = illumination_map(off_y, off_z, spec, panel.side_y_m);
        const double incident_phase = kappa * distance(bs, elements[q]);
        const double path = distance(target, elements[q]) - distance(target, panel.center);
        profile.phases_rad.push_back(wrap_to_pi(-kappa * path - incident_phase));
    }
    return profile;
}

PhaseProfile farfield_linear_profile(const IrsPanel& panel, const AnglePair& incident,
                                     const AnglePair& departure, const CarrierConfig& carrier) {
    const double kappa = carrier.wavenumber_rad_per_m;
    const DirectionCosines in = direction_cosines(incident);
    const DirectionCosines out = direction_cosines(departure);
    const double a_y = in.a_y + out.a_y;
    const double a_z = in.a_z + out.a_z;

    // Sign matches the e^{+j kappa d} propagation kernel of the scattering
    // sum: this is the exact far-field limit of the focusing design.
    PhaseProfile profile;
    profile.phases_rad.reserve(panel.element_count);
    for (const auto& [off_y, off_z] : panel.element_local_offsets) {
        profile.phases_rad.push_back(wrap_to_pi(kappa * (a_y * off_y + a_z * off_z)));
    }
    return profile;
}

PhaseProfile farfield_quadratic_profile(const IrsPanel& panel, const FarFieldSpec& spec,
                                        const CarrierConfig& carrier) {
    const double kappa = carrier.wavenumber_rad_per_m;
    PhaseProfile profile;
    profile.phases_rad.reserve(panel.element_count);
    for (const auto& [off_y, off_z] : panel.element_local_offsets) {
        const double poly = spec.a_y * off_y * off_y + spec.b_y * off_y +
                            spec.a_z * off_z * off_z + spec.b_z * off_z;
        profile.phases_rad.push_back(wrap_to_pi(kappa * poly));
    }
    return profile;
}

PhaseProfile full_illumination_profile(const IrsPanel& panel, const Point3& bs,
                                       const BlockageArea& blockage,
                                       const CarrierConfig& carrier) {
    // The square of side D circumscribes the blockage circle of diameter D.
    IlluminationSpec spec;
    spec.center = blockage.center;
    spec.delta_m = blockage.diameter_m;
    return wide_profile(panel, bs, spec, carrier);
}

PhaseProfile quantize_profile(const PhaseProfile& profile, int bits) {
    if (bits < 1 || bits > 16) {
        throw std::invalid_argument("quantizer resolution must be between 1 and 16 bits");
    }
    const double levels = static_cast<double>(1 << bits);
    const double step = kTwoPi / levels;
    PhaseProfile out;
    out.phases_rad.reserve(profile.phases_rad.size());
    for (double phase : profile.phases_rad) {
        out.phases_rad.push_back(wrap_to_pi(std::round(phase / step) * step));
    }
    return out;
}

} // namespace irssim
