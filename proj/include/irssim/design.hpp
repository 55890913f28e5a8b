// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "irssim/field.hpp"
#include "irssim/geometry.hpp"

namespace irssim {

/// Square target region of side delta_m, parallel to the global x-y plane,
/// centered at `center` (conventionally the user position).
struct IlluminationSpec {
    Point3 center;
    double delta_m = 0.0;
};

/// Direction-cosine windows for far-field wide illumination, together with
/// the affine map coefficients derived from them.
struct FarFieldSpec {
    double ay_min = 0.0;
    double ay_max = 0.0;
    double az_min = 0.0;
    double az_max = 0.0;
    double a_y = 0.0;
    double b_y = 0.0;
    double a_z = 0.0;
    double b_z = 0.0;
};

/// Derives the map coefficients a = (max - min)/L and b = (max + min)/2 per
/// axis.  Throws std::invalid_argument if a window is inverted.
FarFieldSpec make_farfield_spec(double ay_min, double ay_max, double az_min, double az_max,
                                double panel_side_m);

/// Phase shifts that align every element contribution in phase at `target`.
PhaseProfile focus_profile(const IrsPanel& panel, const Point3& bs, const Point3& target,
                           const CarrierConfig& carrier);

/// Continuous map from a panel-local (y, z) offset to a point of the
/// illumination square: the panel's vertical axis sweeps the square's depth
/// (global x) and the lateral axis sweeps its width (global y).
Point3 illumination_map(double local_y_m, double local_z_m, const IlluminationSpec& spec,
                        double panel_side_m);

/// Wide-illumination phase shifts: each element focuses on its mapped target
/// point, with the target's center-referenced propagation phase removed so
/// neighbouring contributions stay coherent.  Requires a square panel.
PhaseProfile wide_profile(const IrsPanel& panel, const Point3& bs, const IlluminationSpec& spec,
                          const CarrierConfig& carrier);

/// Far-field phase gradient steering an incident plane wave toward a
/// departure direction.
PhaseProfile farfield_linear_profile(const IrsPanel& panel, const AnglePair& incident,
                                     const AnglePair& departure, const CarrierConfig& carrier);

/// Far-field quadratic profile spreading the reflection over the spec's
/// direction-cosine windows.
PhaseProfile farfield_quadratic_profile(const IrsPanel& panel, const FarFieldSpec& spec,
                                        const CarrierConfig& carrier);

struct BlockageArea; // protocol.hpp

/// Fixed profile illuminating the whole blockage area: wide illumination with
/// the square circumscribing the blockage circle.  Independent of the user
/// position, so it never needs updating.
PhaseProfile full_illumination_profile(const IrsPanel& panel, const Point3& bs,
                                       const BlockageArea& blockage,
                                       const CarrierConfig& carrier);

/// Rounds each phase to the nearest level of a uniform b-bit quantizer over
/// (-pi, pi].  Continuous phases are the default everywhere; this is an
/// optional post-process.
PhaseProfile quantize_profile(const PhaseProfile& profile, int bits);

} // namespace irssim
