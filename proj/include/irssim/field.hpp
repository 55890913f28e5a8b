// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "irssim/geometry.hpp"

namespace irssim {

/// Transmit/receive radio parameters.  Directivities and noise figure are
/// linear; noise power is N_0 * W * N_f.
struct RadioConfig {
    double tx_power_w = 0.0;
    double tx_directivity = 1.0;
    double rx_directivity = 1.0;
    double noise_density_w_per_hz = 0.0;
    double bandwidth_hz = 0.0;
    double noise_figure = 1.0;
    double characteristic_impedance_ohm = 376.730;

    double noise_power_w() const {
        return noise_density_w_per_hz * bandwidth_hz * noise_figure;
    }
};

/// Throws std::invalid_argument unless tx power is nonnegative and all other
/// parameters are positive.
void validate(const RadioConfig& radio);

/// Per-element panel phase shifts, wrapped to (-pi, pi], ordered like
/// element_positions().
struct PhaseProfile {
    std::vector<double> phases_rad;
};

/// Reflected field and derived link quantities at one observation point.
struct FieldSample {
    std::complex<double> e_field; // V/m
    double rx_power_w = 0.0;
    double snr_linear = 0.0;
};

/// Per-element channel coefficients of the discrete array model.  Amplitudes
/// use the panel-center distances; phases use exact per-element distances.
struct ChannelCoefficients {
    std::vector<std::complex<double>> h_incident;
    std::vector<std::complex<double>> h_reflect;
    double reflect_gain = 0.0;        // per-element effective power gain factor
    double reflection_magnitude = 1.0; // amplitude of the element reflection coefficient
};

/// Numerical options for the scattering summation.
struct FieldOptions {
    /// When false (default), amplitudes use the panel-center distances and
    /// only the phase terms use exact per-element distances.  When true,
    /// both use exact per-element distances (sensitivity studies; breaks the
    /// array-model consistency identity).
    bool exact_amplitudes = false;
    /// Kahan-compensated summation; intended for element counts above ~1e5.
    bool compensated_sum = false;
};

/// Incident-wave amplitude at the panel (from the center distance) and the
/// exact per-element incident phases.
struct IncidentField {
    double amplitude = 0.0;            // V/m
    std::vector<double> phases_rad;    // wavenumber * per-element BS distance, unwrapped
};

IncidentField incident_field(const IrsPanel& panel, const Point3& bs,
                             const RadioConfig& radio, const CarrierConfig& carrier);

/// Evaluates the discretized scattering sum at `obs` for a phase profile and
/// converts the field to received power and SNR.
FieldSample reflected_field(const IrsPanel& panel, const PhaseProfile& profile,
                            const Point3& bs, const Point3& obs,
                            const RadioConfig& radio, const CarrierConfig& carrier,
                            const FieldOptions& options = {});

/// Closed-form maximum achievable SNR when the panel focuses on `mu`
/// (continuous-aperture idealization of the summation).
double gamma_max(const IrsPanel& panel, const Point3& bs, const Point3& mu,
                 const RadioConfig& radio, const CarrierConfig& carrier);

/// SNR of the idealized uniform redistribution of the captured power over a
/// blockage area of the given size.  Unattainable; serves as an upper bound.
double gamma_uniform(const IrsPanel& panel, const Point3& bs, const RadioConfig& radio,
                     const CarrierConfig& carrier, double blockage_area_m2);

/// Baseband receive model: y = sum_q h_r,q Gamma_q h_i,q s + n with
/// Gamma_q = reflection_magnitude * exp(j (omega_q - pi/2)).
std::complex<double> baseband_receive(const ChannelCoefficients& coeffs,
                                      const PhaseProfile& profile,
                                      std::complex<double> symbol,
                                      std::complex<double> noise);

/// Channel coefficients that make the baseband model reproduce the
/// scattering sum for a lossless panel (reflection_magnitude = 1).
ChannelCoefficients build_channel_coefficients(const IrsPanel& panel, const Point3& bs,
                                               const Point3& mu, const RadioConfig& radio,
                                               const CarrierConfig& carrier,
                                               double reflection_magnitude = 1.0);

/// End-to-end scalar channel for a fixed profile (noise-free unit symbol).
std::complex<double> end_to_end_channel(const ChannelCoefficients& coeffs,
                                        const PhaseProfile& profile);

/// dB floor used to keep serialized SNR values numeric when the power is
/// exactly zero.
inline constexpr double kSnrFloorDb = -400.0;

/// Linear SNR to dB with the zero-power sentinel.
double snr_to_db(double snr_linear);

enum class Axis { X, Y, Z };

Point3 axis_unit(Axis axis);

/// Rectangular evaluation grid: origin plus i*step_u along axis_u and
/// j*step_v along axis_v, i in [0, n_u), j in [0, n_v).
struct GridSpec {
    Point3 origin;
    Axis axis_u = Axis::X;
    double step_u_m = 0.0;
    std::size_t n_u = 0;
    Axis axis_v = Axis::Y;
    double step_v_m = 0.0;
    std::size_t n_v = 0;
};

/// SNR samples over a grid, row-major (u outer, v inner), in dB.
struct SnrGrid {
    GridSpec spec;
    std::vector<double> snr_db;
};

SnrGrid snr_map(const IrsPanel& panel, const PhaseProfile& profile, const Point3& bs,
                const GridSpec& grid, const RadioConfig& radio, const CarrierConfig& carrier,
                const FieldOptions& options = {});

} // namespace irssim
