// SPDX-License-Identifier: Apache-2.0
#include "irssim/field.hpp"

#include <cmath>
#include <stdexcept>

namespace irssim {

namespace {

void check_geometry(const IrsPanel& panel, const Point3& p, const char* what) {
    if (!(distance(p, panel.center) > 0.0)) {
        throw std::invalid_argument(std::string(what) + " coincides with the panel center");
    }
}

void check_profile(const IrsPanel& panel, const PhaseProfile& profile) {
    if (profile.phases_rad.size() != panel.element_count) {
        throw std::invalid_argument("phase profile length does not match the element count");
    }
}

// Plain left-to-right complex sum with optional Kahan compensation.
class ComplexAccumulator {
public:
    explicit ComplexAccumulator(bool compensated) : compensated_(compensated) {}

    void add(std::complex<double> v) {
        if (!compensated_) {
            sum_ += v;
            return;
        }
        const std::complex<double> y = v - carry_;
        const std::complex<double> t = sum_ + y;
        carry_ = (t - sum_) - y;
        sum_ = t;
    }

    std::complex<double> value() const { return sum_; }

private:
    bool compensated_;
    std::complex<double> sum_{0.0, 0.0};
    std::complex<double> carry_{0.0, 0.0};
};

} // namespace

void validate(const RadioConfig& radio) {
    if (radio.tx_power_w < 0.0) {
        throw std::invalid_argument("tx power must be nonnegative");
    }
    if (!(radio.tx_directivity > 0.0) || !(radio.rx_directivity > 0.0) ||
        !(radio.noise_density_w_per_hz > 0.0) || !(radio.bandwidth_hz > 0.0) ||
        !(radio.noise_figure > 0.0) || !(radio.characteristic_impedance_ohm > 0.0)) {
        throw std::invalid_argument("radio parameters must be positive");
    }
}

IncidentField incident_field(const IrsPanel& panel, const Point3& bs,
                             const RadioConfig& radio, const CarrierConfig& carrier) {
    check_geometry(panel, bs, "BS");
    const double d_i = distance(bs, panel.center);
    const double eta = radio.characteristic_impedance_ohm;

    IncidentField out;
    out.amplitude = std::sqrt(2.0 * eta * radio.tx_power_w * radio.tx_directivity /
                              (4.0 * kPi * d_i * d_i));
    out.phases_rad.reserve(panel.element_count);
    for (const Point3& p : element_positions(panel)) {
        out.phases_rad.push_back(carrier.wavenumber_rad_per_m * distance(bs, p));
    }
    return out;
}

FieldSample reflected_field(const IrsPanel& panel, const PhaseProfile& profile,
                            const Point3& bs, const Point3& obs,
                            const RadioConfig& radio, const CarrierConfig& carrier,
                            const FieldOptions& options) {
    check_geometry(panel, bs, "BS");
    check_geometry(panel, obs, "observation point");
    check_profile(panel, profile);

    const double eta = radio.characteristic_impedance_ohm;
    const double kappa = carrier.wavenumber_rad_per_m;
    const double d_i = distance(bs, panel.center);
    const double d_r = distance(obs, panel.center);
    const double e_i_center = std::sqrt(2.0 * eta * radio.tx_power_w * radio.tx_directivity /
                                        (4.0 * kPi * d_i * d_i));

    // Phase terms always use exact per-element distances; amplitudes use the
    // center distances unless exact amplitudes are requested.
    ComplexAccumulator acc(options.compensated_sum);
    for (std::size_t q = 0; q < panel.element_local_offsets.size(); ++q) {
        const auto& [off_y, off_z] = panel.element_local_offsets[q];
        const double ey = panel.center.y + off_y;
        const double ez = panel.center.z + off_z;
        const double d_iq = std::sqrt((bs.x - panel.center.x) * (bs.x - panel.center.x) +
                                      (bs.y - ey) * (bs.y - ey) + (bs.z - ez) * (bs.z - ez));
        const double d_rq = std::sqrt((obs.x - panel.center.x) * (obs.x - panel.center.x) +
                                      (obs.y - ey) * (obs.y - ey) + (obs.z - ez) * (obs.z - ez));
        const double total_phase = kappa * (d_iq + d_rq) + profile.phases_rad[q];
        double amplitude = e_i_center / d_r;
        if (options.exact_amplitudes) {
            amplitude = std::sqrt(2.0 * eta * radio.tx_power_w * radio.tx_directivity /
                                  (4.0 * kPi * d_iq * d_iq)) /
                        d_rq;
        }
        acc.add(amplitude * std::complex<double>(std::cos(total_phase), std::sin(total_phase)));
    }

    const std::complex<double> prefactor =
        panel.tau / (std::complex<double>(0.0, 1.0) * carrier.wavelength_m) *
        (panel.spacing_y_m * panel.spacing_z_m);

    FieldSample sample;
    sample.e_field = prefactor * acc.value();
    sample.rx_power_w = std::norm(sample.e_field) / (2.0 * eta) * radio.rx_directivity *
                        carrier.wavelength_m * carrier.wavelength_m / (4.0 * kPi);
    sample.snr_linear = sample.rx_power_w / radio.noise_power_w();
    return sample;
}

double gamma_max(const IrsPanel& panel, const Point3& bs, const Point3& mu,
                 const RadioConfig& radio, const CarrierConfig& carrier) {
    (void)carrier;
    const double d_i = distance(bs, panel.center);
    const double d_r = distance(mu, panel.center);
    const double aperture = panel.tau * panel.side_y_m * panel.side_z_m /
                            (4.0 * kPi * d_i * d_r);
    return radio.tx_power_w * radio.tx_directivity * radio.rx_directivity /
           radio.noise_power_w() * aperture * aperture;
}

double gamma_uniform(const IrsPanel& panel, const Point3& bs, const RadioConfig& radio,
                     const CarrierConfig& carrier, double blockage_area_m2) {
    if (!(blockage_area_m2 > 0.0)) {
        throw std::invalid_argument("blockage area must be positive");
    }
    const double d_i = distance(bs, panel.center);
    const DirectionCosines bs_dir = direction_cosines(incidence_angles(bs, panel));
    const double path = carrier.wavelength_m / (4.0 * kPi * d_i);
    return radio.tx_power_w * radio.tx_directivity * radio.rx_directivity /
           radio.noise_power_w() * path * path * panel.side_y_m * panel.side_z_m *
           bs_dir.a_x / blockage_area_m2;
}

std::complex<double> baseband_receive(const ChannelCoefficients& coeffs,
                                      const PhaseProfile& profile,
                                      std::complex<double> symbol,
                                      std::complex<double> noise) {
    const std::size_t q_count = coeffs.h_incident.size();
    if (coeffs.h_reflect.size() != q_count || profile.phases_rad.size() != q_count) {
        throw std::invalid_argument("coefficient/profile length mismatch");
    }
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t q = 0; q < q_count; ++q) {
        // The -pi/2 offset carries the 1/j of the scattering kernel into the
        // element reflection coefficient.
        const double gamma_phase = profile.phases_rad[q] - kPi / 2.0;
        const std::complex<double> gamma_q =
            coeffs.reflection_magnitude *
            std::complex<double>(std::cos(gamma_phase), std::sin(gamma_phase));
        sum += coeffs.h_reflect[q] * gamma_q * coeffs.h_incident[q];
    }
    return sum * symbol + noise;
}

ChannelCoefficients build_channel_coefficients(const IrsPanel& panel, const Point3& bs,
                                               const Point3& mu, const RadioConfig& radio,
                                               const CarrierConfig& carrier,
                                               double reflection_magnitude) {
    check_geometry(panel, bs, "BS");
    check_geometry(panel, mu, "MU");

    const double lambda = carrier.wavelength_m;
    const double kappa = carrier.wavenumber_rad_per_m;
    const double d_i = distance(bs, panel.center);
    const double d_r = distance(mu, panel.center);
    const double a_uc = panel.spacing_y_m * panel.spacing_z_m;

    ChannelCoefficients coeffs;
    coeffs.reflect_gain = 4.0 * kPi * panel.tau * a_uc / (lambda * lambda);
    coeffs.reflection_magnitude = reflection_magnitude;
    const double amp_i =
        std::sqrt(radio.tx_directivity * coeffs.reflect_gain) * lambda / (4.0 * kPi * d_i);
    const double amp_r =
        std::sqrt(coeffs.reflect_gain * radio.rx_directivity) * lambda / (4.0 * kPi * d_r);

    coeffs.h_incident.reserve(panel.element_count);
    coeffs.h_reflect.reserve(panel.element_count);
    for (const Point3& p : element_positions(panel)) {
        const double ph_i = kappa * distance(bs, p);
        const double ph_r = kappa * distance(mu, p);
        coeffs.h_incident.push_back(amp_i * std::complex<double>(std::cos(ph_i), std::sin(ph_i)));
        coeffs.h_reflect.push_back(amp_r * std::complex<double>(std::cos(ph_r), std::sin(ph_r)));
    }
    return coeffs;
}

std::complex<double> end_to_end_channel(const ChannelCoefficients& coeffs,
                                        const PhaseProfile& profile) {
    return baseband_receive(coeffs, profile, {1.0, 0.0}, {0.0, 0.0});
}

double snr_to_db(double snr_linear) {
    if (!(snr_linear > 0.0)) {
        return kSnrFloorDb;
    }
    const double db = 10.0 * std::log10(snr_linear);
    return db < kSnrFloorDb ? kSnrFloorDb : db;
}

Point3 axis_unit(Axis axis) {
    switch (axis) {
        case Axis::X: return {1.0, 0.0, 0.0};
        case Axis::Y: return {0.0, 1.0, 0.0};
        case Axis::Z: return {0.0, 0.0, 1.0};
    }
    throw std::invalid_argument("unknown axis");
}

SnrGrid snr_map(const IrsPanel& panel, const PhaseProfile& profile, const Point3& bs,
                const GridSpec& grid, const RadioConfig& radio, const CarrierConfig& carrier,
                const FieldOptions& options) {
    if (grid.n_u > 0 && grid.n_v > 0) {
        if (!(grid.step_u_m > 0.0) && grid.n_u > 1) {
            throw std::invalid_argument("grid step along u must be positive");
        }
        if (!(grid.step_v_m > 0.0) && grid.n_v > 1) {
            throw std::invalid_argument("grid step along v must be positive");
        }
    }
    const Point3 u = axis_unit(grid.axis_u);
    const Point3 v = axis_unit(grid.axis_v);

    SnrGrid out;
    out.spec = grid;
    out.snr_db.reserve(grid.n_u * grid.n_v);
    // Per-point independence keeps results identical to any parallel schedule.
    for (std::size_t i = 0; i < grid.n_u; ++i) {
        for (std::size_t j = 0; j < grid.n_v; ++j) {
            const Point3 obs = grid.origin + (static_cast<double>(i) * grid.step_u_m) * u +
                               (static_cast<double>(j) * grid.step_v_m) * v;
            const FieldSample s = reflected_field(panel, profile, bs, obs, radio, carrier, options);
            out.snr_db.push_back(snr_to_db(s.snr_linear));
        }
    }
    return out;
}

} // namespace irssim
