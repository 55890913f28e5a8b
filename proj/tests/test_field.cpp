// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "irssim/design.hpp"
#include "irssim/field.hpp"
#include "irssim/geometry.hpp"
#include "irssim/rng.hpp"

using namespace irssim;

namespace {

const Point3 kBs{30.0, 0.0, 10.0};
const Point3 kIrs{0.0, 50.0, 5.0};
const Point3 kMu{20.0, 60.0, 1.0};

RadioConfig reference_radio() {
    RadioConfig r;
    r.tx_power_w = 1e-3 * std::pow(10.0, 1.0);            // 10 dBm
    r.tx_directivity = std::pow(10.0, 1.2);               // 12 dB
    r.rx_directivity = 1.0;                               // 0 dB
    r.noise_density_w_per_hz = 1e-3 * std::pow(10.0, -17.4); // -174 dBm/Hz
    r.bandwidth_hz = 20e6;
    r.noise_figure = std::pow(10.0, 0.6); // 6 dB
    return r;
}

struct Setup {
    CarrierConfig carrier = make_carrier(3e9);
    IrsPanel panel =
        make_panel(kIrs, 0.5, 0.5, 0.5 * carrier.wavelength_m, 0.5 * carrier.wavelength_m);
    RadioConfig radio = reference_radio();
};

PhaseProfile random_profile(std::size_t n, Rng& rng) {
    PhaseProfile p;
    for (std::size_t q = 0; q < n; ++q) {
        p.phases_rad.push_back(rng.uniform(-kPi, kPi));
    }
    return p;
}

} // namespace

TEST_CASE("noise power composes density, bandwidth, and noise figure") {
    const RadioConfig r = reference_radio();
    CHECK(r.noise_power_w() ==
          doctest::Approx(r.noise_density_w_per_hz * 20e6 * r.noise_figure).epsilon(1e-15));
    CHECK(r.noise_power_w() == doctest::Approx(3.169786384922237e-13).epsilon(1e-12));
}

TEST_CASE("incident field amplitude matches the power flux identity") {
    const Setup s;
    const IncidentField inc = incident_field(s.panel, kBs, s.radio, s.carrier);
    const double d_i = distance(kBs, s.panel.center);
    const double eta = s.radio.characteristic_impedance_ohm;
    // |E_i|^2 / (2 eta) must equal P_tx D_tx / (4 pi d_i^2).
    const double flux = inc.amplitude * inc.amplitude / (2.0 * eta);
    const double expected = s.radio.tx_power_w * s.radio.tx_directivity / (4.0 * kPi * d_i * d_i);
    CHECK(flux == doctest::Approx(expected).epsilon(1e-12));

    // Per-element incident phases are plain path lengths.
    const auto positions = element_positions(s.panel);
    for (std::size_t q = 0; q < positions.size(); ++q) {
        CHECK(inc.phases_rad[q] ==
              doctest::Approx(s.carrier.wavenumber_rad_per_m * distance(kBs, positions[q]))
                  .epsilon(1e-14));
    }
}

TEST_CASE("incident field vanishes without transmit power") {
    Setup s;
    s.radio.tx_power_w = 0.0;
    CHECK(incident_field(s.panel, kBs, s.radio, s.carrier).amplitude == 0.0);
}

TEST_CASE("single-element panel sees the center distance") {
    Setup s;
    s.panel = make_panel(kIrs, 0.1, 0.1, 0.1, 0.1);
    const IncidentField inc = incident_field(s.panel, kBs, s.radio, s.carrier);
    REQUIRE(inc.phases_rad.size() == 1);
    CHECK(inc.phases_rad[0] ==
          doctest::Approx(s.carrier.wavenumber_rad_per_m * distance(kBs, kIrs)).epsilon(1e-14));
}

TEST_CASE("focused reflection matches the aligned closed form") {
    const Setup s;
    const PhaseProfile profile = focus_profile(s.panel, kBs, kMu, s.carrier);
    const FieldSample sample = reflected_field(s.panel, profile, kBs, kMu, s.radio, s.carrier);

    // All contributions aligned: |E_r| = tau/lambda * E_i * Q * d_y d_z / d_r.
    const IncidentField inc = incident_field(s.panel, kBs, s.radio, s.carrier);
    const double d_r = distance(kMu, s.panel.center);
    const double expected = s.panel.tau / s.carrier.wavelength_m * inc.amplitude *
                            static_cast<double>(s.panel.element_count) * s.panel.spacing_y_m *
                            s.panel.spacing_z_m / d_r;
    CHECK(std::abs(sample.e_field) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("per-element phase alignment at the focus") {
    const Setup s;
    const PhaseProfile profile = focus_profile(s.panel, kBs, kMu, s.carrier);
    const auto positions = element_positions(s.panel);
    const double kappa = s.carrier.wavenumber_rad_per_m;
    for (std::size_t q = 0; q < positions.size(); ++q) {
        const double total = kappa * distance(kBs, positions[q]) +
                             kappa * distance(kMu, positions[q]) + profile.phases_rad[q];
        CHECK(std::abs(wrap_to_pi(total)) < 1e-9);
    }
}

TEST_CASE("absorbing surface reflects nothing") {
    Setup s;
    s.panel.tau = 0.0; // absorbing limit, below the constructible range
    PhaseProfile profile;
    profile.phases_rad.assign(s.panel.element_count, 0.0);
    const FieldSample sample = reflected_field(s.panel, profile, kBs, kMu, s.radio, s.carrier);
    CHECK(std::abs(sample.e_field) == 0.0);
    CHECK(sample.snr_linear == 0.0);
}

TEST_CASE("a global phase offset changes nothing observable") {
    const Setup s;
    Rng rng(11);
    const PhaseProfile base = random_profile(s.panel.element_count, rng);
    PhaseProfile shifted = base;
    for (double& w : shifted.phases_rad) {
        w += 2.345;
    }
    const FieldSample a = reflected_field(s.panel, base, kBs, kMu, s.radio, s.carrier);
    const FieldSample b = reflected_field(s.panel, shifted, kBs, kMu, s.radio, s.carrier);
    CHECK(std::abs(a.e_field) == doctest::Approx(std::abs(b.e_field)).epsilon(1e-12));
    CHECK(a.rx_power_w == doctest::Approx(b.rx_power_w).epsilon(1e-12));
    CHECK(a.snr_linear == doctest::Approx(b.snr_linear).epsilon(1e-12));
}

TEST_CASE("profile length mismatch is rejected") {
    const Setup s;
    PhaseProfile bad;
    bad.phases_rad.assign(s.panel.element_count - 1, 0.0);
    CHECK_THROWS_AS(reflected_field(s.panel, bad, kBs, kMu, s.radio, s.carrier),
                    std::invalid_argument);
}

TEST_CASE("array model reproduces the scattering sum") {
    // The central consistency identity between the two model routes.
    Rng rng(20240);
    const RadioConfig radio = reference_radio();
    double worst = 0.0;
    for (int trial = 0; trial < 40; ++trial) {
        const CarrierConfig carrier = make_carrier(rng.uniform(1e9, 1e10));
        const double side = rng.uniform(0.15, 0.6);
        const IrsPanel panel =
            make_panel({0.0, rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)}, side, side,
                       carrier.wavelength_m / 2.0, carrier.wavelength_m / 2.0,
                       rng.uniform(0.3, 1.0));
        const Point3 bs{rng.uniform(5.0, 60.0), rng.uniform(-30.0, 30.0), rng.uniform(1.0, 20.0)};
        const Point3 mu{rng.uniform(5.0, 60.0), rng.uniform(-30.0, 30.0), rng.uniform(0.5, 10.0)};
        const PhaseProfile profile = random_profile(panel.element_count, rng);

        const FieldSample field = reflected_field(panel, profile, bs, mu, radio, carrier);
        const auto coeffs = build_channel_coefficients(panel, bs, mu, radio, carrier);
        const std::complex<double> y =
            baseband_receive(coeffs, profile, {std::sqrt(radio.tx_power_w), 0.0}, {0.0, 0.0});
        worst = std::max(worst, std::abs(std::norm(y) - field.rx_power_w) / field.rx_power_w);
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("omitting the quadrature offset breaks the consistency visibly") {
    const Setup s;
    Rng rng(5);
    const PhaseProfile profile = random_profile(s.panel.element_count, rng);
    const FieldSample field = reflected_field(s.panel, profile, kBs, kMu, s.radio, s.carrier);
    const auto coeffs = build_channel_coefficients(s.panel, kBs, kMu, s.radio, s.carrier);

    // Mutated reflection coefficient without the -pi/2 offset.
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t q = 0; q < coeffs.h_incident.size(); ++q) {
        const std::complex<double> gamma{std::cos(profile.phases_rad[q]),
                                         std::sin(profile.phases_rad[q])};
        sum += coeffs.h_reflect[q] * gamma * coeffs.h_incident[q];
    }
    const double mutated_power = std::norm(sum * std::sqrt(s.radio.tx_power_w));
    // Same magnitude per element, so the power still matches; the complex
    // fields must disagree strongly.
    const std::complex<double> y_ok = baseband_receive(
        coeffs, profile, {std::sqrt(s.radio.tx_power_w), 0.0}, {0.0, 0.0});
    CHECK(mutated_power == doctest::Approx(std::norm(y_ok)).epsilon(1e-10));
    const std::complex<double> expected_field_phase = y_ok / std::abs(y_ok);
    const std::complex<double> mutated_phase = sum / std::abs(sum);
    CHECK(std::abs(mutated_phase - expected_field_phase) > 0.5);
    (void)field;
}

TEST_CASE("baseband identity chain") {
    ChannelCoefficients coeffs;
    coeffs.h_incident = {{1.0, 0.0}};
    coeffs.h_reflect = {{1.0, 0.0}};
    coeffs.reflection_magnitude = 1.0;
    PhaseProfile profile;
    profile.phases_rad = {kPi / 2.0};

    const std::complex<double> symbol{0.7, -0.3};
    const std::complex<double> y = baseband_receive(coeffs, profile, symbol, {0.0, 0.0});
    CHECK(std::abs(y - symbol) < 1e-15);

    const std::complex<double> noise{0.1, 0.2};
    CHECK(std::abs(baseband_receive(coeffs, profile, {0.0, 0.0}, noise) - noise) == 0.0);
}

TEST_CASE("channel coefficient structure") {
    const Setup s;
    const auto coeffs = build_channel_coefficients(s.panel, kBs, kMu, s.radio, s.carrier);
    REQUIRE(coeffs.h_incident.size() == s.panel.element_count);

    // Amplitudes use the center distance, so they are equal across elements.
    const double amp0 = std::abs(coeffs.h_incident[0]);
    for (const auto& h : coeffs.h_incident) {
        CHECK(std::abs(h) == doctest::Approx(amp0).epsilon(1e-14));
    }

    // Phases are the exact per-element path lengths.
    const auto positions = element_positions(s.panel);
    const double kappa = s.carrier.wavenumber_rad_per_m;
    for (std::size_t q = 0; q < positions.size(); ++q) {
        const double expected = kappa * distance(kBs, positions[q]);
        const double got = std::arg(coeffs.h_incident[q]);
        CHECK(std::abs(wrap_to_pi(got - expected)) < 1e-9);
    }

    // Half-wavelength spacing: cell area lambda^2/4, so the per-element gain
    // factor is 4 pi tau (lambda^2/4) / lambda^2 = pi for tau 1.
    CHECK(coeffs.reflect_gain == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("peak SNR closed form against the field summation") {
    const Setup s;
    const double closed = gamma_max(s.panel, kBs, kMu, s.radio, s.carrier);
    const PhaseProfile profile = focus_profile(s.panel, kBs, kMu, s.carrier);
    const double summed =
        reflected_field(s.panel, profile, kBs, kMu, s.radio, s.carrier).snr_linear;
    // The grid covers slightly less area than the full aperture.
    CHECK(std::abs(summed - closed) / closed < 0.01);

    RadioConfig doubled = s.radio;
    doubled.rx_directivity *= 2.0;
    CHECK(gamma_max(s.panel, kBs, kMu, doubled, s.carrier) ==
          doctest::Approx(2.0 * closed).epsilon(1e-12));

    const Point3 far_mu = s.panel.center + 2.0 * (kMu - s.panel.center);
    CHECK(gamma_max(s.panel, kBs, far_mu, s.radio, s.carrier) ==
          doctest::Approx(closed / 4.0).epsilon(1e-12));
}

TEST_CASE("uniform illumination bound") {
    const Setup s;
    const double area = kPi * 25.0;
    const double g = gamma_uniform(s.panel, kBs, s.radio, s.carrier, area);
    CHECK(gamma_uniform(s.panel, kBs, s.radio, s.carrier, area / 2.0) ==
          doctest::Approx(2.0 * g).epsilon(1e-12));

    SUBCASE("boresight substitution oracle") {
        // BS on the panel normal: projected aperture factor is exactly 1.
        const Point3 boresight_bs = s.panel.center + Point3{40.0, 0.0, 0.0};
        const double got = gamma_uniform(s.panel, boresight_bs, s.radio, s.carrier, area);
        const double d_i = 40.0;
        const double expected = s.radio.tx_power_w * s.radio.tx_directivity *
                                s.radio.rx_directivity / s.radio.noise_power_w() *
                                std::pow(s.carrier.wavelength_m / (4.0 * kPi * d_i), 2.0) *
                                0.25 * 1.0 / area;
        CHECK(got == doctest::Approx(expected).epsilon(1e-12));
    }
    SUBCASE("grazing incidence has zero projected aperture") {
        const Point3 grazing_bs = s.panel.center + Point3{0.0, 30.0, 0.0};
        CHECK(gamma_uniform(s.panel, grazing_bs, s.radio, s.carrier, area) ==
              doctest::Approx(0.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(gamma_uniform(s.panel, kBs, s.radio, s.carrier, 0.0),
                    std::invalid_argument);
}

TEST_CASE("snr map basics") {
    const Setup s;
    const PhaseProfile profile = focus_profile(s.panel, kBs, kMu, s.carrier);

    SUBCASE("single cell at the focus agrees with the SNR bound") {
        GridSpec spec;
        spec.origin = kMu;
        spec.n_u = 1;
        spec.n_v = 1;
        const SnrGrid grid = snr_map(s.panel, profile, kBs, spec, s.radio, s.carrier);
        REQUIRE(grid.snr_db.size() == 1);
        const double bound_db = 10.0 * std::log10(gamma_max(s.panel, kBs, kMu, s.radio, s.carrier));
        CHECK(std::abs(grid.snr_db[0] - bound_db) < 0.05); // 1% in linear terms
    }

    SUBCASE("zero transmit power maps to the dB floor") {
        RadioConfig dark = s.radio;
        dark.tx_power_w = 0.0;
        GridSpec spec;
        spec.origin = kMu;
        spec.axis_u = Axis::X;
        spec.step_u_m = 0.5;
        spec.n_u = 4;
        spec.axis_v = Axis::Y;
        spec.step_v_m = 0.5;
        spec.n_v = 3;
        const SnrGrid grid = snr_map(s.panel, profile, kBs, spec, dark, s.carrier);
        for (double db : grid.snr_db) {
            CHECK(db == kSnrFloorDb);
        }
    }
}

TEST_CASE("snr map is mirror symmetric in a symmetric layout") {
    // Panel at the origin, BS on the boresight, focus on the boresight:
    // reflections are symmetric under y -> -y.
    const CarrierConfig carrier = make_carrier(3e9);
    const IrsPanel panel = make_panel({0.0, 0.0, 0.0}, 0.5, 0.5, 0.5 * carrier.wavelength_m,
                                      0.5 * carrier.wavelength_m);
    const Point3 bs{30.0, 0.0, 0.0};
    const Point3 focus{15.0, 0.0, 0.0};
    const RadioConfig radio = reference_radio();
    const PhaseProfile profile = focus_profile(panel, bs, focus, carrier);

    GridSpec spec;
    spec.axis_u = Axis::X;
    spec.step_u_m = 0.8;
    spec.n_u = 5;
    spec.axis_v = Axis::Y;
    spec.step_v_m = 0.4;
    spec.n_v = 21; // symmetric about the focus
    spec.origin = focus + Point3{-0.5 * 4 * 0.8, -0.5 * 20 * 0.4, 0.0};
    const SnrGrid grid = snr_map(panel, profile, bs, spec, radio, carrier);
    for (std::size_t i = 0; i < spec.n_u; ++i) {
        for (std::size_t j = 0; j < spec.n_v; ++j) {
            const double a = grid.snr_db[i * spec.n_v + j];
            const double b = grid.snr_db[i * spec.n_v + (spec.n_v - 1 - j)];
            CHECK(std::abs(a - b) < 1e-6);
        }
    }
}

TEST_CASE("snr scales linearly in the radio gains across a grid") {
    const Setup s;
    Rng rng(9);
    const PhaseProfile profile = random_profile(s.panel.element_count, rng);
    GridSpec spec;
    spec.origin = kMu + Point3{-1.0, -1.0, 0.0};
    spec.axis_u = Axis::X;
    spec.step_u_m = 0.5;
    spec.n_u = 5;
    spec.axis_v = Axis::Y;
    spec.step_v_m = 0.5;
    spec.n_v = 5;
    const SnrGrid base = snr_map(s.panel, profile, kBs, spec, s.radio, s.carrier);

    RadioConfig scaled = s.radio;
    scaled.tx_power_w *= 3.0;
    scaled.tx_directivity *= 0.5;
    scaled.rx_directivity *= 4.0;
    const SnrGrid up = snr_map(s.panel, profile, kBs, spec, scaled, s.carrier);
    const double shift_db = 10.0 * std::log10(3.0 * 0.5 * 4.0);
    for (std::size_t i = 0; i < base.snr_db.size(); ++i) {
        CHECK(up.snr_db[i] == doctest::Approx(base.snr_db[i] + shift_db).epsilon(1e-9));
    }
}

TEST_CASE("no profile beats focusing at its target") {
    const Setup s;
    const PhaseProfile focus = focus_profile(s.panel, kBs, kMu, s.carrier);
    const double best =
        std::abs(reflected_field(s.panel, focus, kBs, kMu, s.radio, s.carrier).e_field);
    Rng rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const PhaseProfile p = random_profile(s.panel.element_count, rng);
        const double v = std::abs(reflected_field(s.panel, p, kBs, kMu, s.radio, s.carrier).e_field);
        CHECK(v <= best * (1.0 + 1e-12));
    }
}

TEST_CASE("far-field focusing approaches the linear profile") {
    const Setup s;
    const double d_f = fraunhofer_distance(s.panel, s.carrier);
    const Point3 dir = kMu - s.panel.center;
    const Point3 far_mu = s.panel.center + (5.0 * d_f / norm(dir)) * dir;

    const PhaseProfile focus = focus_profile(s.panel, kBs, far_mu, s.carrier);
    const PhaseProfile linear =
        farfield_linear_profile(s.panel, incidence_angles(kBs, s.panel),
                                incidence_angles(far_mu, s.panel), s.carrier);
    const double a =
        snr_to_db(reflected_field(s.panel, focus, kBs, far_mu, s.radio, s.carrier).snr_linear);
    const double b =
        snr_to_db(reflected_field(s.panel, linear, kBs, far_mu, s.radio, s.carrier).snr_linear);
    CHECK(std::abs(a - b) < 0.1);
}

TEST_CASE("summation options stay numerically consistent") {
    const Setup s;
    Rng rng(17);
    const PhaseProfile profile = random_profile(s.panel.element_count, rng);

    FieldOptions kahan;
    kahan.compensated_sum = true;
    const double plain = reflected_field(s.panel, profile, kBs, kMu, s.radio, s.carrier).snr_linear;
    const double comp =
        reflected_field(s.panel, profile, kBs, kMu, s.radio, s.carrier, kahan).snr_linear;
    CHECK(plain == doctest::Approx(comp).epsilon(1e-9));

    FieldOptions exact;
    exact.exact_amplitudes = true;
    const double per_element =
        reflected_field(s.panel, profile, kBs, kMu, s.radio, s.carrier, exact).snr_linear;
    CHECK(per_element != plain);
    CHECK(std::abs(per_element - plain) / plain < 0.05); // small panel, far user
}

TEST_CASE("snr dB conversion uses the floor sentinel") {
    CHECK(snr_to_db(0.0) == kSnrFloorDb);
    CHECK(snr_to_db(-1.0) == kSnrFloorDb);
    CHECK(snr_to_db(1.0) == 0.0);
    CHECK(snr_to_db(100.0) == doctest::Approx(20.0).epsilon(1e-12));
}
