// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "irssim/experiments.hpp"
#include "irssim/field.hpp"
#include "irssim/scenario.hpp"

using namespace irssim;

TEST_CASE("sweep center row agrees with the peak-SNR closed form") {
    const Scenario s = default_scenario();
    const auto points = snr_sweep(s, Axis::X, 0.0, 0.0, 1.0, ProfileKind::Focus, -1.0);
    REQUIRE(points.size() == 1);
    CHECK(points[0].displacement_m == 0.0);
    const double bound_db =
        10.0 * std::log10(gamma_max(s.panel, s.bs, s.mu, s.radio, s.carrier));
    CHECK(std::abs(points[0].snr_db - bound_db) < 0.05);
}

TEST_CASE("empty sweep range yields no rows") {
    const Scenario s = default_scenario();
    CHECK(snr_sweep(s, Axis::Y, 3.0, -3.0, 0.5, ProfileKind::Focus, -1.0).empty());
}

TEST_CASE("sweep is palindromic in a mirror-symmetric layout") {
    const Scenario s = parse_scenario(
        "irs.center_x_m = 0\nirs.center_y_m = 0\nirs.center_z_m = 0\n"
        "bs.x_m = 30\nbs.y_m = 0\nbs.z_m = 0\n"
        "mu.x_m = 15\nmu.y_m = 0\nmu.z_m = 0\n");
    const auto points = snr_sweep(s, Axis::Y, -5.0, 5.0, 0.25, ProfileKind::Focus, -1.0);
    REQUIRE(points.size() == 41);
    for (std::size_t i = 0; i < points.size(); ++i) {
        CHECK(std::abs(points[i].snr_db - points[points.size() - 1 - i].snr_db) < 1e-6);
    }
}

TEST_CASE("hex lattices nest as the disc grows") {
    const auto small = hex_disc_offsets(4.0, 0.3);
    const auto large = hex_disc_offsets(9.0, 0.3);
    CHECK(small.size() < large.size());
    for (const auto& p : small) {
        CHECK(std::find(large.begin(), large.end(), p) != large.end());
    }
    // Density matches the hexagonal cell area within a few percent.
    const double cell = 0.3 * 0.3 * std::sqrt(3.0) / 2.0;
    const double expected = kPi * 4.5 * 4.5 / cell;
    CHECK(std::abs(static_cast<double>(large.size()) - expected) / expected < 0.05);
}

TEST_CASE("point-sized disc needs exactly the focusing power") {
    Scenario s = default_scenario();
    s.blockage.diameter_m = 0.05;
    s.blockage_diameter_set = true;
    const MinPowerResult result = min_power(s, {0.05}, {"0"});
    REQUIRE(result.min_power_dbm.size() == 1);

    // Linearity: the power that lifts the summed focus SNR to the threshold,
    // up to the hair of beam rolloff across the tiny disc.
    const double gamma_at_center =
        reflected_field(s.panel,
                        full_illumination_profile(s.panel, s.bs, s.blockage, s.carrier),
                        s.bs, s.blockage.center, s.radio, s.carrier)
            .snr_linear;
    const double expected_w =
        s.protocol.gamma_thr_linear / (gamma_at_center / s.radio.tx_power_w);
    const double expected_dbm = 10.0 * std::log10(expected_w / 1e-3);
    CHECK(std::abs(result.min_power_dbm[0][0] - expected_dbm) < 0.05);
    CHECK(result.min_power_dbm[0][0] >= expected_dbm);

    // And the closed-form peak bound is within the discretization residual.
    const double gmax_w = s.protocol.gamma_thr_linear /
                          (gamma_max(s.panel, s.bs, s.blockage.center, s.radio, s.carrier) /
                           s.radio.tx_power_w);
    CHECK(std::abs(result.min_power_dbm[0][0] - 10.0 * std::log10(gmax_w / 1e-3)) < 0.1);
}

TEST_CASE("min power validates its inputs") {
    Scenario s = default_scenario();
    s.blockage.diameter_m = 4.0;
    s.blockage_diameter_set = true;
    CHECK_THROWS_AS(min_power(s, {}, {"0"}), std::invalid_argument);
    CHECK_THROWS_AS(min_power(s, {2.0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(min_power(s, {4.0, 2.0}, {"0"}), std::invalid_argument);
    CHECK_THROWS_AS(min_power(s, {2.0}, {"-1"}), std::invalid_argument);
    CHECK_THROWS_AS(min_power(s, {2.0}, {"wide"}), std::invalid_argument);
}

TEST_CASE("an always-satisfied requirement reduces overhead to its floor") {
    Scenario s = default_scenario();
    s.blockage.diameter_m = 12.0;
    s.blockage_diameter_set = true;

    const auto rows = overhead_vs_snr(s, {-100.0}, {0.0}, 6);
    REQUIRE(rows.size() == 1);
    // One configuration per crossing: each trace decomposes exactly into the
    // estimation duty cycle plus the localization share of its crossing,
    // total = duty + reconfig * (1 - duty).
    const double duty = s.protocol.n_plt * s.protocol.t_sym_s / s.protocol.t_coh_s;
    CHECK(rows[0].total_overhead ==
          doctest::Approx(duty + rows[0].reconfig_overhead * (1.0 - duty)).epsilon(1e-9));
    CHECK(rows[0].reconfig_overhead < 0.01);
    // Benchmarks carry the configured constants.
    CHECK(rows[0].onoff_overhead == doctest::Approx(0.8333333333333334).epsilon(1e-12));
    CHECK(rows[0].maxmin_snr_db > 0.0);
}

TEST_CASE("overhead experiment rejects missing blockage and empty lists") {
    Scenario s = default_scenario();
    CHECK_THROWS_AS(overhead_vs_snr(s, {10.0}, {0.0}, 2), std::invalid_argument);
    s.blockage.diameter_m = 12.0;
    s.blockage_diameter_set = true;
    CHECK_THROWS_AS(overhead_vs_snr(s, {}, {0.0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(overhead_vs_snr(s, {10.0}, {}, 2), std::invalid_argument);
    CHECK_THROWS_AS(overhead_vs_snr(s, {10.0}, {0.0}, 0), std::invalid_argument);
}

TEST_CASE("verification passes on the default scenario") {
    const VerifyReport report = run_verification(default_scenario());
    CHECK(report.all_ok);
    bool saw_consistency = false;
    for (const VerifyCheck& check : report.checks) {
        CAPTURE(check.name);
        CHECK(check.status != "FAIL");
        saw_consistency = saw_consistency || check.name == "model_consistency";
    }
    CHECK(saw_consistency);
    CHECK(report.text().find("verification passed") != std::string::npos);
}
