// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "irssim/geometry.hpp"
#include "irssim/rng.hpp"

using namespace irssim;

namespace {

// Reference downlink geometry used throughout the tests.
const Point3 kBs{30.0, 0.0, 10.0};
const Point3 kIrs{0.0, 50.0, 5.0};
const Point3 kMu{20.0, 60.0, 1.0};

IrsPanel reference_panel(double frequency_hz) {
    const CarrierConfig carrier = make_carrier(frequency_hz);
    return make_panel(kIrs, 0.5, 0.5, 0.5 * carrier.wavelength_m, 0.5 * carrier.wavelength_m);
}

} // namespace

TEST_CASE("carrier derives wavelength and wave number") {
    const CarrierConfig c = make_carrier(3e9);
    CHECK(c.wavelength_m == doctest::Approx(kSpeedOfLight / 3e9).epsilon(1e-15));
    CHECK(c.wavenumber_rad_per_m == doctest::Approx(kTwoPi / c.wavelength_m).epsilon(1e-15));
    CHECK_THROWS_AS(make_carrier(0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_carrier(-1.0), std::invalid_argument);
}

TEST_CASE("distances of the reference geometry") {
    // sqrt(30^2 + 50^2 + 5^2) and sqrt(20^2 + 10^2 + 4^2)
    CHECK(distance(kBs, kIrs) == doctest::Approx(std::sqrt(3425.0)).epsilon(1e-15));
    CHECK(distance(kMu, kIrs) == doctest::Approx(std::sqrt(516.0)).epsilon(1e-15));
    // Rounded values quoted for this layout.
    CHECK(std::abs(distance(kBs, kIrs) - 58.52) < 0.01);
    CHECK(std::abs(distance(kMu, kIrs) - 22.72) < 0.01);
    CHECK(distance(kMu, kMu) == 0.0);
}

TEST_CASE("distance is a metric on random triples") {
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        const Point3 a{rng.uniform(-50, 50), rng.uniform(-50, 50), rng.uniform(-50, 50)};
        const Point3 b{rng.uniform(-50, 50), rng.uniform(-50, 50), rng.uniform(-50, 50)};
        const Point3 c{rng.uniform(-50, 50), rng.uniform(-50, 50), rng.uniform(-50, 50)};
        CHECK(distance(a, b) == distance(b, a));
        CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-12);
        CHECK(distance(a, b) >= 0.0);
    }
}

TEST_CASE("element grid of the reference panel") {
    const IrsPanel panel = reference_panel(3e9);
    CHECK(panel.element_count == 100);

    const auto positions = element_positions(panel);
    REQUIRE(positions.size() == 100);

    Point3 centroid{0.0, 0.0, 0.0};
    for (const Point3& p : positions) {
        centroid = centroid + (1.0 / 100.0) * p;
        CHECK(p.x == panel.center.x);
        CHECK(std::abs(p.y - panel.center.y) <= panel.side_y_m / 2.0);
        CHECK(std::abs(p.z - panel.center.z) <= panel.side_z_m / 2.0);
    }
    CHECK(distance(centroid, panel.center) < 1e-12);
}

TEST_CASE("element grid at 28 GHz") {
    CHECK(reference_panel(28e9).element_count == 8649); // 93 x 93
}

TEST_CASE("degenerate one-element grid sits at the panel center") {
    const IrsPanel panel = make_panel(kIrs, 0.1, 0.1, 0.1, 0.1);
    CHECK(panel.element_count == 1);
    const auto positions = element_positions(panel);
    CHECK(distance(positions[0], panel.center) == 0.0);
}

TEST_CASE("panel construction rejects bad inputs") {
    CHECK_THROWS_AS(make_panel(kIrs, 0.5, 0.5, 0.0, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(make_panel(kIrs, 0.5, 0.5, -0.05, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(make_panel(kIrs, 0.01, 0.5, 0.05, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(make_panel(kIrs, 0.5, 0.5, 0.05, 0.05, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_panel(kIrs, 0.5, 0.5, 0.05, 0.05, 1.5), std::invalid_argument);
}

TEST_CASE("incidence angles recover the direction to the source") {
    const IrsPanel panel = reference_panel(3e9);

    SUBCASE("boresight") {
        const AnglePair a = incidence_angles(panel.center + Point3{10.0, 0.0, 0.0}, panel);
        CHECK(a.theta_rad == doctest::Approx(kPi / 2).epsilon(1e-12));
        CHECK(a.phi_rad == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(direction_cosines(a).a_x == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("zenith") {
        const AnglePair a = incidence_angles(panel.center + Point3{0.0, 0.0, 3.0}, panel);
        CHECK(a.theta_rad == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(direction_cosines(a).a_z == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("reference BS direction matches the normalization oracle") {
        const AnglePair a = incidence_angles(kBs, panel);
        const DirectionCosines dc = direction_cosines(a);
        const double r = distance(kBs, panel.center);
        CHECK(dc.a_x == doctest::Approx((kBs.x - kIrs.x) / r).epsilon(1e-12));
        CHECK(dc.a_y == doctest::Approx((kBs.y - kIrs.y) / r).epsilon(1e-12));
        CHECK(dc.a_z == doctest::Approx((kBs.z - kIrs.z) / r).epsilon(1e-12));
    }
    SUBCASE("degenerate source rejected") {
        CHECK_THROWS_AS(incidence_angles(panel.center, panel), std::invalid_argument);
    }
}

TEST_CASE("direction cosines form a unit vector") {
    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        const AnglePair a{rng.uniform(0.0, kPi), rng.uniform(-kPi, kPi)};
        const DirectionCosines dc = direction_cosines(a);
        CHECK(std::abs(dc.a_x * dc.a_x + dc.a_y * dc.a_y + dc.a_z * dc.a_z - 1.0) < 1e-12);
    }
}

TEST_CASE("far-field distance") {
    const CarrierConfig c3 = make_carrier(3e9);
    const CarrierConfig c28 = make_carrier(28e9);
    const IrsPanel panel = reference_panel(3e9);

    CHECK(fraunhofer_distance(panel, c3) ==
          doctest::Approx(8.0 * 0.5 / c3.wavelength_m).epsilon(1e-15));
    CHECK(std::abs(fraunhofer_distance(panel, c3) - 40.0) < 0.1);
    CHECK(std::abs(fraunhofer_distance(panel, c28) - 373.6) < 0.1);

    IrsPanel point_panel = panel;
    point_panel.side_y_m = 0.0;
    point_panel.side_z_m = 0.0;
    CHECK(fraunhofer_distance(point_panel, c3) == 0.0);
}

TEST_CASE("angle wrapping") {
    CHECK(wrap_to_pi(0.0) == 0.0);
    CHECK(wrap_to_pi(kPi) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(wrap_to_pi(-kPi) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(wrap_to_pi(3.0 * kPi) == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(wrap_to_pi(kTwoPi * 1000.0 + 0.5) == doctest::Approx(0.5).epsilon(1e-9));
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const double x = rng.uniform(-1000.0, 1000.0);
        const double w = wrap_to_pi(x);
        CHECK(w > -kPi);
        CHECK(w <= kPi);
        CHECK(std::abs(std::remainder(x - w, kTwoPi)) < 1e-9);
    }
}
